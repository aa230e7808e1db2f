from __future__ import annotations

import matplotlib.colors as mcolors
import pytest

from barbellkit.barbell import find_barbell_partition
from barbellkit.graph import cycle, petersen, star
from barbellkit.ops import barbell_prism
from barbellkit.plotting import CLASS_COLORS, census_summary, draw_partition, layout


def test_class_colors():
    hue = {k: mcolors.to_rgb(CLASS_COLORS[k]) for k in ("R", "W1", "W2")}
    assert max(hue["R"]) == hue["R"][1]
    assert max(hue["W1"]) == hue["W1"][0]
    assert max(hue["W2"]) == hue["W2"][2]


def test_layout():
    assert len(layout(cycle(5))) == 5
    assert layout(cycle(4), grid=(2, 2))[3] == (1.0, -1.0)
    with pytest.raises(ValueError):
        layout(cycle(5), grid=(2, 2))


def test_draw_files(tmp_path):
    G = star(4)
    out = draw_partition(G, find_barbell_partition(G).partition, tmp_path / "a.png")
    assert out.read_bytes()[:4] == b"\x89PNG"
    draw_partition(petersen(), None, tmp_path / "b.png", title="no partition")
    K, P = barbell_prism(4, 1)
    draw_partition(K, P, tmp_path / "c.png", grid=(4, 4))
    assert (tmp_path / "c.png").stat().st_size > 0


def test_census_summary(tmp_path):
    recs = [{"n": 4, "barbell": {"verdict": "admits"}}, {"n": 5, "barbell": {"verdict": "does_not_admit"}}]
    assert census_summary(recs, tmp_path / "s.png").exists()
    assert census_summary([], tmp_path / "e.png").exists()
