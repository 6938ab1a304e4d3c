import xml.etree.ElementTree as ET

import numpy as np
import pytest

from cpsm.io import ResultReport, parse_instance
from cpsm.svg import render_svg

NS = "{http://www.w3.org/2000/svg}"
INST = parse_instance('{"curve": [[0,0],[1,0],[2,1]], "points": [[0,0.5],[1,1],[2,0]]}')


def _elements(doc, tag, cls):
    root = ET.fromstring(doc.encode())
    return [e for e in root.iter(NS + tag) if e.get("class") == cls]


def test_instance_only():
    doc = render_svg(INST)
    root = ET.fromstring(doc.encode())
    drawn = [e for e in root.iter() if e.get("class") in ("curve", "point")]
    assert len(drawn) == INST.n + INST.k


def test_translation_moves_curve():
    rep = ResultReport("x", translation=[0.5, -1.0], curve=[[0, 0.5], [1, 1]])
    lines = _elements(render_svg(INST, rep), "line", "curve")
    starts = np.array([[float(e.get("x1")), float(e.get("y1"))] for e in lines])
    assert np.allclose(starts, INST.curve[:-1] + [0.5, -1.0])
    assert len(_elements(render_svg(INST, rep), "polyline", "match")) == 1


def test_disks_and_viewbox_margin():
    doc = render_svg(INST, eps=0.25, show_disks=True)
    assert len(_elements(doc, "circle", "disk")) == INST.k
    x, y, w, h = map(float, ET.fromstring(doc.encode()).get("viewBox").split())
    # points reach from -0.25 to 2.25 horizontally with disks; 5% margin on each side
    assert x == pytest.approx(-0.25 - 0.05 * 2.5) and w == pytest.approx(2.5 * 1.1)


def test_collinear_instance_has_positive_height():
    inst = parse_instance('{"curve": [[0,0],[3,0]], "points": [[1,0]]}')
    root = ET.fromstring(render_svg(inst).encode())
    assert float(root.get("viewBox").split()[3]) > 0


def test_rejects_3d():
    inst = parse_instance('{"curve": [[0,0,0]], "points": [[1,1,1]]}')
    with pytest.raises(ValueError):
        render_svg(inst)
