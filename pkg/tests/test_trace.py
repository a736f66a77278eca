import math
import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lspecial.errors import IoError, NotHomogeneous, NotPositiveOnCircle
from lspecial.poly import BivarPoly, evaluate
from lspecial.scalars import Scalar
from lspecial.trace import CurveTrace, boundedness_check, csv_text, emit, svg_text, trace_level


def circle():
    return BivarPoly({(2, 0): 1, (0, 2): 1})


def test_circle_four_samples():
    tr = trace_level(circle(), 1.0, 4)
    want = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    assert tr.closed and tr.samples == 4 and len(tr) == 4
    for (x, y), (u, v) in zip(tr.points, want):
        assert abs(x - u) < 1e-15 and abs(y - v) < 1e-15


def test_level_scales_radius():
    tr = trace_level(circle(), 4.0, 16)
    assert all(math.hypot(x, y) == pytest.approx(2.0, rel=1e-15) for x, y in tr.points)


def test_quartic_radii_and_residual(construction):
    qc = construction
    tr = trace_level(qc.curve, 1.0, 720)
    assert abs(math.hypot(*tr.points[0]) - 1) < 1e-12
    assert abs(math.hypot(*tr.points[180]) - math.sqrt(qc.beta0)) < 1e-12
    one = Scalar.approx(1.0)
    worst = max(abs(evaluate(qc.curve, Scalar.approx(x), Scalar.approx(y)) - one) for x, y in tr.points)
    assert worst < 1e-12


def test_quartic_symmetry(construction):
    pts = trace_level(construction.curve, 1.0, 720).points
    for k in range(720):
        x, y = pts[k]
        mx, my = pts[(360 - k) % 720]
        cx, cy = pts[(720 - k) % 720]
        assert abs(mx + x) < 1e-12 and abs(my - y) < 1e-12
        assert abs(cx - x) < 1e-12 and abs(cy + y) < 1e-12


@given(st.integers(4, 200))
def test_doubling_is_nested(n):
    p = BivarPoly({(4, 0): 1, (2, 2): 3, (0, 4): 2})
    coarse = trace_level(p, 1.0, n).points
    fine = trace_level(p, 1.0, 2 * n).points
    assert fine[::2] == coarse


def test_not_positive_on_circle():
    with pytest.raises(NotPositiveOnCircle):
        trace_level(BivarPoly({(4, 0): 1, (2, 2): -100, (0, 4): 1}))


def test_rejects_bad_inputs():
    with pytest.raises(NotHomogeneous):
        trace_level(circle() - 1)
    with pytest.raises(ValueError):
        trace_level(circle(), 1.0, 3)
    with pytest.raises(ValueError):
        trace_level(circle(), 0.0)


def test_csv_format():
    text = csv_text(trace_level(circle(), 1.0, 4))
    lines = text.splitlines()
    assert lines[0] == "x,y" and len(lines) == 5
    assert lines[1] == "1,0"


def test_svg_aspect_ratio(construction):
    tr = trace_level(construction.curve, 1.0, 360)
    text = svg_text(tr)
    vb = [float(v) for v in re.search(r'viewBox="([^"]+)"', text).group(1).split()]
    x0, y0, x1, y1 = tr.bbox()
    assert vb[3] / vb[2] == pytest.approx((y1 - y0) / (x1 - x0), rel=1e-12)
    width = int(re.search(r'width="(\d+)"', text).group(1))
    height = int(re.search(r'height="(\d+)"', text).group(1))
    assert height / width == pytest.approx(vb[3] / vb[2], abs=2 / width)
    assert text.count("<path") == 1 and ' Z"' in text


def test_emit(tmp_path):
    tr = trace_level(circle(), 1.0, 8)
    emit(tr, "csv", tmp_path / "c.csv")
    assert (tmp_path / "c.csv").read_text() == csv_text(tr)
    with pytest.raises(IoError):
        emit(CurveTrace((), True, 0), "svg", tmp_path / "e.svg")
    with pytest.raises(IoError):
        emit(tr, "svg", tmp_path / "missing" / "c.svg")
    with pytest.raises(ValueError):
        emit(tr, "pdf", tmp_path / "c.pdf")


def test_boundedness():
    assert boundedness_check(0.0394057578502645, 3.9602840598617994)
    assert not boundedness_check(0.25, 2.5)
    assert boundedness_check(0.25, 1.5)
