from fractions import Fraction

import pytest

from inouebloch.errors import ConfigError, DomainError
from inouebloch.picard import DivisorClass, canonical_class, intersect
from inouebloch.quadrilateral import (
    PointConfiguration, collinear, configuration_checks, configuration_report,
    named_classes, parse_points, standard_points,
)


def test_standard_points():
    cfg = standard_points()
    assert cfg[5] == (1, 1, 0)
    assert cfg[6] == (0, 1, 1)
    assert cfg.violations() == []


def test_collinearity():
    cfg = standard_points()
    assert collinear(cfg[1], cfg[2], cfg[5])
    assert collinear(cfg[3], cfg[4], cfg[5])
    assert collinear(cfg[1], cfg[4], cfg[6])
    assert collinear(cfg[2], cfg[3], cfg[6])
    assert not collinear(cfg[1], cfg[2], cfg[3])


def test_collinear_rejects_zero_triple():
    with pytest.raises(DomainError):
        collinear((0, 0, 0), (1, 0, 0), (0, 1, 0))


def test_named_classes():
    t = named_classes()
    assert t["Delta1"] == DivisorClass(1, (1, 0, 1, 0, 0, 0))
    assert t["Delta2"] == DivisorClass(1, (0, 1, 0, 1, 0, 0))
    assert t["Delta3"] == DivisorClass(1, (0, 0, 0, 0, 1, 1))
    assert t["f3"] == DivisorClass(2, (1, 1, 1, 1, 0, 0))
    assert t["S1"] == DivisorClass(1, (1, 1, 0, 0, 1, 0))
    assert t["S2"] == DivisorClass(1, (0, 1, 1, 0, 0, 1))
    assert t["S3"] == DivisorClass(1, (0, 0, 1, 1, 1, 0))
    assert t["S4"] == DivisorClass(1, (1, 0, 0, 1, 0, 1))
    for i in range(1, 5):
        assert intersect(t[f"S{i}"], t[f"S{i}"]) == -2
    for i in (1, 2, 3):
        assert (t[f"Delta{i}"] + t[f"f{i}"] + canonical_class()).is_zero()


def test_report_entries():
    r = configuration_report()
    assert r["S1"]["f2"] == 0
    assert r["Delta3"]["f3"] == 2
    assert r["Delta1"]["Delta2"] == 1
    for a in r:
        for b in r:
            assert r[a][b] == r[b][a]


def test_all_checks_hold():
    failed = [name for name, ok in configuration_checks() if not ok]
    assert failed == []


def test_side_multiplicities_track_incidence():
    cfg = standard_points()
    t = named_classes(cfg)
    sides = {"S1": (1, 2), "S2": (2, 3), "S3": (3, 4), "S4": (4, 1)}
    for name, (i, j) in sides.items():
        for k in range(1, 7):
            assert (t[name].m[k - 1] == 1) == collinear(cfg[i], cfg[j], cfg[k])


def test_other_quadrilateral_gives_same_classes(fixtures):
    moved = parse_points((fixtures / "moved_points.txt").read_text())
    assert named_classes(moved) == named_classes()


def test_generic_quadrilateral_in_rationals():
    # a different frame: P1..P4 generic, P5 and P6 derived
    from inouebloch.quadrilateral import cross
    p = [tuple(Fraction(c) for c in v) for v in ((1, 2, 3), (-1, 0, 5), (2, -3, 1), (4, 1, -2))]
    p5 = cross(cross(p[0], p[1]), cross(p[2], p[3]))
    p6 = cross(cross(p[0], p[3]), cross(p[1], p[2]))
    cfg = PointConfiguration(tuple(p) + (p5, p6)).validate()
    assert named_classes(cfg) == named_classes()


def test_violations_are_named(fixtures):
    with pytest.raises(ConfigError, match="P5 does not lie on line P3P4"):
        parse_points((fixtures / "bad_points.txt").read_text())


def test_general_position_violation():
    pts = ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1), (1, 1, 0), (0, 1, 1))
    assert any("collinear" in v for v in PointConfiguration(pts).violations())


def test_malformed_points_report_line_and_column(fixtures):
    with pytest.raises(ConfigError) as exc:
        parse_points((fixtures / "malformed_points.txt").read_text(), source="m.txt")
    assert (exc.value.line, exc.value.column) == (2, 5)


def test_wrong_point_count():
    with pytest.raises(ConfigError, match="expected 6 points"):
        parse_points("1 0 0\n0 1 0\n")
