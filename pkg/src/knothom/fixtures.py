"""Packaged homology fixtures: quadruply-graded superpolynomial tables.

Fixtures are stored as JSON files (schema: ``knot``, ``color``, ``R``, ``S``,
``sigma``, ``gradings``, ``poincare``) under ``knothom/fixtures``; the
environment variable ``HOMOLOGY_FIXTURE_DIR`` overrides the search path.
Loading validates the generator count and both categorification
specializations, so transcription errors fail loudly.

The registry also knows which removal differentials act on each fixture and
where their homology lands.
"""

from __future__ import annotations

import json
import os
import pathlib
from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly, Multidegree
from .partitions import Partition
from .checks import from_tilde, to_tilde

FIXTURE_IDS = (
    "3_1:1", "3_1:S2", "3_1:L2", "3_1:2x2", "3_1:3x2", "3_1:2_1",
    "4_1:1", "4_1:S2", "T3_4:1", "T3_4:1:d1|1", "T3_4:S2", "T3_4:S2:d1|2",
)

#: names of the actual homology fixtures (the others are auxiliary
#: differential-homology tables)
HOMOLOGY_FIXTURES = (
    "3_1:1", "3_1:S2", "3_1:L2", "3_1:2x2", "3_1:3x2", "3_1:2_1",
    "4_1:1", "4_1:S2", "T3_4:1", "T3_4:S2",
)


class FixtureError(ValueError):
    pass


@dataclass
class HomologyFixture:
    name: str
    knot: str
    color: Partition
    R: int
    S: int
    sigma: int
    gradings: tuple
    form: str
    poincare: LaurentPoly
    dimension: int
    homfly: LaurentPoly | None = None

    def is_rectangular(self) -> bool:
        return self.R > 0

    def quadruple(self) -> bool:
        return set(self.gradings) >= {"tr", "tc"}

    def standard(self) -> LaurentPoly:
        """The polynomial in ``(a, q, ...)`` gradings (inverting tilde if needed)."""
        if self.form == "tilde":
            return from_tilde(self.poincare, self.R)
        return self.poincare

    def tilde(self) -> LaurentPoly:
        if self.form == "tilde":
            return self.poincare
        if not self.quadruple():
            raise FixtureError(
                f"{self.name} is not quadruply graded; no tilde regrading")
        return to_tilde(self.poincare, self.R)

    def homfly_specialization(self) -> LaurentPoly:
        """``P(a, q, tr=-1, tc=1)`` (or ``t=-1`` for triply-graded data)."""
        p = self.standard()
        minus = LaurentPoly.const(-1)
        if "tr" in self.gradings:
            return p.substitute("tr", minus).substitute("tc", LaurentPoly.one())
        return p.substitute("tc" if "tc" in self.gradings else "t", minus)


def fixture_dir() -> pathlib.Path:
    env = os.environ.get("HOMOLOGY_FIXTURE_DIR")
    if env:
        return pathlib.Path(env)
    return pathlib.Path(__file__).parent / "fixtures"


def _file_for(name: str) -> pathlib.Path:
    return fixture_dir() / (name.replace(":", "-").replace("|", "") + ".json")


def _validate(fix: HomologyFixture):
    if fix.poincare.dimension() != fix.dimension:
        raise FixtureError(
            f"{fix.name}: {fix.poincare.dimension()} generators, "
            f"expected {fix.dimension}")
    if "tr" in fix.gradings:
        p = fix.standard()
        minus, one = LaurentPoly.const(-1), LaurentPoly.one()
        lhs = p.substitute("tr", minus).substitute("tc", one)
        rhs = p.substitute("tr", one).substitute("tc", minus)
        if lhs != rhs:
            raise FixtureError(f"{fix.name}: categorification mismatch")
    if fix.homfly is not None and fix.homfly_specialization() != fix.homfly:
        raise FixtureError(f"{fix.name}: specialization != tabled polynomial")


@lru_cache(maxsize=None)
def load_fixture(name: str) -> HomologyFixture:
    path = _file_for(name)
    if not path.exists():
        raise FixtureError(f"no fixture file for {name!r} at {path}")
    obj = json.loads(path.read_text())
    fix = HomologyFixture(
        name=name,
        knot=obj["knot"],
        color=Partition(obj["color"]),
        R=obj["R"],
        S=obj["S"],
        sigma=obj["sigma"],
        gradings=tuple(obj["gradings"]),
        form=obj.get("form", "standard"),
        poincare=LaurentPoly.from_json(obj["poincare"]),
        dimension=obj.get("dimension", 0),
        homfly=(LaurentPoly.from_json(obj["homfly"])
                if "homfly" in obj else None),
    )
    _validate(fix)
    return fix


def all_fixtures():
    return [load_fixture(n) for n in HOMOLOGY_FIXTURES]


# -- differential registry ----------------------------------------------------------

#: differentials acting on each fixture: (label, kind, param, target fixture
#: or None for canceling, grading projection or None)
DIFFERENTIALS = {
    "3_1:1": [
        ("d1|0", "+row", 0, None, None),
        ("d0|1", "-row", 0, None, None),
    ],
    "4_1:1": [
        ("d1|0", "+row", 0, None, None),
        ("d0|1", "-row", 0, None, None),
    ],
    "T3_4:1": [
        ("d1|0", "+row", 0, None, None),
        ("d0|1", "-row", 0, None, None),
    ],
    "3_1:S2": [
        ("d1|0", "+row", 0, None, None),
        ("d0|2", "-row", 0, None, None),
        ("d1|1", "+col", 1, "3_1:1", None),
        ("d0|3", "-col", 1, "3_1:1", None),
        ("d<-", "left", None, "3_1:1", None),
    ],
    "3_1:L2": [
        ("d2|0", "+row", 0, None, None),
        ("d0|1", "-row", 0, None, None),
        ("d3|0", "+row", 1, "3_1:1", None),
        ("d1|1", "-row", 1, "3_1:1", None),
        ("d^", "up", None, "3_1:1", None),
    ],
    "4_1:S2": [
        ("d1|0", "+row", 0, None, None),
        ("d0|2", "-row", 0, None, None),
        ("d1|1", "+col", 1, "4_1:1", None),
        ("d0|3", "-col", 1, "4_1:1", None),
        ("d<-", "left", None, "4_1:1", None),
    ],
    "T3_4:S2": [
        ("d1|0", "+row", 0, None, None),
        ("d0|2", "-row", 0, None, None),
        ("d1|1", "+col", 1, "T3_4:1", None),
        ("d0|3", "-col", 1, "T3_4:1", None),
        ("d<-", "left", None, "T3_4:1", None),
    ],
    "3_1:2x2": [
        ("d2|0", "+row", 0, None, None),
        ("d0|2", "-row", 0, None, None),
        ("d3|0", "+row", 1, "3_1:S2", None),
        ("d1|2", "-row", 1, "3_1:S2", None),
        ("d0|3", "-col", 1, "3_1:L2", None),
        ("d2|1", "+col", 1, "3_1:L2", None),
        ("d^", "up", None, "3_1:S2", None),
        ("d<-", "left", None, "3_1:L2", None),
    ],
    # the (2,2,2) fixture is tabled in (a,q,tc) only, so every check is
    # projected to those gradings; its column removals land on the
    # untabulated third antisymmetric color and cannot be checked
    "3_1:3x2": [
        ("d3|0", "+row", 0, None, ("a", "q", "tc")),
        ("d0|2", "-row", 0, None, ("a", "q", "tc")),
        ("d4|0", "+row", 1, "3_1:S2", ("a", "q", "tc")),
        ("d1|2", "-row", 1, "3_1:S2", ("a", "q", "tc")),
        ("d5|0", "+row", 2, "3_1:2x2", ("a", "q", "tc")),
        ("d2|2", "-row", 2, "3_1:2x2", ("a", "q", "tc")),
    ],
}

#: expected printed degrees for the listed differentials, in the fixture's
#: own grading projection (sanity cross-check of the general formulas)
PRINTED_DEGREES = {
    ("3_1:2x2", "d2|0"): {"a": -2, "q": 4, "tr": -1, "tc": -1},
    ("3_1:2x2", "d0|2"): {"a": -2, "q": -4, "tr": -5, "tc": -5},
    ("3_1:2x2", "d3|0"): {"a": -2, "q": 6, "tr": -3, "tc": -1},
    ("3_1:2x2", "d1|2"): {"a": -2, "q": -2, "tr": -7, "tc": -5},
    ("3_1:2x2", "d0|3"): {"a": -2, "q": -6, "tr": -5, "tc": -7},
    ("3_1:2x2", "d2|1"): {"a": -2, "q": 2, "tr": -1, "tc": -3},
    ("3_1:2x2", "d^"): {"a": 0, "q": 2, "tr": -2, "tc": 0},
    ("3_1:2x2", "d<-"): {"a": 0, "q": 2, "tr": 0, "tc": 2},
    ("3_1:3x2", "d3|0"): {"a": -2, "q": 6, "tc": -1},
    ("3_1:3x2", "d0|2"): {"a": -2, "q": -4, "tc": -5},
    ("3_1:3x2", "d4|0"): {"a": -2, "q": 8, "tc": -1},
    ("3_1:3x2", "d1|2"): {"a": -2, "q": -2, "tc": -5},
    ("3_1:3x2", "d5|0"): {"a": -2, "q": 10, "tc": -1},
    ("3_1:3x2", "d2|2"): {"a": -2, "q": 0, "tc": -5},
}

#: survivors of the canceling differentials printed in the examples,
#: in the fixture's grading projection
PRINTED_SURVIVORS = {
    ("3_1:S2", "d1|0"): {"a": 4, "q": -4},
    ("3_1:S2", "d0|2"): {"a": 4, "q": 8, "tr": 4, "tc": 8},
    ("3_1:2x2", "d2|0"): {"a": 8, "q": -16, "tr": 0, "tc": 0},
    ("3_1:2x2", "d0|2"): {"a": 8, "q": 16, "tr": 16, "tc": 16},
    ("3_1:3x2", "d3|0"): {"a": 12, "q": -36, "tc": 0},
    ("3_1:3x2", "d0|2"): {"a": 12, "q": 24, "tc": 24},
}
