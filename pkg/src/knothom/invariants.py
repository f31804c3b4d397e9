"""Colored HOMFLY invariants: unknot products, torus knots, stable limits.

The unknot carrier is the hook-content product

    P^lambda(a, q) = prod_x (1 - a*q^content(x)) / (1 - q^hook(x)),

in which the rank specialization is ``a = q^N``.  The homological gradings
used elsewhere in this package square these variables: a fixture monomial
``a_h^(2i) q_h^(2j)`` corresponds to ``a^i q^j`` here.

Torus knots are summed by the plethysm formula

    P^lambda(T(n, m)) ~ sum_mu  w_mu * c^mu_(lambda,n) * P^mu(unknot)

over ``|mu| = n*|lambda|``, where the weight ``w_mu`` carries the framing
factor ``q^(-(m/n)*kappa(mu))``.  Because the hook-content product is the
*unbalanced* character, the weight also carries the bookkeeping monomial
``q^(n_stat(mu))`` that converts it to the balanced quantum dimension; the
leftover global monomial is fixed a posteriori by the rank-one constraint
``P(a=q, q) = 1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .laurent import (
    DivisionError,
    LaurentPoly,
    Multidegree,
    RationalSeries,
    clear_fractional,
)
from .partitions import Partition
from .symmetric import plethysm_pn


class FactoredRational:
    """A product of polynomial factors over a product of ``1 - monomial`` factors."""

    __slots__ = ("numerator_factors", "denominator_monomials")

    def __init__(self, numerator_factors=(), denominator_monomials=()):
        self.numerator_factors = tuple(
            LaurentPoly._coerce(f) for f in numerator_factors)
        self.denominator_monomials = tuple(denominator_monomials)

    def numerator(self) -> LaurentPoly:
        out = LaurentPoly.one()
        for f in self.numerator_factors:
            out = out * f
        return out

    def denominator(self) -> LaurentPoly:
        out = LaurentPoly.one()
        for md in self.denominator_monomials:
            out = out * (LaurentPoly.one() - LaurentPoly.monomial(1, md))
        return out

    def series(self, var="q", order=30) -> RationalSeries:
        return RationalSeries(
            self.numerator(), self.denominator_monomials, var, order)

    def expand(self, var="q", order=30) -> LaurentPoly:
        return self.series(var, order).expand()

    def __mul__(self, other):
        if isinstance(other, FactoredRational):
            return FactoredRational(
                self.numerator_factors + other.numerator_factors,
                self.denominator_monomials + other.denominator_monomials,
            )
        return FactoredRational(
            self.numerator_factors + (LaurentPoly._coerce(other),),
            self.denominator_monomials,
        )

    __rmul__ = __mul__

    def __str__(self):
        num = " * ".join(f"({f})" for f in self.numerator_factors) or "1"
        den = " * ".join(
            f"(1 - {LaurentPoly.monomial(1, md)})"
            for md in self.denominator_monomials)
        return f"{num} / {den}" if den else num


def unknot_homfly(lam) -> FactoredRational:
    """Hook-content product for the colored unknot, in variables ``a, q``."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if lam.is_empty():
        return FactoredRational()
    nums, dens = [], []
    for cell in lam.cells():
        nums.append(LaurentPoly.one()
                    - LaurentPoly.monomial(1, Multidegree(a=1, q=lam.content(cell))))
        dens.append(Multidegree(q=lam.hook(cell)))
    return FactoredRational(nums, dens)


def macdonald_dim(lam) -> FactoredRational:
    """Evaluation product ``prod (t^coleg - a*q^coarm)/(1 - q^arm t^(leg+1))``.

    At ``q = t`` it degenerates to ``q^n_stat(lam)`` times the hook-content
    product :func:`unknot_homfly`.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if lam.is_empty():
        return FactoredRational()
    nums, dens = [], []
    for cell in lam.cells():
        nums.append(
            LaurentPoly.monomial(1, Multidegree(t=lam.coleg(cell)))
            - LaurentPoly.monomial(1, Multidegree(a=1, q=lam.coarm(cell))))
        dens.append(Multidegree(q=lam.arm(cell), t=lam.leg(cell) + 1))
    return FactoredRational(nums, dens)


def unknot_super(lam) -> FactoredRational:
    """Positive-coefficient unknot superpolynomial product in ``a, q, t``.

    ``prod_x (1 + a^2 q^(2c) t^(2*coarm+1)) / (1 - q^(2h) t^(2*arm))``;
    expand with :meth:`FactoredRational.series` in ``q``.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    nums, dens = [], []
    for cell in lam.cells():
        nums.append(LaurentPoly.one() + LaurentPoly.monomial(
            1,
            Multidegree(a=2, q=2 * lam.content(cell), t=2 * lam.coarm(cell) + 1)))
        dens.append(Multidegree(q=2 * lam.hook(cell), t=2 * lam.arm(cell)))
    return FactoredRational(nums, dens)


@dataclass
class NormalizationReport:
    """How a torus-knot polynomial was brought to canonical form."""

    monomial_shift: Multidegree = field(default_factory=Multidegree)
    sign: int = 1
    fractional_offset: Fraction = Fraction(0)
    checks: list = field(default_factory=list)

    def passed(self, name):
        return dict(self.checks).get(name)


def _hook_multiset(mu: Partition) -> Counter:
    return Counter(mu.hook(c) for c in mu.cells())


def _torus_sum(lam: Partition, n: int, m: int):
    """Shared numerator/denominator of the plethysm sum.

    Returns ``(total, common)`` with the unreduced invariant equal to
    ``total / prod_k (1 - q^k)^common[k]`` up to the cleared fractional
    ``q``-offset, which is also returned.
    """
    coeffs = plethysm_pn(lam, n)
    common = Counter()
    items = []
    for mu, c in coeffs.coeffs.items():
        hooks = _hook_multiset(mu)
        common |= hooks
        items.append((mu, c, hooks))
    total = LaurentPoly.zero()
    for mu, c, hooks in items:
        weight = LaurentPoly.monomial(
            c, Multidegree(q=-Fraction(m, n) * mu.kappa() + mu.n_stat()))
        num = unknot_homfly(mu).numerator()
        comp = LaurentPoly.one()
        for k, e in (common - hooks).items():
            comp = comp * (LaurentPoly.one() - LaurentPoly.var("q", k)) ** e
        total = total + weight * num * comp
    total, offset = clear_fractional(total)
    return total, common, offset


def match_up_to_monomial(p: LaurentPoly, target: LaurentPoly):
    """Monomial ``mu`` and sign ``s`` with ``p == s * mu * target``, or ``None``."""
    if p.is_zero() or target.is_zero():
        return None if p.terms != target.terms else (Multidegree(), 1)
    if len(p.terms) != len(target.terms):
        return None
    variables = sorted(set(p.variables()) | set(target.variables()))
    pmd, pc = max(((md, c) for md, c in p.terms.items()),
                  key=lambda kv: kv[0].key(variables))
    tmd, tc = max(((md, c) for md, c in target.terms.items()),
                  key=lambda kv: kv[0].key(variables))
    shift = pmd - tmd
    ratio = pc / tc
    if ratio not in (1, -1):
        return None
    shifted = target.map_exponents(lambda md: md + shift) * LaurentPoly.const(ratio)
    if shifted == p:
        return shift, int(ratio)
    return None


def torus_homfly(lam, n: int, m: int, reduced=True):
    """Colored HOMFLY invariant of the ``(n, m)`` torus knot.

    Reduced output is a Laurent polynomial in ``a, q`` canonicalized so that
    ``P(a=q, q) == 1``; the applied monomial shift and sign live in the
    returned :class:`NormalizationReport`.  Unreduced output is a
    :class:`FactoredRational` (the invariant is an infinite series).
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if gcd(n, m) != 1:
        raise ValueError(f"({n},{m}) are not coprime")
    total, common, offset = _torus_sum(lam, n, m)
    report = NormalizationReport(fractional_offset=offset)
    if not reduced:
        dens = []
        for k, e in sorted(common.items()):
            dens.extend([Multidegree(q=k)] * e)
        return FactoredRational((total,), tuple(dens)), report
    lam_hooks = _hook_multiset(lam)
    dividend = total
    for k, e in lam_hooks.items():
        dividend = dividend * (LaurentPoly.one() - LaurentPoly.var("q", k)) ** e
    divisor = unknot_homfly(lam).numerator()
    for k, e in common.items():
        divisor = divisor * (LaurentPoly.one() - LaurentPoly.var("q", k)) ** e
    try:
        quotient = dividend.divide_exact(divisor)
    except DivisionError as exc:
        raise DivisionError("non-polynomial reduced quotient") from exc
    at_sl1 = quotient.substitute("a", LaurentPoly.var("q"))
    if at_sl1.is_monomial():
        c, md = at_sl1.as_monomial()
        if abs(c) == 1:
            sign = 1 if c > 0 else -1
            shift = Multidegree(q=-md.e("q"))
            quotient = sign * quotient.map_exponents(lambda d: d + shift)
            report.sign = sign
            report.monomial_shift = shift
            report.checks.append(("sl1", True))
        else:
            report.checks.append(("sl1", False))
    else:
        report.checks.append(("sl1", False))
    return quotient, report


def sl_specialize(p: LaurentPoly, n: int, m: int) -> LaurentPoly:
    """Substitute ``a -> q^(n-m)`` (rank collapse of the super-rank ``n - m``)."""
    return p.substitute("a", LaurentPoly.var("q", n - m))


def sl_stabilization(p: LaurentPoly, n_list) -> list:
    """Whether rank collapse loses generators, for each rank in ``n_list``.

    For large enough rank the collapse ``a -> q^n`` maps distinct generators
    to distinct degrees, and the finite-rank homology equals the naive
    specialization of the full one; the returned flags must be eventually
    true and stay true.
    """
    out = []
    full = p.dimension()
    for n in n_list:
        collapsed = sl_specialize(p, n, 0)
        out.append((n, collapsed.dimension() == full))
    return out


def stable_limit_check(lam, n: int, m_list, order=10):
    """Compare normalized ``T(m, n)`` invariants against the ``n*lam`` unknot.

    Each unreduced invariant is aligned to ``unknot_homfly(n*lam)`` by a
    single monomial fixed at the lowest ``q``-slice, expanded to ``order``
    and compared slice by slice.  Returns a report whose agreement orders
    must be nondecreasing in ``m`` (the stable-limit property).
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    target = unknot_homfly(lam.scale(n)).expand("q", order + 1)
    rows = []
    for m in m_list:
        if gcd(n, m) != 1:
            raise ValueError(f"({n},{m}) not coprime")
        fr, _ = torus_homfly(lam, n, m, reduced=False)
        approx = fr.expand("q", order + 1 + _alignment_pad(fr))
        shifted = _align_lowest(approx, target)
        agree = -1
        if shifted is not None:
            q_degrees = sorted(set(target.degrees("q")) | set(shifted.degrees("q")))
            agree = None
            for d in q_degrees:
                if d > order:
                    break
                if shifted.coefficient_of("q", d) != target.coefficient_of("q", d):
                    break
                agree = d
            agree = -1 if agree is None else agree
        rows.append({"m": m, "agreement_order": agree})
    orders = [r["agreement_order"] for r in rows]
    return {
        "n": n,
        "color": lam,
        "order": order,
        "rows": rows,
        "nondecreasing": all(x <= y for x, y in zip(orders, orders[1:])),
    }


def _alignment_pad(fr: FactoredRational) -> int:
    num = fr.numerator_factors[0]
    return max(0, -int(num.min_degree("q"))) if not num.is_zero() else 0


def _align_lowest(p: LaurentPoly, target: LaurentPoly):
    """Shift ``p`` by the monomial matching its lowest q-term to the target's."""
    if p.is_zero() or target.is_zero():
        return None
    def lowest(poly):
        qmin = poly.min_degree("q")
        slice_ = poly.coefficient_of("q", qmin)
        amin = slice_.min_degree("a")
        return Multidegree(q=qmin, a=amin), slice_.coefficient_of("a", amin)
    pmd, pc = lowest(p)
    tmd, tc = lowest(target)
    ratio = tc.coefficient_sum() / pc.coefficient_sum()
    if ratio not in (1, -1):
        return None
    shift = tmd - pmd
    return LaurentPoly.const(ratio) * p.map_exponents(lambda md: md + shift)


# -- Hirota bilinear identity -----------------------------------------------------


def _rect_unknot_factors(R: int, S: int):
    """Balanced factor multisets of the ``R x S`` unknot product.

    Numerator keys are contents ``j - i`` (factor ``a*q^k - a^-1*q^-k``),
    denominator keys are hooks (factor ``q^h - q^-h``).
    """
    num, den = Counter(), Counter()
    for i in range(1, R + 1):
        for j in range(1, S + 1):
            num[j - i] += 1
            den[R + S - i - j + 1] += 1
    return num, den


def _num_factor(k: int) -> LaurentPoly:
    return (LaurentPoly.monomial(1, Multidegree(a=1, q=k))
            - LaurentPoly.monomial(1, Multidegree(a=-1, q=-k)))


def _den_factor(h: int) -> LaurentPoly:
    return LaurentPoly.var("q", h) - LaurentPoly.var("q", -h)


def _counter_ratio_poly(delta_num: Counter, delta_den: Counter):
    """Split signed factor multisets into an (expanded) fraction ``N / D``."""
    N, D = LaurentPoly.one(), LaurentPoly.one()
    for k, e in delta_num.items():
        if e > 0:
            N = N * _num_factor(k) ** e
        elif e < 0:
            D = D * _num_factor(k) ** (-e)
    for h, e in delta_den.items():
        if e > 0:
            D = D * _den_factor(h) ** e
        elif e < 0:
            N = N * _den_factor(h) ** (-e)
    return N, D


def hirota_check(Rmax: int, Smax: int):
    """Verify ``P^2 = P_up*P_down + P_left*P_right`` for unknot rectangle products.

    The boundary convention is ``P_(0,S) = P_(R,0) = 1``.  Exact: the two
    cross ratios ``X`` and ``Y`` are formed by multiset cancellation of the
    shared binomial factors and the identity ``X + Y = 1`` is cleared of
    denominators.  Failures are reported, not raised.
    """
    results = []
    for R in range(1, Rmax + 1):
        for S in range(1, Smax + 1):
            n0, d0 = _rect_unknot_factors(R, S)
            nu, du = _rect_unknot_factors(R + 1, S)
            nd, dd = _rect_unknot_factors(R - 1, S)
            nl, dl = _rect_unknot_factors(R, S + 1)
            nr, dr = _rect_unknot_factors(R, S - 1)
            dn_x = Counter(nu) + Counter(nd)
            dn_x.subtract(n0)
            dn_x.subtract(n0)
            dd_x = Counter(du) + Counter(dd)
            dd_x.subtract(d0)
            dd_x.subtract(d0)
            dn_y = Counter(nl) + Counter(nr)
            dn_y.subtract(n0)
            dn_y.subtract(n0)
            dd_y = Counter(dl) + Counter(dr)
            dd_y.subtract(d0)
            dd_y.subtract(d0)
            NX, DX = _counter_ratio_poly(dn_x, dd_x)
            NY, DY = _counter_ratio_poly(dn_y, dd_y)
            ok = NX * DY + NY * DX == DX * DY
            results.append(((R, S), ok))
    return results
