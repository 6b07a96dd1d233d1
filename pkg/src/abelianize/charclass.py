"""Characteristic classes of split bundles and the derived invariants.

Multiplicative classes are given by a univariate series with constant term 1
(total Chern 1+x, Todd x/(1-exp(-x)), L-class x/tanh(x), or any custom
series); applied to a split bundle they become finite exact products in the
truncated ring.  On top of these sit the elliptic-operator index of a lifted
bundle and the Euler-characteristic, signature, and generic multiplicative
characteristic-number formulas, all evaluated on the torus side.

The named series are generated from the exponential series by exact
reciprocal/product recurrences rather than hard-coded tables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .ratpoly import Poly, Series, eval_series, exp_series
from .rootdata import Subgroup, Weight, root_euler_class
from .quotient import QuotientModel, SplitBundle, integrate_torus, root_bundle


# -- named multiplicative series ------------------------------------------


def total_chern_series(order: int) -> Series:
    """1 + x."""
    return Series([1, 1]).truncated(order)


def todd_series(order: int) -> Series:
    """x/(1 - exp(-x)), as the reciprocal of (1 - exp(-x))/x."""
    e = exp_series(order + 1)
    # (1 - exp(-x))/x has coefficient (-1)^j / (j+1)! at x^j
    den = Series([(-1) ** j * e.coeffs[j + 1] for j in range(order + 1)])
    return den.reciprocal()


def _cosh_series(order: int) -> Series:
    e = exp_series(order)
    return Series([e.coeffs[j] if j % 2 == 0 else 0 for j in range(order + 1)])


def _sinh_over_x_series(order: int) -> Series:
    e = exp_series(order + 1)
    return Series([e.coeffs[j + 1] if j % 2 == 0 else 0 for j in range(order + 1)])


def l_class_series(order: int) -> Series:
    """x/tanh(x) = cosh(x) / (sinh(x)/x)."""
    return _cosh_series(order) * _sinh_over_x_series(order).reciprocal()


def tanh_series(order: int) -> Series:
    """tanh(x); zero constant term, so usable only through substitution."""
    e = exp_series(order)
    sinh = Series([e.coeffs[j] if j % 2 == 1 else 0 for j in range(order + 1)])
    return sinh * _cosh_series(order).reciprocal()


def euler_factor_series(order: int) -> Series:
    """x/(1+x), the per-root factor of the Euler-characteristic formula."""
    geom = Series([1, 1]).truncated(order).reciprocal()
    return Series([0] + list(geom.coeffs[:order]))


#: Named multiplicative series usable in characteristic-number computations.
CLASS_SERIES: dict[str, Callable[[int], Series]] = {
    "total-chern": total_chern_series,
    "todd": todd_series,
    "l-class": l_class_series,
}


# -- classes of split bundles ----------------------------------------------


def mult_class(f: Series, V: SplitBundle) -> Poly:
    """Apply a multiplicative series to a split bundle.

    Each summand contributes f(root)^multiplicity; negative multiplicities go
    through the series reciprocal, so virtual bundles are supported.
    """
    if f.constant_term != 1:
        raise ValueError("a multiplicative class series must have constant term 1")
    f = f.truncated(V.ring.top_degree)
    f_inv = None
    out = V.ring.one()
    for root, mult in V.summands:
        if mult > 0:
            out = out * eval_series(f, root) ** mult
        else:
            if f_inv is None:
                f_inv = f.reciprocal()
            out = out * eval_series(f_inv, root) ** (-mult)
    return out


def chern_character(V: SplitBundle) -> Poly:
    """Sum of multiplicity * exp(root) over the summands; additive over sums,
    multiplicative over tensor products of lines."""
    e = exp_series(V.ring.top_degree)
    out = V.ring.zero()
    for root, mult in V.summands:
        out = out + eval_series(e, root) * mult
    return out


def exterior_power(V: SplitBundle, i: int) -> SplitBundle:
    """The i-th exterior power of a genuine split bundle: one line per
    i-subset of its lines, with the subset's roots summed."""
    if any(m < 0 for _, m in V.summands):
        raise ValueError("exterior powers need nonnegative multiplicities")
    lines: list[Poly] = []
    for root, mult in V.summands:
        lines.extend([root] * mult)
    if i < 0 or i > len(lines):
        raise ValueError(f"exterior power index {i} out of range 0..{len(lines)}")
    summands = []
    for combo in combinations(range(len(lines)), i):
        root = V.ring.zero()
        for j in combo:
            root = root + lines[j]
        summands.append((root, 1))
    return SplitBundle(V.ring, summands)


def lambda_alternating_ch(E: SplitBundle) -> Poly:
    """The alternating Chern character of the exterior algebra of E, via the
    product identity prod (1 - exp(root)) over the lines of E."""
    if any(m < 0 for _, m in E.summands):
        raise ValueError("the alternating exterior Chern character needs a genuine bundle")
    e = exp_series(E.ring.top_degree)
    out = E.ring.one()
    one = E.ring.one()
    for root, mult in E.summands:
        out = out * (one - eval_series(e, root)) ** mult
    return out


# -- index of a lifted elliptic operator ------------------------------------


def _positive_weights(
    m: QuotientModel,
    positive: Sequence[Weight] | None,
    subgroup: Subgroup | None,
) -> tuple[Weight, ...]:
    weights = m.root_data.positive if positive is None else tuple(tuple(w) for w in positive)
    if set(weights) | {tuple(-x for x in w) for w in weights} != set(m.root_data.roots):
        raise ValueError("positive roots must be a positivity choice for the model's roots")
    if subgroup is not None:
        sub = set(subgroup.roots)
        if not sub <= set(m.root_data.roots):
            raise ValueError("subgroup roots must be contained in the model's roots")
        weights = tuple(w for w in weights if w not in sub)
    return weights


def index_torus(m: QuotientModel, V: SplitBundle) -> Fraction:
    """Index of the twisted Dolbeault operator on the torus quotient:
    the integral of ch(V) * Td(tangent)."""
    integrand = chern_character(V) * mult_class(todd_series(m.ring.top_degree), m.tangent_bundle)
    return integrate_torus(m, integrand)


def index_group(
    m: QuotientModel,
    V_lift: SplitBundle,
    positive: Sequence[Weight] | None = None,
    subgroup: Subgroup | None = None,
) -> Fraction:
    """Index on the nonabelian quotient of the operator twisted by a bundle
    with the given lift, computed on the torus side as the integral of
    ch(lift) * Td(tangent) * prod (1 - exp(e(alpha))) over positive roots.

    The value is independent of the positivity choice; `positive` lets tests
    exercise that.  With `subgroup` set, only the positive roots outside the
    subgroup enter (the full-rank-subgroup variant).
    """
    if V_lift.ring != m.ring:
        raise ValueError("bundle lives in the wrong ring")
    E = root_bundle(m.ring, _positive_weights(m, positive, subgroup))
    td = mult_class(todd_series(m.ring.top_degree), m.tangent_bundle)
    integrand = chern_character(V_lift) * td * lambda_alternating_ch(E)
    return integrate_torus(m, integrand)


def index_group_two_term(
    m: QuotientModel,
    V_lift: SplitBundle,
    positive: Sequence[Weight] | None = None,
    subgroup: Subgroup | None = None,
) -> Fraction:
    """The same index as the difference of two torus-side indices, twisting by
    the even and odd exterior powers of the positive-root bundle."""
    if V_lift.ring != m.ring:
        raise ValueError("bundle lives in the wrong ring")
    E = root_bundle(m.ring, _positive_weights(m, positive, subgroup))
    rank = E.rank
    even = SplitBundle(m.ring, [])
    odd = SplitBundle(m.ring, [])
    for i in range(rank + 1):
        piece = exterior_power(E, i)
        if i % 2 == 0:
            even = even + piece
        else:
            odd = odd + piece
    return index_torus(m, V_lift.tensor(even)) - index_torus(m, V_lift.tensor(odd))


# -- characteristic numbers --------------------------------------------------


def _weyl_prefactor(m: QuotientModel) -> Fraction:
    return Fraction(1, m.root_data.weyl_order) * m.orbifold_prefactor


def euler_characteristic(m: QuotientModel) -> Fraction:
    """Euler characteristic of the nonabelian quotient: the prefactored torus
    integral of c(tangent) * prod e(alpha)/(1 + e(alpha))."""
    D = m.ring.top_degree
    integrand = mult_class(total_chern_series(D), m.tangent_bundle)
    factor = euler_factor_series(D)
    for w in m.root_data.roots:
        integrand = integrand * eval_series(factor, root_euler_class(m.ring, w))
    return _weyl_prefactor(m) * integrate_torus(m, integrand)


def signature(m: QuotientModel) -> Fraction:
    """Signature of the nonabelian quotient: the prefactored torus integral
    of L(tangent) * prod tanh(e(alpha)); zero off dimensions divisible by 4."""
    if m.quotient_dim % 2 == 1:
        return Fraction(0)
    D = m.ring.top_degree
    integrand = mult_class(l_class_series(D), m.tangent_bundle)
    th = tanh_series(D)
    for w in m.root_data.roots:
        integrand = integrand * eval_series(th, root_euler_class(m.ring, w))
    return _weyl_prefactor(m) * integrate_torus(m, integrand)


def characteristic_number(m: QuotientModel, f: Series) -> Fraction:
    """Characteristic number of the nonabelian quotient for any multiplicative
    series f: the prefactored torus integral of
    f(tangent - E - E*) * prod e(alpha), with E the positive-root bundle."""
    if f.constant_term != 1:
        raise ValueError("a multiplicative class series must have constant term 1")
    roots_bundle = root_bundle(m.ring, m.root_data.roots)
    virtual = m.tangent_bundle + roots_bundle.negated()
    integrand = mult_class(f, virtual) * m.e_class()
    return _weyl_prefactor(m) * integrate_torus(m, integrand)
