"""Torus-quotient models and integration of lifted classes.

A `QuotientModel` packages everything the integration formulas need: the
truncated ring presenting the torus quotient's cohomology, root data for the
nonabelian group, the (split) tangent bundle of the torus quotient, an
orbifold prefactor, and the Weyl action on the ring variables.

Integration over the torus quotient is coefficient extraction at the unique
top monomial.  Integration over the nonabelian quotient multiplies a lifted
class by the product of all root Euler classes and divides by the Weyl group
order; the full-rank-subgroup variant swaps in the complement roots and the
ratio of Weyl orders.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .ratpoly import (
    Perm,
    Poly,
    Ring,
    check_permutation,
    elementary_symmetric,
    generate_permutation_group,
    rat,
)
from .rootdata import (
    RootData,
    Subgroup,
    Weight,
    e_product,
    is_permutation_generator,
    root_euler_class,
    unitary_roots,
)


class SplitBundle:
    """A formal integer combination of line bundles over the model's ring.

    Each summand is (chern root, multiplicity); roots are homogeneous of
    degree 1 (or zero for trivial lines), multiplicities may be negative for
    virtual bundles.
    """

    __slots__ = ("ring", "summands")

    def __init__(self, ring: Ring, summands: Iterable[tuple[Poly, int]]):
        tidy = []
        for root, mult in summands:
            if root.ring != ring:
                raise ValueError("chern root lives in the wrong ring")
            if not root.is_homogeneous(1) and not root.is_zero():
                raise ValueError(f"chern root must be homogeneous of degree 1 or zero: {root}")
            if not isinstance(mult, int):
                raise ValueError(f"multiplicity must be an integer, got {mult!r}")
            if mult:
                tidy.append((root, mult))
        self.ring = ring
        self.summands = tuple(tidy)

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.summands)

    def __add__(self, other: SplitBundle) -> SplitBundle:
        if self.ring != other.ring:
            raise ValueError("cannot add bundles over different rings")
        return SplitBundle(self.ring, self.summands + other.summands)

    def negated(self) -> SplitBundle:
        return SplitBundle(self.ring, [(r, -m) for r, m in self.summands])

    def tensor(self, other: SplitBundle) -> SplitBundle:
        """Tensor product of split bundles: roots add, multiplicities multiply."""
        if self.ring != other.ring:
            raise ValueError("cannot tensor bundles over different rings")
        return SplitBundle(
            self.ring,
            [(r1 + r2, m1 * m2) for r1, m1 in self.summands for r2, m2 in other.summands],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SplitBundle):
            return NotImplemented
        return self.ring == other.ring and self.summands == other.summands

    def __repr__(self) -> str:
        inside = ", ".join(f"({r!s})x{m}" for r, m in self.summands)
        return f"SplitBundle[{inside}]"


def root_bundle(ring: Ring, weights: Iterable[Weight]) -> SplitBundle:
    """The direct sum of the line bundles attached to the given weights."""
    return SplitBundle(ring, [(root_euler_class(ring, w), 1) for w in weights])


class QuotientModel:
    """A torus-quotient presentation ready for the integration formulas."""

    __slots__ = (
        "ring",
        "root_data",
        "integration_exponents",
        "tangent_bundle",
        "orbifold_prefactor",
        "weyl_action",
        "subgroup",
        "_e_cache",
        "_weyl_group",
    )

    def __init__(
        self,
        ring: Ring,
        root_data: RootData,
        tangent_bundle: SplitBundle,
        orbifold_prefactor: int | Fraction = 1,
        weyl_action: Sequence[Perm] | None = None,
        subgroup: Subgroup | None = None,
    ):
        if root_data.rank != ring.k:
            raise ValueError(
                f"root data rank {root_data.rank} does not match {ring.k} ring variables"
            )
        if tangent_bundle.ring != ring:
            raise ValueError("tangent bundle lives in the wrong ring")
        if tangent_bundle.rank != ring.top_degree:
            raise ValueError(
                f"tangent bundle rank {tangent_bundle.rank} does not match the "
                f"torus quotient dimension {ring.top_degree}"
            )
        prefactor = rat(orbifold_prefactor)
        if prefactor <= 0:
            raise ValueError("orbifold prefactor must be positive")
        if weyl_action is None:
            gens = root_data.weyl_generators
            if not all(is_permutation_generator(g) for g in gens):
                raise ValueError(
                    "root data has matrix generators; supply an explicit "
                    "permutation weyl_action"
                )
            weyl_action = gens
        action = tuple(check_permutation(g, ring.k) for g in weyl_action)
        for g in action:
            for i in range(ring.k):
                if ring.truncations[g[i]] != ring.truncations[i]:
                    raise ValueError(
                        f"Weyl generator {g} does not preserve the truncation "
                        f"exponents {ring.truncations}"
                    )
        if len(root_data.roots) > ring.top_degree:
            raise ValueError("more roots than the torus quotient dimension allows")
        if subgroup is not None:
            sub = set(subgroup.roots)
            if not sub <= set(root_data.roots):
                raise ValueError("subgroup roots must be contained in the model's roots")
            if root_data.weyl_order % subgroup.weyl_order != 0:
                raise ValueError("subgroup Weyl order must divide the group's Weyl order")
        self.ring = ring
        self.root_data = root_data
        self.integration_exponents = ring.top_exponents
        self.tangent_bundle = tangent_bundle
        self.orbifold_prefactor = prefactor
        self.weyl_action = action
        self.subgroup = subgroup
        self._e_cache: dict = {}
        self._weyl_group: tuple[Perm, ...] | None = None

    @property
    def quotient_dim(self) -> int:
        """Complex dimension of the nonabelian quotient."""
        return self.ring.top_degree - len(self.root_data.roots)

    def e_class(self, subgroup: Subgroup | None = None) -> Poly:
        """Product of root Euler classes: all roots, or the complement of a
        full-rank subgroup's roots."""
        key = subgroup
        if key not in self._e_cache:
            if subgroup is None:
                self._e_cache[key] = e_product(self.ring, self.root_data, "all")
            else:
                self._e_cache[key] = e_product(self.ring, self.root_data, "complement", subgroup)
        return self._e_cache[key]

    def weyl_group(self) -> tuple[Perm, ...]:
        """All elements of the group generated by the Weyl action."""
        if self._weyl_group is None:
            self._weyl_group = tuple(generate_permutation_group(self.weyl_action, self.ring.k))
        return self._weyl_group

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientModel):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.root_data == other.root_data
            and self.tangent_bundle == other.tangent_bundle
            and self.orbifold_prefactor == other.orbifold_prefactor
            and self.weyl_action == other.weyl_action
            and self.subgroup == other.subgroup
        )

    def __repr__(self) -> str:
        return f"QuotientModel(ring={self.ring!r}, roots={len(self.root_data.roots)})"


def grassmannian_model(k: int, n: int) -> QuotientModel:
    """The Grassmannian of k-planes in C^n as a unitary quotient, presented
    through the k-fold product of projective (n-1)-spaces.

    The tangent bundle uses the Euler-sequence splitting: n copies of each
    hyperplane line per factor minus k trivial lines, so its total Chern
    class is the product of (1+u_i)^n.
    """
    if k < 1 or n < k:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    ring = Ring(k, [n] * k)
    summands: list[tuple[Poly, int]] = [(ring.variable(i), n) for i in range(k)]
    summands.append((ring.zero(), -k))
    return QuotientModel(ring, unitary_roots(k), SplitBundle(ring, summands))


def integrate_torus(m: QuotientModel, p: Poly) -> Fraction:
    """Integral over the torus quotient: the top-monomial coefficient."""
    if p.ring != m.ring:
        raise ValueError("polynomial lives in the wrong ring")
    return Fraction(p.terms.get(m.integration_exponents, 0))


def integrate_group(m: QuotientModel, lift: Poly, subgroup: Subgroup | None = None) -> Fraction:
    """Integral over the nonabelian quotient of a class with the given lift.

    Computed on the torus side as prefactor * integral(lift * e) where e is
    the product of root Euler classes.  The Weyl prefactor is 1/|W|, or
    |W(H)|/|W(G)| when integrating against a full-rank subgroup's complement
    roots; the orbifold prefactor (a supplied stabilizer-order ratio)
    multiplies everything.
    """
    if lift.ring != m.ring:
        raise ValueError("lift lives in the wrong ring")
    if subgroup is None:
        weyl = Fraction(1, m.root_data.weyl_order)
    else:
        weyl = Fraction(subgroup.weyl_order, m.root_data.weyl_order)
    return weyl * m.orbifold_prefactor * integrate_torus(m, lift * m.e_class(subgroup))


def chern_pairing(m: QuotientModel, exponents: Sequence[int]) -> Fraction:
    """Grassmannian pairing of a monomial in dual-tautological Chern classes.

    Evaluates (1/k!) times the top-monomial coefficient of the product of
    elementary-symmetric powers with the full pair product of root classes
    prod_{i != j} (u_i - u_j).  This is a separate code path from
    `integrate_group`; the two must agree.
    """
    k = m.ring.k
    exps = list(exponents)
    if len(exps) != k:
        raise ValueError(f"expected {k} exponents, got {len(exps)}")
    if any(x < 0 for x in exps):
        raise ValueError(f"negative exponent in {exponents}")
    if len(set(m.ring.truncations)) != 1:
        raise ValueError("chern pairings need equal truncation exponents in every variable")
    integrand = m.ring.one()
    for i, mi in enumerate(exps, start=1):
        if mi:
            integrand = integrand * elementary_symmetric(m.ring, i) ** mi
    gens = m.ring.gens()
    for i in range(k):
        for j in range(k):
            if i != j:
                integrand = integrand * (gens[i] - gens[j])
    return integrand.coefficient(m.ring.top_exponents) / factorial(k)
