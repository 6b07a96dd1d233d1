"""The quotient ring presentation through Weyl invariants and ann(e).

The rational cohomology of the nonabelian quotient is the ring of Weyl
invariants of the torus-quotient ring modulo the ideal of invariants killed
by multiplication with the root-class product e.  Everything here is
degreewise exact linear algebra over Q: invariant bases are monomial orbit
sums, ann(e) is a nullspace, Betti numbers are dimension differences, and
the Poincare pairing is a matrix of quotient integrals.

A second, independent route to the signature counts eigenvalue signs of the
middle-degree pairing matrix through its characteristic polynomial; Descartes'
sign rule is exact there because symmetric matrices have real spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .ratpoly import Exponent, Poly, exponent_orbit
from .rootdata import Subgroup
from .quotient import QuotientModel, integrate_group

Matrix = list[list[Fraction]]


# -- exact rational linear algebra ------------------------------------------


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices, exact over Q."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def matrix_rank(rows: Matrix) -> int:
    if not rows or not rows[0]:
        return 0
    _, pivots = rref(rows)
    return len(pivots)


def nullspace(rows: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column, in column order."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * ncols
        v[c] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][c]
        basis.append(v)
    return basis


def _primitive(vec: Sequence[Fraction]) -> list[int]:
    """Scale to a primitive integer vector with positive leading entry."""
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 1)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def charpoly(a: Matrix) -> list[Fraction]:
    """Characteristic polynomial of a square matrix, leading coefficient
    first, by the trace recursion (exact over Q)."""
    n = len(a)
    coeffs = [Fraction(1)]
    mk = [[Fraction(x) for x in row] for row in a]
    for k in range(1, n + 1):
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs.append(ck)
        if k == n:
            break
        for i in range(n):
            mk[i][i] += ck
        mk = [
            [sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def eigenvalue_signs(a: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric rational
    matrix, via Descartes' rule on the characteristic polynomial.  Exact
    because the spectrum is real."""
    if not a:
        return (0, 0, 0)
    coeffs = charpoly(a)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    zeros = len(a) + 1 - len(coeffs)

    def sign_changes(cs: list[Fraction]) -> int:
        signs = [1 if c > 0 else -1 for c in cs if c != 0]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    pos = sign_changes(coeffs)
    neg = sign_changes([c if i % 2 == 0 else -c for i, c in enumerate(coeffs)])
    return (pos, neg, zeros)


# -- graded pieces of the presentation --------------------------------------


def invariant_basis(m: QuotientModel, d: int) -> list[Poly]:
    """Basis of the degree-d Weyl invariants: one monomial orbit sum per
    orbit, ordered by descending lexicographically greatest representative."""
    if not 0 <= d <= m.ring.top_degree:
        raise ValueError(f"degree {d} out of range 0..{m.ring.top_degree}")
    gens = m.weyl_action
    seen: set[Exponent] = set()
    orbits: list[tuple[Exponent, frozenset[Exponent]]] = []
    for e in m.ring.monomials_of_degree(d):
        if e in seen:
            continue
        orbit = exponent_orbit(e, gens)
        seen |= orbit
        orbits.append((max(orbit), orbit))
    orbits.sort(reverse=True)
    return [Poly(m.ring, {e: 1 for e in orbit}) for _, orbit in orbits]


def ann_e_basis(m: QuotientModel, d: int, subgroup: Subgroup | None = None) -> list[Poly]:
    """Basis of the degree-d invariants annihilated by the root-class product,
    as the exact nullspace of the multiplication-by-e coefficient matrix."""
    inv = invariant_basis(m, d)
    if not inv:
        return []
    e = m.e_class(subgroup)
    products = [b * e for b in inv]
    target = sorted({mono for p in products for mono in p.terms}, reverse=True)
    rows = [[p.terms.get(mono, 0) for p in products] for mono in target]
    kernel = nullspace([[Fraction(x) for x in row] for row in rows], len(inv))
    if not kernel:
        return []
    reduced, _ = rref(kernel)
    basis = []
    for vec in reduced:
        ints = _primitive(vec)
        if all(x == 0 for x in ints):
            continue
        combo = m.ring.zero()
        for c, b in zip(ints, inv):
            if c:
                combo = combo + b * c
        basis.append(combo)
    return basis


def quotient_top_degree(m: QuotientModel, subgroup: Subgroup | None = None) -> int:
    """Top u-degree of the presented quotient ring."""
    if subgroup is None:
        return m.quotient_dim
    return m.ring.top_degree - (len(m.root_data.roots) - len(subgroup.roots))


def poincare_polynomial(m: QuotientModel, subgroup: Subgroup | None = None) -> list[int]:
    """Betti numbers of the presented quotient: invariant dimension minus
    ann(e) dimension per degree, trailing zeros trimmed."""
    top = quotient_top_degree(m, subgroup)
    betti = [
        len(invariant_basis(m, d)) - len(ann_e_basis(m, d, subgroup))
        for d in range(top + 1)
    ]
    while betti and betti[-1] == 0:
        betti.pop()
    return betti


def pairing_matrix(
    m: QuotientModel, d: int, subgroup: Subgroup | None = None
) -> Matrix:
    """Gram matrix of the quotient pairing between the degree-d and
    complementary-degree invariant bases."""
    top = quotient_top_degree(m, subgroup)
    if not 0 <= d <= top:
        raise ValueError(f"degree {d} out of range 0..{top}")
    left = invariant_basis(m, d)
    right = invariant_basis(m, top - d)
    return [[integrate_group(m, a * b, subgroup) for b in right] for a in left]


def signature_from_pairing(m: QuotientModel) -> Fraction:
    """Signature as the exact eigenvalue-sign count of the middle-degree
    pairing matrix; zero when the quotient dimension is odd."""
    top = quotient_top_degree(m)
    if top % 2 == 1:
        return Fraction(0)
    pos, neg, _ = eigenvalue_signs(pairing_matrix(m, top // 2))
    return Fraction(pos - neg)


# -- the assembled report ----------------------------------------------------


@dataclass(frozen=True)
class DegreeRow:
    degree: int
    invariant_dim: int
    ann_dim: int
    betti: int
    pairing_rank: int
    ann_basis: tuple[str, ...]


@dataclass(frozen=True)
class PresentationReport:
    rows: tuple[DegreeRow, ...]
    betti: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.betti)


def presentation_report(m: QuotientModel, subgroup: Subgroup | None = None) -> PresentationReport:
    """Degreewise summary of the quotient presentation; fails if the Betti
    sequence is not palindromic, which would contradict Poincare duality."""
    top = quotient_top_degree(m, subgroup)
    rows = []
    betti = []
    for d in range(top + 1):
        inv = invariant_basis(m, d)
        ann = ann_e_basis(m, d, subgroup)
        b = len(inv) - len(ann)
        rank = matrix_rank(pairing_matrix(m, d, subgroup))
        rows.append(
            DegreeRow(
                degree=d,
                invariant_dim=len(inv),
                ann_dim=len(ann),
                betti=b,
                pairing_rank=rank,
                ann_basis=tuple(str(z) for z in ann),
            )
        )
        betti.append(b)
    if betti != betti[::-1]:
        raise ValueError(f"Betti numbers are not palindromic: {betti}")
    return PresentationReport(rows=tuple(rows), betti=tuple(betti))
