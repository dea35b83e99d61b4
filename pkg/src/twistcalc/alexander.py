"""Alexander polynomials from Seifert matrices and Torres reductions.

Single-variable polynomials come from det(V - t V^T) computed exactly by
integer evaluation and interpolation; signatures come from congruence
diagonalization over the rationals.  The multivariable side implements
the second Torres condition as an exact-division step, plus the full
ribbon-family pipeline built on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import (
    ArityError,
    DomainError,
    InvalidSurgeryError,
    TorresViolationError,
)
from .laurent import (
    DivisibilityError,
    MonomialMap,
    MultiLaurent,
    exact_divide,
    normalize_units,
    set_to_one,
    span,
    substitute,
)

Matrix = Tuple[Tuple[int, ...], ...]


def _as_square_matrix(entries: Sequence[Sequence[int]]) -> Matrix:
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    for row in rows:
        if len(row) != len(rows):
            raise ArityError("matrix is not square")
    return rows


def integer_determinant(entries: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    rows = [list(row) for row in _as_square_matrix(entries)]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot_row is None:
                return 0
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def alexander_from_seifert(entries: Sequence[Sequence[int]]) -> MultiLaurent:
    """Unit-normalized det(V - t V^T) of a Seifert matrix V.

    The determinant is a degree <= d polynomial, so it is pinned down by
    its values at d+1 integer points; each value is an exact integer
    determinant and the interpolation runs over the rationals.
    """
    v = _as_square_matrix(entries)
    d = len(v)
    if d == 0:
        return MultiLaurent.constant(1, 1)
    vt = _transpose(v)
    points = list(range(d + 1))
    values = [
        integer_determinant(
            [
                [v[i][j] - t * vt[i][j] for j in range(d)]
                for i in range(d)
            ]
        )
        for t in points
    ]
    coeffs = _interpolate_integer_polynomial(points, values)
    poly = MultiLaurent(1, {(i,): c for i, c in enumerate(coeffs) if c})
    if poly.is_zero():
        raise DomainError("Seifert matrix has vanishing Alexander polynomial")
    return normalize_units(poly)


def _interpolate_integer_polynomial(points: List[int], values: List[int]) -> List[int]:
    # Newton divided differences; the result must have integer coefficients.
    n = len(points)
    table = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (points[i] - points[i - level])
    coeffs = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # multiply accumulated polynomial by (t - points[i]) and add table[i]
        next_coeffs = [Fraction(0)] * n
        for j in range(n - 1):
            next_coeffs[j + 1] += coeffs[j]
            next_coeffs[j] -= points[i] * coeffs[j]
        next_coeffs[0] += table[i]
        coeffs = next_coeffs
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise DomainError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return out


def signature_of_symmetric(entries: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix by exact congruence
    diagonalization (no floating point)."""
    s = _as_square_matrix(entries)
    n = len(s)
    a = [[Fraction(s[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise DomainError("matrix is not symmetric")
    positive = negative = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
                a[k], a[swap] = a[swap], a[k]
            else:
                other = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if other is None:
                    continue
                # hyperbolic pair: congruence-add row/column `other` into k
                for j in range(n):
                    a[k][j] += a[other][j]
                for i in range(n):
                    a[i][k] += a[i][other]
        pivot = a[k][k]
        if pivot > 0:
            positive += 1
        else:
            negative += 1
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor:
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
                # column step; its j = k iteration clears a[k][i] first, so
                # the j = i iteration leaves the diagonal at the congruence
                # value and the result stays symmetric
                for j in range(k, n):
                    a[j][i] -= factor * a[k][j]
    return positive - negative


def signature_bound(entries: Sequence[Sequence[int]]) -> Tuple[int, int]:
    """(signature of V + V^T, slice-genus lower bound ceil(|sigma| / 2))."""
    v = _as_square_matrix(entries)
    vt = _transpose(v)
    symmetric = [
        [v[i][j] + vt[i][j] for j in range(len(v))] for i in range(len(v))
    ]
    sigma = signature_of_symmetric(symmetric)
    return sigma, (abs(sigma) + 1) // 2


# -- Torres reductions --------------------------------------------------------


@dataclass(frozen=True)
class LinkAlexander:
    """Multivariable Alexander polynomial with pairwise linking numbers.

    Variable i of ``poly`` corresponds to component i; ``linking`` is the
    symmetric matrix of pairwise linking numbers (diagonal ignored).
    """

    poly: MultiLaurent
    linking: Matrix

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.linking)
        object.__setattr__(self, "linking", rows)
        if len(rows) != self.poly.nvars:
            raise ArityError(
                f"linking matrix size {len(rows)} != component count {self.poly.nvars}"
            )
        for i, row in enumerate(rows):
            if len(row) != len(rows):
                raise ArityError("linking matrix is not square")
            for j in range(len(rows)):
                if rows[i][j] != rows[j][i]:
                    raise ArityError("linking matrix is not symmetric")


def torres_reduce(link: LinkAlexander, erase: int) -> LinkAlexander:
    """Erase one component via the second Torres condition.

    For three or more components the specialized polynomial is divided by
    (prod x_i^(l_i) - 1); for a two-component link the knot polynomial is
    (specialized) * (x - 1) / (x^l - 1).  Inexact division means the input
    polynomial is inconsistent with the claimed linking data.
    """
    mu = link.poly.nvars
    if not 0 <= erase < mu:
        raise ArityError(f"no component with index {erase}")
    if mu < 2:
        raise DomainError("need at least two components to reduce")
    retained = [i for i in range(mu) if i != erase]
    ells = [link.linking[i][erase] for i in retained]
    specialized = set_to_one(link.poly, erase)
    if mu >= 3:
        if all(l == 0 for l in ells):
            raise TorresViolationError(
                "all linking numbers with the erased component vanish"
            )
        factor = MultiLaurent.monomial(mu - 1, ells) - 1
        try:
            reduced = exact_divide(specialized, factor)
        except DivisibilityError as exc:
            raise TorresViolationError(str(exc)) from exc
    else:
        ell = ells[0]
        if ell == 0:
            raise TorresViolationError(
                "linking number zero: the Torres factor x^0 - 1 vanishes"
            )
        x = MultiLaurent.variable(1, 0)
        try:
            reduced = exact_divide(
                specialized * (x - 1),
                MultiLaurent.monomial(1, (ell,)) - 1,
            )
        except DivisibilityError as exc:
            raise TorresViolationError(str(exc)) from exc
    sub_linking = tuple(
        tuple(link.linking[i][j] for j in retained) for i in retained
    )
    return LinkAlexander(reduced, sub_linking)


def surgery_dual_substitution(
    poly: MultiLaurent, basis: Sequence[Sequence[int]]
) -> MultiLaurent:
    """Meridian change of basis applied as a monomial substitution.

    ``basis[i]`` expresses the old meridian i in the new meridian basis;
    it must be unimodular to define a surgery dual.
    """
    rows = _as_square_matrix(basis)
    if len(rows) != poly.nvars:
        raise ArityError(
            f"basis size {len(rows)} != variable count {poly.nvars}"
        )
    if integer_determinant(rows) not in (1, -1):
        raise InvalidSurgeryError("change of basis matrix is not unimodular")
    return substitute(poly, MonomialMap(rows, poly.nvars))


# -- the ribbon family pipeline ----------------------------------------------


def _ribbon_seed() -> MultiLaurent:
    # (-1 + x + y)(-x - y + x y)(-1 + z) in variables (x, y, z)
    one = MultiLaurent.constant(3, 1)
    x = MultiLaurent.variable(3, 0)
    y = MultiLaurent.variable(3, 1)
    z = MultiLaurent.variable(3, 2)
    return (x + y - one) * (x * y - x - y) * (z - one)


def ribbon_seed_polynomial() -> MultiLaurent:
    """Alexander polynomial of the seed 3-component link."""
    return _ribbon_seed()


@dataclass(frozen=True)
class RibbonFamilyResult:
    poly: MultiLaurent
    span: int
    genus_lower_bound: int


def ribbon_family_alexander(m: int, n: int) -> RibbonFamilyResult:
    """Knot Alexander polynomial of the m,n member of the ribbon family.

    Runs seed -> surgery-dual substitution -> Torres reduction to two
    components (linking -n, -1) -> Torres reduction to the knot
    (linking 1) -> unit normalization, and reports the genus lower bound
    span/2 from the breadth of the result.
    """
    if m < 1 or n < 1:
        raise DomainError(f"family parameters must be >= 1, got m={m}, n={n}")
    basis = (
        (1, 0, 0),
        (-m * n, m * n + 1, -m),
        (n, -n, 1),
    )
    substituted = surgery_dual_substitution(_ribbon_seed(), basis)
    linking = (
        (0, -n, 1),
        (-n, 0, -1),
        (1, -1, 0),
    )
    three_component = LinkAlexander(substituted, linking)
    two_component = torres_reduce(three_component, erase=1)
    knot = torres_reduce(two_component, erase=1)
    poly = normalize_units(knot.poly)
    breadth = span(poly, 0)
    if breadth % 2:
        raise DomainError("knot polynomial with odd span")
    return RibbonFamilyResult(poly, breadth, breadth // 2)


def ribbon_family_closed_form(m: int, n: int) -> MultiLaurent:
    """The closed form 1 - x - x^(mn) + 3x^(mn+1) - x^(mn+2) - x^(2mn+1) + x^(2mn+2)."""
    mn = m * n
    return MultiLaurent(
        1,
        [
            ((0,), 1),
            ((1,), -1),
            ((mn,), -1),
            ((mn + 1,), 3),
            ((mn + 2,), -1),
            ((2 * mn + 1,), -1),
            ((2 * mn + 2,), 1),
        ],
    )
