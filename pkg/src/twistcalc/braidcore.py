"""Exact braid-word algebra with Garside normal forms and Seifert data.

Words in the braid group B_n are lists of nonzero integers: letter ``i``
is the Artin generator sigma_i (a right-handed crossing of strands i and
i+1) and ``-i`` its inverse.  Equality of group elements is decided
through the left-weighted normal form Delta^t f_1 ... f_k, where the
factors f_j are permutation braids, represented as permutation tuples
``p`` with ``p[x]`` the end position of the strand starting at x.  With
words composed left to right, the permutation of ``u v`` is
``perm of v  o  perm of u``.

A factor pair (a, b) is left weighted when every generator that can
start b can finish a; normalisation repeatedly transfers single
generators across adjacent pairs until every pair is left weighted,
then strips full-twist halves Delta into the leading power and drops
identity factors.  The resulting (infimum, factors) pair is a complete
invariant of the group element and doubles as a hashable key.

Orientation convention: positive letters are right-handed crossings, so
positive full twists Delta^2 correspond to positive twisting of the
closure along the braid axis.  Comparisons with software using the other
handedness require a global mirror.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import ArityError, DomainError, ParseError

Perm = Tuple[int, ...]


# -- permutation helpers -----------------------------------------------------


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _longest(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _gen(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _mul(p: Perm, q: Perm) -> Perm:
    """Permutation of the braid 'p then q'."""
    return tuple(q[v] for v in p)


def _inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, v in enumerate(p):
        out[v] = x
    return tuple(out)


def _tau(p: Perm) -> Perm:
    """Conjugation by Delta, i.e. sigma_i -> sigma_(n-i)."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


def _starting_set(p: Perm) -> List[int]:
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def _finishing_set_contains(p_inv: Perm, i: int) -> bool:
    return p_inv[i - 1] > p_inv[i]


def _left_weight_pair(a: Perm, b: Perm) -> Tuple[Perm, Perm, bool]:
    """Transfer generators from the head of b to the tail of a until the
    pair is left weighted; returns (a, b, changed)."""
    changed = False
    while True:
        a_inv = _inv(a)
        move = None
        for i in _starting_set(b):
            if not _finishing_set_contains(a_inv, i):
                move = i
                break
        if move is None:
            return a, b, changed
        i = move
        la = list(a)
        for x in range(len(la)):  # append sigma_i to a: swap values i-1, i
            if la[x] == i - 1:
                la[x] = i
            elif la[x] == i:
                la[x] = i - 1
        a = tuple(la)
        lb = list(b)  # strip sigma_i from the front of b: swap positions
        lb[i - 1], lb[i] = lb[i], lb[i - 1]
        b = tuple(lb)
        changed = True


@dataclass(frozen=True)
class NormalForm:
    """Left-weighted Garside normal form Delta^infimum f_1 ... f_k."""

    strands: int
    infimum: int
    factors: Tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands."""

    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ArityError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or not 1 <= abs(letter) <= self.strands - 1:
                raise ArityError(
                    f"letter {letter} out of range for {self.strands} strands"
                )

    def _check_strands(self, other: "BraidWord") -> None:
        if self.strands != other.strands:
            raise ArityError(
                f"strand counts differ: {self.strands} vs {other.strands}"
            )

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check_strands(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, power: int) -> "BraidWord":
        base = self if power >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(power))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-l for l in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        # The tangle mirror restricted to braid words is the group inverse.
        return self.inverse()

    def exponent_sum(self) -> int:
        return sum(1 if l > 0 else -1 for l in self.letters)

    def is_positive(self) -> bool:
        return all(l > 0 for l in self.letters)

    def permutation(self) -> Perm:
        p = _identity(self.strands)
        for letter in self.letters:
            p = _mul(p, _gen(self.strands, abs(letter)))
        return p

    def format(self) -> str:
        return f"B{self.strands}: " + " ".join(str(l) for l in self.letters)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse the `B<strands>: i1 i2 ... ik` format."""
        head, sep, tail = text.strip().partition(":")
        head = head.strip()
        if not sep or not head.startswith("B"):
            raise ParseError("expected 'B<strands>: letters'", 0)
        try:
            strands = int(head[1:])
        except ValueError:
            raise ParseError(f"bad strand count {head[1:]!r}", 1) from None
        if strands < 1:
            raise ParseError(f"strand count must be >= 1, got {strands}", 1)
        letters = []
        offset = len(text) - len(tail)
        for token in tail.split():
            position = offset + tail.index(token)
            try:
                letter = int(token)
            except ValueError:
                raise ParseError(f"bad letter {token!r}", position) from None
            if letter == 0 or abs(letter) > strands - 1:
                raise ParseError(
                    f"letter {letter} out of range for {strands} strands", position
                )
            letters.append(letter)
        return cls(strands, tuple(letters))


def garside_elements(strands: int) -> Tuple[BraidWord, BraidWord]:
    """The dual Garside element delta and the full twist Delta^2 as words.

    delta = sigma_(n-1) ... sigma_2 sigma_1 has n-1 letters, and the full
    twist is the square of the half twist Delta, with n(n-1) letters.
    """
    if strands < 2:
        raise ArityError(f"need at least 2 strands, got {strands}")
    delta = BraidWord(strands, tuple(range(strands - 1, 0, -1)))
    half = []
    for top in range(1, strands):
        half.extend(range(top, 0, -1))
    full_twist = BraidWord(strands, tuple(half) * 2)
    return delta, full_twist


def twist_family_word(kappa: BraidWord, n: int) -> BraidWord:
    """The twisted word Delta^(2n) kappa; negative n uses inverse full twists."""
    if kappa.strands < 2:
        raise ArityError("twisting requires at least 2 strands")
    _, full_twist = garside_elements(kappa.strands)
    return (full_twist ** n) * kappa


def normal_form(word: BraidWord) -> NormalForm:
    n = word.strands
    if n == 1:
        return NormalForm(1, 0, ())
    identity = _identity(n)
    longest = _longest(n)
    infimum = 0
    factors: List[Perm] = []
    for letter in word.letters:
        i = abs(letter)
        if letter > 0:
            factors.append(_gen(n, i))
        else:
            # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1), and the parenthesised
            # part is the permutation braid of (longest element) * s_i.
            infimum -= 1
            factors = [_tau(f) for f in factors]
            factors.append(_mul(longest, _gen(n, i)))
    while True:
        stable = True
        for j in range(len(factors) - 1):
            a, b, changed = _left_weight_pair(factors[j], factors[j + 1])
            if changed:
                factors[j], factors[j + 1] = a, b
                stable = False
        if stable:
            break
    lo = 0
    hi = len(factors)
    while lo < hi and factors[lo] == longest:
        lo += 1
    while lo < hi and factors[hi - 1] == identity:
        hi -= 1
    return NormalForm(n, infimum + lo, tuple(factors[lo:hi]))


def normal_form_equal(a: BraidWord, b: BraidWord) -> bool:
    """Whether two words represent the same braid-group element."""
    if a.strands != b.strands:
        raise ArityError(f"strand counts differ: {a.strands} vs {b.strands}")
    return normal_form(a) == normal_form(b)


# -- closures and Seifert surfaces -------------------------------------------


def _cycles(p: Perm) -> List[List[int]]:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p[x]
        cycles.append(cycle)
    return cycles


@dataclass(frozen=True)
class ClosureInfo:
    permutation: Perm
    components: int
    is_knot: bool
    exponent_sum: int


def closure_info(word: BraidWord) -> ClosureInfo:
    p = word.permutation()
    components = len(_cycles(p))
    return ClosureInfo(p, components, components == 1, word.exponent_sum())


@dataclass(frozen=True)
class SeifertData:
    """Seifert-algorithm surface of a closed braid diagram.

    ``genus`` is defined only when the closure is a knot; ``minimal``
    records that the word is positive, in which case the surface realizes
    the Seifert genus (and the closure is fibered).  ``matrix`` is the
    Seifert pairing over the brick basis.
    """

    euler_characteristic: int
    seifert_circles: int
    components: int
    minimal: bool
    matrix: Tuple[Tuple[int, ...], ...]
    genus: Optional[int] = None

    def knot_genus(self) -> int:
        if self.genus is None:
            raise DomainError("genus requested for a link closure")
        return self.genus


def _bricks(word: BraidWord) -> List[Tuple[int, int, int, int, int]]:
    """Brick generators (column, top, bottom, top_sign, bottom_sign)."""
    columns: Dict[int, List[Tuple[int, int]]] = {}
    for position, letter in enumerate(word.letters):
        columns.setdefault(abs(letter), []).append(
            (position, 1 if letter > 0 else -1)
        )
    bricks = []
    for column in sorted(columns):
        crossings = columns[column]
        for (top, ts), (bottom, bs) in zip(crossings, crossings[1:]):
            bricks.append((column, top, bottom, ts, bs))
    return bricks


def seifert_matrix(word: BraidWord) -> Tuple[Tuple[int, ...], ...]:
    """Seifert linking form on the brick basis of the closed-braid surface.

    Bricks are loops through consecutive bands in one column.  Two bricks
    pair nontrivially only when they share a band (adjacent in one column)
    or sit in adjacent columns with interleaved height intervals.
    """
    bricks = _bricks(word)
    size = len(bricks)
    matrix = [[0] * size for _ in range(size)]
    for p, (col_p, top_p, bot_p, ts_p, bs_p) in enumerate(bricks):
        matrix[p][p] = -(ts_p + bs_p) // 2
        for q in range(p + 1, size):
            col_q, top_q, bot_q, ts_q, bs_q = bricks[q]
            if col_q == col_p and top_q == bot_p:
                # stacked bricks sharing the middle band (p above q)
                if ts_q > 0:
                    matrix[p][q] = 1
                else:
                    matrix[q][p] = -1
            elif col_q == col_p + 1:
                # interleaved bricks in adjacent columns cross once on the
                # shared disk; the pairing lands in the left-column slot
                if top_p < top_q < bot_p < bot_q:
                    matrix[p][q] = 1
                elif top_q < top_p < bot_q < bot_p:
                    matrix[p][q] = -1
    return tuple(tuple(row) for row in matrix)


def seifert_from_closure(word: BraidWord) -> SeifertData:
    info = closure_info(word)
    chi = word.strands - len(word.letters)
    genus = None
    if info.is_knot:
        if (1 - chi) % 2:
            raise DomainError("parity failure: knot closure with odd 1 - chi")
        genus = (1 - chi) // 2
    return SeifertData(
        euler_characteristic=chi,
        seifert_circles=word.strands,
        components=info.components,
        minimal=word.is_positive(),
        matrix=seifert_matrix(word),
        genus=genus,
    )
