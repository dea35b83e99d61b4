"""Exact multivariable Laurent polynomials over the integers.

A ``MultiLaurent`` is a finitely supported map from integer exponent
vectors (tuples of length ``nvars``) to nonzero integer coefficients.
Values are immutable; all operations return new objects and never touch
floating point.  Equality of the polynomials the tests care about is
usually only up to multiplication by a unit ``±x1^a1*...*xk^ak``, and
``normalize_units`` picks a canonical representative of that class.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Sequence, Tuple

from .errors import ArityError, DivisibilityError, DomainError, ParseError

Exponents = Tuple[int, ...]

DEFAULT_NAMES = ("x", "y", "z", "w", "u", "v")


class MultiLaurent:
    """Integer-coefficient Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Iterable[Tuple[Sequence[int], int]] = ()):
        if nvars < 0:
            raise ArityError(f"variable count must be nonnegative, got {nvars}")
        collected: Dict[Exponents, int] = {}
        for exps, coeff in dict(terms).items() if isinstance(terms, dict) else terms:
            key = tuple(exps)
            if len(key) != nvars:
                raise ArityError(
                    f"exponent vector {key} has length {len(key)}, expected {nvars}"
                )
            value = collected.get(key, 0) + int(coeff)
            if value:
                collected[key] = value
            elif key in collected:
                del collected[key]
        self.nvars = nvars
        self._terms = collected
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiLaurent":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "MultiLaurent":
        return cls(nvars, [((0,) * nvars, value)])

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> "MultiLaurent":
        return cls(nvars, [(tuple(exps), coeff)])

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiLaurent":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, [(tuple(exps), 1)])

    # -- basic queries ------------------------------------------------------

    def terms(self) -> Iterator[Tuple[Exponents, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def evaluate_ones(self) -> int:
        """Value at all variables set to 1."""
        return sum(self._terms.values())

    def min_exponent(self, var: int) -> int:
        self._require_nonzero()
        return min(e[var] for e in self._terms)

    def max_exponent(self, var: int) -> int:
        self._require_nonzero()
        return max(e[var] for e in self._terms)

    def _require_nonzero(self) -> None:
        if not self._terms:
            raise DomainError("operation undefined for the zero polynomial")

    def _check_same_ring(self, other: "MultiLaurent") -> None:
        if self.nvars != other.nvars:
            raise ArityError(
                f"variable counts differ: {self.nvars} vs {other.nvars}"
            )

    # -- ring structure ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.constant(self.nvars, other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        self._check_same_ring(other)
        result = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = result.get(exps, 0) + coeff
            if value:
                result[exps] = value
            elif exps in result:
                del result[exps]
        return MultiLaurent(self.nvars, result)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.constant(self.nvars, other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiLaurent.zero(self.nvars)
            return MultiLaurent(
                self.nvars, {e: c * other for e, c in self._terms.items()}
            )
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        self._check_same_ring(other)
        result: Dict[Exponents, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                value = result.get(key, 0) + ca * cb
                if value:
                    result[key] = value
                elif key in result:
                    del result[key]
        return MultiLaurent(self.nvars, result)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise DomainError("negative powers are not defined in the Laurent ring here")
        result = MultiLaurent.constant(self.nvars, 1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.constant(self.nvars, other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiLaurent({self.nvars}, {format_poly(self)!r})"


class MonomialMap:
    """Ring homomorphism sending each source variable to a ±free monomial.

    ``rows[i]`` is the exponent vector (over the target variables) of the
    image of source variable ``i``, so substitution acts on exponent
    vectors as the integer matrix ``rows``.
    """

    __slots__ = ("source_vars", "target_vars", "rows")

    def __init__(self, rows: Sequence[Sequence[int]], target_vars: int):
        self.rows = tuple(tuple(int(a) for a in row) for row in rows)
        self.source_vars = len(self.rows)
        self.target_vars = target_vars
        for row in self.rows:
            if len(row) != target_vars:
                raise ArityError(
                    f"image vector {row} has length {len(row)}, expected {target_vars}"
                )

    @classmethod
    def identity(cls, nvars: int) -> "MonomialMap":
        return cls(
            [[1 if i == j else 0 for j in range(nvars)] for i in range(nvars)], nvars
        )

    def __repr__(self):
        return f"MonomialMap({list(self.rows)}, target_vars={self.target_vars})"


def substitute(poly: MultiLaurent, mapping: MonomialMap) -> MultiLaurent:
    """Apply the monomial substitution; exponent vectors map through the matrix."""
    if mapping.source_vars != poly.nvars:
        raise ArityError(
            f"map expects {mapping.source_vars} variables, polynomial has {poly.nvars}"
        )
    result: Dict[Exponents, int] = {}
    for exps, coeff in poly._terms.items():
        image = [0] * mapping.target_vars
        for e, row in zip(exps, mapping.rows):
            if e:
                for j, a in enumerate(row):
                    image[j] += e * a
        key = tuple(image)
        value = result.get(key, 0) + coeff
        if value:
            result[key] = value
        elif key in result:
            del result[key]
    return MultiLaurent(mapping.target_vars, result)


def _shift_to_origin(poly: MultiLaurent) -> Tuple[Dict[Exponents, int], Exponents]:
    shift = tuple(poly.min_exponent(v) for v in range(poly.nvars))
    shifted = {
        tuple(e - s for e, s in zip(exps, shift)): c
        for exps, c in poly._terms.items()
    }
    return shifted, shift


def exact_divide(num: MultiLaurent, den: MultiLaurent) -> MultiLaurent:
    """Quotient ``q`` with ``q * den == num``, or DivisibilityError.

    Both arguments are shifted into the ordinary polynomial ring, then the
    quotient is extracted by cancelling lexicographic leading terms.  When
    the division is exact the leading term of the remainder is always
    divisible by the leading term of the divisor, so any failure of that
    divisibility certifies that ``den`` does not divide ``num``.
    """
    if den.nvars != num.nvars:
        raise ArityError(f"variable counts differ: {num.nvars} vs {den.nvars}")
    if den.is_zero():
        raise DivisibilityError("division by the zero polynomial")
    if num.is_zero():
        return MultiLaurent.zero(num.nvars)
    num_terms, num_shift = _shift_to_origin(num)
    den_terms, den_shift = _shift_to_origin(den)
    den_lead = max(den_terms)
    den_lead_coeff = den_terms[den_lead]
    quotient: Dict[Exponents, int] = {}
    while num_terms:
        num_lead = max(num_terms)
        diff = tuple(a - b for a, b in zip(num_lead, den_lead))
        coeff, rem = divmod(num_terms[num_lead], den_lead_coeff)
        if rem or any(d < 0 for d in diff):
            raise DivisibilityError("division is not exact in the Laurent ring")
        quotient[diff] = coeff
        for exps, c in den_terms.items():
            key = tuple(a + b for a, b in zip(exps, diff))
            value = num_terms.get(key, 0) - coeff * c
            if value:
                num_terms[key] = value
            elif key in num_terms:
                del num_terms[key]
    offset = tuple(a - b for a, b in zip(num_shift, den_shift))
    return MultiLaurent(
        num.nvars,
        {tuple(e + o for e, o in zip(exps, offset)): c for exps, c in quotient.items()},
    )


def normalize_units(poly: MultiLaurent) -> MultiLaurent:
    """Canonical representative of the class of ``poly`` up to units.

    Multiplies by ``±(monomial)`` so that every variable's minimum exponent
    is 0 and the lexicographically first (lowest) term has a positive
    coefficient.  Idempotent, and constant on unit orbits.
    """
    poly._require_nonzero()
    shifted, _ = _shift_to_origin(poly)
    if shifted[min(shifted)] < 0:
        shifted = {e: -c for e, c in shifted.items()}
    return MultiLaurent(poly.nvars, shifted)


def span(poly: MultiLaurent, var: int) -> int:
    """Breadth ``max - min`` of the exponents of one variable."""
    return poly.max_exponent(var) - poly.min_exponent(var)


def set_to_one(poly: MultiLaurent, var: int) -> MultiLaurent:
    """Projection setting one variable to 1; the variable is dropped."""
    if not 0 <= var < poly.nvars:
        raise ArityError(f"no variable with index {var}")
    result: Dict[Exponents, int] = {}
    for exps, coeff in poly._terms.items():
        key = exps[:var] + exps[var + 1 :]
        value = result.get(key, 0) + coeff
        if value:
            result[key] = value
        elif key in result:
            del result[key]
    return MultiLaurent(poly.nvars - 1, result)


def involution(poly: MultiLaurent) -> MultiLaurent:
    """Invert every variable; used for palindromicity checks."""
    rows = [[-1 if i == j else 0 for j in range(poly.nvars)] for i in range(poly.nvars)]
    return substitute(poly, MonomialMap(rows, poly.nvars))


def is_palindromic(poly: MultiLaurent) -> bool:
    """Whether ``poly`` equals its variable-inverted image up to units."""
    if poly.is_zero():
        return True
    return normalize_units(poly) == normalize_units(involution(poly))


# -- text format -----------------------------------------------------------
#
# Sum of `coeff*x^e*y^e*...` tokens, e.g. `-1 + x + x^-1*y^2*z^-1`.
# parse_poly(format_poly(p)) == p exactly.


def format_poly(poly: MultiLaurent, names: Sequence[str] | None = None) -> str:
    names = _resolve_names(poly.nvars, names)
    if poly.is_zero():
        return "0"
    pieces = []
    for exps, coeff in poly.terms():
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps)
            if e != 0
        ]
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def parse_poly(text: str, nvars: int, names: Sequence[str] | None = None) -> MultiLaurent:
    names = _resolve_names(nvars, names)
    index = {name: i for i, name in enumerate(names)}
    terms = []
    for sign, token, pos in _signed_tokens(text):
        coeff = sign
        exps = [0] * nvars
        for factor in token.split("*"):
            factor = factor.strip()
            if not factor:
                raise ParseError("empty factor", pos)
            if factor.lstrip("+-").isdigit():
                coeff *= int(factor)
                continue
            name, caret, exp_text = factor.partition("^")
            if name not in index:
                raise ParseError(f"unknown variable {name!r}", pos)
            if caret:
                try:
                    exp = int(exp_text)
                except ValueError:
                    raise ParseError(f"bad exponent {exp_text!r}", pos) from None
            else:
                exp = 1
            exps[index[name]] += exp
        terms.append((tuple(exps), coeff))
    return MultiLaurent(nvars, terms)


def _resolve_names(nvars: int, names: Sequence[str] | None) -> Tuple[str, ...]:
    if names is None:
        if nvars <= len(DEFAULT_NAMES):
            return DEFAULT_NAMES[:nvars]
        return tuple(f"x{i+1}" for i in range(nvars))
    names = tuple(names)
    if len(names) != nvars:
        raise ArityError(f"{nvars} variable names required, got {len(names)}")
    return names


def _signed_tokens(text: str):
    """Split a sum into (sign, token, position) triples; no parentheses."""
    text = text.strip()
    tokens = []
    sign = 1
    current = []
    start = 0
    seen_any = False
    for pos, ch in enumerate(text):
        if ch in "+-" and not current and not tokens and not seen_any:
            sign = -sign if ch == "-" else sign
            seen_any = True
        elif ch in "+-" and (pos == 0 or text[pos - 1] != "^"):
            if not "".join(current).strip():
                raise ParseError("missing term", pos)
            tokens.append((sign, "".join(current).strip(), start))
            sign = 1 if ch == "+" else -1
            current = []
            start = pos + 1
        else:
            if ch not in " \t":
                seen_any = True
            current.append(ch)
    tail = "".join(current).strip()
    if not tail:
        if tokens or seen_any:
            raise ParseError("trailing operator", len(text))
        raise ParseError("empty polynomial", 0)
    tokens.append((sign, tail, start))
    return tokens
