"""Growth laws, limits, and the rule engine for twist families of knots.

Genus-type quantities are computed as doubled integers internally and
exposed as ``Fraction`` half-integers, so parity is never lost to
rounding.  Every "sufficiently large n" law takes its threshold or its
stabilized inputs from the caller: the thresholds exist but have no
general formula, so they are never guessed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .braidcore import BraidWord
from .errors import (
    EvidenceContradictionError,
    InvalidCableError,
    InvalidParameterError,
    MeridianSlopeError,
    NotApplicableError,
)


class _Marker:
    """Singleton markers for non-rational limit values."""

    def __init__(self, name: str):
        self._name = name

    def __repr__(self):
        return self._name


INFINITY = _Marker("INFINITY")
INDETERMINATE = _Marker("INDETERMINATE")

Rational = Union[int, Fraction]
RatioValue = Union[Fraction, _Marker]


def _half(value: int) -> Fraction:
    return Fraction(value, 2)


@dataclass(frozen=True)
class TwistFamilySpec:
    """Winding/wrapping data and base invariants of one twist family.

    ``norm_disk`` is the Thurston norm of the punctured-disk class; for a
    coherent family it is forced to ``omega - 1`` and may be omitted.
    """

    omega: int
    eta: int
    norm_disk: Optional[int] = None
    g0: Optional[int] = None
    g4_0: Optional[int] = None
    s0: Optional[int] = None
    tau0: Optional[int] = None
    presentation: Optional[BraidWord] = None

    def __post_init__(self):
        if self.omega < 0:
            raise InvalidParameterError(f"winding number must be >= 0, got {self.omega}")
        if self.eta < self.omega:
            raise InvalidParameterError(
                f"wrapping number {self.eta} below winding number {self.omega}"
            )
        if (self.eta - self.omega) % 2:
            raise InvalidParameterError(
                f"eta - omega must be even, got {self.eta} - {self.omega}"
            )
        if self.norm_disk is None and self.coherent:
            object.__setattr__(self, "norm_disk", self.omega - 1)
        if self.norm_disk is not None:
            if self.coherent and self.norm_disk != self.omega - 1:
                raise InvalidParameterError(
                    "coherent families have norm_disk = omega - 1"
                )
            if self.norm_disk < max(0, self.omega - 1):
                raise InvalidParameterError(
                    f"norm_disk {self.norm_disk} below omega - 1"
                )
            if self.eta >= 1 and self.norm_disk > self.eta - 1:
                raise InvalidParameterError(
                    f"norm_disk {self.norm_disk} above eta - 1"
                )

    @property
    def coherent(self) -> bool:
        return self.omega == self.eta and self.omega > 0

    def norm(self) -> int:
        if self.norm_disk is None:
            raise NotApplicableError("norm_disk is unknown for this family")
        return self.norm_disk


def norm_from_surface_genus(surface_genus: int, omega: int) -> int:
    """Thurston norm of the disk class realized by a genus-g surface."""
    return 2 * surface_genus + omega - 1


@dataclass(frozen=True)
class FamilyConstants:
    """Constants of the eventual growth laws of one family."""

    G: Fraction
    G4: Fraction
    C_lower: Optional[int] = None
    C_upper: Optional[int] = None
    C_plus: Optional[int] = None
    C_minus: Optional[int] = None
    thresholds: Tuple[int, ...] = ()

    def __post_init__(self):
        if (
            self.C_lower is not None
            and self.C_upper is not None
            and self.C_lower > self.C_upper
        ):
            raise EvidenceContradictionError("C_lower exceeds C_upper")
        for c in (self.C_plus, self.C_minus):
            if c is not None and c < 0:
                raise EvidenceContradictionError("C_plus and C_minus are nonnegative")


def slope_transport(r: Rational, n: int, omega: int) -> Fraction:
    """Slope carried along n twists: r + n * omega^2."""
    if isinstance(r, _Marker):
        raise MeridianSlopeError("the meridional slope does not transport")
    return Fraction(r) + n * omega * omega


def genus_law(spec: TwistFamilySpec, G: Rational, n: int) -> Fraction:
    """Eventual Seifert genus G + n*omega*x/2; caller supplies the threshold."""
    if spec.omega < 1:
        raise NotApplicableError("the genus growth law requires omega >= 1")
    doubled = 2 * Fraction(G) + n * spec.omega * spec.norm()
    if doubled.denominator != 1:
        raise InvalidParameterError("2g must be an integer; G must be a half-integer")
    return doubled / 2


def slice_bounds(
    spec: TwistFamilySpec,
    n: int,
    m: int,
    known_g4_m: int,
    known_s_m: int,
) -> Tuple[Fraction, Fraction]:
    """(upper, lower) bounds for g4(K_n) from invariants of K_m.

    Upper: g4_m + (|n-m| omega (omega-1) + (eta-omega)) / 2.
    Lower: (s_m + (n-m) omega (omega-1) - 2 eta) / 2, floored at 0;
    requires n >= m.
    """
    if n < m:
        raise InvalidParameterError("the lower bound needs n >= m")
    omega, eta = spec.omega, spec.eta
    upper = known_g4_m + _half(abs(n - m) * omega * (omega - 1) + (eta - omega))
    lower = max(
        Fraction(0), _half(known_s_m + (n - m) * omega * (omega - 1) - 2 * eta)
    )
    if lower > upper:
        raise EvidenceContradictionError(
            f"slice bounds crossed: lower {lower} > upper {upper}"
        )
    return upper, lower


def limit_ratio(spec: TwistFamilySpec) -> RatioValue:
    """Exact limit of g(K_n)/g4(K_n) as n grows."""
    if spec.omega == 0:
        raise NotApplicableError(
            "the ratio limit is not covered for winding number 0"
        )
    if spec.omega == 1:
        if spec.eta == 1:
            return INDETERMINATE  # constant family: ratio is g(K)/g4(K)
        return INFINITY
    ratio = Fraction(spec.norm(), spec.omega - 1)
    if ratio < 1:
        raise InvalidParameterError("norm_disk below omega - 1")
    return ratio


@dataclass(frozen=True)
class StabilizationReport:
    per_twist_increment: Fraction
    violations: int
    violation_bound: Optional[int]
    C_plus: Optional[Fraction]


def coherent_stabilization(
    spec: TwistFamilySpec,
    g4_samples: Sequence[Tuple[int, int]],
    G: Optional[Rational] = None,
) -> StabilizationReport:
    """Check sampled g4 values against the coherent per-twist increment.

    The increment is omega(omega-1)/2.  A sample gap exceeding it
    contradicts the upper slice bound; the number of gaps falling short
    may not exceed g4_0 - s0/2 + omega.  When ``G`` is supplied, C_plus is
    estimated from the last sample (assumed within the stable range).
    """
    if not spec.coherent or spec.omega < 2:
        raise NotApplicableError("stabilization requires a coherent family, omega >= 2")
    omega = spec.omega
    increment2 = omega * (omega - 1)  # doubled increment, always even here
    samples = sorted(g4_samples)
    if len(set(n for n, _ in samples)) != len(samples):
        raise InvalidParameterError("duplicate sample indices")
    violations = 0
    for (n0, g0), (n1, g1) in zip(samples, samples[1:]):
        deficit2 = (n1 - n0) * increment2 - 2 * (g1 - g0)
        if deficit2 < 0:
            raise EvidenceContradictionError(
                f"g4 grows faster than the upper bound between n={n0} and n={n1}"
            )
        if deficit2 > 0:
            violations += 1
    bound = None
    if spec.g4_0 is not None and spec.s0 is not None:
        doubled_bound = 2 * spec.g4_0 - spec.s0 + 2 * omega
        bound = doubled_bound // 2
        if violations > bound:
            raise EvidenceContradictionError(
                f"{violations} short steps exceed the bound {bound}"
            )
    c_plus = None
    if G is not None and samples:
        n_last, g4_last = samples[-1]
        c_plus = Fraction(G) - (g4_last - Fraction(n_last * increment2, 2))
    return StabilizationReport(_half(increment2), violations, bound, c_plus)


@dataclass(frozen=True)
class MurasugiSum:
    genus: int
    torus_piece: Tuple[int, int]
    piece_fiber_genus: int


def murasugi_genus(n: int, n0: int, g_n0: int, omega: int) -> MurasugiSum:
    """Genus bookkeeping for the plumbing description of K_n beyond K_n0."""
    if omega < 2:
        raise InvalidParameterError("need omega >= 2")
    if n <= n0:
        raise InvalidParameterError(f"need n > n0, got n={n}, n0={n0}")
    steps = n - n0
    increment2 = steps * omega * (omega - 1)
    piece = (omega, steps * omega + 1)
    piece_genus2 = (omega - 1) * (piece[1] - 1)
    if piece_genus2 != increment2:
        raise InvalidParameterError("torus piece genus mismatch")  # unreachable
    return MurasugiSum(g_n0 + increment2 // 2, piece, piece_genus2 // 2)


def torus_knot_genus(p: int, q: int) -> int:
    """(p-1)(q-1)/2 for coprime p, q >= 1."""
    if p < 1 or math.gcd(p, abs(q)) != 1:
        raise InvalidCableError(f"({p}, {q}) is not a torus knot")
    return (p - 1) * (abs(q) - 1) // 2


def cable_genus(p: int, q: int, companion_genus: int) -> int:
    """Schubert's formula p*g + (p-1)(q-1)/2 for the (p,q)-cable."""
    if p < 1 or math.gcd(p, q) != 1:
        raise InvalidCableError(f"cable parameters ({p}, {q}) are not coprime")
    return p * companion_genus + (p - 1) * (q - 1) // 2


def cable_twist(p: int, q: int, omega: int, n: int) -> Tuple[int, int]:
    """Cable parameters after n twists: (p, q + p*omega^2*n)."""
    if p < 1 or math.gcd(p, q) != 1:
        raise InvalidCableError(f"cable parameters ({p}, {q}) are not coprime")
    return p, q + p * omega * omega * n


def cable_family_limit(
    p: int, omega: int, genus_growth: Tuple[Rational, Rational]
) -> Fraction:
    """Ratio limit for the twisted cables of a bounded-slice-genus family.

    ``genus_growth`` is the eventual affine law n -> a*n + b for g(K_n);
    the limit is 1 + 2a / ((p-1) omega^2).
    """
    if p < 2:
        raise InvalidCableError(f"cabling requires p >= 2, got {p}")
    if omega < 1:
        raise InvalidParameterError("winding number must be >= 1")
    a = Fraction(genus_growth[0])
    return 1 + 2 * a / ((p - 1) * omega * omega)


@dataclass(frozen=True)
class TorusLinkInvariants:
    s: int
    g4: int
    fiber_genus: int


def torus_link_invariants(omega: int, k: int) -> TorusLinkInvariants:
    """Concordance and fiber invariants of the coherent torus link T(omega, k*omega)."""
    if omega < 2 or k < 1:
        raise InvalidParameterError("need omega >= 2 and k >= 1")
    s = (omega - 1) * (k * omega - 1)
    g4 = k * omega * (omega - 1) // 2 + 1 - omega
    fiber2 = (omega - 1) * (k * omega - 1) + 1 - omega
    if fiber2 % 2:
        raise InvalidParameterError("fiber genus parity failure")  # unreachable
    return TorusLinkInvariants(s, g4, fiber2 // 2)


def trivial_link_s(components: int) -> int:
    """Concordance invariant s of the d-component trivial link: 1 - d."""
    if components < 1:
        raise InvalidParameterError("need at least one component")
    return 1 - components


# -- ratio realizers -----------------------------------------------------------


@dataclass(frozen=True)
class RatioRealizer:
    """Family parameters realizing a prescribed genus ratio limit.

    ``kind`` is one of:
      - "coherent": any coherent family realizes ratio 1
      - "cable-of-ribbon": the (p, q)-cable construction over the winding
        number one ribbon family with genus slope m; ratio 1 + 2m/(p-1)
      - "wind1-wrap3": winding one, wrapping three realizes ratio infinity
      - "wind0-sum": connected sums realizing 1 + N/(1+m) at winding zero
      - "wind0-ribbon": winding zero ribbon family realizing infinity
    """

    kind: str
    params: Dict[str, int] = field(default_factory=dict)

    def ratio(self) -> RatioValue:
        if self.kind == "coherent":
            return Fraction(1)
        if self.kind == "cable-of-ribbon":
            return 1 + Fraction(2 * self.params["m"], self.params["p"] - 1)
        if self.kind == "wind0-sum":
            return 1 + Fraction(self.params["N"], 1 + self.params["m"])
        return INFINITY


WINDING_POSITIVE = "winding_positive"
WINDING_ZERO = "winding_zero"


def ratio_realizers(r: Union[Rational, _Marker], mode: str) -> RatioRealizer:
    """Produce minimal family parameters whose ratio limit is exactly r."""
    if mode not in (WINDING_POSITIVE, WINDING_ZERO):
        raise InvalidParameterError(f"unknown mode {mode!r}")
    if r is INFINITY:
        if mode == WINDING_POSITIVE:
            return RatioRealizer("wind1-wrap3")
        return RatioRealizer("wind0-ribbon")
    if isinstance(r, _Marker):
        raise InvalidParameterError(f"cannot realize {r!r}")
    r = Fraction(r)
    if r < 1:
        raise InvalidParameterError(f"ratio limits are >= 1, got {r}")
    excess = r - 1
    if mode == WINDING_ZERO:
        return RatioRealizer(
            "wind0-sum", {"N": excess.numerator, "m": excess.denominator - 1}
        )
    if r == 1:
        return RatioRealizer("coherent")
    # solve 2m/(p-1) = excess with minimal positive (m, p); q = 1 is the
    # minimal cable parameter coprime to every p
    a, b = excess.numerator, excess.denominator
    if a % 2 == 0:
        m, p = a // 2, b + 1
    else:
        m, p = a, 2 * b + 1
    realizer = RatioRealizer("cable-of-ribbon", {"m": m, "p": p, "q": 1})
    if realizer.ratio() != r:
        raise InvalidParameterError("realizer failed round-trip")  # unreachable
    return realizer


def unknotting_bound(spec: TwistFamilySpec, n: int, C_lower: int) -> int:
    """Lower bound max(0, ceil((C + n omega(omega-1))/2)) for u(K_n)."""
    if spec.omega <= 1:
        raise NotApplicableError(
            "no unknotting growth for omega <= 1: such families can have "
            "unknotting number at most one for all n"
        )
    if n < 0:
        raise InvalidParameterError("the bound is stated for n >= 0")
    doubled = C_lower + n * spec.omega * (spec.omega - 1)
    return max(0, -(-doubled // 2))


# -- the citable rule engine ----------------------------------------------------


@dataclass(frozen=True)
class Evidence:
    """Caller-asserted facts about one twist family.

    Assertions of absence (``no_negative_lspace_members``) are their own
    positive facts so that adding evidence never removes a verdict.
    """

    omega: Optional[int] = None
    eta: Optional[int] = None
    coherent: Optional[bool] = None
    nontrivial_circle: bool = False  # neither split from the knot nor a meridian
    bounded_genus_gap: bool = False
    ratio_limit_one: bool = False
    infinitely_many_tight_fibered: bool = False
    tight_fibered_all_large_positive: bool = False
    mirror_tight_fibered_all_large: bool = False
    infinitely_many_lspace_positive: bool = False
    infinitely_many_lspace_negative: bool = False
    has_positive_lspace_member: bool = False
    has_negative_lspace_member: bool = False
    no_positive_lspace_members: bool = False
    no_negative_lspace_members: bool = False


@dataclass(frozen=True)
class Verdict:
    verdict: str
    citation: str


RULE_DICHOTOMY = (
    "coherence dichotomy: a bounded genus gap or ratio limit one forces "
    "winding number zero or coherent linking"
)
RULE_TIGHT_FIBERED = (
    "tight fibered rule: infinitely many tight fibered members force "
    "coherent linking and a threshold beyond which all members are tight fibered"
)
RULE_BRAID_AXIS = (
    "braid axis criterion: tight fibered members on both mirror ends "
    "characterize the twisting circle as a braid axis"
)
RULE_LSPACE_POSITIVE = (
    "L-space rule: infinitely many L-space members at positive twists force "
    "coherent linking and eventual positive L-space knots"
)
RULE_LSPACE_NEGATIVE = (
    "L-space rule (mirrored): infinitely many L-space members at negative "
    "twists force coherent linking and eventual negative L-space knots"
)
RULE_TWO_SIDED = (
    "two-sided rule: an infinite L-space family with a positive and a "
    "negative L-space member is two-sided infinite"
)
RULE_BRAID_OR_UNLINK = (
    "two-sided consequence: a two-sided infinite L-space family has a "
    "braid axis or is the unlink"
)
RULE_ONE_SIDED = (
    "one-sided rule: an infinite L-space family with no members of the "
    "other sign is one-sided infinite"
)


def _check_consistency(ev: Evidence) -> None:
    if ev.omega is not None and ev.omega < 0:
        raise EvidenceContradictionError("winding number must be >= 0")
    if ev.omega is not None and ev.eta is not None:
        if ev.eta < ev.omega or (ev.eta - ev.omega) % 2:
            raise EvidenceContradictionError(
                f"wrapping {ev.eta} incompatible with winding {ev.omega}"
            )
        if ev.coherent is True and ev.eta != ev.omega:
            raise EvidenceContradictionError("coherent asserted with omega != eta")
    if ev.coherent is True and ev.omega == 0:
        raise EvidenceContradictionError("coherent families have omega > 0")
    if ev.has_positive_lspace_member and ev.no_positive_lspace_members:
        raise EvidenceContradictionError("positive L-space member both asserted and denied")
    if ev.has_negative_lspace_member and ev.no_negative_lspace_members:
        raise EvidenceContradictionError("negative L-space member both asserted and denied")
    if ev.infinitely_many_lspace_positive and ev.no_positive_lspace_members:
        raise EvidenceContradictionError("infinitely many positive members denied")
    if ev.infinitely_many_lspace_negative and ev.no_negative_lspace_members:
        raise EvidenceContradictionError("infinitely many negative members denied")
    braid_axis_evidence = (
        ev.tight_fibered_all_large_positive and ev.mirror_tight_fibered_all_large
    )
    if (
        braid_axis_evidence
        and ev.nontrivial_circle
        and ev.omega is not None
        and ev.omega <= 1
    ):
        raise EvidenceContradictionError(
            "a braid axis that is not a meridian needs winding number >= 2"
        )


def classify_rules(evidence: Evidence) -> List[Verdict]:
    """Forward-chain the family-structure rules over asserted evidence.

    The engine only applies stated implications; it never infers
    "infinitely many" facts from finite data, and adding evidence can
    only add verdicts.
    """
    ev = evidence
    _check_consistency(ev)
    verdicts: Dict[str, str] = {}

    def add(verdict: str, citation: str) -> None:
        verdicts.setdefault(verdict, citation)

    nontrivial = ev.nontrivial_circle
    if ev.bounded_genus_gap or ev.ratio_limit_one:
        add("wind-zero-or-coherent", RULE_DICHOTOMY)
        if ev.omega is not None and ev.omega > 0:
            add("coherent", RULE_DICHOTOMY)
    if ev.infinitely_many_tight_fibered and nontrivial:
        add("coherent", RULE_TIGHT_FIBERED)
        add("eventual-tight-fibered-threshold", RULE_TIGHT_FIBERED)
    if ev.infinitely_many_lspace_positive and nontrivial:
        add("coherent", RULE_LSPACE_POSITIVE)
        add("eventually-positive-lspace", RULE_LSPACE_POSITIVE)
    if ev.infinitely_many_lspace_negative and nontrivial:
        add("coherent", RULE_LSPACE_NEGATIVE)
        add("eventually-negative-lspace", RULE_LSPACE_NEGATIVE)
    if (
        ev.tight_fibered_all_large_positive
        and ev.mirror_tight_fibered_all_large
        and nontrivial
    ):
        add("braid-axis", RULE_BRAID_AXIS)
    infinite_family = (
        ev.infinitely_many_lspace_positive or ev.infinitely_many_lspace_negative
    )
    if infinite_family and ev.has_positive_lspace_member and ev.has_negative_lspace_member:
        add("two-sided-family", RULE_TWO_SIDED)
        add("braid-axis-or-unlink", RULE_BRAID_OR_UNLINK)
    if ev.infinitely_many_lspace_positive and ev.no_negative_lspace_members:
        add("one-sided-family", RULE_ONE_SIDED)
    if ev.infinitely_many_lspace_negative and ev.no_positive_lspace_members:
        add("one-sided-family", RULE_ONE_SIDED)
    return [Verdict(v, c) for v, c in verdicts.items()]
