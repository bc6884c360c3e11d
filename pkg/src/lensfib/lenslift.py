"""Lens-space parameters, the Z_p action on S^3, and lifts of band diagrams.

A link in L(p, q) given by a band diagram on n strands lifts to the closure of
``band^p * Delta_n^(2q)`` in S^3 (``0 <= q < p``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import braid as br
from .errors import DegenerateCoefficient, NonCanonicalParams, NotCoprime, OutOfRange

TWO_PI = 2.0 * math.pi
ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class LensParams:
    p: int
    q: int
    log: tuple[str, ...] = field(default=(), compare=False)

    def is_canonical(self) -> bool:
        if math.gcd(self.p, self.q) != 1:
            return False
        if self.p == 0:
            return self.q == 1
        if self.p == 1:
            return self.q == 0
        return self.p >= 2 and 0 <= self.q < self.p

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q}


def normalize(p: int, q: int) -> LensParams:
    """Canonical representative using L(p,q) = L(-p,-q) = L(p, q + n p)."""
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)}")
    log = []
    if p < 0:
        p, q = -p, -q
        log.append("negate (p,q) -> (-p,-q)")
    if p == 0:
        if q != 1:
            log.append(f"q {q} -> 1")
            q = 1
    elif p == 1:
        if q != 0:
            log.append(f"q {q} -> 0 (S^3)")
            q = 0
    elif not 0 <= q < p:
        log.append(f"q {q} -> {q % p} (mod {p})")
        q %= p
    return LensParams(p, q, tuple(log))


@dataclass(frozen=True)
class BandDiagram:
    strands: int
    word: br.BraidWord

    def __post_init__(self) -> None:
        if self.word.strands != self.strands:
            raise ValueError(f"band word has {self.word.strands} strands, expected {self.strands}")

    @classmethod
    def trivial(cls, n: int) -> "BandDiagram":
        return cls(n, br.identity(n))

    @classmethod
    def parse(cls, text: str, strands: int) -> "BandDiagram":
        return cls(strands, br.parse_word(text, strands))


def rolfsen_twist(coefficient: Fraction, k: int, band: BandDiagram) -> tuple[Fraction, BandDiagram]:
    """k twists about the surgery unknot: p/q -> p/(q + k p), band gains Delta^(2k)."""
    coefficient = Fraction(coefficient)
    p, q = coefficient.numerator, coefficient.denominator
    denom = q + k * p
    if denom == 0:
        raise DegenerateCoefficient(f"twisting {p}/{q} by {k} gives denominator 0")
    twist = br.power(br.garside_delta(band.strands), 2 * k)
    return Fraction(p, denom), BandDiagram(band.strands, br.concat(band.word, twist))


def lift_unreduced(band: BandDiagram, params: LensParams) -> br.BraidWord:
    if not params.is_canonical() or params.p < 1:
        raise NonCanonicalParams(
            f"lift needs canonical parameters with p >= 1 and 0 <= q < p, got ({params.p}, {params.q})")
    full = br.power(br.garside_delta(band.strands), 2 * params.q)
    return br.concat(br.power(band.word, params.p), full)


def lift(band: BandDiagram, params: LensParams) -> br.BraidWord:
    """Braid whose closure is the preimage of the band's link in S^3."""
    return br.free_reduce(lift_unreduced(band, params))


# Band diagram of the binding of the L(p, 1) fibered link after the twist,
# read with the page-boundary orientation: one full negative twist.
LINKLIFT_BAND = BandDiagram(2, br.BraidWord(2, (-1, -1)))


@dataclass(frozen=True)
class LiftResult:
    word: br.BraidWord
    params: LensParams
    coefficient: Fraction
    invariants: br.ClosureInvariants
    classification: br.TwoStrandClosure


def lift_fibered_Lp1(p: int) -> LiftResult:
    """Lift to S^3 of the fibered link in L(p, 1), p >= 2.

    The surgery coefficient -p is twisted to p/(p-1) and the lift is taken
    with parameters (p, p-1); the reduced word is s1^-2 for every p.
    """
    if p < 2:
        raise OutOfRange(f"need p >= 2, got {p}")
    coefficient, _ = rolfsen_twist(Fraction(-p), 1, BandDiagram.trivial(2))
    coefficient = abs(coefficient)
    params = normalize(coefficient.numerator, coefficient.denominator)
    word = lift(LINKLIFT_BAND, params)
    return LiftResult(word, params, coefficient, br.closure_invariants(word),
                      br.classify_two_strand_closure(word))


def lift_fibered_Lp1_negative(p: int) -> LiftResult:
    """The p <= -2 case: the framing is already positive, so the untwisted
    band is lifted with parameters (|p|, 1), giving Delta_2^2 = s1^2."""
    if p > -2:
        raise OutOfRange(f"need p <= -2, got {p}")
    params = normalize(-p, 1)
    word = lift(BandDiagram.trivial(2), params)
    return LiftResult(word, params, Fraction(-p), br.closure_invariants(word),
                      br.classify_two_strand_closure(word))


# --- the Z_p action on S^3 --------------------------------------------------

@dataclass(frozen=True)
class S3Point:
    """(rho1 e^{i theta1}, rho2 e^{i theta2}) with rho1^2 + rho2^2 = 1."""

    rho1: float
    theta1: float
    rho2: float
    theta2: float

    def __post_init__(self) -> None:
        if self.rho1 < 0 or self.rho2 < 0:
            raise ValueError("radii must be nonnegative")
        if abs(self.rho1 ** 2 + self.rho2 ** 2 - 1.0) > 1e-12:
            raise ValueError(f"point not on S^3: rho1^2 + rho2^2 = {self.rho1 ** 2 + self.rho2 ** 2}")
        object.__setattr__(self, "theta1", self.theta1 % TWO_PI)
        object.__setattr__(self, "theta2", self.theta2 % TWO_PI)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.rho1, self.theta1, self.rho2, self.theta2)

    def to_complex(self) -> tuple[complex, complex]:
        return (self.rho1 * complex(math.cos(self.theta1), math.sin(self.theta1)),
                self.rho2 * complex(math.cos(self.theta2), math.sin(self.theta2)))

    @classmethod
    def from_angles(cls, phi: float, theta1: float, theta2: float) -> "S3Point":
        """Point with rho1 = cos(phi), rho2 = sin(phi), phi in [0, pi/2]."""
        r1, r2 = math.cos(phi), math.sin(phi)
        s = math.hypot(r1, r2)
        return cls(abs(r1 / s), theta1, abs(r2 / s), theta2)


def angle_diff(a: float, b: float) -> float:
    """Signed difference a - b folded into [-pi, pi)."""
    return (a - b + math.pi) % TWO_PI - math.pi


def same_point(x: S3Point, y: S3Point, tol: float = ANGLE_TOL) -> bool:
    if abs(x.rho1 - y.rho1) > tol or abs(x.rho2 - y.rho2) > tol:
        return False
    # an angle is meaningless where its radius vanishes
    if x.rho1 > tol and abs(angle_diff(x.theta1, y.theta1)) > tol:
        return False
    if x.rho2 > tol and abs(angle_diff(x.theta2, y.theta2)) > tol:
        return False
    return True


def zp_act(params: LensParams, n: int, x: S3Point) -> S3Point:
    """n . (z, w) = (e^{2 pi i n/p} z, e^{2 pi i n q/p} w)."""
    p, q = params.p, params.q
    if p < 1:
        raise NonCanonicalParams(f"the Z_p action needs p >= 1, got {p}")
    # reduce exactly before converting to radians
    a1 = TWO_PI * ((n % p) / p)
    a2 = TWO_PI * (((n * q) % p) / p)
    return S3Point(x.rho1, x.theta1 + a1, x.rho2, x.theta2 + a2)


def orbit(params: LensParams, x: S3Point) -> list[S3Point]:
    return [zp_act(params, n, x) for n in range(params.p)]
