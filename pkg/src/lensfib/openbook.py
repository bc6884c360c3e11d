"""Abstract open books as bookkeeping: page topology plus a formal twist word.

A page is recorded as ``(genus, boundary_count)``.  Boundary components are
indexed from 0; on the pages built here index 0 is the binding of the
starting disk and indices 1..n are the punctures created by transverse
0-surgeries.  The monodromy is a word of Dehn twists applied left to right,
``[(c1, k1), (c2, k2)]`` meaning ``D_c1^k1 then D_c2^k2``.  It is reduced to a
canonical integer only on the annulus, whose mapping class group is Z.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from . import braid as _braid
from . import contfrac, kirby
from .errors import IndexOutOfRange, NonCoreCurve, NotAnnulus, UnknownCurve

CORE_LABEL = "gamma"


@dataclass(frozen=True)
class CurveId:
    """A simple closed curve on the page.

    ``encircles`` is the set of boundary indices the curve surrounds when the
    page is planar; ``None`` marks a non-separating curve on a page of positive
    genus.
    """

    label: str
    encircles: Optional[frozenset[int]] = None

    def to_dict(self) -> dict:
        enc = None if self.encircles is None else sorted(self.encircles)
        return {"label": self.label, "encircles": enc}


@dataclass(frozen=True)
class Twist:
    curve: str
    exp: int


@dataclass(frozen=True)
class AbstractOpenBook:
    genus: int
    boundary_count: int
    monodromy: tuple[Twist, ...] = ()
    curves: tuple[CurveId, ...] = ()

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary_count < 1:
            raise ValueError(f"invalid page (g={self.genus}, b={self.boundary_count})")
        labels = {c.label for c in self.curves}
        for t in self.monodromy:
            if t.curve not in labels:
                raise UnknownCurve(f"monodromy uses unregistered curve {t.curve!r}")
            if t.exp == 0:
                raise ValueError("twist exponents must be nonzero")
        if self.genus == 0:
            everything = frozenset(range(self.boundary_count))
            for c in self.curves:
                if c.encircles is not None and not (c.encircles and c.encircles < everything):
                    raise ValueError(f"curve {c.label!r} must encircle a nonempty proper subset of boundaries")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    @property
    def is_annulus(self) -> bool:
        return self.genus == 0 and self.boundary_count == 2

    def curve(self, label: str) -> CurveId:
        for c in self.curves:
            if c.label == label:
                return c
        raise UnknownCurve(f"curve {label!r} is not registered on this page")

    def twist_count(self) -> int:
        return sum(abs(t.exp) for t in self.monodromy)

    def to_dict(self) -> dict:
        table = {c.label: c for c in self.curves}
        mono = []
        for t in self.monodromy:
            enc = table[t.curve].encircles
            mono.append({"curve": t.curve,
                         "encircles": None if enc is None else sorted(enc),
                         "exp": t.exp})
        return {"genus": self.genus, "boundary": self.boundary_count, "monodromy": mono}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "AbstractOpenBook":
        curves: dict[str, CurveId] = {}
        twists = []
        for rec in data["monodromy"]:
            enc = rec.get("encircles")
            curves.setdefault(rec["curve"], CurveId(rec["curve"], None if enc is None else frozenset(enc)))
            twists.append(Twist(rec["curve"], int(rec["exp"])))
        return cls(int(data["genus"]), int(data["boundary"]), tuple(twists), tuple(curves.values()))


def compose(word: Sequence[Twist], extra: Sequence[Twist]) -> tuple[Twist, ...]:
    """Append twists, merging equal adjacent curves and dropping zero exponents."""
    out = list(word)
    for t in extra:
        if out and out[-1].curve == t.curve:
            k = out[-1].exp + t.exp
            out.pop()
            if k:
                out.append(Twist(t.curve, k))
        elif t.exp:
            out.append(t)
    return tuple(out)


def register_curve(ob: AbstractOpenBook, curve: CurveId) -> AbstractOpenBook:
    if any(c.label == curve.label for c in ob.curves):
        if ob.curve(curve.label) != curve:
            raise ValueError(f"label {curve.label!r} already names a different curve")
        return ob
    return replace(ob, curves=ob.curves + (curve,))


def standard_disk_book() -> AbstractOpenBook:
    """The open book (D^2, id) of S^3."""
    return AbstractOpenBook(0, 1)


def transverse_zero_surgery(ob: AbstractOpenBook) -> AbstractOpenBook:
    """0-surgery on an unknot crossing every page once: the page gains a puncture.

    The curve around the new puncture is registered as ``c<k>`` (``k`` its
    boundary index unless that label is taken); while the page is an annulus
    its only puncture curve is the core, labelled ``gamma``.
    """
    new = ob.boundary_count
    if ob.is_annulus:
        ob = _relabel(ob, CORE_LABEL, "c1")
    out = replace(ob, boundary_count=new + 1)
    if out.is_annulus:
        label = CORE_LABEL
    else:
        # merges by stabilization can leave c<new> already taken
        taken = {c.label for c in out.curves}
        k = new
        while f"c{k}" in taken:
            k += 1
        label = f"c{k}"
    return register_curve(out, CurveId(label, frozenset({new})))


def _relabel(ob: AbstractOpenBook, old: str, new: str) -> AbstractOpenBook:
    if not any(c.label == old for c in ob.curves):
        return ob
    curves = tuple(CurveId(new, c.encircles) if c.label == old else c for c in ob.curves)
    mono = tuple(Twist(new, t.exp) if t.curve == old else t for t in ob.monodromy)
    return AbstractOpenBook(ob.genus, ob.boundary_count, mono, curves)


def puncture_curve(ob: AbstractOpenBook, i: int) -> str:
    """Label of the registered curve encircling puncture ``i`` alone."""
    for c in ob.curves:
        if c.encircles == frozenset({i}):
            return c.label
    raise UnknownCurve(f"no curve around puncture {i}")


def page_curve_surgery(ob: AbstractOpenBook, curve: str, sign: int) -> AbstractOpenBook:
    """±1-surgery on a curve lying on a page composes the monodromy with D^-+."""
    if sign not in (1, -1):
        raise ValueError("surgery coefficient must be +1 or -1")
    ob.curve(curve)
    return replace(ob, monodromy=compose(ob.monodromy, [Twist(curve, -sign)]))


def stabilize(ob: AbstractOpenBook, sign: int, attach: tuple[int, int],
              label: Optional[str] = None) -> AbstractOpenBook:
    """Plumb a Hopf band: attach a 1-handle and compose with D_c^sign."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    i, j = attach
    b = ob.boundary_count
    for k in (i, j):
        if not 0 <= k < b:
            raise IndexOutOfRange(f"boundary {k} out of range 0..{b - 1}")
    taken = {c.label for c in ob.curves}
    if label is None:
        n = 1
        while f"s{n}" in taken:
            n += 1
        label = f"s{n}"
    if i == j:
        # handle splits boundary i; the new boundary gets index b and c encircles it
        genus, boundary = ob.genus, b + 1
        curves = ob.curves
        c = CurveId(label, frozenset({b}) if ob.genus == 0 else None)
    else:
        # boundaries i and j merge and the page gains genus; planar data is lost
        genus, boundary = ob.genus + 1, b - 1
        curves = tuple(CurveId(cv.label, None) for cv in ob.curves)
        c = CurveId(label, None)
    out = AbstractOpenBook(genus, boundary, ob.monodromy, curves)
    out = register_curve(out, c)
    return replace(out, monodromy=compose(out.monodromy, [Twist(label, sign)]))


# --- annulus pages ----------------------------------------------------------

def _is_core(ob: AbstractOpenBook, curve: CurveId) -> bool:
    return curve.encircles in (frozenset({0}), frozenset({1}))


def mcg_annulus_reduce(ob: AbstractOpenBook) -> int:
    """The monodromy as a power of the core twist D_gamma."""
    if not ob.is_annulus:
        raise NotAnnulus(f"page is (g={ob.genus}, b={ob.boundary_count}), not an annulus")
    total = 0
    for t in ob.monodromy:
        if not _is_core(ob, ob.curve(t.curve)):
            raise NonCoreCurve(f"curve {t.curve!r} is not the annulus core")
        total += t.exp
    return total


def books_equivalent_annulus(ob1: AbstractOpenBook, ob2: AbstractOpenBook,
                             flip_orientation: bool = False) -> bool:
    """Compare annulus books; ``flip_orientation`` reverses the orientation of gamma in ``ob2``."""
    k1 = mcg_annulus_reduce(ob1)
    k2 = mcg_annulus_reduce(ob2)
    return k1 == (-k2 if flip_orientation else k2)


def annulus_book(k: int) -> AbstractOpenBook:
    """(A, D_gamma^k)."""
    ob = transverse_zero_surgery(standard_disk_book())
    return replace(ob, monodromy=compose((), [Twist(CORE_LABEL, k)]))


def quotient_hopf_book(p: int) -> AbstractOpenBook:
    """Abstract open book of L(p, -1) from the Z_p-quotient of the Hopf link z1*z2 = 0.

    The page is still an annulus and the monodromy must be D_gamma^p to
    recover L(p, -1).
    """
    return annulus_book(p)


# --- fibered links in L(p, q) ------------------------------------------------

@dataclass(frozen=True)
class MixedLinkPresentation:
    """Fixed part (surgery link) plus the moving binding components."""

    fixed_part: kirby.FramedLinkMatrix
    fixed_braid: _braid.BraidWord
    moving_components: int
    description: str = ""

    def to_dict(self) -> dict:
        return {
            "fixed_framings": self.fixed_part.framings(),
            "fixed_matrix": self.fixed_part.rows(),
            "fixed_braid": self.fixed_braid.to_dict(),
            "moving_components": self.moving_components,
            "description": self.description,
        }


def chain_braid(n: int) -> _braid.BraidWord:
    """Closed-braid form of a linear chain of n unknots: s1^2 s2^2 ... s_{n-1}^2."""
    return _braid.BraidWord(n, tuple(i for i in range(1, n) for _ in range(2)))


@dataclass(frozen=True)
class FiberedLink:
    book: AbstractOpenBook
    presentation: MixedLinkPresentation
    trace: kirby.MoveTrace = field(default_factory=kirby.MoveTrace)

    def __iter__(self):
        return iter((self.book, self.presentation))


def _book_from_trace(n: int, trace: kirby.MoveTrace) -> AbstractOpenBook:
    ob = standard_disk_book()
    for _ in range(n):
        ob = transverse_zero_surgery(ob)
    for c in trace.circles:
        comps = [i for i, _ in c.links]
        if len(comps) == 1:
            label = puncture_curve(ob, comps[0])
        elif len(comps) == 2 and abs(comps[0] - comps[1]) == 1:
            lo, hi = sorted(comps)
            label = f"c{lo},{hi}"
            ob = register_curve(ob, CurveId(label, frozenset({lo, hi})))
        else:
            raise kirby.UnsupportedShape(f"no page curve for circle linking components {comps}")
        ob = page_curve_surgery(ob, label, c.sign)
    return ob


def build_fibered_Lp1(p: int) -> FiberedLink:
    """Fibered link in L(p, 1): annulus page, monodromy D_gamma^{-p}."""
    fixed = kirby.FramedLinkMatrix([[-p]])
    _, trace = kirby.reduce_to_zero_framings(fixed)
    ob = _book_from_trace(1, trace)
    pres = MixedLinkPresentation(
        fixed_part=fixed,
        fixed_braid=_braid.identity(1),
        moving_components=ob.boundary_count,
        description=f"unknot framed {-p}; binding = boundary of the annulus (2 circles)",
    )
    return FiberedLink(ob, pres, trace)


def build_fibered_Lpq(terms: Sequence[int]) -> FiberedLink:
    """Fibered link in L(p, q) from the chain presentation ``-p/q = [a_1, ..., a_n]``."""
    terms = list(terms)
    contfrac.evaluate_cf(terms)
    if len(terms) == 1:
        return build_fibered_Lp1(-terms[0])
    fixed = contfrac.chain_matrix(terms)
    _, trace = kirby.reduce_to_zero_framings(fixed)
    n = len(terms)
    ob = _book_from_trace(n, trace)
    pres = MixedLinkPresentation(
        fixed_part=fixed,
        fixed_braid=chain_braid(n),
        moving_components=ob.boundary_count,
        description=(f"chain of {n} unknots framed {terms}; binding = outer circle plus "
                     f"{n} meridians, one per chain component"),
    )
    return FiberedLink(ob, pres, trace)
