"""Spans of finite sets, pullback composition, and the pull-push action on families.

No concrete category of spans is built: the hom realisation would be
``hom(X, Y) -> (Families over X -> Families over Y)`` and its fibers are
exactly what :func:`endo_fiber_analysis` explores in a bounded model.
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import factorial, prod
from typing import List, Optional, Tuple

from .config import check_cap, get_cap
from .errors import EnumerationOverflow, RejectedInput
from .finset import FinFun, FinSet, identity


@dataclass(frozen=True)
class Span:
    """``X <-left- apex -right-> Y``."""
    left: FinFun
    right: FinFun

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise RejectedInput("legs of a span must share their domain")

    @property
    def apex(self) -> FinSet:
        return self.left.dom

    @property
    def source(self) -> FinSet:
        return self.left.cod

    @property
    def target(self) -> FinSet:
        return self.right.cod

    @classmethod
    def of(cls, x, y, left, right):
        return cls(FinFun(len(left), x, left), FinFun(len(right), y, right))


def identity_span(X) -> Span:
    return Span(identity(X), identity(X))


def pullback(g: FinFun, h: FinFun) -> List[Tuple[int, int]]:
    """``{(u, v) : g(u) = h(v)}`` in lexicographic order."""
    if g.cod != h.cod:
        raise RejectedInput("pullback needs a common codomain")
    return [(u, v) for u in g.dom for v in h.dom if g(u) == h(v)]


def span_compose(t: Span, s: Span) -> Span:
    """``t . s`` for ``s: X -> Y`` and ``t: Y -> Z``; the apex is the pullback over ``Y``."""
    if s.target != t.source:
        raise RejectedInput(f"span into a {s.target.size}-set cannot feed one out of "
                            f"a {t.source.size}-set")
    pairs = pullback(s.right, t.left)
    n = len(pairs)
    return Span(FinFun(n, s.source, [s.left(u) for u, _ in pairs]),
                FinFun(n, t.target, [t.right(v) for _, v in pairs]))


def span_iso(s: Span, t: Span) -> Optional[FinFun]:
    """A bijection of apexes commuting with both legs, found by backtracking; None if absent."""
    if s.source != t.source or s.target != t.target:
        raise RejectedInput("spans have different endpoints")
    if s.apex != t.apex:
        return None
    n = s.apex.size
    sig_t = [(t.left(v), t.right(v)) for v in t.apex]
    cap = get_cap()
    used = [False] * n
    choice = [0] * n
    nodes = 0

    def go(u):
        nonlocal nodes
        if u == n:
            return True
        want = (s.left(u), s.right(u))
        for v in range(n):
            if not used[v] and sig_t[v] == want:
                nodes += 1
                if nodes > cap:
                    raise EnumerationOverflow("span isomorphism search", nodes, cap)
                used[v], choice[u] = True, v
                if go(u + 1):
                    return True
                used[v] = False
        return False

    return FinFun(n, n, choice) if go(0) else None


def span_iso_oracle(s: Span, t: Span) -> bool:
    """Plain search over all permutations of the apex."""
    if s.apex != t.apex:
        return False
    n = s.apex.size
    check_cap("apex permutations", factorial(n))
    return any(all(t.left(p[u]) == s.left(u) and t.right(p[u]) == s.right(u) for u in range(n))
               for p in permutations(range(n)))


def enumerate_spans(x, y, apex):
    """Every span ``x <- apex -> y`` as full leg tables."""
    check_cap(f"spans {x}<-{apex}->{y}", (x * y) ** apex)
    for left in product(range(x), repeat=apex):
        for right in product(range(y), repeat=apex):
            yield Span.of(x, y, left, right)


def spans_up_to_iso(x, y, apex):
    """One span per isomorphism class: legs as a sorted list of ``(left, right)`` values."""
    check_cap(f"span classes {x}<-{apex}->{y}", (x * y) ** apex)
    cells = [(a, b) for a in range(x) for b in range(y)]
    for combo in combinations_with_replacement(cells, apex):
        yield Span.of(x, y, [a for a, _ in combo], [b for _, b in combo])


# families and the pull-push action -----------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A set over ``base``: ``proj: total -> base``."""
    proj: FinFun

    @property
    def total(self) -> FinSet:
        return self.proj.dom

    @property
    def base(self) -> FinSet:
        return self.proj.cod

    @classmethod
    def of(cls, base, proj):
        return cls(FinFun(len(proj), base, proj))

    def fiber_sizes(self):
        sizes = [0] * self.base.size
        for v in self.proj.table:
            sizes[v] += 1
        return sizes


def pull_push(s: Span, A: Family) -> Family:
    """Pull ``A`` back along the left leg to ``{(a, u) : A(a) = left(u)}``, then push along the right."""
    if A.base != s.source:
        raise RejectedInput("family does not live over the source of the span")
    pairs = pullback(A.proj, s.left)
    return Family(FinFun(len(pairs), s.target, [s.right(u) for _, u in pairs]))


def family_iso(A: Family, B: Family) -> Optional[FinFun]:
    """A bijection of totals commuting with the projections (matched fiber by fiber)."""
    if A.base != B.base or A.fiber_sizes() != B.fiber_sizes():
        return None
    slots = {}
    for b, y in enumerate(B.proj.table):
        slots.setdefault(y, []).append(b)
    taken = {y: 0 for y in slots}
    table = []
    for y in A.proj.table:
        table.append(slots[y][taken[y]])
        taken[y] += 1
    return FinFun(A.total.size, B.total.size, table)


# the endo fiber -------------------------------------------------------------------------------


@dataclass(frozen=True)
class PointwisePath:
    """One bijection ``V x Fin(a) -> U x Fin(a)`` per ``a`` in the universe, with no naturality.

    Elements of ``V x Fin(a)`` are indexed ``v * a + i``.
    """
    components: Tuple[Tuple[int, ...], ...]

    def component(self, a) -> FinFun:
        c = self.components[a]
        return FinFun(len(c), len(c), c)


@dataclass(frozen=True)
class FiberPoint:
    apex_size: int
    path: PointwisePath


CAVEAT = ("bounded extensional model: paths between functions are pointwise bijections with no "
          "naturality, so the count need not be 1 even when the apex is contractible; this does "
          "not settle whether the corresponding type of self-identifications is contractible")


@dataclass
class EndoFiberResult:
    u_size: int
    universe_max: int
    count: int
    closed_form: int
    witnesses: List[FiberPoint]
    caveat: str = CAVEAT

    @property
    def swap_witness(self) -> Optional[FiberPoint]:
        """A witness that exchanges the two summands of ``U x Fin(1)``, if present."""
        for w in self.witnesses:
            c = w.path.components[1] if len(w.path.components) > 1 else ()
            if len(c) >= 2 and c[:2] == (1, 0):
                return w
        return None


def endo_fiber_count(u, universe_max) -> int:
    """Closed form: ``prod over a of (u*a)!``."""
    return prod(factorial(u * a) for a in range(universe_max + 1))


def enumerate_endo_fiber(u, universe_max):
    """Every pair ``(V, pointwise path (V x -) => (U x -))`` over the bounded universe.

    ``V`` runs over the universe; evaluating at ``Fin(1)`` forces ``|V| = u``.
    """
    if u > universe_max:
        return
    check_cap("endo fiber", endo_fiber_count(u, universe_max))
    for comps in product(*(permutations(range(u * a)) for a in range(universe_max + 1))):
        yield FiberPoint(u, PointwisePath(tuple(comps)))


def endo_fiber_analysis(U, universe_max) -> EndoFiberResult:
    """Fiber of the pull-push realisation over ``(U x -)`` on ``Fin(0)..Fin(universe_max)``."""
    u = U.size if isinstance(U, FinSet) else int(U)
    if universe_max < 1:
        raise RejectedInput("the universe must contain Fin(1) to pin down the apex")
    count = sum(1 for _ in enumerate_endo_fiber(u, universe_max))
    closed = endo_fiber_count(u, universe_max) if u <= universe_max else 0
    witnesses = []
    if count:
        ident = tuple(tuple(range(u * a)) for a in range(universe_max + 1))
        witnesses.append(FiberPoint(u, PointwisePath(ident)))
        for a in range(universe_max + 1):
            if u * a >= 2:
                comps = list(ident)
                comps[a] = (1, 0) + tuple(range(2, u * a))
                witnesses.append(FiberPoint(u, PointwisePath(tuple(comps))))
    return EndoFiberResult(u, universe_max, count, closed, witnesses)


def product_span(U) -> Span:
    """``1 <- U -> 1``, realised as ``(U x -)``."""
    u = U.size if isinstance(U, FinSet) else int(U)
    return Span.of(1, 1, [0] * u, [0] * u)
