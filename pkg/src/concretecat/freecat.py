"""Free categories on finite acyclic quivers.

Paths are stored in travel order: ``Path(src, tgt, (a1, a2, ...))`` goes
along ``a1`` first.  ``path_compose(p, q)`` is "p then q", so categorical
composition ``g . f`` is ``path_compose(f, g)``.  Each vertex is realised
as the set of paths ending at it, and a path acts by postcomposition.
"""
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Tuple

from .concat import ConcreteCategory, LawReport, strict_category
from .errors import InfinitePathsError, RejectedInput
from .fingpd import discrete, functor_from_tables


@dataclass(frozen=True)
class Quiver:
    n_vertices: int
    arrows: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        for i, (s, t) in enumerate(self.arrows):
            if not (0 <= s < self.n_vertices and 0 <= t < self.n_vertices):
                raise RejectedInput(f"arrow {i} has an endpoint out of range")

    def topological_order(self):
        ts = TopologicalSorter({v: set() for v in range(self.n_vertices)})
        for s, t in self.arrows:
            ts.add(t, s)
        try:
            return list(ts.static_order())
        except CycleError as e:
            raise InfinitePathsError(f"quiver has a cycle through {e.args[1]}") from None

    @property
    def is_acyclic(self):
        try:
            self.topological_order()
        except InfinitePathsError:
            return False
        return True


@dataclass(frozen=True)
class Path:
    src: int
    tgt: int
    arrows: Tuple[int, ...] = ()

    def __str__(self):
        if not self.arrows:
            return f"nil({self.src})"
        return ".".join(f"a{a}" for a in self.arrows)


def nil(x) -> Path:
    return Path(x, x, ())


def cons(rest: Path, arrow: int, quiver: Quiver) -> Path:
    """Prefix ``arrow: x -> y`` to ``rest: y -> z``, giving a path ``x -> z``."""
    s, t = quiver.arrows[arrow]
    if t != rest.src:
        raise RejectedInput(f"arrow {arrow} ends at {t}, path starts at {rest.src}")
    return Path(s, rest.tgt, (arrow,) + rest.arrows)


def path_compose(p: Path, q: Path) -> Path:
    """``p`` followed by ``q``; ``nil`` is a two-sided unit."""
    if p.tgt != q.src:
        raise RejectedInput(f"path ending at {p.tgt} cannot continue from {q.src}")
    return Path(p.src, q.tgt, p.arrows + q.arrows)


def paths(quiver: Quiver, x, y):
    """All paths ``x -> y`` sorted by arrow sequence."""
    quiver.topological_order()
    out_arrows = {}
    for i, (s, _) in enumerate(quiver.arrows):
        out_arrows.setdefault(s, []).append(i)
    found = []
    stack = [(x, ())]
    while stack:
        v, seq = stack.pop()
        if v == y:
            found.append(Path(x, y, seq))
        for a in out_arrows.get(v, ()):
            stack.append((quiver.arrows[a][1], seq + (a,)))
    return sorted(found, key=lambda p: p.arrows)


def path_count_oracle(quiver: Quiver, x, y) -> int:
    """Number of paths by dynamic programming over a topological order."""
    order = quiver.topological_order()
    count = {v: 0 for v in range(quiver.n_vertices)}
    count[x] = 1
    for v in order:
        for s, t in quiver.arrows:
            if s == v:
                count[t] += count[v]
    return count[y]


def free_category(quiver: Quiver) -> ConcreteCategory:
    quiver.topological_order()
    n = quiver.n_vertices
    homs = {(x, y): paths(quiver, x, y) for x in range(n) for y in range(n)}
    index = {k: {p: i for i, p in enumerate(ps)} for k, ps in homs.items()}
    # realisation of x: pairs (source vertex, path into x)
    sigma = [[(y, p) for y in range(n) for p in homs[y, x]] for x in range(n)]
    sigma_index = [{pair: i for i, pair in enumerate(s)} for s in sigma]
    obj_plus = [discrete(len(s)) for s in sigma]

    def realise(x, y, c):
        f = homs[x, y][c]
        table = [sigma_index[y][z, path_compose(g, f)] for z, g in sigma[x]]
        return functor_from_tables(obj_plus[x], obj_plus[y], table)

    def identity(x):
        return index[x, x][nil(x)]

    def compose(x, y, z, g, f):
        return index[x, z][path_compose(homs[x, y][f], homs[y, z][g])]

    C = strict_category(n, obj_plus, {k: len(v) for k, v in homs.items()}, realise, identity,
                        compose, name=f"Free({n} vertices, {len(quiver.arrows)} arrows)")
    C.paths = homs
    C.quiver = quiver
    return C


def embedding_check(C: ConcreteCategory) -> LawReport:
    """Every hom realisation of a discrete-hom category is injective; collisions are reported."""
    violations = []
    checked = 0
    for x, y in C.pairs():
        seen = {}
        for c in C.hom_objects(x, y):
            checked += 1
            key = C.realise(x, y, c).key
            if key in seen:
                violations.append({"objects": [x, y], "morphisms": [seen[key], c]})
            else:
                seen[key] = c
    return LawReport("embedding", not violations, checked, violations)
