"""Finite sets ``{0, ..., n-1}`` and total functions between them.

Functions are stored as full tables.  This is the discrete layer every
other module is built on: sets model 0-truncated types and the truncation
level of a set map is read off its fibers.
"""
from dataclasses import dataclass
from itertools import product
from typing import Tuple, Union

from .config import check_cap
from .errors import RejectedInput

BIJECTION = -2
INJECTION = -1
SET_MAP = 0


@dataclass(frozen=True)
class FinSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise RejectedInput(f"negative set size {self.size}")

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size

    def __contains__(self, x):
        return isinstance(x, int) and 0 <= x < self.size


def _as_set(x: Union[FinSet, int]) -> FinSet:
    return x if isinstance(x, FinSet) else FinSet(x)


@dataclass(frozen=True)
class FinFun:
    dom: FinSet
    cod: FinSet
    table: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dom", _as_set(self.dom))
        object.__setattr__(self, "cod", _as_set(self.cod))
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.size:
            raise RejectedInput(
                f"table has {len(self.table)} entries, domain has {self.dom.size}")
        for v in self.table:
            if not 0 <= v < self.cod.size:
                raise RejectedInput(f"value {v} outside codomain of size {self.cod.size}")

    def __call__(self, i):
        return self.table[i]

    def __repr__(self):
        return f"FinFun({list(self.table)}: {self.dom.size}->{self.cod.size})"

    @property
    def is_injective(self):
        return len(set(self.table)) == len(self.table)

    @property
    def is_surjective(self):
        return len(set(self.table)) == self.cod.size

    @property
    def is_monotone(self):
        return all(a <= b for a, b in zip(self.table, self.table[1:]))


def identity(n) -> FinFun:
    n = _as_set(n)
    return FinFun(n, n, tuple(range(n.size)))


def compose(g: FinFun, f: FinFun) -> FinFun:
    """``g . f``, defined when ``f.cod == g.dom``."""
    if f.cod != g.dom:
        raise RejectedInput(f"cannot compose {g} after {f}")
    return FinFun(f.dom, g.cod, tuple(g.table[i] for i in f.table))


def fiber(f: FinFun, y: int):
    if y not in f.cod:
        raise RejectedInput(f"{y} is not an element of the codomain of {f}")
    return [i for i, v in enumerate(f.table) if v == y]


def trunc_level_set_map(f: FinFun) -> int:
    """-2 for bijections, -1 for injections, 0 for everything else."""
    sizes = [0] * f.cod.size
    for v in f.table:
        sizes[v] += 1
    if all(s == 1 for s in sizes):
        return BIJECTION
    if all(s <= 1 for s in sizes):
        return INJECTION
    return SET_MAP


def connectivity_witness(X, Y):
    """Some map between ``X`` and ``Y`` in one direction; never fails.

    Returns ``(direction, map)`` where direction is ``"forward"`` for a map
    X -> Y and ``"backward"`` for Y -> X.
    """
    X, Y = _as_set(X), _as_set(Y)
    if X.size == 0:
        return "forward", FinFun(X, Y, ())
    if Y.size > 0:
        return "forward", FinFun(X, Y, (0,) * X.size)
    return "backward", FinFun(Y, X, ())


def enumerate_maps(X, Y):
    """All ``|Y|**|X|`` maps in lexicographic table order."""
    X, Y = _as_set(X), _as_set(Y)
    check_cap(f"maps {X.size}->{Y.size}", Y.size ** X.size)
    return [FinFun(X, Y, t) for t in product(range(Y.size), repeat=X.size)]


def inverse(f: FinFun):
    """Two-sided inverse or None."""
    if trunc_level_set_map(f) != BIJECTION:
        return None
    table = [0] * f.cod.size
    for i, v in enumerate(f.table):
        table[v] = i
    return FinFun(f.cod, f.dom, tuple(table))
