"""The simplex category through the inductive family ``Ord(m, n)``.

Terms are built from ``Z : Ord(0,0)``, ``Sl : Ord(m,n+1) -> Ord(m+1,n+1)``
and ``Sr : Ord(m,n) -> Ord(m,n+1)``.  A term realises a monotone map
``Fin(m) -> Fin(n)``: ``Sl`` sends the new first element to 0 and ``Sr``
shifts every value up by one.

>>> str(canonicalize(FinFun(2, 2, (0, 1))))
'Sl(Sr(Sl(Sr(Z))))'
>>> realize(parse_term("Sr(Sl(Sr(Z)))")).table
(1,)
"""
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .concat import ConcreteCategory, strict_category
from .config import check_cap
from .errors import NotMonotoneError, RejectedInput
from .fingpd import discrete, functor_from_tables
from .finset import FinFun

_ORDER = {"Z": 0, "Sl": 1, "Sr": 2}


@dataclass(frozen=True)
class OrdTerm:
    ctor: str
    arg: Optional["OrdTerm"] = None
    m: int = field(init=False, compare=False)
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.ctor == "Z":
            if self.arg is not None:
                raise RejectedInput("Z takes no argument")
            m, n = 0, 0
        elif self.ctor == "Sl":
            if self.arg is None or self.arg.n < 1:
                raise RejectedInput("Sl needs an argument in Ord(m, n+1)")
            m, n = self.arg.m + 1, self.arg.n
        elif self.ctor == "Sr":
            if self.arg is None:
                raise RejectedInput("Sr needs an argument")
            m, n = self.arg.m, self.arg.n + 1
        else:
            raise RejectedInput(f"unknown constructor {self.ctor!r}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    def __str__(self):
        s, t, depth = [], self, 0
        while t.ctor != "Z":
            s.append(t.ctor + "(")
            t = t.arg
            depth += 1
        return "".join(s) + "Z" + ")" * depth

    def __repr__(self):
        return f"OrdTerm({self}: Ord({self.m},{self.n}))"

    def word(self):
        """Constructors from the outside in, without the final ``Z``."""
        out, t = [], self
        while t.ctor != "Z":
            out.append(t.ctor)
            t = t.arg
        return out

    def __lt__(self, other):
        return [_ORDER[c] for c in self.word() + ["Z"]] < [_ORDER[c] for c in other.word() + ["Z"]]


Z = OrdTerm("Z")


def Sl(t):
    return OrdTerm("Sl", t)


def Sr(t):
    return OrdTerm("Sr", t)


def from_word(word):
    t = Z
    for c in reversed(word):
        t = OrdTerm(c, t)
    return t


_TOKEN = re.compile(r"\s*(Sl|Sr|Z|\(|\))")


def parse_term(text) -> OrdTerm:
    """Parse the nested constructor notation, e.g. ``"Sl(Sr(Z))"``."""
    tokens, pos = [], 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            if text[pos:].strip() == "":
                break
            raise RejectedInput(f"bad term at position {pos}: {text!r}")
        tokens.append(mt.group(1))
        pos = mt.end()
    word = []
    i = 0
    while i < len(tokens) and tokens[i] in ("Sl", "Sr"):
        if i + 1 >= len(tokens) or tokens[i + 1] != "(":
            raise RejectedInput(f"expected '(' after {tokens[i]} in {text!r}")
        word.append(tokens[i])
        i += 2
    if tokens[i:] != ["Z"] + [")"] * len(word):
        raise RejectedInput(f"malformed term {text!r}")
    return from_word(word)


def realize(t: OrdTerm) -> FinFun:
    table, cod = [], 0
    for c in reversed(t.word()):
        if c == "Sr":
            table = [v + 1 for v in table]
            cod += 1
        else:
            table = [0] + table
    return FinFun(len(table), cod, tuple(table))


def canonicalize(f: FinFun) -> OrdTerm:
    """The unique term realising a monotone ``f``."""
    if not f.is_monotone:
        raise NotMonotoneError(f"{f} is not monotone")
    word = []
    table, n = list(f.table), f.cod.size
    while table or n:
        if table and table[0] == 0:
            word.append("Sl")
            table = table[1:]
        else:
            word.append("Sr")
            table = [v - 1 for v in table]
            n -= 1
    return from_word(word)


def ord_identity(n) -> OrdTerm:
    t = Z
    for _ in range(n):
        t = Sl(Sr(t))
    return t


def ord_compose(g: OrdTerm, f: OrdTerm) -> OrdTerm:
    """``g . f`` by recursion on the outer constructors of ``g`` and ``f``."""
    if f.n != g.m:
        raise RejectedInput(f"cannot compose Ord({g.m},{g.n}) after Ord({f.m},{f.n})")
    return _compose(g, f)


def _compose(g, f):
    if g.ctor == "Sr":
        return Sr(_compose(g.arg, f))
    if g.ctor == "Z":
        return Z
    # g = Sl(g'), so f lands in a nonempty set
    if f.ctor == "Sr":
        return _compose(g.arg, f.arg)
    return Sl(_compose(g, f.arg))


@lru_cache(maxsize=None)
def count_ord(m, n) -> int:
    """Number of terms of ``Ord(m, n)``, by the constructor recursion."""
    if m < 0 or n < 0:
        return 0
    if m == 0 and n == 0:
        return 1
    total = 0
    if m >= 1 and n >= 1:
        total += count_ord(m - 1, n)
    if n >= 1:
        total += count_ord(m, n - 1)
    return total


def enumerate_ord(m, n):
    """Terms of ``Ord(m, n)`` in canonical order (``Z < Sl < Sr``, outermost first)."""
    check_cap(f"Ord({m},{n})", count_ord(m, n))
    return list(_enumerate(m, n))


@lru_cache(maxsize=None)
def _enumerate(m, n):
    if m == 0 and n == 0:
        return (Z,)
    out = []
    if m >= 1 and n >= 1:
        out.extend(Sl(t) for t in _enumerate(m - 1, n))
    if n >= 1:
        out.extend(Sr(t) for t in _enumerate(m, n - 1))
    return tuple(out)


def delta_category(N) -> ConcreteCategory:
    """Objects ``[0]..[N]`` realised as ``Fin(k+1)``; homs are the ``Ord`` terms."""
    if N < 0:
        raise RejectedInput("N must be non-negative")
    n = N + 1
    obj_plus = [discrete(k + 1) for k in range(n)]
    terms = {(x, y): enumerate_ord(x + 1, y + 1) for x in range(n) for y in range(n)}
    index = {k: {t: i for i, t in enumerate(ts)} for k, ts in terms.items()}
    tables = {k: [realize(t).table for t in ts] for k, ts in terms.items()}

    def realise(x, y, c):
        return functor_from_tables(obj_plus[x], obj_plus[y], tables[x, y][c])

    def identity(x):
        return index[x, x][ord_identity(x + 1)]

    def compose(x, y, z, g, f):
        return index[x, z][ord_compose(terms[y, z][g], terms[x, y][f])]

    C = strict_category(n, obj_plus, {k: len(v) for k, v in terms.items()}, realise, identity,
                        compose, name=f"Delta({N})")
    C.terms = terms
    return C
