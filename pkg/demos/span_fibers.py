"""Spans compose by pullback; the pull-push realisation has large fibers in a bounded universe."""
from concretecat.finset import FinSet
from concretecat.spans import (Family, endo_fiber_analysis, identity_span, pull_push,
                               span_compose, span_iso, Span)

s = Span.of(2, 3, [0, 0, 1], [0, 1, 1])
t = Span.of(3, 2, [1, 1, 2], [0, 1, 1])
ts = span_compose(t, s)
print("composite apex size:", ts.apex.size, "legs:", ts.left.table, ts.right.table)
print("left unit holds:", span_iso(span_compose(identity_span(FinSet(3)), s), s) is not None)

A = Family.of(2, [0, 1, 1])
print("pull-push of a family over Fin(2):", pull_push(s, A).fiber_sizes())

for u in (0, 1, 2):
    r = endo_fiber_analysis(FinSet(u), 2)
    print(f"U = Fin({u}): {r.count} points in the fiber over (U x -), "
          f"swap witness: {r.swap_witness is not None}")
print(r.caveat)
