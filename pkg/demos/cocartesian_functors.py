"""Encode a functor as an arrowlike category and read it back from cocartesian lifts."""
from concretecat.cocart import (cocart_uniqueness_check, extract_functor, graph_of_functor,
                                is_cocartesian_fibration, iter_category_functors)
from concretecat.delta import delta_category
from concretecat.freecat import Quiver, free_category

C = free_category(Quiver(2, [(0, 1)]))     # the walking arrow
D = delta_category(2)
functors = list(iter_category_functors(C, D))
print(f"{len(functors)} functors from the walking arrow into {D.name}")

F = functors[7]
G = graph_of_functor(C, D, F)
ok, found = is_cocartesian_fibration(G)
print("graph is a cocartesian fibration:", ok)
print("lifts out of each A object:", {a: [(w.b, w.f) for w in ws] for a, ws in found.items()})

E = extract_functor(G)
print("extracted functor equals the original:", E.functor == F)
u = cocart_uniqueness_check(G)
print("uniqueness check refused:", u.refused, "passed:", u.passed)
