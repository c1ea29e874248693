"""Pointed groupoids do not form a 1-concrete category, but they do form a 2-concrete one."""
from concretecat.concat import conformity_report
from concretecat.constructions import PointedGroupoid, pointed_category, pointed_level_prediction
from concretecat.fingpd import bz2, trivial

Ps = [PointedGroupoid(trivial(), 0), PointedGroupoid(bz2(), 0)]
C, obstruction = pointed_category(Ps)
r = conformity_report(C, require=1)

# The forgetful realisation of hom((1, *), (BZ2, *)) hits the one functor twice:
# once for each choice of loop at the base point.
w = obstruction.witnesses[0, 1]
print(f"fiber at pair (0, 1) has {w.n_components} components")
print("per-pair levels:", r.per_pair)
print(f"certified at 1: {r.certified[1]}, least level: {r.minimal_level}")
print("predicted from the targets alone:", pointed_level_prediction(Ps))

# Truncating the base-point datum to a proposition recovers level 1.
T, _ = pointed_category(Ps, truncate=-1)
print("with truncated points, certified at 1:", conformity_report(T, require=1).certified[1])
