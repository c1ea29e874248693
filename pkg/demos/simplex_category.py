"""Walk through the simplex category: terms, monotone maps, and a level-1 certificate."""
from concretecat.concat import check_univalent, conformity_report
from concretecat.delta import canonicalize, count_ord, delta_category, enumerate_ord, realize
from concretecat.finset import FinFun

# Every monotone map has exactly one term built from Z, Sl and Sr.
f = FinFun(3, 2, (0, 0, 1))
t = canonicalize(f)
print(f"the map {f.table} : 3 -> 2 has normal form {t}")
print(f"and the term realises back to {realize(t).table}")

print("monotone maps Fin(m) -> Fin(n):")
for m in range(5):
    print("  ", [count_ord(m, n) for n in range(5)])

print("all terms Fin(2) -> Fin(2):", [str(u) for u in enumerate_ord(2, 2)])

# Delta(3) has objects [0]..[3], realised as Fin(1)..Fin(4).  Its realisation is
# injective on every hom, which is exactly the level-1 condition.
C = delta_category(3)
r = conformity_report(C, require=1)
print(f"{C.name}: conformity level {r.conformity_level}, certified at 1: {r.certified[1]}")
# Level 2 adds the unit and associativity laws, checked exhaustively.
r2 = conformity_report(C, require=2)
print("laws at level 2:", {k: (v.passed, v.checked) for k, v in r2.law_status.items()})
print("univalent:", check_univalent(C).univalent)
