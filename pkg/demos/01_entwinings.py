"""Entwining structures and their exact axiom checkers.

Builds the two families of examples -- tensor flips and bialgebra
entwinings -- runs the four defining axioms on each, and shows what a
failure report looks like when a structure constant is corrupted.
"""

from entwine import (EntwObj, Matrix, QQ, bialgebra_entwining, check_obj,
                     cyclic_group_bialgebra, flip_entwining, group_algebra,
                     grouplike_coalgebra, matrix_algebra, matrix_coalgebra)

print("=== Entwining structures over Q ===\n")

objects = {
    "flip(k[C2], M2-coalgebra)": flip_entwining(group_algebra(QQ, 2),
                                                matrix_coalgebra(QQ, 2)),
    "flip(M2, grouplikes(3))": flip_entwining(matrix_algebra(QQ, 2),
                                              grouplike_coalgebra(QQ, 3)),
    "bialgebra(k[C2])": bialgebra_entwining(cyclic_group_bialgebra(QQ, 2)),
    "bialgebra(k[C3])": bialgebra_entwining(cyclic_group_bialgebra(QQ, 3)),
}

for name, e in objects.items():
    rep = check_obj(e)
    dims = (e.algebra.dim, e.coalgebra.dim)
    print(f"{name}: dims (A, C) = {dims}, "
          f"axioms {'all pass' if rep.passed else 'FAIL'}")
    for axiom in rep.axioms:
        print(f"    {axiom}: ok")

print("\nThe bialgebra entwining on grouplikes acts by")
print("    psi(g^j (x) g^k) = g^k (x) g^(j+k)")
e = objects["bialgebra(k[C3])"]
for j in range(3):
    for k in range(3):
        col = e.psi.column(j * 3 + k)
        row = next(r for r in range(9) if col[r, 0])
        print(f"    psi(g^{j} (x) g^{k}) = g^{row // 3} (x) g^{row % 3}")

print("\n=== Corrupting one structure constant ===\n")
mutated = EntwObj(e.algebra, e.coalgebra,
                  Matrix.build(QQ, 9, 9,
                               lambda r, c: e.psi[r, c] + (r == c == 0)))
rep = check_obj(mutated)
print(f"after psi[0,0] += 1: {len(rep.failures)} axioms fail")
for f in rep.failures:
    print(f"    {f.axiom} first differs at {f.coord}: "
          f"{f.lhs[f.coord]} vs {f.rhs[f.coord]}")
