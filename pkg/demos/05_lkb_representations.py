"""LKB spaces, braid matrices and simplicity certificates."""

from vermahowe.braid import BraidWord, Partition, handlebody_colors
from vermahowe.lkb import lkb_basis, pure_generators, simplicity_report, word_matrix

# equal colors: the Burau-type value of s1 on W_(2,1)
space = lkb_basis(2, 1, colors=(1, 1))
print("W_(2,1) basis:", space.labels())
print("s1 ->", [[str(x) for x in r] for r in word_matrix(BraidWord(2, (1,)), space).rows])

# distinct colors need pure words
space = lkb_basis(3, 2)
print(f"W_(3,2) has dimension {space.dim}")
for w in pure_generators(3):
    M = word_matrix(w, space)
    print(f"  {w}: first row {[str(x) for x in M.rows[0]]}")

# handlebody colors: 1 core strand, 3 strands sharing a color
cols = handlebody_colors(1, 3)
space = lkb_basis(4, 1, cols)
print("handlebody colors", cols, "-> W_(4,1) dimension", space.dim)
print(word_matrix(BraidWord(4, (2, 3, 2)), space).dumps())

for n, l, S in [(3, 2, None), (4, 2, None), (3, 2, Partition.full(3))]:
    rep = simplicity_report(n, l, S, trials=3, seed=7)
    print(f"(n,l)=({n},{l}) S={rep.partition}: commutants {[t.commutant for t in rep.trials]} -> {rep.verdict}")
