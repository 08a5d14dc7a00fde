"""R-matrices on two Verma factors and the colored reading of braid words."""

from vermahowe.braid import (
    BraidWord,
    colored_read,
    equivariance_report,
    finest_partition,
    inverse_report,
    parse_word,
    rmatrix_step,
    yang_baxter_report,
)
from vermahowe.scalar import SymbolicQuantum

K2 = SymbolicQuantum(2)
img = rmatrix_step(+1, (1, 2), {(1, 0): K2.one}, K2)
print("R(m_1 (x) m_0) =")
for k, c in img.items():
    print(f"   ({c}) m_{k[0]} (x) m_{k[1]}")

print(inverse_report(3, K2).summary())
print(equivariance_report(2, K2).summary())

K3 = SymbolicQuantum(3)
print(yang_baxter_report(2, K3).summary())

w = parse_word("s1 s2 s1^-1", 3)
print(f"{w}: permutation {w.permutation()}, finest partition {finest_partition(w)}")

# a non-pure word moves between differently colored slices
m = colored_read(BraidWord(3, (1,)), (1, 2, 3), 1, K3)
print("s1 on colors (1,2,3): target colors", m.target_colors, "square:", m.square)
