"""The operators omega_ij and the infinitesimal pure braid relations."""

from vermahowe.gtbasis import infbraid_apply, infbraid_relations_check
from vermahowe.scalar import SymbolicClassical
from vermahowe.verma import Monomial, random_monomials

K = SymbolicClassical(3)
m = Monomial((0, 0, 0), (0, 0, 0))
print("omega_12 X^lambda =", {str(k): str(v) for k, v in infbraid_apply(1, 2, m, K).items()})

m = Monomial((1, -1, 0), (0, 2, 1))
print(f"omega_23 {m} =")
for k, v in infbraid_apply(2, 3, m, K).items():
    print(f"   ({v}) {k}")

for n in (3, 4):
    rep = infbraid_relations_check(n, random_monomials(3, n, 30), SymbolicClassical(n))
    print(f"n={n}: {rep.checked} relations checked, ok={rep.ok}")
