"""The monomial model: gl(2) and gl(n) acting side by side, and highest-weight vectors."""

from vermahowe.qgroup import (
    GlnGenerator,
    act_gln_quantum,
    commuting_actions_report,
    highest_weight_basis,
    quantum_relations_report,
)
from vermahowe.scalar import SymbolicClassical, SymbolicQuantum
from vermahowe.verma import Monomial, act_gl2_quantum, random_monomials, tensor_basis

K = SymbolicQuantum(3)
m = Monomial((0, 0, 0), (0, 0, 0))

print("F . X^mu =")
for mono, c in act_gl2_quantum("F", m, K).items():
    print(f"   ({c}) {mono}")

print("E_1 . X^mu =", {str(k): str(v) for k, v in act_gln_quantum(GlnGenerator("E", 1), m, K).items()})

# the two actions commute monomial by monomial
sample = random_monomials(seed=1, n=3, count=40)
for ctx in (K, SymbolicClassical(3)):
    rep = commuting_actions_report(3, sample, ctx)
    print(f"{rep.name}: {rep.checked} identities, {len(rep.failures)} failures")

rep = quantum_relations_report(3, sample[:10], K)
print(f"quantum gl(3) relations: {rep.checked} checked, ok={rep.ok}")

# ker E on the degree-l slice m_{k1} (x) ... (x) m_{kn}
for l in range(4):
    basis = highest_weight_basis(3, l, K)
    print(f"l={l}: slice size {len(tensor_basis(3, l))}, dim ker E = {len(basis)}")
print("ker E at (n, l) = (2, 1):", {k: str(c) for k, c in highest_weight_basis(2, 1, SymbolicQuantum(2))[0].items()})
