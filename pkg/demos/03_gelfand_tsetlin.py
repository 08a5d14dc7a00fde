"""Determinant monomials, Gelfand-Tsetlin vectors and Casimir eigenvalues (classical gl(n))."""

from vermahowe.gtbasis import (
    DetMonomial,
    GTPattern,
    act_eij_det,
    casimir_apply,
    casimir_check,
    casimir_eigenvalue_expected,
    expand_det,
    gt_vector,
    patterns,
)
from vermahowe.scalar import SymbolicClassical

K = SymbolicClassical(3)

# a_1 = X_1 Y_2 - X_2 Y_1 times X^lambda
print("expand a_1:", {str(k): v for k, v in expand_det(DetMonomial((0, 0, 0), (1, 0))).items()})

m = DetMonomial((0, 0, 0), (0, 1))
print("e_12 on", m, "=", {str(k): str(v) for k, v in act_eij_det(1, 2, m, K).items()})

p = GTPattern.parse("GT{n=3; c=[0,1,2]; r=[0,1,0]}")
g = gt_vector(p, K)
print(f"gt_vector({p}) has {len(g)} terms")
for k in (1, 2, 3):
    ev = casimir_eigenvalue_expected(p, k, K)
    same = casimir_apply(k, g, K) == {m: c * ev for m, c in g.items()}
    print(f"  C_{k} eigenvalue {ev}: {'confirmed' if same else 'MISMATCH'}")

ok = all(r.ok for q in patterns(3, 2, 1) for r in casimir_check(q, K))
print("all n=3 patterns with c_3 <= 2, |r| <= 1:", "ok" if ok else "FAILED")
