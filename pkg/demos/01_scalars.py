"""Quantum numbers, exact rational functions and numeric specialization."""

from vermahowe.scalar import (
    GeneratorSet,
    Specialization,
    multinomial,
    parse_scalar,
    pochhammer,
    qfact_qbinom,
    qnum,
    specialize,
)

gens = GeneratorSet("quantum", 2)

# [2] = v + v^-1, stored as one reduced fraction
print("[2]       =", qnum(2, gens))
# [mu_1 + 1], with U1 standing for v^mu_1
print("[mu_1+1]  =", qnum((1, 1), gens))

fact, binom = qfact_qbinom(4, 2, gens)
print("[4]!      =", fact)
print("[4 2]     =", binom)

# canonical strings parse back to the same element
x = parse_scalar("(U1*v - U1^-1*v^-1)/(v - v^-1)", gens)
print("round trip:", x == qnum((1, 1), gens), str(x) == str(parse_scalar(str(x), gens)))

# evaluation at a point; v must avoid 0 and +-1
sp = Specialization.from_mapping(gens, {"v": 2, "U1": 3, "U2": 5})
print("[mu_1] at v=2, U1=3:", specialize(qnum((1, 0), gens), sp))

# seeded draws are reproducible
print("draw(seed=4):", Specialization.draw(gens, 4).as_dict())

# classical side: Pochhammer symbols and multinomial-type numbers
cl = GeneratorSet("classical", 2)
print("(l1)_3 =", pochhammer(cl.lam(1), 3))
print("coefficient of X1^2 X2 in X1 (X1+X2)^2:", multinomial((1, 2), (2, 1)))
