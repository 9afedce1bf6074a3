"""Two commuting su(1,1) families acting on coefficient tables."""

# %%
from zernike_uea.ladder import Generator, OperatorExpr, apply_generator, casimir, commutator_defect
from zernike_uea.parser import format_operator, parse_operator
from zernike_uea.transform import CoefficientTable

vacuum = CoefficientTable.from_entries({(0, 0): 1})
state = apply_generator(Generator.B_PLUS, apply_generator(Generator.A_PLUS, vacuum))
print("A+ B+ V[0,0] ->", state.nonzero())

# %%
# [A+, A-] = -2 A3 holds on any table.
print("defect:", commutator_defect(Generator.A_PLUS, Generator.A_MINUS, state, OperatorExpr.generator(Generator.A3, -2)))
print("Casimir:", casimir("A", state).nonzero())

# %%
# Operator text uses the ordered basis A+ A3 A- B+ B3 B-; K expands to A3 - 1/2.
op = parse_operator("2*A+ K^2 B- - i*B3")
print(format_operator(op))
