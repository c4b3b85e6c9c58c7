# Watching the iteration add inequalities one by one.
#
# Start from the whole plane (lineality basis e1, e2, no rays) and add
#   -x1 <= 0,  -x2 <= 0,  x1 - x2 <= 0.
# The first two inequalities each turn a lineality direction into a ray. The
# third cuts the quadrant, keeping (0, 1) and replacing (1, 0) by the point
# where the segment between them crosses x1 = x2.
from mbcone import ConeDescription, LinearForm, mb_step
from mbcone.mb_core import EvalTableau

forms = [LinearForm(row) for row in [(-1, 0), (0, -1), (1, -1)]]

cone = ConeDescription.full_space(2)
tableau = EvalTableau()
processed = []
print(f"start:           U={cone.lineality}  V={cone.rays}")
for form in forms:
    cone, tableau = mb_step(cone, processed, form, tableau)
    processed.append(form)
    print(f"add {str(list(map(int, form))):12}  U={cone.lineality}  V={cone.rays}")

# The tableau caches every processed form evaluated on every current ray;
# a zero marks a tight constraint.
for v in cone.rays:
    print(v, "->", [int(x) for x in tableau.values[v]], "tight mask", bin(tableau.tight_mask(v)))
