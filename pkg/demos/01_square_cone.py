# Generators of a cone over a square.
#
# The four inequalities |x1| <= x3, |x2| <= x3 cut out a pointed cone whose
# cross-section at x3 = 1 is the square [-1, 1]^2. Its extreme rays are the
# four corners lifted to height 1.
from mbcone import InequalitySystem, check_solutions, conehull, oracle_enumerate

square = InequalitySystem.from_rows([
    (1, 0, -1),   #  x1 - x3 <= 0
    (-1, 0, -1),  # -x1 - x3 <= 0
    (0, 1, -1),   #  x2 - x3 <= 0
    (0, -1, -1),  # -x2 - x3 <= 0
])

cone = conehull(square)
print("lineality basis U:", cone.lineality)  # empty: the cone is pointed
print("extreme rays V:")
for v in cone.rays:
    print("   ", v)

# every generator satisfies every inequality
print("all valid:", check_solutions(square, cone.rays).all_valid)

# (1, 0, 2) is inside, (2, 0, 1) is not; the checker names the violated form
report = check_solutions(square, [(1, 0, 2), (2, 0, 1)])
print("valid:", report.valid, "invalid:", report.invalid)

# the brute-force oracle enumerates equality subsystems and agrees
print("oracle agrees:", oracle_enumerate(square) == cone)

# Dropping the last inequality opens the cone into an unbounded wedge:
# three rays remain and the missing facet lets (0, -1, 0) through.
print("without -x2 - x3 <= 0:", conehull(InequalitySystem(3, square.forms[:3])).rays)
