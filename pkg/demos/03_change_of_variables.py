# Preprocessing: unused variables and the change of variables.
#
# The system below lives in four variables, never mentions x4, and has rank 2,
# so the solution cone contains a 2-dimensional line space. The preprocessed
# path strips x4, rewrites everything in y_j = -l_j(x) for an independent
# pair of forms, solves a pointed problem in 2 variables and maps back.
from mbcone import InequalitySystem, conehull, cones_equal
from mbcone.reduce import back_substitute, change_of_variables, strip_unused_variables
from mbcone.solver import solve_reduced

system = InequalitySystem.from_rows([
    (1, 1, 0, 0),
    (2, 2, -1, 0),
    (0, 0, 1, 0),
    (1, 1, 1, 0),
])
print("rank:", system.rank(), "of", system.dimension, "variables")

stripped, bad = strip_unused_variables(system)
print("unused variables (0-based):", bad)

reduced, sub = change_of_variables(stripped)
print("pivot variables:", sub.pivot_indices, "free variables:", sub.free_indices)
print("non-base forms in y:", [[str(c) for c in f] for f in reduced.forms])

cone = solve_reduced(system)
print("U =", cone.lineality)
print("V =", cone.rays)

# the plain iteration gives the same cone, up to the choice of U basis and of
# representatives of each ray modulo the line space
direct = conehull(system, as_is=True)
print("as-is U =", direct.lineality, " V =", direct.rays)
print("same cone:", cones_equal(cone, direct, system))
