# The ternary Golay code
# ======================
#
# In the previous demo we computed coverage depths from
# the census of a code. For several code families the
# coverage depth is known in closed form. Here we look at
# the :math:`[11, 6, 5]_3` ternary Golay code and its
# extension. ::

from coverdepth import *

G = ternary_golay()
X = extended_ternary_golay()

# Both constructors check the weight distribution of the
# code they build. ::

pyrint(f"{G.name}: {weight_distribution(G)}")
pyrint(f"{X.name}: {weight_distribution(X)}")

# The closed form needs the number of weight-six codewords
# of the dual code, which the MacWilliams transform gives
# us without building the dual. ::

W_dual = macwilliams_dual(weight_distribution(G), 3, 6)
pyrint(f"dual of {G.name}: {W_dual}")

# The closed forms agree with the census. ::

for C, extended in ((G, False), (X, True)):
    value = expectation_golay(extended=extended)
    assert value == expectation_exact(C)
    pyrint(f"E[{C.name}] = {value} ~ {float(value):.6f}")

# The extended weight enumerator is read off the census as
# polynomials :math:`B_t(U)`. Evaluating them at
# :math:`U = 3^m` gives the weight distribution of the
# extension code over :math:`\mathbb F_{3^m}`. ::

E = extended_enumerator(G)
for m in range(4):
    pyrint(f"m = {m}: {extension_weight_distribution(E, 3, m)}")

# For ``m = 2`` we can also build the extension code over
# :math:`\mathbb F_9` explicitly and compare. Note that it has
# :math:`9^6` codewords. ::

assert weight_distribution(direct_extension_code(G, 2)) == extension_weight_distribution(E, 3, 2)

# Knowing the weights of every extension code is enough to
# recover the information sets, and hence the coverage
# depth. ::

assert expectation_from_weights(G) == expectation_golay()

# Finally, :func:`verify_all_methods` runs every method,
# including a Monte Carlo estimate, and collects the
# comparisons in a report. ::

report = verify_all_methods(G, closed_form=expectation_golay(), trials=10000)
for check in report.checks:
    pyrint(f"[{'pass' if check.passed else 'FAIL'}] {check.name}")
assert report.passed
