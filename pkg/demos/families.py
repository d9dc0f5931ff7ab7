# Closed forms for code families
# ==============================
#
# This demo compares the closed-form coverage depths of
# simplex, Hamming and first-order Reed-Muller codes with
# the value computed from the census. ::

from coverdepth import *

for q, k in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]:
    value = expectation_simplex(q, k)
    assert value == expectation_exact(simplex(q, k))
    pyrint(f"simplex({q}, {k}): {float(value):.6f}")

for q, r in [(2, 3), (2, 4), (3, 2), (4, 2)]:
    value = expectation_hamming(q, r)
    assert value == expectation_exact(hamming(q, r))
    pyrint(f"hamming({q}, {r}): {float(value):.6f}")

for q, s in [(2, 3), (2, 4), (3, 2), (3, 3)]:
    value = expectation_reed_muller(q, s)
    assert value == expectation_exact(reed_muller_1(q, s))
    pyrint(f"rm1({q}, {s}): {float(value):.6f}")

# Reed-Solomon codes are MDS, so they attain the lower bound
# :math:`n(H_n - H_{n-k})`, which is the least coverage depth
# of any code with the same length and dimension. ::

for q, n, k in [(5, 5, 3), (7, 7, 4)]:
    assert expectation_exact(reed_solomon(q, n, k)) == mds_lower_bound(n, k)

# Simplex codes have the largest length for which no column
# repeats a direction. It is natural to ask whether they
# also minimise the coverage depth among codes of their
# length and dimension. The probe below samples random codes
# and warns about any that do better. ::

result = simplex_optimality_probe(2, 3, samples=200, seed=0)
pyrint(f"{len(result.violations)} of {result.samples} random codes beat the simplex code")

# The same comparisons are available from the command line:
#
# .. code-block:: none
#
#     coverdepth table --sweep "simplex:q=2,3;k=2..3" --sweep "hamming:q=2;r=2..4"
