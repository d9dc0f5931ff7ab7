# Coverage depth of two codes with the same weights
# ==================================================
#
# Suppose the columns of a generator matrix
# :math:`G\in\mathbb F_q^{k\times n}` are stored on
# ``n`` strands, and that strands are read one at a time,
# uniformly at random and with replacement. Reading stops
# once the columns read so far span :math:`\mathbb F_q^k`,
# at which point every information symbol can be decoded.
# The expected number of reads is the `coverage depth`
# :math:`\mathbb E[\mathcal C]` of the code.
#
# In this demo we compute the coverage depth of two small
# binary codes in several independent ways. We always begin
# by importing coverdepth. ::

from coverdepth import *

# Both codes have dimension three and length twelve. The
# first has three disjoint blocks of ones. ::

F2 = make_field(2)
C1 = LinearCode(
    MatrixGF(F2, [
        [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
    ]),
    name="C1",
)

# The second shares six all-ones columns between its rows. ::

C2 = LinearCode(
    MatrixGF(F2, [
        [1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    ]),
    name="C2",
)

# Their nonzero codewords have weights 3, 4, 5, 7, 8, 9 and 12
# in both cases, so the two codes have the same weight
# distribution. ::

W1 = weight_distribution(C1)
W2 = weight_distribution(C2)
pyrint(f"C1 weights: {W1}")
pyrint(f"C2 weights: {W2}")
assert W1 == W2

# The coverage depth depends on which coordinate subsets
# are information sets, which the weights alone do not
# capture. The census of a code counts, for every subset
# size, how many subsets support a subcode of each
# dimension. It is computed once and cached on the code. ::

for C in (C1, C2):
    census = C.census
    counts = [census.alpha(s) for s in range(C.k, C.n + 1)]
    pyrint(f"{C.name}: information sets by size {counts}")

# From the census we get the exact value as a fraction. ::

E1 = expectation_exact(C1)
E2 = expectation_exact(C2)
pyrint(f"E[C1] = {E1} ~ {float(E1):.6f}")
pyrint(f"E[C2] = {E2} ~ {float(E2):.6f}")

# The result should not depend on the method, so we check it
# against the dual code, against the weights of the extension
# codes :math:`\mathcal C\otimes\mathbb F_{2^m}` and against
# the draw process solved directly. ::

for C in (C1, C2):
    value = expectation_exact(C)
    assert expectation_refined(C) == value
    assert expectation_via_dual(C) == value
    assert expectation_from_weights(C) == value
    assert expectation_chain_oracle(C) == value

# Finally, a Monte Carlo estimate, which is reproducible given
# its seed. Turning on debugging mode shows the configuration
# of the run. ::

set_log_level(DEBUG)
result = simulate(C1, SimulationConfig(20000, seed=42))
pyrint(f"Monte Carlo: {result.mean:.4f} +/- {result.stderr:.4f}")
set_log_level(WARNING)

# Neither code is MDS, so both lie above the bound
# :math:`n(H_n - H_{n-k})` attained by MDS codes of the
# same length and dimension. ::

pyrint(f"MDS bound: {float(mds_lower_bound(12, 3)):.6f}")
