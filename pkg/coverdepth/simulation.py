"""
Monte Carlo estimation of the coverage depth.

Each trial draws column indices uniformly with replacement and inserts the
drawn columns into a :class:`SpanState` until it spans
:math:`\\mathbb F_q^k`, recording the number of draws. Trials are grouped in
blocks; block ``b`` draws from the substream obtained by jumping the
configured bit generator ``b`` times ahead of the seeded one, so the outcome
depends only on the configuration and not on how blocks are scheduled.
"""
from .coverage import ExpectationResult
from .gf import make_field
from .linalg import SpanState
from .log import debug
from .parallel import map_chunks
from fractions import Fraction
import numpy as np


__all__ = ['SimulationConfig', 'simulate', 'BIT_GENERATORS']


BIT_GENERATORS = {
    'philox': np.random.Philox,
    'pcg64': np.random.PCG64,
}


class SimulationConfig(object):
    """
    Settings of a Monte Carlo run. Identical settings give identical
    estimates.
    """
    def __init__(self, trials, seed=0, **kwargs):
        """
        :arg trials: number of independent trials
        :kwarg seed: non-negative 64-bit seed
        :kwarg rng: name of the bit generator, from
            :data:`BIT_GENERATORS` (default ``'philox'``)
        :kwarg block_size: number of trials sharing a
            substream (default 4096)
        """
        debug(100*'-')
        self.trials = int(trials)
        if self.trials != trials or self.trials < 1:
            raise ValueError(f"Number of trials must be a positive integer, not {trials}")
        self.debug("trials")
        self.seed = int(seed)
        if self.seed != seed or not 0 <= self.seed < 2**64:
            raise ValueError(f"Seed must be an integer in [0, 2^64), not {seed}")
        self.debug("seed")
        self.rng = kwargs.get('rng', 'philox')
        if self.rng not in BIT_GENERATORS:
            raise ValueError(f"Unknown generator '{self.rng}'; choose from {sorted(BIT_GENERATORS)}")
        self.debug("rng")
        self.block_size = kwargs.get('block_size', 4096)
        if self.block_size < 1:
            raise ValueError(f"Block size must be positive, not {self.block_size}")
        self.debug("block_size")
        self.num_blocks = -(-self.trials//self.block_size)
        self.debug("num_blocks")
        debug(100*'-')

    def debug(self, attr):
        """
        Print attribute 'attr' for debugging purposes.
        """
        try:
            val = self.__getattribute__(attr)
        except AttributeError:
            raise AttributeError(f"Attribute {attr} cannot be debugged because it doesn't exist")
        label = ' '.join(attr.split('_'))
        debug(f"SimulationConfig: {label:25s} {val}")

    def __repr__(self):
        return f"SimulationConfig(trials={self.trials}, seed={self.seed}, rng='{self.rng}')"

    def generator(self, block):
        """
        The :class:`numpy.random.Generator` for block ``block``.
        """
        bit_generator = BIT_GENERATORS[self.rng](self.seed)
        return np.random.Generator(bit_generator.jumped(block))

    def block_trials(self, block):
        start = block*self.block_size
        return min(self.block_size, self.trials - start)


def _simulate_block(payload):
    """
    Run the trials of one block.

    :return: sum and sum of squares of the draw counts
    """
    p, e, k, columns, cfg, block = payload
    field = make_field(p, e)
    n = len(columns)
    rng = cfg.generator(block)
    buffer, position = [], 0
    total = total_sq = 0
    for _ in range(cfg.block_trials(block)):
        state = SpanState(field, k)
        draws = 0
        while not state.is_full:
            if position == len(buffer):
                buffer, position = rng.integers(0, n, size=max(64, 4*n)).tolist(), 0
            j = buffer[position]
            position += 1
            draws += 1
            state.insert(columns[j])
        total += draws
        total_sq += draws*draws
    return total, total_sq


def simulate(C, cfg):
    """
    Estimate the coverage depth of ``C`` by simulating the draw process.

    :arg C: a :class:`LinearCode`
    :arg cfg: a :class:`SimulationConfig`
    :return: an :class:`ExpectationResult` with the sample mean
        and its standard error
    """
    field = C.field
    columns = [tuple(column) for column in C.generator.columns()]
    payloads = [(field.p, field.e, C.k, columns, cfg, b) for b in range(cfg.num_blocks)]
    debug(f"simulate: {cfg.trials} trials on {C.name} in {cfg.num_blocks} blocks")
    total = total_sq = 0
    for block_total, block_total_sq in map_chunks(_simulate_block, payloads):
        total += block_total
        total_sq += block_total_sq
    N = cfg.trials
    mean = Fraction(total, N)
    if N > 1:
        variance = (total_sq - total*mean)/(N - 1)
        stderr = float(np.sqrt(float(variance)/N))
    else:
        stderr = 0.0
    debug(f"simulate: mean {float(mean):.6f}, standard error {stderr:.6f}")
    return ExpectationResult('mc', mean=float(mean), stderr=stderr, trials=N, seed=cfg.seed)
