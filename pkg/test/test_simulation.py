"""
Test the Monte Carlo estimate of the coverage depth.
"""
from coverdepth import *
from utility import example_c1
import pytest


# ---------------------------
# standard tests for pytest
# ---------------------------

@pytest.fixture(params=['philox', 'pcg64'])
def rng(request):
    return request.param


def test_config():
    cfg = SimulationConfig(10000, seed=7, block_size=4096)
    assert cfg.num_blocks == 3
    assert [cfg.block_trials(b) for b in range(3)] == [4096, 4096, 1808]
    assert cfg.rng == 'philox'


@pytest.mark.parametrize("kwargs", [
    {'trials': 0},
    {'trials': 2.5},
    {'trials': 10, 'seed': -1},
    {'trials': 10, 'seed': 2**64},
    {'trials': 10, 'rng': 'mt19937'},
    {'trials': 10, 'block_size': 0},
])
def test_config_errors(kwargs):
    with pytest.raises(ValueError):
        SimulationConfig(**kwargs)


def test_single_draw():
    """
    Check that a code of dimension one is covered by the first draw.
    """
    result = simulate(hamming(2, 2), SimulationConfig(500))
    assert result.mean == 1.0
    assert result.stderr == 0.0
    assert result.trials == 500 and not result.is_exact


def test_single_trial():
    result = simulate(simplex(2, 3), SimulationConfig(1, seed=3))
    assert result.stderr == 0.0
    assert result.mean >= 3


def test_deterministic(rng):
    """
    Check that the same configuration gives the same estimate.
    """
    C = example_c1()
    cfg = SimulationConfig(3000, seed=11, rng=rng, block_size=500)
    assert simulate(C, cfg).to_json() == simulate(C, cfg).to_json()


def test_worker_pool(monkeypatch):
    """
    Check that the estimate does not depend on the number of workers.
    """
    C = simplex(3, 2)
    cfg = SimulationConfig(2000, seed=5, block_size=300)
    serial = simulate(C, cfg)
    monkeypatch.setenv('COVERDEPTH_THREADS', '3')
    assert simulate(C, cfg).mean == serial.mean


@pytest.mark.parametrize("C", [simplex(2, 3), reed_solomon(5, 4, 2), example_c1()],
                         ids=['simplex', 'rs', 'c1'])
def test_estimate(C, rng):
    """
    Check that the estimate lies close to the exact value.
    """
    result = simulate(C, SimulationConfig(20000, seed=1, rng=rng))
    assert result.stderr > 0
    assert abs(result.mean - float(expectation_exact(C))) <= 4*result.stderr


@pytest.mark.slow
def test_calibration():
    """
    Check that standard errors are calibrated over many seeds.
    """
    C = simplex(3, 3)
    exact = float(expectation_simplex(3, 3))
    within = 0
    for seed in range(20):
        result = simulate(C, SimulationConfig(100000, seed=seed))
        if abs(result.mean - exact) < 4*result.stderr:
            within += 1
    assert within >= 18
