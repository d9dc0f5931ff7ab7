"""
Cross-validation of the expectation methods against each other, and the
consistency checks relating a code to its dual, its weight enumerators and
its other generator matrices.
"""
from .codes import LinearCode, random_code, simplex
from .coverage import (ExpectationResult, expectation_chain_oracle, expectation_exact,
                       expectation_from_weights, expectation_refined, expectation_simplex,
                       expectation_via_dual, mds_lower_bound)
from .enumeration import (extended_enumerator, extension_weight_distribution, macwilliams_dual,
                          verify_double_count, weight_distribution)
from .linalg import random_invertible_matrix
from .log import debug, info, warning
from .simulation import SimulationConfig, simulate
from .utility import MAX_CODEWORDS, MAX_CENSUS_LENGTH, AttrDict
from itertools import combinations
import numpy as np


__all__ = ['Check', 'VerificationReport', 'verify_all_methods', 'verify_generator_invariance',
           'verify_duality', 'simplex_optimality_probe']


class Check(object):
    """
    Outcome of one named check.
    """
    def __init__(self, name, passed, detail=''):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        status = 'pass' if self.passed else 'FAIL'
        return f"Check({self.name}: {status})"

    def to_json(self):
        return {'check': self.name, 'passed': self.passed, 'detail': self.detail}


class VerificationReport(object):
    """
    The results of :func:`verify_all_methods`: the value found by every
    method that ran, and a pass/fail :class:`Check` per comparison.
    """
    def __init__(self, code_name):
        self.code_name = code_name
        self.results = {}
        self.skipped = {}
        self.checks = []

    def __repr__(self):
        return f"VerificationReport({self.code_name}, passed={self.passed})"

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def add(self, name, passed, detail=''):
        check = Check(name, passed, detail)
        self.checks.append(check)
        level = debug if check.passed else warning
        level(f"verify: {self.code_name}: {check.name} {'passed' if check.passed else 'FAILED'}"
              + (f" ({detail})" if detail else ''))
        return check

    def to_json(self):
        return {
            'code': self.code_name,
            'passed': self.passed,
            'results': [self.results[method].to_json() for method in self.results],
            'skipped': dict(self.skipped),
            'checks': [check.to_json() for check in self.checks],
        }


def verify_all_methods(C, **kwargs):
    """
    Run every applicable exact method on ``C``, check that they agree
    pairwise as exact rationals and respect the MDS lower bound, then
    check a Monte Carlo estimate against the common value.

    Methods whose guards reject the code are recorded as skipped. A
    method which raises :class:`RuntimeError` fails the report.

    :arg C: a :class:`LinearCode`
    :kwarg closed_form: exact value of a closed form for the code's
        family, if there is one (default None)
    :kwarg trials: number of Monte Carlo trials, zero to skip the
        simulation (default 20000)
    :kwarg seed: Monte Carlo seed (default 0)
    :kwarg properties: also run the dual, enumerator and invariance
        checks (default True)
    """
    report = VerificationReport(C.name)
    methods = {
        'exact': expectation_exact,
        'refined': expectation_refined,
        'dual': expectation_via_dual,
        'weights': expectation_from_weights,
        'chain': expectation_chain_oracle,
    }
    for method, func in methods.items():
        try:
            report.results[method] = ExpectationResult(method, func(C))
        except ValueError as exc:
            report.skipped[method] = str(exc)
            info(f"verify: {C.name}: skipped {method}: {exc}")
        except RuntimeError as exc:
            report.add(f"{method} completes", False, str(exc))
    closed_form = kwargs.get('closed_form')
    if closed_form is not None:
        report.results['closed-form'] = ExpectationResult('closed-form', closed_form)

    # Pairwise agreement
    for a, b in combinations(list(report.results), 2):
        va, vb = report.results[a].value, report.results[b].value
        report.add(f"{a} == {b}", va == vb, f"{va} vs. {vb}")

    # Lower bound
    if report.results and C.k >= 1:
        value = next(iter(report.results.values())).value
        bound = mds_lower_bound(C.n, C.k)
        report.add("MDS lower bound", value >= bound, f"{value} >= {bound}")

    # Monte Carlo
    trials = kwargs.get('trials', 20000)
    if trials and report.results:
        estimate = simulate(C, SimulationConfig(trials, seed=kwargs.get('seed', 0)))
        report.results['mc'] = estimate
        value = float(next(iter(report.results.values())).value)
        deviation = abs(estimate.mean - value)
        report.add("Monte Carlo within 4 standard errors", deviation <= 4*estimate.stderr,
                   f"|{estimate.mean:.6f} - {value:.6f}| vs. 4 x {estimate.stderr:.6f}")

    if kwargs.get('properties', True):
        _property_checks(C, report)
    info(f"verify: {C.name}: {len(report.checks)} checks, {len(report.failures)} failed")
    return report


def _property_checks(C, report):
    if C.num_codewords <= MAX_CODEWORDS and C.dual.num_codewords <= MAX_CODEWORDS:
        W = weight_distribution(C)
        report.add("MacWilliams transform gives the dual distribution",
                   macwilliams_dual(W, C.q, C.k) == weight_distribution(C.dual))
        if C.n <= MAX_CENSUS_LENGTH:
            E = extended_enumerator(C)
            report.add("extended enumerator at U = q gives the distribution",
                       extension_weight_distribution(E, C.q, 1) == W)
    if C.n <= MAX_CENSUS_LENGTH:
        report.add("census duality", verify_duality(C))
        report.add("double count for m <= 3", all(verify_double_count(C, m) for m in range(4)))
        report.add("generator invariance", verify_generator_invariance(C, num_transforms=3))


def verify_duality(C):
    """
    Check :math:`\\beta_\\ell(\\mathcal C, s) = \\beta_{\\ell+s-k}(\\mathcal C^\\perp, n-s)`
    for all ``l`` and ``s``, comparing independently computed primal
    and dual censuses.
    """
    primal = C.census
    dual = C.dual.census
    n, k = C.n, C.k
    for s in range(n + 1):
        for ell in range(k + 1):
            if primal.beta(ell, s) != dual.beta(ell + s - k, n - s):
                debug(f"verify_duality: mismatch at l={ell}, s={s}")
                return False
    return dual == primal.dual_census()


def verify_generator_invariance(C, num_transforms=20, seed=0):
    """
    Check that the census-based expectation is unchanged when the
    generator matrix is replaced by ``A G`` for random invertible ``A``.
    """
    rng = np.random.default_rng(seed)
    value = expectation_exact(C)
    for _ in range(num_transforms):
        A = random_invertible_matrix(C.field, C.k, rng)
        other = LinearCode(A @ C.generator, name=f"{C.name} transformed")
        if expectation_exact(other) != value:
            return False
    return True


def simplex_optimality_probe(q, k, samples=100, seed=0):
    """
    Compare the coverage depth of the simplex code with that of random
    codes of the same length and dimension. Whether the simplex code is
    always optimal is open, so violations are reported, not raised.

    :return: :class:`AttrDict` with the simplex value, the number of
        samples and the violating random codes with their values
    """
    S = simplex(q, k)
    value = expectation_simplex(q, k)
    rng = np.random.default_rng(seed)
    violations = []
    for i in range(samples):
        C = random_code(S.field, k, S.n, seed=int(rng.integers(2**63)))
        other = expectation_exact(C)
        if other < value:
            warning(f"simplex_optimality_probe: random code {i} has expectation {other}"
                    + f" below the simplex value {value}")
            violations.append((C, other))
    info(f"simplex_optimality_probe: {len(violations)} of {samples} random codes beat"
         + f" simplex({q}, {k})")
    return AttrDict(simplex=value, samples=samples, violations=violations)
