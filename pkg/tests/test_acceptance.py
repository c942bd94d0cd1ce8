"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL summary
section at the end of the report.
"""
import time

import numpy as np
import pytest

from avenewton import (Case, Termination, check_solution, elementwise_abs,
                       enumerate_solutions, enumerate_with_uniqueness,
                       generate_instance, gnm_solve, interval_regularity_vertex_test,
                       inverse, neumann_ratio, sign_pattern,
                       singular_case_trichotomy, spectral_norm, spectral_radius)
from avenewton.oracle import upper_minus_ones

criterion = pytest.mark.criterion

ZERO_TOL = 1e-9


def start_with_nonpositive(rng, n):
    x0 = rng.standard_normal(n)
    j = rng.integers(n)
    x0[j] = 0.0 if rng.random() < 0.3 else -abs(x0[j]) - 0.1
    return x0


@pytest.fixture(scope="module")
def rho_third_suite():
    rng = np.random.default_rng(400)
    start = time.perf_counter()
    runs = []
    for seed in range(300):
        n = 1 + seed % 8
        inst = generate_instance("rho_third_random", n, seed)
        oracle = enumerate_solutions(inst.A, inst.b)
        traces = [gnm_solve(inst.A, inst.b, rng.standard_normal(n)) for _ in range(5)]
        runs.append((inst, oracle, traces))
    return runs, time.perf_counter() - start


@pytest.fixture(scope="module")
def bound_suite():
    rng = np.random.default_rng(500)
    runs = []
    for seed in range(200):
        n = 1 + seed % 8
        inst = generate_instance("a1_random", n, seed)
        runs.append((inst, n + 2, gnm_solve(inst.A, inst.b, rng.standard_normal(n))))
    for seed in range(200):
        n = 1 + seed % 8
        inst = generate_instance("a2_random", n, 10_000 + seed, rhs="negative")
        x0 = start_with_nonpositive(rng, n)
        assert not np.all(sign_pattern(x0) == 1)
        runs.append((inst, n + 1, gnm_solve(inst.A, inst.b, x0)))
    return runs


@pytest.fixture(scope="module")
def family_suite():
    rng = np.random.default_rng(600)
    runs = []
    for seed in range(200):
        n = 1 + seed % 8
        inst = generate_instance("a2_random", n, 20_000 + seed, rhs="range")
        oracle = enumerate_solutions(inst.A, inst.b)
        starts = [start_with_nonpositive(rng, n) for _ in range(10)]
        traces = [gnm_solve(inst.A, inst.b, x0) for x0 in starts]
        runs.append((inst, oracle, traces))
    return runs


@criterion(1, "2x2 instance ends by the sign-pattern rule at step 1 with [0, -1]")
def test_zero_component_instance():
    inst = generate_instance("ex32")
    trace = gnm_solve(inst.A, inst.b, inst.x0)
    assert trace.termination is Termination.SOLVED_BY_PATTERN_RULE
    assert trace.iterations_used == 1
    assert trace.solution.tolist() == [0.0, -1.0]
    assert check_solution(inst.A, inst.b, trace.solution) <= 1e-12
    elapsed = []
    for _ in range(7):
        t0 = time.perf_counter()
        gnm_solve(inst.A, inst.b, inst.x0)
        elapsed.append(time.perf_counter() - t0)
    assert min(elapsed) < 1e-3


@criterion(2, "2x2 instance needs exactly 4 iterations to an exact solution")
def test_four_iteration_instance():
    inst = generate_instance("remark43")
    trace = gnm_solve(inst.A, inst.b, inst.x0)
    assert trace.solved
    assert trace.iterations_used == 4
    assert check_solution(inst.A, inst.b, trace.solution) <= 1e-10
    assert all(r > 1e-10 for r in trace.residuals[:4])


@criterion(3, "n = 10 triangular matrix: rho(|A^-1|) = 1 and ||A^-1||_2 > 256")
def test_triangular_norm_gap():
    Ainv = inverse(upper_minus_ones(10))
    assert abs(spectral_radius(elementwise_abs(Ainv)) - 1.0) <= 1e-6
    assert spectral_norm(Ainv) > 2 ** 8


@criterion(4, "rho(|A^-1|) < 1/3: 300 instances x 5 starts converge by pattern rule to oracle solution")
def test_rho_third_suite(rho_third_suite):
    runs, elapsed = rho_third_suite
    assert len(runs) == 300
    for inst, oracle, traces in runs:
        assert len(oracle) == 1 and oracle.complete
        ref = oracle.solutions[0]
        for trace in traces:
            assert trace.termination is Termination.SOLVED_BY_PATTERN_RULE
            assert np.abs(trace.solution - traces[0].solution).max() <= 1e-8
            assert np.abs(trace.solution - ref).max() <= 1e-8
    assert elapsed < 30.0


@criterion(5, "A1 within n+2 and A2 (v'b < 0) within n+1 iterations; patterns grow after step 1")
def test_iteration_bounds(bound_suite):
    assert len(bound_suite) == 400
    for inst, bound, trace in bound_suite:
        assert trace.solved
        assert trace.iterations_used <= bound
        for k in range(1, len(trace.patterns) - 1):
            assert np.all(trace.patterns[k + 1] >= trace.patterns[k])


@criterion(6, "v'b = 0: solutions nonnegative, GNM finds the same zero-component solution within n+1")
def test_zero_component_family(family_suite):
    assert len(family_suite) == 200
    for inst, oracle, traces in family_suite:
        n = inst.A.shape[0]
        assert len(oracle) >= 1
        for x in oracle.solutions:
            assert np.all(x >= -1e-10)
        ref = None
        for trace in traces:
            assert trace.solved
            assert trace.iterations_used <= n + 1
            x = trace.solution
            assert np.any(np.abs(x) <= ZERO_TOL * max(1.0, np.abs(x).max()))
            if ref is None:
                ref = x
            assert np.abs(x - ref).max() <= 1e-8


@criterion(7, "sign of v'b decides none / one / a ray of solutions")
def test_trichotomy():
    for seed in range(100):
        n = 1 + seed % 6
        inst = generate_instance("a2_random", n, 30_000 + seed, rhs="positive")
        assert singular_case_trichotomy(inst.A, inst.b).case is Case.NONE
        sols = enumerate_solutions(inst.A, inst.b)
        assert len(sols) == 0
        assert len(sols.singular_patterns) == 1 and sols.consistent_patterns == []

        inst = generate_instance("a2_random", n, 40_000 + seed, rhs="negative")
        assert singular_case_trichotomy(inst.A, inst.b).case is Case.UNIQUE
        assert len(enumerate_solutions(inst.A, inst.b)) == 1

        inst = generate_instance("a2_random", n, 50_000 + seed, rhs="range")
        verdict = singular_case_trichotomy(inst.A, inst.b)
        assert verdict.case is Case.INFINITELY_MANY
        fam = verdict.family
        for step in (0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0):
            x = fam(fam.alpha_max - step)
            assert check_solution(inst.A, inst.b, x) <= 1e-9
            assert np.all(x >= -1e-10)


@criterion(8, "rho((I-X)^-1 X) = rho(X)/(1-rho(X)) within 1e-8 on 500 matrices")
def test_neumann_identity():
    rng = np.random.default_rng(800)
    checked = 0
    while checked < 500:
        n = int(rng.integers(1, 9))
        X = rng.uniform(0, 1, (n, n)) * (rng.random((n, n)) < rng.uniform(0.3, 1.0))
        r0 = spectral_radius(X)
        if r0 == 0:
            continue
        X *= rng.uniform(0.01, 0.99) / r0
        r = spectral_radius(X)
        assert abs(neumann_ratio(X) - r / (1 - r)) <= 1e-8
        checked += 1


@criterion(9, "vertex regularity test agrees with 50-sample uniqueness on 100 matrices")
def test_regularity_equivalence():
    rng = np.random.default_rng(900)
    disagreements = 0
    regular = 0
    for k in range(100):
        n = int(rng.integers(1, 5))
        A = rng.standard_normal((n, n)) * rng.uniform(0.5, 3.0)
        reg = interval_regularity_vertex_test(A)
        regular += reg
        disagreements += reg != enumerate_with_uniqueness(A, 50, seed=k)
    assert disagreements == 0
    # both outcomes must actually be exercised
    assert 10 <= regular <= 90


@criterion(10, "restart from the solution's nonzero signs returns it after one solve")
def test_one_step_restart(rho_third_suite, bound_suite, family_suite):
    rng = np.random.default_rng(1000)
    solved = []
    for inst, _, traces in rho_third_suite[0] + family_suite:
        solved += [(inst, t.solution) for t in traces if t.solved]
    solved += [(inst, t.solution) for inst, _, t in bound_suite if t.solved]
    assert len(solved) == 300 * 5 + 200 * 10 + 400
    for inst, xs in solved:
        nonzero = np.abs(xs) > ZERO_TOL * max(1.0, np.abs(xs).max())
        x0 = np.where(nonzero, np.sign(xs) * rng.uniform(0.1, 10.0, xs.size), 0.0)
        restart = gnm_solve(inst.A, inst.b, x0)
        assert restart.iterations_used == 1
        assert restart.solved
        assert np.abs(restart.solution - xs).max() <= 1e-8
