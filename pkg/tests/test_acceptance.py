"""Acceptance gate: ten numbered criteria, one test (and one verdict line) each.

Every criterion delegates to the matching verification suite in
monokernels.verify, so the CLI `verify` command and this gate run the same
checks.  Each suite returns named (value, bound) pairs; a criterion passes
when every check satisfies value <= bound.  Suites are cached per test run,
so each one executes exactly once here.

Criterion map:
   1 closed-form vs integral-route strip kernel agreement, with time budget
   2 kernel anchor values at the origin against exact constants
   3 radial-route evaluation vs brute-force tensor-grid oracle
   4 frequency-projector identities and para-vector-valued kernel outputs
   5 discrete Dirac residual shrinks like h^2 under step halving
   6 reproducing property on frozen 8-atom configurations, with refinement
   7 spatial decay slopes of ball sinc, Bergman off-diagonal, cube sinc
   8 scaled Bergman diagonal stays inside regression-locked bands
   9 Hardy split identities on random grids (recombination through norms)
  10 fitted growth rate of the band-limited extension along the height axis
"""

import pytest

from monokernels.verify import run_suite

_RESULTS = {}


def suite(name):
    if name not in _RESULTS:
        _RESULTS[name] = run_suite(name)
    return _RESULTS[name]


def assert_suite_passed(criterion, result):
    status = "PASS" if result.passed else "FAIL"
    print(
        f"{status} criterion {criterion}: suite {result.suite} "
        f"({len(result.checks)} checks, {result.elapsed_seconds:.1f} s)"
    )
    failing = [c for c in result.checks if not c.passed]
    detail = "; ".join(f"{c.name}: value {c.value:g} vs bound {c.bound:g}" for c in failing)
    assert result.passed, f"criterion {criterion} failed: {detail}"


def test_criterion_01_szego_closed_vs_integral():
    result = suite("szego-consistency")
    assert_suite_passed(1, result)
    assert result.elapsed_seconds <= 30.0, (
        f"criterion 1 time budget exceeded: {result.elapsed_seconds:.1f} s > 30 s"
    )


def test_criterion_02_kernel_anchor_values():
    assert_suite_passed(2, suite("kernel-anchors"))


def test_criterion_03_radial_route_vs_tensor_oracle():
    assert_suite_passed(3, suite("radial-quadrature"))


def test_criterion_04_projections_and_paravector_outputs():
    assert_suite_passed(4, suite("projections"))


def test_criterion_05_dirac_residual_second_order():
    assert_suite_passed(5, suite("dirac-residual"))


def test_criterion_06_reproducing_property():
    assert_suite_passed(6, suite("reproducing"))


def test_criterion_07_decay_slopes():
    assert_suite_passed(7, suite("decay-rates"))


def test_criterion_08_bergman_diagonal_bands():
    assert_suite_passed(8, suite("bergman-diagonal"))


def test_criterion_09_hardy_decomposition():
    assert_suite_passed(9, suite("hardy-suite"))


def test_criterion_10_paley_wiener_growth_rate():
    assert_suite_passed(10, suite("pw-growth"))


def test_total_acceptance_runtime():
    elapsed = sum(result.elapsed_seconds for result in _RESULTS.values())
    print(f"acceptance suites total: {elapsed:.1f} s")
    assert elapsed <= 300.0, f"acceptance suites took {elapsed:.1f} s, budget is 300 s"
