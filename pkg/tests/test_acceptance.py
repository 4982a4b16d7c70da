"""Acceptance gate: every criterion at its stated size and tolerance.

Each test prints one PASS/FAIL line (visible with ``pytest -s`` and in the
summary written by ``print_acceptance_summary``).
"""
import pytest

from galrange import verify

CRITERIA = [
    ("classifier_matches_brute_force", verify.check_classifier_oracle),
    ("isotropic_eigenvector_excludes_eigenvalue", verify.check_isotropic_defective),
    ("isotropic_eigenbasis_gives_trace_line", verify.check_trace_line),
    ("direct_sums_match_brute_force", verify.check_direct_sums),
    ("codimension_one_eigenspace_cases", verify.check_corank1),
    ("norm_decisions", verify.check_norm_decisions),
    ("circle_parametrization", verify.check_circles),
    ("distinct_value_witness", verify.check_singleton_witness),
    ("k_numerical_range", verify.check_krange),
    ("range_properties", verify.check_properties),
    ("infinitude_surrogates", verify.check_infinite_surrogates),
    ("char2_range_size_surrogate", verify.check_char2_range_sizes),
]

RESULTS = {}


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    result = check()
    RESULTS[name] = result
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()


def test_zz_acceptance_summary(capsys):
    with capsys.disabled():
        print("\nacceptance summary")
        for name, _ in CRITERIA:
            r = RESULTS.get(name)
            print(r.line() if r else f"SKIP {name}: not run")
