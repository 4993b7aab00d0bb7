import json

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ucycles_by_sequence_search
from ucycle import counting, digraph
from ucycle.counting import (
    CountReport,
    TourBudget,
    all_cofactors,
    count_bruteforce,
    count_closed_form,
    count_matrix_tree,
    count_report,
    enumerate_all,
    generate_cycle,
)
from ucycle.errors import BudgetExceeded, ParameterError
from ucycle.perm import canonical_rotation, is_universal_cycle

# n^(n-2) [(n-2)!]^n, evaluated by hand for n = 3..8
THEOREM1 = {
    3: 3,
    4: 256,
    5: 972000,
    6: 247669456896,
    7: 6022251970560000000,
    8: 18932148110851728998400000000,
}
# 2^6 3^4 4^4 5^3 (2!)^20
P53 = 173946175488000


def test_closed_form_examples():
    assert count_closed_form(4, 2) == 4**2 * 2**4 == 256
    assert count_closed_form(4, 3) == 1 * 2**3 * 3 * 4**2 == 384
    assert count_closed_form(3, 1) == 2
    assert count_closed_form(5, 3) == P53
    for n, v in THEOREM1.items():
        assert count_closed_form(n, 2) == v


@pytest.mark.parametrize("n, k", [(1, 1), (2, 2), (3, 3), (5, 4), (6, 5)])
def test_closed_form_rejects(n, k):
    with pytest.raises(ParameterError):
        count_closed_form(n, k)


def test_matrix_tree_examples():
    assert counting.laplacian_cofactor(digraph.laplacian_matrix(digraph.build(4, 2))) == 16
    assert count_matrix_tree(4, 2) == 256
    assert count_matrix_tree(4, 3) == 384
    assert count_matrix_tree(5, 3) == P53


def test_matrix_tree_errors():
    with pytest.raises(ParameterError, match="closed form"):
        count_matrix_tree(5, 1)
    with pytest.raises(ParameterError):
        count_matrix_tree(4, 4)
    with pytest.raises(BudgetExceeded, match=r"\|V\| = 20"):
        count_matrix_tree(5, 3, max_vertices=10)


@pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (5, 2), (4, 3), (5, 3), (5, 4)])
def test_cofactors_independent_of_deleted_index(n, k):
    cofs = all_cofactors(n, k)
    assert len(set(cofs)) == 1


@pytest.mark.parametrize("n, k, want", [(3, 2, 3), (4, 2, 256), (4, 3, 384), (3, 1, 2), (5, 1, 24)])
def test_bruteforce_examples(n, k, want):
    assert count_bruteforce(n, k) == want


def test_bruteforce_matches_sequence_oracle():
    for n, k in [(3, 2), (4, 2), (4, 3), (4, 1)]:
        assert count_bruteforce(n, k) == len(ucycles_by_sequence_search(n, k))


def test_bruteforce_budget_errors():
    with pytest.raises(BudgetExceeded) as info:
        count_bruteforce(5, 3)
    assert info.value.lower_bound == 0
    with pytest.raises(BudgetExceeded) as info:
        count_bruteforce(4, 2, TourBudget(max_count=100))
    assert info.value.lower_bound == 101


def test_bruteforce_parallel_split_equals_sequential():
    assert count_bruteforce(4, 3, workers=2) == count_bruteforce(4, 3) == 384
    with pytest.raises(BudgetExceeded):
        count_bruteforce(4, 2, TourBudget(max_count=50), workers=2)


def test_budget_must_be_positive():
    with pytest.raises(ParameterError):
        TourBudget(max_arcs=0)


@pytest.mark.parametrize("n, k", [(3, 2), (4, 2), (4, 3), (3, 1), (4, 1)])
def test_enumerate_all_equals_sequence_oracle(n, k):
    got = list(enumerate_all(n, k))
    assert got == sorted(ucycles_by_sequence_search(n, k))
    assert len(set(got)) == len(got) == count_bruteforce(n, k)
    for c in got:
        assert c == canonical_rotation(c)
        assert is_universal_cycle(c, n, k)


def test_enumerate_small_examples(paper_cycle):
    assert list(enumerate_all(3, 1)) == [(1, 2, 3), (1, 3, 2)]
    assert len(list(enumerate_all(3, 2))) == 3
    assert canonical_rotation(paper_cycle) in set(enumerate_all(4, 2))


def test_enumerate_truncation_after_prefix():
    out = []
    with pytest.raises(BudgetExceeded) as info:
        for c in enumerate_all(4, 2, TourBudget(max_count=10)):
            out.append(c)
    assert len(out) == 10 and info.value.lower_bound == 10
    assert out == list(enumerate_all(4, 2))[:10]


def test_generate_examples():
    assert generate_cycle(2, 1) == (1, 2)
    c = generate_cycle(4, 2)
    assert len(c) == 12 and is_universal_cycle(c, 4, 2)
    assert is_universal_cycle(generate_cycle(4, 3, seed=3), 4, 3)
    assert generate_cycle(5, 3, seed=11) == generate_cycle(5, 3, seed=11)
    with pytest.raises(ParameterError):
        generate_cycle(4, 4)


def test_generate_reaches_paper_cycle(paper_cycle):
    want = canonical_rotation(paper_cycle)
    assert any(generate_cycle(4, 2, seed=s) == want for s in range(3000))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(n, k) for n in range(2, 7) for k in range(1, n)]), st.integers(0, 2**32))
def test_generate_always_valid(nk, seed):
    n, k = nk
    assert is_universal_cycle(generate_cycle(n, k, seed), n, k)


def test_report_all_small():
    r = count_report(4, 2)
    assert (r.closed_form, r.matrix_tree, r.brute_force) == (256, 256, 256)
    assert r.agree and all(r.pairs.values()) and len(r.pairs) == 3


def test_report_skips_bruteforce_over_budget():
    r = count_report(5, 3)
    assert r.brute_force is None and r.closed_form == r.matrix_tree == P53 and r.agree
    # 30 arcs fit max_arcs but the known count is over max_count: skipped up front
    r = count_report(6, 2)
    assert r.brute_force is None and r.agree


def test_report_k1_and_k4():
    r = count_report(4, 1)
    assert r.matrix_tree is None and r.closed_form == r.brute_force == 6
    r = count_report(5, 4, budget=TourBudget(max_arcs=10))
    assert r.closed_form is None and r.brute_force is None and r.matrix_tree > 0


def test_report_disagreement_flagged():
    r = CountReport(4, 2, 256, 256, 255)
    assert not r.agree
    assert r.pairs == {"closed_form=matrix_tree": True, "closed_form=brute_force": False,
                       "matrix_tree=brute_force": False}


def test_report_json_decimal_strings():
    data = json.loads(json.dumps(count_report(5, 3, method="closed").to_json()))
    assert data["closed_form"] == "173946175488000"
    assert data["matrix_tree"] is None and data["brute_force"] is None
    assert set(data) == {"n", "k", "closed_form", "matrix_tree", "brute_force", "agree", "pairs"}


def test_report_rejects_bad_method():
    with pytest.raises(ParameterError):
        count_report(4, 2, method="magic")
