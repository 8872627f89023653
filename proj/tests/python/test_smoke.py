from fractions import Fraction

import pytest

import ucf


def test_figure1_cells():
    table = ucf.figure1(jobs=2)
    row4 = [table[(4, c)]["bound"] for c in range(4)]
    row5 = [table[(5, c)]["bound"] for c in range(4)]
    assert row4 == [81, 81, 114, None]
    assert table[(4, 3)]["status"] == "infeasible"
    assert row5 == [Fraction(237, 2), Fraction(231, 2), 122, 114]
    assert all(cell["certified"] for cell in table.values())


def test_single_programs():
    assert ucf.solve_case(4)["bound"] == 45
    assert ucf.solve_case(5)["bound"] == Fraction(141, 2)
    assert ucf.solve_case(5, aux_bc=True)["bound"] == 129
    assert ucf.min_objective(4, {"q{a}": 1}) == 8
    assert ucf.min_objective(5, {f"q{{{r}}}": 1 for r in "abcde"}) >= 40
    with pytest.raises(ValueError):
        ucf.solve_case(4, covered=4)


def test_constants():
    assert [ucf.largeway_constant(4, 2), ucf.largeway_constant(5, 3)] == [12, 27]
    assert ucf.middleway_rhs(5) == [23, 18, 8]
    assert sorted(ucf.smallway_targets(4, "b")) == sorted(["q{a}", "q{ac}", "q{ad}", "q{acd}"])


def test_lp_text():
    out = ucf.solve_lp_text("ratlp 1\nsense minimize\nvar x 0 inf\nobjective 1 x\nrow r 1 x >= 3/2\n")
    assert "status optimal" in out
    assert "value 3/2" in out


def test_families():
    sets = [[], [1], [1, 2]]
    assert ucf.is_union_closed(2, sets)
    assert ucf.kth_frequency(2, sets, 2) == (2, 1, Fraction(1, 3))
    assert ucf.element_frequencies(2, sets) == {1: 2, 2: 1}
    assert ucf.minimal_covers(3, [[1, 2], [2, 3]]) == [[2], [1, 3]]
    assert ucf.union_closure(2, [[1], [2]]) == [[1], [2], [1, 2]]
    fixture = ucf.union_closure(5, [[2, 5], [3], [4], [1]])
    assert ucf.covered_set(5, fixture, [2, 3, 4], 5) == [2]
    assert [2, 3, 4] in ucf.minimal_two_good_sets(5, fixture)
    assert ucf.spot_check_lemmas(5, fixture, [2, 3, 4])["passed"]
    assert ucf.trace_counts(2, sets, [2]) == [([], 2), ([2], 1)]
    with pytest.raises(ValueError):
        ucf.is_union_closed(2, [[1], [1]])


def test_verifiers():
    r = ucf.verify_nagel_k2(3)
    assert r["families_checked"] == 90
    assert r["min_f2"] == "1/3"
    assert r["passed"]
    assert ucf.verify_cover_theorem(3)["passed"]
    corpus = ucf.verify_lemma_corpus(50, seed=3)
    assert corpus["instances"] == 50
    assert corpus["passed"]
