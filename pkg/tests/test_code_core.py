"""Core code operators: rank/entropy, closure, restriction, shortening,
puncturing, exact distance, and the polymatroid/closure laws."""

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrckit import (
    CodeFormatError,
    closure,
    entropy,
    linear_code,
    load_code,
    min_distance,
    min_weight_codeword,
    puncture,
    restrict,
    save_code,
    shorten,
)
from lrckit.code_core import code_rref
from lrckit.residual import res_chain, residual

from conftest import random_code, random_subset


def test_rref_identity_fixed_point():
    code = linear_code(2, np.eye(4, dtype=int))
    R, rank = code_rref(code)
    assert rank == 4
    assert np.array_equal(R, np.eye(4, dtype=int))


def test_rref_zero_row_does_not_change_rank():
    with pytest.warns(UserWarning):
        code = linear_code(2, [[1, 0, 1], [0, 1, 1], [0, 0, 0]])
    assert code.k == 2


def test_rref_example_generator_rank(ex1):
    _, rank = code_rref(ex1.code)
    assert rank == 4


def test_entropy_empty_and_full(ex1):
    assert entropy(ex1.code, frozenset()) == 0
    assert entropy(ex1.code, range(10)) == 4


def test_entropy_repair_set(ex1):
    assert entropy(ex1.code, {0, 1, 2, 4, 5, 7}) == 3


def test_entropy_out_of_range(ex1):
    with pytest.raises(ValueError):
        entropy(ex1.code, {10})


def test_closure_empty_is_zero_columns():
    code = linear_code(2, [[1, 0, 0], [0, 1, 0]])  # third column is zero
    assert closure(code, frozenset()) == frozenset({2})


def test_closure_full(ex1):
    assert closure(ex1.code, range(10)) == frozenset(range(10))


def test_closure_equal_columns(ex3):
    assert closure(ex3.code, {0}) == frozenset({0, 1, 2, 3})


def test_restrict_full_is_same_code(ex1):
    sub = restrict(ex1.code, range(10))
    assert (sub.n, sub.k) == (10, 4)
    assert min_distance(sub) == min_distance(ex1.code)


def test_restrict_repair_set(ex1):
    sub = restrict(ex1.code, {0, 1, 2, 4, 5, 7})
    assert (sub.n, sub.k, min_distance(sub)) == (6, 3, 3)


def test_restrict_empty_raises(ex1):
    with pytest.raises(ValueError):
        restrict(ex1.code, frozenset())


def test_restrict_zero_dimensional_flagged(ex3):
    # columns 4..9 of example 3 span nothing of row 1's block; a single zero
    # column restriction is the cleanest degenerate case
    code = linear_code(2, [[1, 0], [0, 0]][:1])
    sub = restrict(code, {1})
    assert sub.is_zero_dimensional
    with pytest.raises(ValueError):
        min_distance(sub)


def test_restrict_simplex_chain_set(simplex32):
    """Entropy-2 chain set of S(3,2) restricts to a [3,2,2] code whose three
    columns are distinct and nonzero."""
    chain = res_chain(simplex32)
    level = chain.level_with_entropy(2)
    sub = restrict(simplex32, level.coords)
    assert (sub.n, sub.k, min_distance(sub)) == (3, 2, 2)
    cols = {tuple(int(v) for v in sub.gen[:, j]) for j in range(3)}
    assert len(cols) == 3 and all(any(c) for c in cols)


def test_shorten_empty_is_identity(ex1):
    assert shorten(ex1.code, frozenset()) is ex1.code


def test_shorten_hamming(hamming74):
    sub = shorten(hamming74, {0})
    assert (sub.n, sub.k) == (6, 3)
    assert min_distance(sub) >= 3


def test_shorten_dimension_drop_matches_entropy():
    rng = np.random.RandomState(11)
    for _ in range(100):
        code = random_code(rng, 2, n_max=10, k_max=4)
        I = random_subset(rng, code.n)
        if len(I) == code.n:
            continue
        h = entropy(code, I)
        sub = shorten(code, I)
        assert sub.k == code.k - h


def test_shorten_distance_never_drops():
    rng = np.random.RandomState(13)
    for _ in range(60):
        code = random_code(rng, 3, n_max=9, k_max=4)
        I = random_subset(rng, code.n)
        if len(I) == code.n:
            continue
        sub = shorten(code, I)
        if sub.k >= 1:
            assert min_distance(sub) >= min_distance(code)


def test_puncture_empty_is_identity(ex2):
    assert puncture(ex2.code, frozenset()) is ex2.code


def test_puncture_simplex_last(simplex32):
    sub = puncture(simplex32, {6})
    assert (sub.n, sub.k, min_distance(sub)) == (6, 3, 3)


def test_puncture_min_weight_support_equals_residual(simplex32):
    """Puncturing on a minimum-weight support is exactly the residual step:
    same coordinates, same row space (canonical generators agree)."""
    _, _, support = min_weight_codeword(simplex32)
    punctured = puncture(simplex32, support)
    kept, res = residual(simplex32)
    assert kept == frozenset(range(7)) - support
    assert np.array_equal(punctured.gen, res.gen)


def test_min_distance_repetition():
    code = linear_code(3, [[1] * 9])
    assert min_distance(code) == 9


def test_min_distance_example(ex1):
    assert min_distance(ex1.code) == 4


def test_min_distance_cap():
    code = linear_code(2, np.eye(10, dtype=int))
    with pytest.raises(ValueError) as exc:
        min_distance(code, max_words=512)
    assert "max_words" in str(exc.value)


def test_min_weight_codeword_deterministic(simplex32):
    w, digits, support = min_weight_codeword(simplex32)
    assert w == 4 and len(support) == 4
    # lexicographically smallest message achieving weight 4 is (0, 0, 1)
    assert digits == (0, 0, 1)


# --- polymatroid and closure laws ---

def _codes():
    rng = np.random.RandomState(101)
    return [random_code(rng, q, n_max=10, k_max=4) for q in (2, 2, 3, 4)]


@pytest.mark.parametrize("code", _codes())
def test_polymatroid_axioms(code):
    rng = np.random.RandomState(23)
    for _ in range(50):
        I = random_subset(rng, code.n)
        J = random_subset(rng, code.n)
        hi, hj = entropy(code, I), entropy(code, J)
        assert hi <= len(I)
        if I <= J:
            assert hi <= hj
        assert entropy(code, I | J) + entropy(code, I & J) <= hi + hj


@pytest.mark.parametrize("code", _codes())
def test_closure_laws(code):
    rng = np.random.RandomState(29)
    for _ in range(25):
        I = random_subset(rng, code.n)
        cl = closure(code, I)
        assert I <= cl
        assert closure(code, cl) == cl
        assert entropy(code, cl) == entropy(code, I)
        J = I | random_subset(rng, code.n)
        assert cl <= closure(code, J)


def test_restriction_consistency(ex1):
    """Entropy inside a restriction equals entropy in the ambient code."""
    I = sorted({0, 1, 2, 4, 5, 7})
    sub = restrict(ex1.code, I)
    rng = np.random.RandomState(31)
    for _ in range(20):
        J_rel = random_subset(rng, sub.n)
        J_amb = frozenset(I[j] for j in J_rel)
        assert entropy(sub, J_rel) == entropy(ex1.code, J_amb)


def test_closure_restriction_distance():
    rng = np.random.RandomState(37)
    for _ in range(40):
        code = random_code(rng, 2, n_max=10, k_max=4)
        R = random_subset(rng, code.n)
        if not R:
            continue
        sub = restrict(code, R)
        if sub.k == 0:
            continue
        cl = closure(code, R)
        assert min_distance(restrict(code, cl)) >= min_distance(sub)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 3), st.data())
def test_entropy_never_exceeds_dimension(q, data):
    rows = data.draw(st.lists(
        st.lists(st.integers(0, q - 1), min_size=6, max_size=6),
        min_size=1, max_size=4,
    ))
    if not any(any(r) for r in rows):
        return
    import warnings as w
    with w.catch_warnings():
        w.simplefilter("ignore")
        code = linear_code(q, rows)
    if code.k == 0:
        return
    I = data.draw(st.sets(st.integers(0, 5), max_size=6))
    assert 0 <= entropy(code, I) <= min(len(I), code.k)


# --- JSON round trip ---

def test_json_round_trip(tmp_path, ex1):
    path = tmp_path / "code.json"
    save_code(ex1.code, path, repair_sets=ex1.repair_sets)
    code, sets = load_code(path)
    assert (code.n, code.k, code.q) == (10, 4, 2)
    assert np.array_equal(code.gen, ex1.code.gen)
    assert sets == ex1.repair_sets


def test_json_missing_field(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"q": 2, "k": 1, "generator": [[1]]}))
    with pytest.raises(CodeFormatError) as exc:
        load_code(path)
    assert "'n'" in str(exc.value)


def test_json_bad_entry(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"q": 2, "k": 1, "n": 2, "generator": [[1, 3]]}))
    with pytest.raises(CodeFormatError) as exc:
        load_code(path)
    assert "row 1, column 2" in str(exc.value)


def test_json_invalid_syntax(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(CodeFormatError) as exc:
        load_code(path)
    assert "line" in str(exc.value)


def test_json_rank_deficient_warns(tmp_path):
    path = tmp_path / "rankdef.json"
    path.write_text(json.dumps({
        "q": 2, "k": 2, "n": 3,
        "generator": [[1, 0, 1], [1, 0, 1]],
    }))
    with pytest.warns(UserWarning):
        code, _ = load_code(path)
    assert code.k == 1
