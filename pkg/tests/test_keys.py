import itertools

import pytest

from symplactic import (
    Coweight,
    EMPTY_KEY,
    ReadableKey,
    compute_T,
    coweight_of_shape,
    highest_ls_key,
    is_admissible_word,
    is_ls_block,
    n_statistic,
    pair_block,
    parse_word,
    render_key,
    shape_of_key,
    single_block,
    word_of_key,
    zero_block,
)
from symplactic.keys import (
    block_from_admissible_word,
    classify_pair,
    is_readable_key,
    key_coweight,
    key_from_json_obj,
    key_to_json_obj,
    ls_witness,
    rows_weakly_increasing,
    validate_key,
    zero_block_size,
)

from helpers import all_columns


LS22 = pair_block((2, -1), (1, -2), 2)  # right (2, 1bar), left (1, 2bar)


def test_compute_T_examples():
    assert compute_T((), (), (2,), 2) == (1,)
    assert compute_T((), (), (1,), 2) is None
    assert compute_T((2,), (), (3,), 4) == (1,)
    with pytest.raises(ValueError):
        compute_T((1,), (), (1,), 3)


def test_compute_T_respects_rank_bound():
    # 2k + r + s exceeds the rank: no block can exist
    assert compute_T((1,), (3,), (2,), 3) is None


def test_ls_block_examples():
    assert LS22.kind == "ls"
    assert ls_witness((2, -1), (1, -2), 2) == ((), (), (2,), (1,))
    assert classify_pair((-2, -1), (1, 2), 2) is None
    assert classify_pair((1, 2), (-2, -1), 2) == ("zero", 2)
    assert is_ls_block(single_block(-2, 2), 2)


def test_pair_block_validation():
    with pytest.raises(ValueError):
        pair_block((1, 2), (1,), 2)  # unequal heights
    with pytest.raises(ValueError):
        pair_block((2, 1), (1, 2), 2)  # not increasing
    assert pair_block((-2, -1), (1, 2), 2).kind == "pair"  # valid but unreadable


def test_admissibility_examples():
    assert n_statistic(parse_word("2 -2"), 1) == 0
    assert n_statistic(parse_word("2 -2"), 2) == 2
    assert is_admissible_word(parse_word("2 -2"), 2)
    assert n_statistic(parse_word("1 2 -2 -1"), 1) == 2
    assert not is_admissible_word(parse_word("1 2 -2 -1"), 2)
    assert is_admissible_word((), 2)
    with pytest.raises(ValueError):
        is_admissible_word(parse_word("2 1"), 2)
    with pytest.raises(ValueError):
        is_admissible_word(parse_word("-1 1"), 2)


def test_word_of_key_examples():
    key = ReadableKey((single_block(1, 2), LS22))
    assert word_of_key(key) == parse_word("1 2 -2")
    key = ReadableKey((single_block(-1, 2), pair_block((1, 2), (1, 2), 2)))
    assert word_of_key(key) == parse_word("-1 1 2")
    assert word_of_key(ReadableKey((zero_block(2, 2),))) == parse_word("1 2 -2 -1")


def test_coweight_of_shape_examples():
    assert coweight_of_shape((2, 2), 2) == Coweight.integral((1, 1))
    assert coweight_of_shape((1,), 2) == Coweight.integral((1, 0))
    assert coweight_of_shape((1, 2, 2), 2) == Coweight.integral((2, 1))
    with pytest.raises(ValueError):
        coweight_of_shape((2,), 2)
    with pytest.raises(ValueError):
        coweight_of_shape((2, 3), 3)


def test_highest_ls_key_examples():
    k2 = highest_ls_key(Coweight.integral((1, 1)), 2)
    assert [(b.kind, b.columns) for b in k2.blocks] == [("ls", ((1, 2), (1, 2)))]
    k1 = highest_ls_key(Coweight.integral((1, 0)), 2)
    assert [(b.kind, b.columns) for b in k1.blocks] == [("single", ((1,),))]
    k12 = highest_ls_key(Coweight.integral((2, 1)), 2)
    assert word_of_key(k12) == parse_word("1 1 2")
    assert shape_of_key(k12) == (1, 2, 2)
    with pytest.raises(ValueError):
        highest_ls_key(Coweight.integral((0, 1)), 2)
    with pytest.raises(ValueError):
        highest_ls_key(Coweight((1, 0)), 2)  # half-integral


def test_key_coweight_matches_shape():
    key = ReadableKey((single_block(-1, 2), pair_block((1, 2), (1, 2), 2)))
    assert key_coweight(key, 2) == coweight_of_shape(shape_of_key(key), 2)


def _ls_or_zero_via_word(right, left, n):
    """Independent route: classify through word reading, the N-statistic
    criterion, and reconstruction of the unique block with that word."""
    if zero_block_size(right, left, n) is not None:
        return "zero"
    word = tuple(x for x in right if x > 0) + tuple(x for x in left if x < 0)
    try:
        ok = is_admissible_word(word, n)
    except ValueError:
        return None
    if not ok:
        return None
    rebuilt = block_from_admissible_word(word, n)
    if rebuilt is not None and rebuilt.columns == (tuple(right), tuple(left)):
        return "ls"
    return None


def test_ls_classification_matches_word_criterion():
    # Exhaustive cross-check of the structural decomposition against the
    # N-statistic route on all equal-height column pairs.
    for n in (1, 2, 3):
        for height in range(1, 2 * n + 1):
            for right in all_columns(n, height):
                for left in all_columns(n, height):
                    verdict = classify_pair(right, left, n)
                    structural = verdict[0] if verdict else None
                    by_word = _ls_or_zero_via_word(right, left, n)
                    assert structural == by_word, (n, right, left)
                    # LS implies an admissible word outright
                    if structural == "ls":
                        word = tuple(x for x in right if x > 0) + tuple(
                            x for x in left if x < 0
                        )
                        assert is_admissible_word(word, n)


def test_ls_and_zero_are_disjoint():
    for n in (2, 3):
        for height in range(1, n + 1):
            for right in all_columns(n, height):
                for left in all_columns(n, height):
                    assert not (
                        ls_witness(right, left, n) is not None
                        and zero_block_size(right, left, n) is not None
                    )


def test_block_census_rank_two_height_two():
    ls, zero = [], []
    for right in all_columns(2, 2):
        for left in all_columns(2, 2):
            verdict = classify_pair(right, left, 2)
            if verdict is None:
                continue
            (ls if verdict[0] == "ls" else zero).append((right, left))
    assert len(ls) == 5
    assert len(zero) == 1


def test_key_json_round_trip():
    key = ReadableKey((single_block(1, 2), LS22, zero_block(2, 2)))
    obj = key_to_json_obj(key)
    assert obj["blocks"][0] == {"kind": "single", "columns": [[1]]}
    assert key_from_json_obj(obj, 2) == key
    assert key_from_json_obj(key_to_json_obj(EMPTY_KEY), 2) == EMPTY_KEY
    with pytest.raises(ValueError):
        key_from_json_obj({"blocks": [{"kind": "pair", "columns": [[1]]}]}, 2)


def test_validate_key_rejects_mislabels():
    bad = ReadableKey((type(LS22)("zero", LS22.columns),))
    with pytest.raises(ValueError):
        validate_key(bad, 2)
    assert is_readable_key(ReadableKey((LS22,)))
    assert not is_readable_key(ReadableKey((pair_block((-2, -1), (1, 2), 2),)))


def test_render_and_row_diagnostic():
    key1 = ReadableKey((single_block(-1, 2), pair_block((1, 2), (1, 2), 2)))
    key2 = ReadableKey((LS22, single_block(2, 2)))
    # display order: traversal-first block goes rightmost, left column first
    assert render_key(key2).splitlines()[0].split() == ["2", "1", "2"]
    assert rows_weakly_increasing(key1, 2)
    assert not rows_weakly_increasing(key2, 2)
    assert render_key(EMPTY_KEY) == "(empty key)"


def test_all_single_boxes_are_ls():
    for n in (2, 3):
        for x in itertools.chain(range(1, n + 1), range(-n, 0)):
            assert is_ls_block(single_block(x, n), n)
