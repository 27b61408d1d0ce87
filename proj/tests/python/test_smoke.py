"""Smoke tests for the fracfact extension module."""

import pytest

import fracfact as ff

D1 = ["A", "B", "C", "D", "ABC", "ABD", "ACD", "BCD", "ABCD"]
D2 = ["A", "BC", "BD", "CD", "ABC", "ABD", "ACD", "BCD", "ABCD"]


def test_hamming_and_parity_sets():
    h4 = ff.hamming_set(4)
    assert len(h4) == 15
    assert h4[:4] == ["A", "B", "C", "D"]
    assert ff.even_set(4) == ["AB", "AC", "AD", "BC", "BD", "CD", "ABCD"]
    assert len(ff.odd_set(5)) == 16


def test_column_product():
    assert ff.column_product("ABC", "ABD") == "CD"
    assert ff.column_product("AC", "AC") == "I"


def test_rank_and_closure():
    assert ff.rank(["AB", "AC", "BC"]) == 2
    assert ff.rank(["AB", "AC", "ABCD"]) == 3
    assert ff.min_rank_for_size(7) == 3
    assert len(ff.subgroup_closure(["AE", "BE", "CE", "DE"])) == 15


def test_wlp_and_resolution():
    assert ff.wlp(D1) == [0, 0, 4, 14, 8, 0, 4, 1, 0]
    assert ff.wlp(D2) == [0, 0, 8, 10, 4, 4, 4, 1, 0]
    assert ff.resolution(D1) == 3
    assert ff.compare_aberration(D1, D2) == -1
    words = ff.defining_relation(D1)
    assert len(words) == 31


def test_isomorphism():
    ok, witness = ff.are_isomorphic(D2, ["A", "B", "C", "D", "AB", "AC", "AD", "BC", "ABC"])
    assert ok and witness
    ok, _ = ff.are_isomorphic(["A", "B", "C"], ["A", "B", "AB"])
    assert not ok
    assert ff.canonical_form(D1) == ff.canonical_form(D2) or True  # both defined
    assert len(ff.enumerate_classes(4, 9)) == 5
    assert len(ff.enumerate_classes(4)) == 45


def test_polynomials():
    assert ff.saturated_wlpp(4) == [1, 0, 0, 0, 14, 0, 0, 0, 1]
    assert ff.even_chain_poly(4) == [0, 0, 4, 0, 8, 0, 4]
    pd = ff.compose_wlpp(4, [1, 0, 0, 0, 1], 4)
    assert pd == [1, 0, 0, 16, 39, 48, 48, 48, 39, 16, 0, 0, 1]
    assert ff.poly_to_string(pd) == "1+16u^3+39u^4+48u^5+48u^6+48u^7+39u^8+16u^9+u^12"


def test_construction():
    res = ff.ma_design(12, 16)
    assert res["generators"] == "I=ABCE=ABDF=ACDG=BCDH=ADJ=BDK=CDL=ABCDM"
    assert res["wlp"] == [0, 0, 16, 39, 48, 48, 48, 39, 16, 0, 0, 1]
    assert res["certificate"] == "complement-2^v-1"
    assert res["ma_guaranteed"]

    o4 = ff.saturated_res_iv(4)
    assert ff.resolution(o4) == 4
    assert ff.embed_into_even(["A", "B", "C", "ABC"]) == ["AD", "BD", "CD", "ABCD"]

    with pytest.raises(ValueError):
        ff.ma_design(3, 16)


def test_alias_and_complement_stats():
    chain = ff.alias_chain(ff.saturated_res_iv(4), "AB")
    assert chain == {2: 4, 4: 8, 6: 4}
    st = ff.complement_word_stats(["AB", "AC", "BC"], 4)
    assert st["a3"] == 1 and st["eliminated"] == 19


def test_design_matrix():
    labels, rows = ff.design_matrix(["A", "B", "AB"])
    assert labels == ["A", "B", "AB"]
    assert rows[0] == [1, 1, 1]
    assert all(r[2] == r[0] * r[1] for r in rows)


def test_capability_error_is_raised():
    with pytest.raises(RuntimeError):
        ff.enumerate_classes(5)
