import pytest
from hypothesis import given, settings, strategies as st

from vermahowe.braid import (
    BraidWord,
    Partition,
    apply_word,
    braid_relations_report,
    colored_read,
    equivariance_report,
    finest_partition,
    handlebody_colors,
    handlebody_partition,
    inverse_report,
    parse_colors,
    parse_word,
    purity,
    read_colors,
    rmatrix_step,
    yang_baxter_report,
)
from vermahowe.errors import ParseError
from vermahowe.scalar import SpecializedQuantum, Specialization, GeneratorSet, SymbolicQuantum
from vermahowe.verma import tensor_basis

Q2, Q3 = SymbolicQuantum(2), SymbolicQuantum(3)


def test_parse_examples():
    assert parse_word("s1 s2^-1", 3).letters == (1, -2)
    w = parse_word("-1 1", 2)
    assert w.letters == (-1, 1) and w.permutation() == (0, 1)
    assert parse_word("", 4).letters == ()


@pytest.mark.parametrize("text,pos", [("s3", 0), ("s1 s3", 3), ("s1 t2", 3), ("s1 s2^2", 3), ("0", 0)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_word(text, 3)
    assert exc.value.position == pos


@settings(max_examples=80)
@given(st.integers(2, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n - 1).flatmap(
        lambda i: st.sampled_from([i, -i])), max_size=12))))
def test_word_round_trip_and_inverse(data):
    n, letters = data
    w = BraidWord(n, tuple(letters))
    assert parse_word(str(w), n) == w
    assert (w * w.inverse()).permutation() == tuple(range(n))
    assert purity(w * w.inverse(), Partition.finest(n))
    assert purity(w, finest_partition(w))


def test_purity_examples():
    sq = BraidWord(2, (1, 1))
    assert purity(sq, Partition.parse("{[1],[2]}"))
    s = BraidWord(2, (1,))
    assert not purity(s, Partition.finest(2))
    assert purity(s, Partition.full(2))
    assert finest_partition(parse_word("s1 s2", 3)) == Partition.full(3)
    assert finest_partition(parse_word("s1 s1 s2", 3)) == Partition.parse("[1][2,3]")


def test_partition_text():
    p = Partition.parse("[3,1][2]")
    assert str(p) == "[1,3][2]"
    assert p.colors() == (1, 2, 1)
    assert Partition.parse("{[1], [2,3]}") == Partition.from_colors((5, 7, 7))
    for bad in ["[1][1]", "[1,2", "[0][1]", "[1][3]"]:
        with pytest.raises(ParseError):
            Partition.parse(bad)


def test_handlebody_preset():
    assert handlebody_colors(2, 3) == (1, 2, 3, 3, 3)
    assert str(handlebody_partition(2, 3)) == "[1][2][3,4,5]"
    w = parse_word("s3 s4 s3", 5)
    assert purity(w, handlebody_partition(2, 3))
    assert not purity(parse_word("s2", 5), handlebody_partition(2, 3))


def test_color_files():
    assert read_colors(["1", "", "# core", "2", "2  # tail"]) == (1, 2, 2)
    assert parse_colors("1, 1 2") == (1, 1, 2)
    with pytest.raises(ParseError):
        read_colors(["1", "x"])
    with pytest.raises(ParseError):
        read_colors(["0"])


def test_r_examples():
    one = {(0, 0): Q2.one}
    assert rmatrix_step(1, (1, 2), one, Q2) == one
    got = rmatrix_step(1, (1, 2), {(1, 0): Q2.one}, Q2)
    want = {(0, 1): Q2.one / Q2.upow(2),
            (1, 0): Q2.vdiff() * Q2.qmu(2) / Q2.upow(1)}
    assert got == want


def test_r_inverse():
    assert inverse_report(3, Q2).ok
    assert inverse_report(3, SymbolicQuantum(1), (1, 1)).ok


def test_yang_baxter_and_braid_relations():
    assert yang_baxter_report(2, Q3).ok
    assert braid_relations_report(3, 2, Q3).ok


def test_equivariance():
    assert equivariance_report(2, Q2).ok


def test_braid_relations_specialized_repeated_colors():
    K = SpecializedQuantum(Specialization.draw(GeneratorSet("quantum", 4), 9))
    assert braid_relations_report(4, 2, K, (1, 2, 2, 1)).ok


def test_colored_read_examples():
    m = colored_read(BraidWord(2, (1, 1)), (1, 2), 0, Q2)
    assert m.rows == [[Q2.one]] and m.square
    m = colored_read(BraidWord(3), (1, 2, 3), 2, Q3)
    assert m.rows == [[Q3.one if i == j else Q3.zero for j in range(6)] for i in range(6)]
    m = colored_read(BraidWord(2, (1,)), (1, 2), 1, Q2)
    assert not m.square and m.target_colors == (2, 1)


def test_colored_read_preserves_degree_and_weight():
    w = parse_word("s1 s2^-1 s1", 3)
    for l in range(3):
        for k in tensor_basis(3, l):
            img, cols = apply_word(w, (1, 2, 3), {k: Q3.one}, Q3)
            assert all(sum(x) == l for x in img)
            assert cols == (3, 2, 1)
