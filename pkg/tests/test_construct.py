import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permrex import construct, lengths, regex_ast
from permrex.errors import InvalidArgs, SizeCap

# Published display form of the halved-split regex for n = 4, compact.
R4_COMPACT = (
    "(12+21)(34+43)+(13+31)(24+42)+(23+32)(14+41)"
    "+(14+41)(23+32)+(24+42)(13+31)+(34+43)(12+21)"
)

# Published display form of the one-symbol-at-a-time regex for n = 4.
TAIL4_COMPACT = (
    "1(2(34+43)+3(24+42)+4(23+32))"
    "+2(1(34+43)+3(14+41)+4(13+31))"
    "+3(1(24+42)+2(14+41)+4(12+21))"
    "+4(1(23+32)+2(13+31)+3(12+21))"
)


def first_n(n):
    return construct.AlphabetSet.first_n(n)


def test_alphabet_set_validation():
    assert first_n(3).members == (1, 2, 3)
    assert first_n(3).n == 3
    with pytest.raises(InvalidArgs):
        construct.AlphabetSet(())
    with pytest.raises(InvalidArgs):
        construct.AlphabetSet((2, 1))
    with pytest.raises(InvalidArgs):
        construct.AlphabetSet((1, 1))
    with pytest.raises(InvalidArgs):
        construct.AlphabetSet((0, 1))
    with pytest.raises(InvalidArgs):
        construct.AlphabetSet.first_n(0)


def test_subsets_of_size_colex_order():
    got = [s.members for s in construct.subsets_of_size((1, 2, 3, 4), 2)]
    assert got == [
        (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


def test_subsets_of_size_validation():
    with pytest.raises(InvalidArgs):
        list(construct.subsets_of_size((1, 2), 3))
    with pytest.raises(InvalidArgs):
        list(construct.subsets_of_size((1, 2), 0))


def test_dnc_matches_published_display_for_n4():
    expr = construct.build_divide_and_conquer(first_n(4))
    assert regex_ast.render(expr, "compact") == R4_COMPACT


def test_tail_matches_published_display_for_n4():
    expr = construct.build_tail_recursive(first_n(4))
    assert regex_ast.render(expr, "compact") == TAIL4_COMPACT


def test_builders_tiny_cases():
    assert regex_ast.render(
        construct.build_divide_and_conquer(first_n(1)), "compact") == "1"
    assert regex_ast.render(
        construct.build_divide_and_conquer(first_n(2)), "compact") == "12+21"
    assert regex_ast.render(
        construct.build_tail_recursive(first_n(2)), "compact") == "12+21"
    assert regex_ast.render(
        construct.build_flat_union(first_n(2)), "compact") == "12+21"


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 13))
def test_dnc_length_is_f(n):
    # n = 13 is the largest size under the default symbol cap; the cap is
    # doing real work, since the shared DAG grows with C(n, n/2).
    expr = construct.build_divide_and_conquer(first_n(n))
    assert regex_ast.alphabetic_length(expr) == lengths.f(n)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 8))
def test_tail_length_is_t(n):
    expr = construct.build_tail_recursive(first_n(n))
    assert regex_ast.alphabetic_length(expr) == lengths.t(n)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 7))
def test_flat_length_is_n_factorial_n(n):
    expr = construct.build_flat_union(first_n(n))
    assert regex_ast.alphabetic_length(expr) == lengths.flat_length(n)


def test_builders_work_on_sparse_alphabets():
    from permrex import verify

    sparse = construct.AlphabetSet((2, 5, 9))
    expected = set(itertools.permutations((2, 5, 9)))
    for build in (construct.build_divide_and_conquer,
                  construct.build_tail_recursive,
                  construct.build_flat_union):
        nfa = verify.glushkov(build(sparse))
        accepted = {
            word
            for length in range(0, 4)
            for word in itertools.product((2, 5, 9), repeat=length)
            if verify.accepts(nfa, word)
        }
        assert accepted == expected


def test_dnc_shares_subproblems_across_the_union():
    expr = construct.build_divide_and_conquer(first_n(8))
    seen = set()
    stack = [expr]
    nodes = 0
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        nodes += 1
        for attr in ("left", "right", "child"):
            child = getattr(node, attr, None)
            if child is not None:
                stack.append(child)
    # Alphabetic length counts occurrences (6720 at n = 8); the shared
    # DAG must be far smaller than the fully expanded tree.
    assert nodes < 2500


def test_size_caps_refuse_before_building():
    small = construct.BuildLimits(max_symbols=100, flat_cap=8)
    with pytest.raises(SizeCap) as info:
        construct.build_divide_and_conquer(first_n(6), limits=small)
    assert info.value.predicted == lengths.f(6)
    with pytest.raises(SizeCap):
        construct.build_tail_recursive(first_n(6), limits=small)
    with pytest.raises(SizeCap):
        construct.build_flat_union(first_n(9))
    # Defaults admit n = 13 for the halved-split builder but not n = 14.
    assert lengths.f(13) < construct.DEFAULT_LIMITS.max_symbols
    assert lengths.f(14) > construct.DEFAULT_LIMITS.max_symbols


def test_limits_validation():
    with pytest.raises(InvalidArgs):
        construct.BuildLimits(max_symbols=0, flat_cap=8)
    with pytest.raises(InvalidArgs):
        construct.BuildLimits(max_symbols=10, flat_cap=0)
