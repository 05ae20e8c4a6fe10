import itertools
import json

import pytest

from conftest import BIG_HW_ROWS, T
from spbranch.core import DomainError, Tableau, alphabet, enumerate_ssyt, is_semistandard, partitions, sp_weight
from spbranch.crystal import (
    MINUS,
    NEUTRAL,
    PLUS,
    canonical_tableau,
    coroot_pairing,
    crystal_graph,
    enumerate_sp_highest,
    epsilon_i,
    gl_lower,
    gl_raise,
    is_sp_highest,
    is_sp_highest_by_operators,
    phi_i,
    sp_letter_marks,
    sp_lower,
    sp_raise,
    tableau_lower,
    translate,
    untranslate,
    validate_sp_structure,
)


def all_words(n, max_len):
    for k in range(max_len + 1):
        yield from itertools.product(alphabet(n), repeat=k)


def naive_highest(word, n):
    """Search the whole crystal component for anything above ``word``."""
    return all(sp_raise(word, i, n) is None for i in range(1, n + 1))


# -- marks and signatures --------------------------------------------------------

def test_marks():
    assert sp_letter_marks(1, 1) == PLUS
    assert sp_letter_marks(-1, 1) == MINUS
    assert sp_letter_marks(-2, 1) == PLUS
    assert sp_letter_marks(3, 1) == NEUTRAL


def test_epsilon_phi_examples():
    assert (epsilon_i((1, 1, 2), 1), phi_i((1, 1, 2), 1)) == (0, 1)
    assert (epsilon_i((-1,), 1), phi_i((-1,), 1)) == (1, 0)
    assert (epsilon_i((), 3), phi_i((), 3)) == (0, 0)


def test_raise_lower_examples():
    assert sp_raise((-1,), 1) == (-2,)
    assert sp_raise((1, 1, 2), 1) is None
    assert sp_lower((1,), 1) == (2,)
    assert sp_lower((2,), 2, 2) == (-2,)
    assert sp_raise((-2,), 2, 2) == (2,)


def test_action_site():
    # f acts on the leftmost surviving plus, e on the rightmost surviving minus
    assert sp_lower((1, 1), 1) == (2, 1)
    assert sp_raise((2, 2), 1) == (2, 1)
    assert sp_lower((2, 1), 1) == (2, 2)


def test_gl_examples():
    assert gl_lower((1,), 1, 1) == (2,)
    assert gl_raise((1, 2), 1, 1) is None
    assert gl_raise((2, 1), 1, 1) == (1, 1)
    with pytest.raises(DomainError):
        gl_raise((-1,), 1, 1)


def test_translate():
    assert translate(1, 3) == 1
    assert translate(6, 3) == -1
    assert translate(4, 3) == -3
    assert all(untranslate(translate(a, 3), 3) == a for a in range(1, 7))
    with pytest.raises(ValueError):
        translate(7, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_adjointness(n):
    for w in all_words(n, 6 if n < 3 else 5):
        for i in range(1, n + 1):
            low = sp_lower(w, i, n)
            if low is not None:
                assert sp_raise(low, i, n) == w
            up = sp_raise(w, i, n)
            if up is not None:
                assert sp_lower(up, i, n) == w


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weight_pairing(n):
    for w in all_words(n, 6 if n < 3 else 5):
        for i in range(1, n + 1):
            assert phi_i(w, i) - epsilon_i(w, i) == coroot_pairing(sp_weight(w), i, n)


def test_operator_strings_change_weight():
    w = (1, 1, 2, -1)
    for i in (1, 2):
        low = sp_lower(w, i, 2)
        if low is not None:
            diff = [a - b for a, b in itertools.zip_longest(sp_weight(w), sp_weight(low), fillvalue=0)]
            assert diff == ([1, -1] if i == 1 else [0, 2])


# -- highest weight ------------------------------------------------------------

def test_highest_examples(big_hw):
    assert is_sp_highest((1, 1, 2))
    assert not is_sp_highest((-1,))
    assert is_sp_highest(big_hw.reading())
    with pytest.raises(DomainError):
        is_sp_highest((3,), rank=2)


@pytest.mark.parametrize("n", [2, 3])
def test_prefix_test_matches_operators(n):
    for size in range(7):
        for lam in partitions(size, max_length=2 * n):
            for t in enumerate_ssyt(lam, alphabet(n)):
                w = t.reading()
                assert is_sp_highest(w, n) == is_sp_highest_by_operators(w, n)


@pytest.mark.parametrize("n", [1, 2])
def test_prefix_test_on_arbitrary_words(n):
    for w in all_words(n, 6):
        assert is_sp_highest(w, n) == naive_highest(w, n)


@pytest.mark.parametrize("n", [2, 3])
def test_gl_lowering_preserves_semistandard(n):
    for size in range(7):
        for lam in partitions(size, max_length=2 * n):
            for t in enumerate_ssyt(lam, alphabet(n)):
                for i in range(1, 2 * n):
                    low = tableau_lower(t, i, n, "gl")
                    assert low is None or is_semistandard(low)


def test_sp_lowering_can_leave_tableaux():
    # f_1 sends the reading (1,-1,1,-2) of [[1,1],[-2,-1]] to (1,-1,2,-2),
    # which would put 2 left of 1 in the first row
    assert sp_lower((1, -1, 1, -2), 1, 2) == (1, -1, 2, -2)
    g = crystal_graph((2, 2), 2, "sp")
    escaping = g.escaping_edges()
    assert escaping
    for s, i, d in escaping:
        word = g.outside[d - len(g.nodes)]
        assert sp_lower(g.nodes[s].reading(), i, 2) == word
        assert not is_semistandard(Tableau.from_reading(g.nodes[s].shape, word))


@pytest.mark.parametrize("n", [2, 3])
def test_structure_screen_on_highest(n):
    for size in range(7):
        for lam in partitions(size, max_length=2 * n):
            for t in enumerate_sp_highest(lam, n):
                assert validate_sp_structure(t)


def test_structure_screen_examples():
    assert validate_sp_structure(canonical_tableau((3, 1)))
    assert validate_sp_structure(T([[1, 1], [-1, -1]]))
    assert not validate_sp_structure(T([[1, -1], [2]]))


def test_canonical():
    assert canonical_tableau((2, 1)).rows == ((1, 1), (2,))
    assert canonical_tableau(()) == T([])
    big = T(BIG_HW_ROWS)
    canon = canonical_tableau((4, 4, 3, 3, 3, 2))
    inner = (3, 2, 1, 1)
    for i, part in enumerate(inner, start=1):
        assert [big[(i, j)] for j in range(1, part + 1)] == [canon[(i, j)] for j in range(1, part + 1)]


def test_unbounded_letter_bound_is_enough():
    # widening the alphabet beyond the number of rows finds nothing new
    for size in range(8):
        for lam in partitions(size, max_length=5):
            narrow = set(enumerate_sp_highest(lam))
            wide = set(enumerate_sp_highest(lam, len(lam) + 2))
            assert narrow == wide


# -- graphs ------------------------------------------------------------------------

def test_graph_examples():
    g = crystal_graph((1,), 1, "gl")
    assert len(g.nodes) == 2 and g.edges == [(0, 1, 1)]
    g = crystal_graph((1,), 2, "sp")
    assert [t.reading() for t in g.nodes] == [(1,), (2,), (-2,), (-1,)]
    assert g.edges == [(0, 1, 1), (1, 2, 2), (2, 1, 3)]
    g = crystal_graph((1, 1), 1, "gl")
    assert [t.rows for t in g.nodes] == [((1,), (-1,))] and g.edges == []
    with pytest.raises(DomainError):
        crystal_graph((2, 2, 2), 1)


@pytest.mark.parametrize("lam,n", [((2, 1), 1), ((2, 1), 2), ((2, 2), 2), ((3, 1), 2), ((2, 1, 1), 2)])
def test_gl_graph_connected_with_canonical_source(lam, n):
    g = crystal_graph(lam, n, "gl")
    assert g.is_connected()
    assert [g.nodes[k] for k in g.sources()] == [Tableau.from_rows(
        [[translate(i, n)] * p for i, p in enumerate(lam, start=1)])]


@pytest.mark.parametrize("lam,n", [((1,), 2), ((2,), 2), ((1, 1), 2)])
def test_sp_graph_closed_for_small_shapes(lam, n):
    g = crystal_graph(lam, n, "sp")
    assert not g.outside
    assert {g.nodes[k] for k in g.sources()} == set(enumerate_sp_highest(lam, n))


def test_graph_serialisation_is_deterministic():
    g1, g2 = crystal_graph((2, 1), 2, "sp"), crystal_graph((2, 1), 2, "sp")
    assert g1.to_dot() == g2.to_dot()
    data = json.loads(g1.to_json())
    assert len(data["nodes"]) == len(g1.nodes)
    assert all(len(e) == 3 for e in data["edges"])
    assert g1.to_dot().startswith("digraph crystal {")
