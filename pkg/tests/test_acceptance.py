"""Acceptance gate: one test per headline claim, in a fixed order.

Run ``pytest tests/test_acceptance.py -v`` to get a single pass/fail line
per criterion.  Everything here is exact — no tolerances, no sampling
except where a range is explicitly too large to exhaust, and then the
samples are seeded and reproducible.
"""

import random
from collections import Counter
from itertools import permutations
from math import factorial

from tabkit.allowable import allowable_pairs, build_graph, is_acyclic, realize_sct
from tabkit.core import compositions_of, identity, maximal_chain_to, to_partition
from tabkit.dyck import (
    LabeledDyckPath,
    catalan,
    format_word,
    labeled_dyck_word,
    ldyck_to_spct,
    random_ldyck,
    spct_to_ldyck,
)
from tabkit.hecke import equivalence_classes, verify_hecke_relations
from tabkit.tableaux import (
    ReverseTableau,
    Tableau,
    descent_quadruple,
    descent_set,
    enumerate_spct,
    enumerate_spct_sigma,
    enumerate_srt,
    pct_to_rt,
    rt_to_pct,
    st_column,
    st_word,
    validate_pct,
)
from tabkit.trees import (
    Node,
    edge_stats,
    enumerate_ltrees,
    ldyck_to_ltree,
    ltree_to_ldyck,
    push_pop_trace,
    random_ltree,
)


def test_01_two_column_rectangle_counts():
    """Standard tableaux on n rows of length two number n! * Catalan(n)."""
    counts = [sum(1 for _ in enumerate_spct((2,) * n)) for n in range(1, 6)]
    assert counts == [1, 4, 30, 336, 5040]
    assert counts == [factorial(n) * catalan(n) for n in range(1, 6)]


def test_02_rectangle_class_counts():
    """The two-column rectangle splits into (n+1)^(n-1) operator classes."""
    counts = [len(equivalence_classes((2,) * n)) for n in range(1, 6)]
    assert counts == [1, 3, 16, 125, 1296]
    assert counts == [(n + 1) ** (n - 1) for n in range(1, 6)]


def test_03_allowable_pair_counts_and_column_pairs():
    """The pattern predicates alone count (n+1)^(n-1) pairs, and those pairs
    are exactly the standardized column pairs of the two-column tableaux."""
    counts = [sum(1 for _ in allowable_pairs(n)) for n in range(1, 6)]
    assert counts == [1, 3, 16, 125, 1296]
    for n in range(1, 5):
        from_tableaux = {
            (st_column(t, 1), st_column(t, 2)) for t in enumerate_spct((2,) * n)
        }
        assert from_tableaux == set(allowable_pairs(n))


def test_04_statistic_transport_per_object():
    """The composed tableau-to-tree bijection sends the four descent counts
    of every tableau to the four edge counts of its tree, object by object,
    so the joint distributions agree as well."""
    for n in range(1, 6):
        seen = Counter()
        for t in enumerate_spct((2,) * n):
            tree = ldyck_to_ltree(spct_to_ldyck(t))
            quad = descent_quadruple(t)
            assert edge_stats(tree) == quad
            seen[quad] += 1
        assert seen == Counter(edge_stats(t) for t in enumerate_ltrees(n))


def test_05_descent_operator_relations():
    """The descent operators are idempotent, commute at distance, and braid,
    pointwise on every standard tableau of every shape of size up to six."""
    for n in range(1, 7):
        for shape in compositions_of(n):
            report = verify_hecke_relations(shape)
            assert report.passed, report.counterexample


def test_06_unique_source_and_sink_per_class():
    """Every operator class of every shape of size up to seven has exactly
    one source and one sink."""
    for n in range(1, 8):
        for shape in compositions_of(n):
            for cls in equivalence_classes(shape):
                members = cls.members
                # construction already asserts uniqueness; certify membership
                assert cls.source in members and cls.sink in members
                assert len({st_word(t) for t in members}) == 1


def test_07_bijection_round_trips():
    """Column sorting, the two-column path reading, and the path/tree
    algorithms all invert exactly: exhaustively at small sizes, on seeded
    samples beyond."""
    # column sort and its inverse, every shape and tableau of size <= 7
    for n in range(1, 8):
        for shape in compositions_of(n):
            for t in enumerate_spct(shape):
                assert rt_to_pct(pct_to_rt(t), st_column(t, 1)) == t
    # ...and back from every reverse tableau under every type, size <= 7
    for n in range(1, 8):
        for lam in sorted({to_partition(c) for c in compositions_of(n)}):
            for sigma in permutations(range(1, len(lam) + 1)):
                for T in enumerate_srt(lam):
                    t = rt_to_pct(T, sigma)
                    assert validate_pct(t).valid
                    assert pct_to_rt(t).rows == T.rows

    # tableau <-> path <-> tree, exhaustive for n <= 4
    for n in range(1, 5):
        for t in enumerate_spct((2,) * n):
            d = spct_to_ldyck(t)
            assert ldyck_to_spct(d) == t
            assert ltree_to_ldyck(ldyck_to_ltree(d)) == d
        for tree in enumerate_ltrees(n):
            assert ldyck_to_ltree(ltree_to_ldyck(tree)) == tree

    # seeded samples at n = 5 and 6
    rng = random.Random(0)
    for n in (5, 6):
        for _ in range(200):
            d = random_ldyck(n, rng)
            assert spct_to_ldyck(ldyck_to_spct(d)) == d
            assert ltree_to_ldyck(ldyck_to_ltree(d)) == d
            tree = random_ltree(n, rng)
            assert ldyck_to_ltree(ltree_to_ldyck(tree)) == tree


def test_08_reference_values():
    """Frozen worked examples reproduce exactly."""
    # descent set of a ten-cell standard tableau of type 1324
    spct = Tableau.from_rows([[1], [7, 5, 2], [6, 4], [10, 9, 8, 3]])
    assert sorted(descent_set(spct)) == [1, 2, 4, 6, 7]

    # standardized column word of its non-standard companion
    pct = Tableau.from_rows([[1], [4, 3, 2], [3, 2], [7, 5, 5, 3]])
    assert st_word(pct) == ((1, 3, 2, 4), (2, 1, 3), (1, 2), (1,))

    # a column-sorted pair of fillings related under type 3142
    rt = ReverseTableau.from_rows([[11, 8, 6, 4], [10, 7, 5], [9, 3, 1], [2]])
    tau = Tableau.from_rows([[10, 8, 6, 4], [2], [11, 7, 5], [9, 3, 1]])
    assert pct_to_rt(tau).rows == rt.rows
    assert rt_to_pct(rt, (3, 1, 4, 2)) == tau

    # the fully labeled word of a semi-length ten path
    golden = LabeledDyckPath(
        ("U", "U", "D7", "D3", "U", "U", "U", "U", "D4", "U",
         "D1", "D10", "U", "D6", "D8", "U", "U", "D9", "D2", "D5")
    )
    assert format_word(labeled_dyck_word(golden)) == (
        "U7 U3 D7 D3 U10 U9 U8 U4 D4 U1 D1 D10 U6 D6 D8 U5 U2 D9 D2 D5"
    )

    # edge statistics of a nine-node labeled binary tree
    witness = Node(
        5,
        None,
        Node(7, Node(3, Node(2, Node(1, None, Node(8)),
                             Node(6, Node(9, None, Node(4)))))),
    )
    assert edge_stats(witness) == (1, 3, 3, 1)

    # the queue trace of the golden path's tree: twenty operations,
    # starting by pushing 5 and ending by popping 7
    trace = push_pop_trace(ldyck_to_ltree(golden))
    assert len(trace) == 20
    assert trace[0] == ("push", 5)
    assert trace[-1] == ("pop", 7)


def test_09_pair_realization_and_acyclicity():
    """For every allowable pair with n <= 4, the chain graph is acyclic and
    its canonical labeling is a valid standard tableau whose last two
    standardized columns reproduce the pair."""
    for n in range(1, 5):
        for a, b in allowable_pairs(n):
            assert is_acyclic(build_graph(maximal_chain_to(a) + (b,)))
            t = realize_sct(a, b)
            assert validate_pct(t).valid
            k = t.shape[0]
            assert st_column(t, 1) == identity(n)
            assert st_column(t, k - 1) == a
            assert st_column(t, k) == b
