from collections import Counter

import pytest

from enhcone import weylb
from enhcone.combinatorics import Partition, bipartition, enumerate_bipartitions, parse_bipartition as bp
from enhcone.exactalg import IntPolynomial, T


@pytest.mark.parametrize("n", range(5))
def test_class_sizes_match_element_enumeration(n):
    counts = Counter(weylb.signed_cycle_type(p, s) for p, s in weylb.hyperoctahedral_elements(n))
    assert counts == {c: weylb.class_size(c) for c in weylb.classes(n)}


def test_class_size_examples():
    assert weylb.class_size(bp("1;-")) == 1
    assert weylb.class_size(bp("-;1")) == 1
    assert weylb.class_size(bp("2;-")) == 2


@pytest.mark.parametrize("n", range(7))
def test_sn_trivial_sign_and_degrees(n):
    from enhcone.combinatorics import partitions
    for rho in partitions(n):
        assert weylb.sn_character(Partition([n]) if n else Partition(), tuple(rho)) == 1
        sign = (-1) ** (n - len(rho))
        assert weylb.sn_character(Partition([1] * n), tuple(rho)) == sign
    for lam in partitions(n):
        assert weylb.sn_character(lam, (1,) * n) == weylb.hook_dimension(lam)


def test_sn_example():
    assert weylb.sn_character(Partition([2, 1]), (1, 1, 1)) == 2
    assert weylb.sn_character(Partition([2, 1]), (3,)) == -1
    assert weylb.sn_character(Partition([2, 1]), (2, 1)) == 0


def test_w1_characters():
    tab = weylb.character_table(1)
    rows = {str(lab): row for lab, row in zip(tab.labels, tab.values)}
    cls = [str(c) for c in tab.classes]
    assert dict(zip(cls, rows["(1;-)"])) == {"(-;1)": 1, "(1;-)": 1}
    assert dict(zip(cls, rows["(-;1)"])) == {"(-;1)": -1, "(1;-)": 1}


@pytest.mark.parametrize("n", range(6))
def test_labeling_conventions(n):
    tab = weylb.character_table(n)
    eps = [weylb.epsilon(c) for c in tab.classes]
    for lab, row in zip(tab.labels, tab.values):
        assert [a * e for a, e in zip(row, eps)] == list(tab.row(weylb.tensor_with_eps(lab)))
        assert row[tab.classes.index(bipartition([1] * n, []))] == weylb.character_degree(lab)
        if not lab.nu:
            # restricted to S_n (all signs positive) this is chi^mu
            for c, val in zip(tab.classes, row):
                if not c.nu:
                    assert val == weylb.sn_character(lab.mu, tuple(c.mu))
    if n:
        assert all(v == 1 for v in tab.row(bipartition([n], [])))


@pytest.mark.parametrize("n", range(1, 6))
def test_reflection_character(n):
    tab = weylb.character_table(n)
    trace = [c.mu.count(1) - c.nu.count(1) for c in tab.classes]
    assert list(tab.row(bipartition([n - 1], [1]))) == trace
    assert weylb.fake_degree(trace, n) == IntPolynomial.from_dict({2 * i + 1: 1 for i in range(n)})


def test_reflection_charpoly_examples():
    assert weylb.reflection_charpoly(bp("111;-")) == (T - 1) ** 3
    assert weylb.reflection_charpoly(bp("-;1")) == T + 1
    assert weylb.reflection_charpoly(bp("-;2")) == T * T + 1


@pytest.mark.parametrize("n", range(6))
def test_charpoly_shape_and_fixed_vectors(n):
    for c in weylb.classes(n):
        p = weylb.reflection_charpoly(c)
        assert p.degree == n and p.leading == 1 and abs(p[0]) == 1
        assert (p(1) == 0) == bool(c.mu)


def test_fake_degree_rejects_non_character():
    cls = weylb.classes(2)
    vals = [0] * len(cls)
    vals[cls.index(bp("11;-"))] = 1
    with pytest.raises(ValueError):
        weylb.fake_degree(vals, 2)


@pytest.mark.parametrize("n", range(5))
def test_omega_symmetric_polynomial(n):
    om = weylb.omega_matrix(n)
    assert om.is_symmetric()
    assert all(e.is_polynomial() for row in om.rows for e in row)


def test_omega_small():
    assert weylb.omega_matrix(0).rows[0][0] == 1
    om = weylb.omega_matrix(1)
    t2 = IntPolynomial([0, 0, 1])
    assert om[bp("1;-"), bp("1;-")] == t2
    assert om[bp("-;1"), bp("-;1")] == t2
    assert om[bp("1;-"), bp("-;1")] == T


def test_omega_combinatorial_examples():
    assert weylb.omega_combinatorial(bp("1;-"), bp("1;-")) == IntPolynomial([0, 0, 1])
    labels = enumerate_bipartitions(3)
    for a in labels:
        for b in labels:
            p = weylb.omega_combinatorial(a, b)
            assert p == weylb.omega_combinatorial(b, a)
            assert p.is_even()
