"""Root systems, Chevalley bases and Weyl groups checked against the Gram
matrix alone: lattice enumeration for roots, permutation closure for |W|,
a fresh Jacobi computation for the bracket table."""
import itertools

import pytest

from ncbirat.rootsys import (RootSystemError, build_root_system, chevalley_constants,
                             info_table, weyl_group)
from oracles import lattice_roots, weyl_order_by_permutations

LATTICE_OK = ["A1", "A2", "A3", "B2", "B3", "G2", "D4"]


@pytest.mark.parametrize("label", LATTICE_OK)
def test_roots_match_lattice_enumeration(label):
    rs = build_root_system(label)
    assert set(rs.roots) == set(lattice_roots(rs.gram))


@pytest.mark.parametrize("label", LATTICE_OK + ["C3"])
def test_weyl_order_matches_permutation_closure(label):
    rs = build_root_system(label)
    assert len(weyl_group(rs)) == weyl_order_by_permutations(rs.gram, list(rs.roots))


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "C3"])
def test_positive_roots_are_nonnegative_half(label):
    rs = build_root_system(label)
    assert len(rs.positive) * 2 == len(rs.roots)
    assert all(min(a) >= 0 for a in rs.positive)
    assert set(rs.roots) == set(rs.positive) | {tuple(-c for c in a) for a in rs.positive}


def brackets(cb):
    d = cb.dimension

    def br(x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in cb.bracket.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}
    return d, br


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "G2", "C3"])
def test_jacobi_and_antisymmetry(label):
    cb = chevalley_constants(build_root_system(label))
    d, br = brackets(cb)
    basis = [{i: 1} for i in range(d)]
    for i, j in itertools.product(range(d), repeat=2):
        a, b = br(basis[i], basis[j]), br(basis[j], basis[i])
        assert a == {k: -v for k, v in b.items()}
    for i, j, k in itertools.combinations(range(d), 3):
        x, y, z = basis[i], basis[j], basis[k]
        total = {}
        for t in (br(br(x, y), z), br(br(y, z), x), br(br(z, x), y)):
            for key, v in t.items():
                total[key] = total.get(key, 0) + v
        assert not any(total.values()), (i, j, k)
    assert list(cb.jacobi_defects()) == []


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "B3"])
def test_structure_constants_are_plus_minus_p_plus_one(label):
    rs = build_root_system(label)
    cb = chevalley_constants(rs)
    roots = rs.root_set
    for a in rs.roots:
        for b in rs.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s in roots:
                p = 0
                while tuple(y - (p + 1) * x for x, y in zip(a, b)) in roots:
                    p += 1
                assert abs(cb.structure[(a, b)]) == p + 1


@pytest.mark.parametrize("label", ["A1", "B2", "G2"])
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_reduction_mod_small_primes(label, p):
    cb = chevalley_constants(build_root_system(label))
    red = cb.reduce_mod(p)
    for key, row in cb.bracket.items():
        assert {k: v % p for k, v in row.items() if v % p} == red[key]


def test_cartan_of_g2_and_b2():
    assert build_root_system("B2").cartan in (((2, -2), (-1, 2)), ((2, -1), (-2, 2)))
    g2 = build_root_system("G2").cartan
    assert sorted([g2[0][1], g2[1][0]]) == [-3, -1]


def test_bad_labels():
    for bad in ["A0", "Q2", "B1", "D3", "E5", "G3", "F2", ""]:
        with pytest.raises(RootSystemError):
            build_root_system(bad)


def test_info_table():
    text = info_table(build_root_system("G2"))
    assert "roots     12" in text and "|W|       12" in text
