import itertools
import random

import pytest

from latinburn.burning import build_H3L, min_lazy_burning_set
from latinburn.chains import scc
from latinburn.errors import (
    BadElement,
    BadLine,
    NoIdentity,
    NotAssociative,
    NotLatin,
    OrderTooLarge,
    ParamTooLarge,
)
from latinburn.groups import (
    cayley_square,
    coset_columns_predicate,
    dihedral,
    direct_product,
    group_from_table,
    min_generating_size,
    named_group,
    random_coset_case,
    scc_group_formula,
    subgroup_generated,
    sym,
    z,
    z2_pow,
)
from latinburn.latin import col, cyclic, intercalate_power, row, sym as sym_line
from oracles import xor_grid


def _closed_under_products(group, elems):
    return all(group.mul(a, b) in elems for a in elems for b in elems)


class TestTables:
    def test_from_cyclic_grid(self):
        g = group_from_table(cyclic(3).grid)
        assert g.order == 3 and g.identity == 0 and g.inverse == (0, 2, 1)

    def test_not_latin(self):
        with pytest.raises(NotLatin):
            group_from_table([[0, 1], [1, 1]])

    def test_xor_table(self):
        g = group_from_table(xor_grid(4).tolist())
        assert g.identity == 0 and g.inverse == (0, 1, 2, 3)

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            group_from_table([[0, 2, 1], [2, 1, 0], [1, 0, 2]])

    def test_not_associative(self):
        # a Latin square with identity 0 that is not a group (order-5 loop)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(NotAssociative) as info:
            group_from_table(table)
        a, b, c = info.value.triple
        t = table
        assert t[t[a][b]][c] != t[a][t[b][c]]

    def test_inverses(self):
        for g in (sym(3), dihedral(4), direct_product(z(2), z(4))):
            assert all(g.mul(x, g.inverse[x]) == g.identity == g.mul(g.inverse[x], x) for x in g.elements())


class TestConstructors:
    def test_z(self):
        assert z(4).table[2][3] == 1

    def test_z2_pow(self):
        assert z2_pow(2).table[1][2] == 3
        assert z2_pow(0).order == 1
        with pytest.raises(ParamTooLarge):
            z2_pow(7)

    def test_sym3_matches_permutation_composition(self):
        g = sym(3)
        perms = sorted(itertools.permutations(range(3)))
        for i, p in enumerate(perms):
            for j, q in enumerate(perms):
                composed = tuple(p[q[x]] for x in range(3))
                assert g.table[i][j] == perms.index(composed)
        assert g.order == 6 and not g.is_abelian()

    def test_dihedral(self):
        d4 = dihedral(4)
        assert d4.order == 8 and not d4.is_abelian()
        assert dihedral(2).is_abelian() and dihedral(2).order == 4
        with pytest.raises(ParamTooLarge):
            dihedral(7)
        with pytest.raises(ParamTooLarge):
            sym(5)

    def test_direct_product(self):
        g = direct_product(z(2), z(3))
        assert g.order == 6 and g.is_abelian()
        assert min_generating_size(g)[0] == 1

    def test_named(self):
        assert named_group("z7").order == 7
        assert named_group("Z2^3").order == 8
        assert named_group("s3").order == 6
        assert named_group("d4").order == 8
        assert named_group("z2xz4").order == 8
        with pytest.raises(ValueError):
            named_group("q8")


class TestSubgroups:
    def test_examples(self):
        assert subgroup_generated(z(6), [2]) == {0, 2, 4}
        assert subgroup_generated(z(6), [1]) == set(range(6))
        assert subgroup_generated(z2_pow(3), [1, 2]) == {0, 1, 2, 3}
        assert subgroup_generated(z(5), []) == {0}

    def test_bad_element(self):
        with pytest.raises(BadElement):
            subgroup_generated(z(3), [3])

    @pytest.mark.parametrize("g", [sym(3), dihedral(4), direct_product(z(2), z(4)), z(12)], ids=lambda g: g.name)
    def test_closed_with_inverses_and_lagrange(self, g):
        for k in (1, 2):
            for gens in itertools.combinations(g.elements(), k):
                h = subgroup_generated(g, gens)
                assert g.identity in h and _closed_under_products(g, h)
                assert all(g.inverse[x] in h for x in h)
                assert g.order % len(h) == 0


def _brute_rank(g):
    for k in range(g.order + 1):
        for gens in itertools.combinations(g.elements(), k):
            # independent closure: repeated products until stable
            elems = {g.identity, *gens}
            while True:
                more = {g.mul(a, b) for a in elems for b in elems} | elems
                if more == elems:
                    break
                elems = more
            if len(elems) == g.order:
                return k


class TestGenerators:
    def test_values(self):
        assert min_generating_size(z(6)) == (1, (1,))
        assert min_generating_size(z2_pow(3))[0] == 3
        assert min_generating_size(sym(3))[0] == 2
        assert min_generating_size(z(1)) == (0, ())

    @pytest.mark.parametrize("g", [z(6), z2_pow(3), sym(3), dihedral(4), direct_product(z(2), z(4))], ids=lambda g: g.name)
    def test_matches_brute_force(self, g):
        k, wit = min_generating_size(g)
        assert k == _brute_rank(g)
        assert subgroup_generated(g, wit) == set(g.elements())

    def test_guard(self):
        with pytest.raises(OrderTooLarge):
            min_generating_size(z(65))


class TestCayley:
    def test_cyclic(self):
        for n in range(1, 9):
            assert cayley_square(z(n)) == cyclic(n)

    def test_intercalate(self):
        for k in range(1, 4):
            assert cayley_square(z2_pow(k)) == intercalate_power(k)

    def test_sym3(self):
        assert cayley_square(sym(3)).order == 6


class TestCosets:
    def test_examples(self):
        cols, ok = coset_columns_predicate(z(4), 0, 0, [sym_line(1)])
        assert cols == {0, 1, 2, 3} and ok
        cols, ok = coset_columns_predicate(z2_pow(2), 0, 0, [col(1)])
        assert cols == {0, 1} and ok
        for g in (z(5), sym(3)):
            cols, ok = coset_columns_predicate(g, 0, 0, [])
            assert cols == {0} and ok

    def test_bad_lines(self):
        with pytest.raises(BadLine):
            coset_columns_predicate(z(4), 0, 0, [row(0)])
        with pytest.raises(BadLine):
            coset_columns_predicate(z(4), 0, 0, [col(4)])

    def test_random_nonabelian(self):
        rng = random.Random(7)
        for g in (sym(3), dihedral(4), dihedral(5)):
            for _ in range(50):
                assert coset_columns_predicate(g, *random_coset_case(g, rng))[1]


class TestSccOfGroups:
    def test_values(self):
        assert scc_group_formula(z(7)) == 2
        assert scc_group_formula(z2_pow(3)) == 4
        assert scc_group_formula(sym(3)) == 3

    @pytest.mark.parametrize("g", [z(7), z2_pow(3), sym(3), dihedral(4), direct_product(z(2), z(4))], ids=lambda g: g.name)
    def test_matches_chains(self, g):
        sq = cayley_square(g)
        assert scc_group_formula(g) == scc(sq)[0]
        assert min_lazy_burning_set(build_H3L(sq))[0] == min_generating_size(g)[0] + 2
