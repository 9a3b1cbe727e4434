import pytest

from multishelf import (
    ClosureBudgetError,
    DistributivityError,
    close_group,
    close_monoid,
    compose,
    cyclic,
    idempotent_center_report,
    invert,
    make_distributive_set,
    regular_embed,
    right_trivial,
)
from multishelf.fixtures import BERMAN_SIGMA, BERMAN_TAU, XOR
from multishelf.search import enumerate_racks


class TestMakeDistributiveSet:
    def test_singleton_right_trivial(self):
        S = make_distributive_set([right_trivial(3)])
        assert len(S) == 1 and S.n == 3

    def test_berman_pair(self):
        S = make_distributive_set([BERMAN_TAU, BERMAN_SIGMA])
        assert len(S) == 2

    def test_xor_rejected_with_witness(self):
        with pytest.raises(DistributivityError) as exc:
            make_distributive_set([XOR])
        assert exc.value.pair == (0, 0)
        assert exc.value.triple == (0, 0, 1)

    def test_empty_requires_carrier(self):
        with pytest.raises(ValueError):
            make_distributive_set([])
        assert make_distributive_set([], n=2).n == 2

    def test_carrier_mismatch(self):
        with pytest.raises(ValueError):
            make_distributive_set([right_trivial(2), right_trivial(3)])


class TestCloseMonoid:
    def test_identity_alone(self):
        S = make_distributive_set([right_trivial(2)])
        cl = close_monoid(S)
        assert cl.order == 1 and cl.kind == "monoid"

    def test_regular_embedding_image_already_closed(self):
        images = regular_embed(cyclic(3)).images
        cl = close_monoid(make_distributive_set(list(images)))
        assert set(cl.ops) == set(images)
        assert cl.order == 3

    def test_sigma_generates_order_3(self):
        cl = close_monoid(make_distributive_set([BERMAN_SIGMA]))
        sigma2 = compose(BERMAN_SIGMA, BERMAN_SIGMA)
        assert set(cl.ops) == {right_trivial(6), BERMAN_SIGMA, sigma2}

    def test_cayley_table_consistent(self):
        cl = close_monoid(make_distributive_set([BERMAN_SIGMA]))
        for i, a in enumerate(cl.ops):
            for j, b in enumerate(cl.ops):
                assert cl.ops[cl.cayley[i][j]] == compose(a, b)


class TestCloseGroup:
    def test_berman_group_order_6_nonabelian(self):
        cl = close_group(make_distributive_set([BERMAN_TAU, BERMAN_SIGMA]))
        assert cl.order == 6
        assert cl.kind == "group"
        assert not cl.abelian

    def test_z2_image(self):
        images = regular_embed(cyclic(2)).images
        cl = close_group(make_distributive_set([images[1]]))
        assert cl.order == 2

    def test_empty_set(self):
        cl = close_group(make_distributive_set([], n=3))
        assert cl.ops == (right_trivial(3),)

    def test_noninvertible_member_rejected(self):
        from multishelf import make_table

        proj = make_table(2, [[0, 0], [0, 0]])  # constant, distributive with itself
        S = make_distributive_set([proj])
        with pytest.raises(ValueError, match="invertible"):
            close_group(S)

    def test_budget_exceeded(self):
        with pytest.raises(ClosureBudgetError):
            close_group(make_distributive_set([BERMAN_TAU, BERMAN_SIGMA]), budget=3)

    def test_closed_under_inverses_and_revalidates(self):
        cl = close_group(make_distributive_set([BERMAN_TAU, BERMAN_SIGMA]))
        for op in cl.ops:
            assert invert(op) in cl.ops
        make_distributive_set(list(cl.ops))  # no exception

    def test_closure_is_idempotent(self):
        cl = close_group(make_distributive_set([BERMAN_TAU, BERMAN_SIGMA]))
        again = close_group(cl.as_distributive_set())
        assert set(again.ops) == set(cl.ops)


class TestLemmaAddingInverses:
    def test_add_inverse_keeps_distributivity_n3(self):
        catalog = enumerate_racks(3)
        for rack in catalog.racks:
            make_distributive_set([rack, invert(rack)])  # must not raise

    def test_add_inverse_berman(self):
        make_distributive_set(
            [BERMAN_TAU, BERMAN_SIGMA, invert(BERMAN_SIGMA)]
        )


class TestIdempotentCenter:
    def test_right_trivial_flagged_true(self):
        S = make_distributive_set([right_trivial(4)])
        assert idempotent_center_report(S) == [(0, True)]

    def test_berman_set_has_no_idempotents(self):
        S = make_distributive_set([BERMAN_TAU, BERMAN_SIGMA])
        assert idempotent_center_report(S) == []

    def test_idempotent_sets_fully_commutative(self):
        import itertools

        from multishelf import OpTable, commutes, distributive_witness, is_idempotent

        n = 2
        idem = [
            t
            for t in (
                OpTable(n, tuple(tuple(flat[a * n + b] for b in range(n)) for a in range(n)))
                for flat in itertools.product(range(n), repeat=n * n)
            )
            if is_idempotent(t)
        ]
        for a in idem:
            for b in idem:
                ok = all(
                    distributive_witness(x, y) is None
                    for x in (a, b)
                    for y in (a, b)
                )
                if ok:
                    assert commutes(a, b)
