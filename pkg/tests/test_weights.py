"""Weightedness: closed-form cases, certificates, weight synthesis."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hiergames import (
    CONJUNCTIVE,
    DISJUNCTIVE,
    HierarchyParams,
    InvalidCoalitionError,
    InvalidParamsError,
    MultisetGame,
    NoCertificateError,
    NotCompleteError,
    TradingTransform,
    WeightedRepresentation,
    build,
    build_disjunctive,
    canonical_parameter_grid,
    certificate_of_nonweightedness,
    dual_params,
    is_weighted,
    is_weighted_conjunctive,
    is_weighted_disjunctive,
    search_trading_transform,
    separates,
    synthesize_weights,
    verify_trading_transform,
)


def disj(n, k):
    return HierarchyParams(DISJUNCTIVE, n, k)


def conj(n, k):
    return HierarchyParams(CONJUNCTIVE, n, k)


class TestTradingTransform:
    def test_balanced(self):
        t = TradingTransform(((2, 0), (0, 4)), ((1, 2), (1, 2)))
        assert t.length == 2
        assert t.is_balanced

    def test_unbalanced_sums(self):
        t = TradingTransform(((2, 0),), ((1, 2),))
        assert not t.is_balanced

    def test_unequal_lengths(self):
        t = TradingTransform(((1, 1), (1, 1)), ((1, 1),))
        assert not t.is_balanced

    def test_empty(self):
        assert not TradingTransform((), ()).is_balanced


class TestDisjunctiveCases:
    # each branch of the characterization, one frozen instance
    CASES = [
        (((5,), (3,)), 1),
        (((2, 3), (2, 3)), 2),
        (((2, 3), (2, 4)), 3),
        (((1, 4), (1, 3)), 4),
        (((1, 3, 3), (1, 3, 4)), 4),
        (((2, 3), (2, 5)), 5),
        (((2, 2, 2), (2, 3, 5)), 5),
    ]

    NON_WEIGHTED = [
        ((2, 4), (2, 4)),
        ((1, 2, 2, 2), (1, 2, 3, 4)),
        ((1, 2, 2, 2, 2), (1, 2, 3, 4, 5)),
    ]

    @pytest.mark.parametrize("nk,case", CASES)
    def test_weighted_cases(self, nk, case):
        decision = is_weighted_disjunctive(disj(*nk))
        assert decision.weighted
        assert decision.case == case

    @pytest.mark.parametrize("nk", NON_WEIGHTED)
    def test_non_weighted(self, nk):
        decision = is_weighted_disjunctive(disj(*nk))
        assert not decision.weighted
        assert decision.case is None

    def test_rejects_wrong_kind(self):
        with pytest.raises(InvalidParamsError):
            is_weighted_disjunctive(conj((2, 3), (2, 3)))

    def test_rejects_non_canonical(self):
        with pytest.raises(InvalidParamsError):
            is_weighted_disjunctive(disj((2, 3), (3, 4)))

    def test_dispatcher(self):
        assert is_weighted(disj((5,), (3,))).case == 1
        assert is_weighted(conj((5,), (3,))).case == 1


class TestConjunctiveCases:
    CASES = [
        (((5,), (3,)), 1),
        (((2, 3), (2, 3)), 2),
        (((2, 3), (2, 4)), 3),
        (((5, 10), (5, 9)), 4),
        (((2, 3, 3), (2, 4, 5)), 4),
        (((2, 3), (2, 2)), 4),
        (((3, 2), (2, 2)), 5),
    ]

    @pytest.mark.parametrize("nk,case", CASES)
    def test_weighted_cases(self, nk, case):
        decision = is_weighted_conjunctive(conj(*nk))
        assert decision.weighted
        assert decision.case == case

    def test_non_weighted(self):
        decision = is_weighted_conjunctive(conj((2, 4), (1, 3)))
        assert not decision.weighted

    def test_rejects_wrong_kind(self):
        with pytest.raises(InvalidParamsError):
            is_weighted_conjunctive(disj((2, 3), (2, 3)))

    def test_rejects_non_canonical(self):
        with pytest.raises(InvalidParamsError):
            is_weighted_conjunctive(conj((2, 3), (2, 5)))

    def test_mirrors_dual(self):
        # the verdict transfers across duality; case tags need not, for
        # example ((2, 3), (2, 4)) is case 3 while its dual is case 2
        for p in canonical_parameter_grid(CONJUNCTIVE, 7):
            mine = is_weighted_conjunctive(p)
            other = is_weighted_disjunctive(dual_params(p))
            assert mine.weighted == other.weighted


class TestCertificates:
    def test_frozen_disjunctive_certificate(self):
        # the two-threshold game on sizes (2, 4): trade the two
        # top players against four bottom players across two coalitions
        t = certificate_of_nonweightedness(disj((2, 4), (2, 4)))
        assert t.x_side == ((2, 0), (0, 4))
        assert t.y_side == ((1, 2), (1, 2))
        assert verify_trading_transform(build_disjunctive((2, 4), (2, 4)), t)

    def test_frozen_conjunctive_certificate(self):
        p = conj((2, 4), (1, 3))
        t = certificate_of_nonweightedness(p)
        assert t.x_side == ((1, 2), (1, 2))
        assert t.y_side == ((0, 4), (2, 0))
        assert verify_trading_transform(build(p), t)

    def test_weighted_params_have_no_certificate(self):
        with pytest.raises(NoCertificateError):
            certificate_of_nonweightedness(disj((2, 3), (2, 3)))

    def test_certificates_across_grid(self):
        for kind in (DISJUNCTIVE, CONJUNCTIVE):
            for p in canonical_parameter_grid(kind, 7):
                if is_weighted(p).weighted:
                    continue
                t = certificate_of_nonweightedness(p)
                assert t.length == 2
                assert verify_trading_transform(build(p), t)


class TestVerify:
    def game(self):
        return build_disjunctive((2, 4), (2, 4))

    def test_accepts_frozen_certificate(self):
        t = TradingTransform(((2, 0), (0, 4)), ((1, 2), (1, 2)))
        assert verify_trading_transform(self.game(), t)

    def test_rejects_unbalanced(self):
        t = TradingTransform(((2, 0),), ((1, 2),))
        assert not verify_trading_transform(self.game(), t)

    def test_rejects_losing_x(self):
        t = TradingTransform(((1, 1), (1, 3)), ((1, 2), (1, 2)))
        assert not verify_trading_transform(self.game(), t)

    def test_rejects_winning_y(self):
        t = TradingTransform(((2, 0), (2, 4)), ((2, 2), (2, 2)))
        assert not verify_trading_transform(self.game(), t)

    def test_validates_coalitions(self):
        t = TradingTransform(((3, 0), (1, 4)), ((2, 2), (2, 2)))
        with pytest.raises(InvalidCoalitionError):
            verify_trading_transform(self.game(), t)


class TestSynthesize:
    def test_frozen_two_level(self):
        # elimination by hand gives 3 per top member, 2 per
        # bottom member, quota 6
        g = build_disjunctive((2, 3), (2, 3))
        rep = synthesize_weights(g)
        assert rep is not None
        assert rep.weights == (Fraction(3), Fraction(2))
        assert rep.quota == Fraction(6)
        assert separates(g, rep)

    def test_frozen_conjunctive(self):
        # weight 7 per top member, 1 per bottom member, quota
        # 39 separates winning from losing exactly
        g = build(conj((5, 10), (5, 9)))
        rep = synthesize_weights(g)
        assert rep is not None
        assert rep.weights == (Fraction(7), Fraction(1))
        assert rep.quota == Fraction(39)
        assert separates(g, rep)

    def test_none_for_non_weighted(self):
        assert synthesize_weights(build_disjunctive((2, 4), (2, 4))) is None

    def test_non_hierarchical_weighted_game(self):
        g = MultisetGame((3, 3), frozenset({(3, 0), (2, 1), (1, 3)}))
        rep = synthesize_weights(g)
        assert rep is not None
        assert separates(g, rep)

    def test_separates_rejects_bad_representation(self):
        g = build_disjunctive((2, 3), (2, 3))
        assert not separates(g, WeightedRepresentation((1, 1), 2))

    def test_separates_checks_width(self):
        g = build_disjunctive((2, 3), (2, 3))
        with pytest.raises(ValueError):
            separates(g, WeightedRepresentation((1, 1, 1), 2))

    def test_quota_never_trivial(self):
        # the returned quota is met by every minimal winning coalition
        g = build_disjunctive((2, 3), (2, 3))
        rep = synthesize_weights(g)
        for w in g.min_winning:
            total = sum(f * x for f, x in zip(rep.weights, w))
            assert total >= rep.quota


class TestSearch:
    def test_frozen_find(self):
        found = search_trading_transform(build_disjunctive((2, 4), (2, 4)))
        assert found is not None
        assert found.x_side == ((0, 4), (2, 0))
        assert found.y_side == ((1, 2), (1, 2))
        assert verify_trading_transform(
            build_disjunctive((2, 4), (2, 4)), found
        )

    def test_none_for_weighted(self):
        assert (
            search_trading_transform(build_disjunctive((2, 3), (2, 3)))
            is None
        )

    def test_none_for_weighted_non_hierarchical(self):
        g = MultisetGame((3, 3), frozenset({(3, 0), (2, 1), (1, 3)}))
        assert search_trading_transform(g) is None

    def test_rejects_short_max_len(self):
        with pytest.raises(ValueError):
            search_trading_transform(
                build_disjunctive((2, 3), (2, 3)), max_len=1
            )

    def test_requires_complete(self):
        g = MultisetGame((2, 2), frozenset({(1, 1)}))
        with pytest.raises(NotCompleteError):
            search_trading_transform(g)


class TestAgreement:
    # closed form, exact synthesis and certificate search must speak
    # with one voice; the acceptance suite runs the full grid, this is
    # the quick version
    @pytest.mark.parametrize("kind", [DISJUNCTIVE, CONJUNCTIVE])
    def test_three_routes_agree(self, kind):
        for p in canonical_parameter_grid(kind, 6):
            g = build(p)
            decision = is_weighted(p)
            rep = synthesize_weights(g)
            found = search_trading_transform(g, max_len=4)
            assert decision.weighted == (rep is not None)
            assert decision.weighted == (found is None)
            if rep is not None:
                assert separates(g, rep)
            if found is not None:
                assert verify_trading_transform(g, found)
