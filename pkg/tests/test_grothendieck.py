import pytest

from spgroth.coxeter import (
    FpfInvolution,
    all_fpf_involutions,
    all_permutations,
    ascent_chain_to_top,
    fpf_length,
    parse_fpf,
    parse_permutation,
    perm_length,
)
from spgroth.grothendieck import (
    ExpansionDegreeError,
    beta_rescale_check,
    beta_divided_diff,
    expand_in_grothendieck_basis,
    expand_in_grothendieck_basis_censored,
    grothendieck,
    is_sp_dominant,
    lenart_signed_terms,
    schubert,
    sp_dominant_poly,
    sp_grothendieck,
    sp_transition_recurrence,
    verify_lenart_transition,
    verify_sp_transition,
)
from spgroth.polyring import BetaInt, MultiPoly, set_beta

from helpers import (
    LENART_13452_SIGNED,
    S3_TABLE,
    SP4_TABLE,
    SP_351624_TERMS,
    poly_from_beta_terms,
)

X = MultiPoly.x


class TestGrothendieckTable:
    def test_rank_three_table(self):
        for word, rows in S3_TABLE.items():
            w = parse_permutation(word)
            assert grothendieck(w) == poly_from_beta_terms(3, rows), word

    def test_nvars_embedding(self):
        g = grothendieck(parse_permutation("132"), nvars=5)
        assert g.nvars == 5
        assert g == grothendieck(parse_permutation("132"))
        with pytest.raises(ValueError):
            grothendieck(parse_permutation("321"), nvars=1)

    def test_recursion_consistency(self):
        beta = MultiPoly.beta(1)
        for w in all_permutations(4):
            for i in range(1, 5):
                g = grothendieck(w, nvars=5)
                if w(i) > w(i + 1):
                    assert beta_divided_diff(i, g) == grothendieck(w.times_s(i))
                else:
                    assert beta_divided_diff(i, g) == -beta * g


class TestSchubert:
    def test_examples(self):
        assert schubert(parse_permutation("132")) == X(1, 2) + X(2, 2)
        assert schubert(parse_permutation("312")) == X(1, 1) ** 2
        assert schubert(parse_permutation("123")) == MultiPoly.one(1)

    def test_lowest_degree_part(self):
        for w in all_permutations(4):
            s = schubert(w)
            assert s.is_homogeneous()
            assert s.min_degree() == perm_length(w)
            assert grothendieck(w).bottom() == s

    def test_lex_least_monomial_is_the_code(self):
        # the triangularity that the expansion pivot relies on
        for n in (4, 5):
            for w in all_permutations(n):
                if not w.oneline:
                    continue
                monomials = schubert(w).x_monomials()
                least = min(m for m in monomials)
                trimmed = tuple(least)
                while trimmed and trimmed[-1] == 0:
                    trimmed = trimmed[:-1]
                assert trimmed == w.code()
                assert schubert(w).coefficient(least) == BetaInt.of(1)


class TestSpGrothendieck:
    def test_rank_four_table(self):
        for word, rows in SP4_TABLE.items():
            z = parse_fpf(word)
            assert sp_grothendieck(z) == poly_from_beta_terms(3, rows), word

    def test_smallest_non_dominant(self):
        z = parse_fpf("351624")
        assert sp_grothendieck(z) == poly_from_beta_terms(4, SP_351624_TERMS)
        assert len(sp_grothendieck(z).canonical_terms()) == 30

    def test_recursion_consistency(self):
        beta = MultiPoly.beta(1)
        for z in all_fpf_involutions(6):
            g = sp_grothendieck(z, nvars=7)
            for i in range(1, 7):
                if i + 1 != z(i) and z(i) > z(i + 1) and z(i + 1) != i:
                    assert beta_divided_diff(i, g) == sp_grothendieck(z.conj_s(i))
                else:
                    assert beta_divided_diff(i, g) == -beta * g

    def test_chain_rule_independence(self):
        # computing inside a larger ambient rank gives the same polynomial
        for z in all_fpf_involutions(4):
            top = FpfInvolution.top(6)
            word = ascent_chain_to_top(z, 6)
            f = sp_grothendieck(top)
            for i in reversed(word):
                f = beta_divided_diff(i, f.embed(max(f.nvars, i + 1)))
            assert f == sp_grothendieck(z)

    def test_bottom_is_homogeneous_of_fpf_length(self):
        for z in all_fpf_involutions(6):
            bottom = set_beta(sp_grothendieck(z), 0)
            assert bottom.is_homogeneous()
            assert bottom.min_degree() == fpf_length(z)


class TestSpDominant:
    def test_examples(self):
        assert is_sp_dominant(FpfInvolution.theta_involution())
        assert sp_dominant_poly(FpfInvolution.theta_involution()) == MultiPoly.one(1)
        assert is_sp_dominant(parse_fpf("4321"))
        assert not is_sp_dominant(parse_fpf("351624"))
        with pytest.raises(ValueError):
            sp_dominant_poly(parse_fpf("351624"))

    def test_product_equals_recursion(self):
        for n in (4, 6):
            z = FpfInvolution.top(n)
            assert is_sp_dominant(z)
            assert sp_dominant_poly(z) == sp_grothendieck(z)
        for z in all_fpf_involutions(6):
            if is_sp_dominant(z):
                assert sp_dominant_poly(z) == sp_grothendieck(z)


class TestLenartTransition:
    def test_identity_element(self):
        chk = verify_lenart_transition(parse_permutation("123"), 1)
        assert chk.equal and chk.signed_equal

    def test_paper_signed_example(self):
        v = parse_permutation("13452")
        got = {(tuple(w.oneline), s, p) for w, s, p in lenart_signed_terms(v, 3)}
        assert got == LENART_13452_SIGNED
        chk = verify_lenart_transition(v, 3)
        assert chk.equal and chk.signed_equal

    def test_small_sweep(self):
        for v in all_permutations(3):
            for k in range(1, 5):
                chk = verify_lenart_transition(v, k)
                assert chk.equal and chk.signed_equal, (v, k)


class TestSpTransition:
    def test_base_case(self):
        chk = verify_sp_transition(FpfInvolution.theta_involution(), 1, 2)
        assert chk.equal

    def test_paper_example_terms(self):
        v = FpfInvolution.from_cycles([(1, 2), (3, 5), (4, 8), (6, 7)])
        chk = verify_sp_transition(v, 3, 5)
        assert chk.equal
        # right side is the three-term sum from the worked example
        beta = MultiPoly.beta(1)
        want = (sp_grothendieck(v)
                + beta * sp_grothendieck(FpfInvolution.from_cycles([(1, 2), (3, 8), (4, 5), (6, 7)]))
                + beta * sp_grothendieck(FpfInvolution.from_cycles([(1, 2), (3, 6), (4, 8), (5, 7)]))
                + beta * beta * sp_grothendieck(FpfInvolution.from_cycles([(1, 2), (3, 8), (4, 6), (5, 7)])))
        assert chk.rhs == want

    def test_precondition(self):
        with pytest.raises(ValueError):
            verify_sp_transition(parse_fpf("3412"), 1, 2)

    def test_small_sweep(self):
        for v in all_fpf_involutions(4):
            for j, k in v.arcs():
                assert verify_sp_transition(v, j, k).equal, (v, j, k)


class TestRecurrence:
    def test_examples(self):
        rc = sp_transition_recurrence(parse_fpf("3412"))
        assert rc.certified and (rc.k, rc.l, rc.j) == (2, 3, 1)
        assert rc.v == FpfInvolution.theta_involution()
        rc = sp_transition_recurrence(parse_fpf("4321"))
        assert rc.certified

    def test_theta_raises(self):
        with pytest.raises(ValueError):
            sp_transition_recurrence(FpfInvolution.theta_involution())

    def test_small_sweep(self):
        for z in all_fpf_involutions(4):
            if z == FpfInvolution.theta_involution():
                continue
            assert sp_transition_recurrence(z).certified


class TestExpansion:
    def test_monomial_examples(self):
        e = expand_in_grothendieck_basis(X(1, 1), 4)
        assert e.as_dict() == {parse_permutation("21"): BetaInt.of(1)}
        e = expand_in_grothendieck_basis(sp_grothendieck(parse_fpf("3412")), 4)
        assert e.as_dict() == {parse_permutation("132"): BetaInt.of(1)}

    def test_basis_round_trip(self):
        for w in all_permutations(4):
            e = expand_in_grothendieck_basis(grothendieck(w), 10)
            assert e.as_dict() == {w: BetaInt.of(1)}

    def test_reconstruction_and_linearity(self, rng):
        words = [w for w in all_permutations(3)]
        for _ in range(5):
            coeffs = {w: BetaInt((rng.randint(-2, 2), rng.randint(-1, 1))) for w in words}
            f = MultiPoly.zero(3)
            for w, c in coeffs.items():
                f = f + grothendieck(w) * c
            e = expand_in_grothendieck_basis(f, 10)
            assert e.as_dict() == {w: c for w, c in coeffs.items() if c}
            assert e.to_poly() == f

    def test_additivity(self, rng):
        f = grothendieck(parse_permutation("321")) + grothendieck(parse_permutation("231")) * 2
        g = grothendieck(parse_permutation("312")) * BetaInt.beta()
        ef = expand_in_grothendieck_basis(f, 8).as_dict()
        eg = expand_in_grothendieck_basis(g, 8).as_dict()
        both = expand_in_grothendieck_basis(f + g, 8).as_dict()
        keys = set(ef) | set(eg)
        assert both == {w: ef.get(w, BetaInt()) + eg.get(w, BetaInt()) for w in keys if
                        ef.get(w, BetaInt()) + eg.get(w, BetaInt())}

    def test_max_deg_error_carries_residual(self):
        f = X(1, 2) + X(2, 2)  # expansion needs degree 2
        with pytest.raises(ExpansionDegreeError) as info:
            expand_in_grothendieck_basis(f, 1)
        assert info.value.residual
        assert info.value.residual.min_degree() == 2

    def test_censored_expansion_matches_prefix(self):
        f = sp_grothendieck(parse_fpf("4321"))
        full = expand_in_grothendieck_basis(f, 12).as_dict()
        part = expand_in_grothendieck_basis_censored(f, 2).as_dict()
        assert part == {w: c for w, c in full.items() if perm_length(w) <= 2}

    def test_laurent_input_rejected(self):
        with pytest.raises(ValueError):
            expand_in_grothendieck_basis(X(1, 1, power=-1), 4)


class TestBetaRescale:
    def test_examples(self):
        assert beta_rescale_check(parse_permutation("123"))
        assert beta_rescale_check(parse_permutation("132"))

    def test_small_sweep(self):
        for w in all_permutations(3):
            assert beta_rescale_check(w)
