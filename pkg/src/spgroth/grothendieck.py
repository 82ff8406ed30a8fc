"""Grothendieck and symplectic Grothendieck polynomials.

Both families are generated by beta divided differences from an explicit
top element: the staircase monomial for permutations, and a product of
x_i + x_j + beta*x_i*x_j factors for fpf involutions.  Transition identities
are verified by expanding both sides into honest polynomials.  Polynomials
are expanded in the permutation-indexed basis by repeatedly stripping the
lowest-degree homogeneous part, which is a Z[beta]-combination of Schubert
polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .coxeter import (
    FpfInvolution,
    Permutation,
    fpf_transition_indices,
    perm_length,
    permutation_from_code,
    reduced_word,
    sp_rothe_diagram,
    transition_indices_perm,
    visible_descents,
)
from .polyring import (
    BetaInt,
    MultiPoly,
    apply_word,
    beta_divided_diff,
    oplus,
    scale_x_by_neg_beta,
    set_beta,
)


def _one_plus_beta_x(i: int, nvars: int) -> MultiPoly:
    return MultiPoly.one(nvars) + MultiPoly.beta(nvars) * MultiPoly.x(i, nvars)


# ---------------------------------------------------------------------------
# the two polynomial families
# ---------------------------------------------------------------------------


@cache
def _groth_raw(oneline: tuple[int, ...]) -> MultiPoly:
    w = Permutation(oneline)
    m = w.support
    if m <= 1:
        return MultiPoly.one(1)
    if w == Permutation.longest(m):
        exps = tuple(m - 1 - t for t in range(m))
        return MultiPoly.monomial(exps)
    i = next(i for i in range(1, m) if w(i) < w(i + 1))
    u = w.times_s(i)
    return beta_divided_diff(i, _groth_raw(u.oneline).embed(m))


def grothendieck(w: Permutation, nvars: int | None = None) -> MultiPoly:
    """The member of the unique beta divided difference family indexed by w,
    normalized so the reversal n...321 maps to the staircase monomial."""
    f = _groth_raw(w.oneline)
    if nvars is not None:
        if nvars < max(1, w.support - 1):
            raise ValueError(f"nvars={nvars} below the variables of the result")
        f = f.embed(max(nvars, f.nvars)).restrict(nvars) if nvars < f.nvars else f.embed(nvars)
    return f


def schubert(w: Permutation) -> MultiPoly:
    """Lowest-degree part of grothendieck(w): the beta = 0 specialization."""
    return set_beta(grothendieck(w), 0)


@cache
def _sp_groth_raw(oneline: tuple[int, ...]) -> MultiPoly:
    z = FpfInvolution(oneline)
    m = max(z.support, 2)
    if z == (FpfInvolution.top(m) if z.support else FpfInvolution.theta_involution()):
        f = MultiPoly.one(max(1, m - 1))
        for i in range(1, m):
            for j in range(i + 1, m - i + 1):
                f = f * oplus(MultiPoly.x(i, m - 1), MultiPoly.x(j, m - 1))
        return f
    i = next(i for i in range(1, m) if z(i) < z(i + 1))
    y = z.conj_s(i)
    assert i + 1 != y(i) and y(i) > y(i + 1) and y(i + 1) != i
    return beta_divided_diff(i, _sp_groth_raw(y.oneline).embed(max(m, i + 1)))


def sp_grothendieck(z: FpfInvolution, nvars: int | None = None) -> MultiPoly:
    """The symplectic family member indexed by the fpf involution z,
    normalized so n...321 maps to the product of x_i (+) x_j over its
    dominant diagram."""
    f = _sp_groth_raw(z.oneline)
    if nvars is not None:
        f = f.embed(max(nvars, f.nvars)).restrict(nvars) if nvars < f.nvars else f.embed(nvars)
    return f


def is_sp_dominant(z: FpfInvolution) -> bool:
    """True when the diagram is a column-strict shifted staircase anchor:
    column j holds exactly rows j+1 .. j+mu_j for a strict partition mu."""
    cells = sp_rothe_diagram(z)
    cols: dict[int, set[int]] = {}
    for i, j in cells:
        cols.setdefault(j, set()).add(i)
    if not cols:
        return True
    k = max(cols)
    if set(cols) != set(range(1, k + 1)):
        return False
    mu = []
    for j in range(1, k + 1):
        rows = cols[j]
        m = len(rows)
        if rows != set(range(j + 1, j + m + 1)):
            return False
        mu.append(m)
    return all(mu[t] > mu[t + 1] for t in range(k - 1)) and mu[-1] > 0


def sp_dominant_poly(z: FpfInvolution) -> MultiPoly:
    """Closed product over the diagram; only valid on dominant involutions."""
    if not is_sp_dominant(z):
        raise ValueError(f"{z!r} is not Sp-dominant")
    cells = sorted(sp_rothe_diagram(z))
    n = max((i for i, _ in cells), default=1)
    f = MultiPoly.one(n)
    for i, j in cells:
        f = f * oplus(MultiPoly.x(i, n), MultiPoly.x(j, n))
    return f


# ---------------------------------------------------------------------------
# expansions in the permutation basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrothExpansion:
    terms: tuple[tuple[Permutation, BetaInt], ...]

    def as_dict(self) -> dict[Permutation, BetaInt]:
        return dict(self.terms)

    def coefficient(self, w: Permutation) -> BetaInt:
        return self.as_dict().get(w, BetaInt())

    def is_beta_positive(self) -> bool:
        return all(c.is_nonnegative() for _, c in self.terms)

    def to_poly(self, nvars: int = 1) -> MultiPoly:
        f = MultiPoly.zero(nvars)
        for w, c in self.terms:
            f = f + grothendieck(w) * c
        return f

    def max_length(self) -> int:
        return max((perm_length(w) for w, _ in self.terms), default=0)


@dataclass(frozen=True)
class SpGrothExpansion:
    terms: tuple[tuple[FpfInvolution, BetaInt], ...]

    def as_dict(self) -> dict[FpfInvolution, BetaInt]:
        return dict(self.terms)

    def to_poly(self, nvars: int = 1) -> MultiPoly:
        f = MultiPoly.zero(nvars)
        for z, c in self.terms:
            f = f + sp_grothendieck(z) * c
        return f


class ExpansionDegreeError(ValueError):
    """Raised when an expansion reaches the degree bound; carries the part of
    the input not yet accounted for."""

    def __init__(self, message: str, residual: MultiPoly):
        super().__init__(message)
        self.residual = residual


def _sorted_terms(terms: dict[Permutation, BetaInt]) -> tuple[tuple[Permutation, BetaInt], ...]:
    return tuple(sorted(((w, c) for w, c in terms.items() if c),
                        key=lambda it: (perm_length(it[0]), it[0].oneline)))


def _extract_schubert_level(bottom: MultiPoly) -> dict[Permutation, BetaInt]:
    """Write a homogeneous polynomial as a Z[beta]-combination of Schubert
    polynomials of the same degree.

    Peels the lexicographically least exponent vector; its code names the
    pivot permutation, whose coefficient is read off by applying the plain
    divided difference word and evaluating at x = 0.
    """
    found: dict[Permutation, BetaInt] = {}
    work = bottom
    guard = 0
    while work:
        guard += 1
        if guard > 100000:
            raise RuntimeError("schubert extraction failed to terminate")
        exps = min(work.x_monomials())
        w = permutation_from_code(exps)
        rw = reduced_word(w)
        ambient = max(work.nvars, max(rw) + 1 if rw else 1)
        c = apply_word("partial", rw, work.embed(ambient)).constant_term()
        assert c == work.coefficient(exps), "pivot extraction mismatch"
        found[w] = c
        work = work - schubert(w) * c
    return found


def _expand_groth(f: MultiPoly, max_deg: int, censor: bool):
    """Shared loop: peel lowest-degree parts into basis terms.  With censor
    the loop stops quietly at the bound (the rest of the expansion only
    involves indices of greater length); otherwise the bound is an error."""
    if f.has_negative_exponents():
        raise ValueError("expansion requires a polynomial")
    rem = f
    found: dict[Permutation, BetaInt] = {}
    while rem:
        d = rem.min_degree()
        if d > max_deg:
            if censor:
                return _sorted_terms(found), rem
            raise ExpansionDegreeError(
                f"expansion exceeded max_deg={max_deg} (bottom degree {d})", rem)
        for w, c in _extract_schubert_level(rem.bottom()).items():
            if not c:
                continue
            found[w] = found.get(w, BetaInt()) + c
            g = grothendieck(w)
            rem = rem - g.embed(max(rem.nvars, g.nvars)) * c
    return _sorted_terms(found), None


def expand_in_grothendieck_basis(f: MultiPoly, max_deg: int) -> GrothExpansion:
    """Exact finite expansion of a polynomial in the permutation basis.
    Raises ExpansionDegreeError when the iteration climbs past max_deg."""
    terms, _ = _expand_groth(f, max_deg, censor=False)
    return GrothExpansion(terms)


def expand_in_grothendieck_basis_censored(f: MultiPoly, cutoff: int) -> GrothExpansion:
    """Every basis coefficient for indices of length <= cutoff, discarding the
    rest of the expansion (used for degree-truncated windows, where the
    discarded terms contribute nothing)."""
    terms, _ = _expand_groth(f, cutoff, censor=True)
    return GrothExpansion(terms)


# ---------------------------------------------------------------------------
# transition identities
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransitionCheck:
    lhs: MultiPoly
    rhs: MultiPoly
    equal: bool
    signed_equal: bool | None = None


def _apply_factors_perm(v: Permutation, k: int, indices) -> dict[Permutation, BetaInt]:
    """Expansion of G_v * prod (1 + beta t) over the successive transposition
    operators with the fixed index k."""
    terms: dict[Permutation, BetaInt] = {v: BetaInt.of(1)}
    for a in indices:
        new = dict(terms)
        for u, c in terms.items():
            t = u.times_transposition(*sorted((a, k)))
            new[t] = new.get(t, BetaInt()) + c * BetaInt.beta()
        terms = new
    return terms


def lenart_signed_terms(v: Permutation, k: int) -> tuple[tuple[Permutation, int, int], ...]:
    """All (w, sign, beta_power) in the signed one-variable expansion of
    (1 + beta*x_k) times the basis element of v: chains of length-raising
    transpositions below k (descending targets contribute the sign) followed
    by chains above k."""
    out: list[tuple[Permutation, int, int]] = []

    def down_phase(u: Permutation, last_a: int, p: int):
        out.append((u, (-1) ** p, perm_length(u) - perm_length(v)))
        up_phase(u, None, p)
        for a in range(last_a - 1, 0, -1):
            t = u.times_transposition(a, k)
            if perm_length(t) == perm_length(u) + 1:
                down_phase(t, a, p + 1)

    def up_phase(u: Permutation, last_b: int | None, p: int):
        bound = max(u.support, k) + 1
        top = bound if last_b is None else last_b - 1
        for b in range(top, k, -1):
            t = u.times_transposition(k, b)
            if perm_length(t) == perm_length(u) + 1:
                out.append((t, (-1) ** p, perm_length(t) - perm_length(v)))
                up_phase(t, b, p)

    down_phase(v, k, 0)
    return tuple(out)


def verify_lenart_transition(v: Permutation, k: int, nvars: int | None = None) -> TransitionCheck:
    """Check the two-sided transition identity at index k, and cross-check
    the signed one-variable form against (1 + beta*x_k) * G_v."""
    J, L = transition_indices_perm(v, k)
    nvars = nvars or 1
    lhs = (_one_plus_beta_x(k, k)
           * GrothExpansion(_sorted_terms(_apply_factors_perm(v, k, J))).to_poly(nvars))
    rhs = GrothExpansion(_sorted_terms(_apply_factors_perm(v, k, L))).to_poly(nvars)

    signed = MultiPoly.zero(nvars)
    for w, sign, power in lenart_signed_terms(v, k):
        signed = signed + grothendieck(w) * (BetaInt.beta() ** power) * sign
    direct = _one_plus_beta_x(k, k) * grothendieck(v)
    return TransitionCheck(lhs, rhs, lhs == rhs, signed_equal=(signed == direct))


def _apply_factors_fpf(v: FpfInvolution, fixed: int, indices) -> dict[FpfInvolution, BetaInt]:
    terms: dict[FpfInvolution, BetaInt] = {v: BetaInt.of(1)}
    for a in indices:
        new = dict(terms)
        for y, c in terms.items():
            t = y.conj_transposition(*sorted((a, fixed)))
            new[t] = new.get(t, BetaInt()) + c * BetaInt.beta()
        terms = new
    return terms


def verify_sp_transition(v: FpfInvolution, j: int, k: int, nvars: int | None = None) -> TransitionCheck:
    """Check the symplectic transition identity for the 2-cycle v(j) = k."""
    if v(j) != k or not j < k:
        raise ValueError(f"need v({j}) = {k} with j < k")
    I, L = fpf_transition_indices(v, j, k)
    nvars = nvars or 1
    left = SpGrothExpansion(tuple(_apply_factors_fpf(v, j, I).items())).to_poly(nvars)
    rhs = SpGrothExpansion(tuple(_apply_factors_fpf(v, k, L).items())).to_poly(nvars)
    lhs = _one_plus_beta_x(j, j) * _one_plus_beta_x(k, k) * left
    return TransitionCheck(lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class RecurrenceCheck:
    z: FpfInvolution
    v: FpfInvolution
    j: int
    k: int
    l: int
    i_list: tuple[int, ...]
    certified: bool
    lhs: MultiPoly
    rhs: MultiPoly


def sp_transition_recurrence(z: FpfInvolution, nvars: int | None = None) -> RecurrenceCheck:
    """Descend from z at its last visible descent k: with l the largest index
    beyond k mapped under min(k, z(k)), v = (k,l)z(k,l) and j = v(k), certify

        beta * [z-polynomial] = (1+beta x_j)(1+beta x_k) *
            [v-polynomial through the i-factors] - [v-polynomial]

    and that the upward index list of (v, j, k) is exactly {l}.
    """
    descents = visible_descents(z)
    if not descents:
        raise ValueError("the base involution admits no recurrence step")
    k = descents[-1]
    bound = min(k, z(k))
    l = max(t for t in range(k + 1, z.support + 1) if z(t) < bound)
    v = z.conj_transposition(k, l)
    j = v(k)
    assert v(j) == k and j < k
    I, L = fpf_transition_indices(v, j, k)
    asc_plus_ok = L == (l,)
    nvars = nvars or 1
    lhs = MultiPoly.beta(nvars) * sp_grothendieck(z)
    pi_minus = SpGrothExpansion(tuple(_apply_factors_fpf(v, j, I).items())).to_poly(nvars)
    rhs = (_one_plus_beta_x(j, j) * _one_plus_beta_x(k, k) * pi_minus
           - sp_grothendieck(v))
    certified = asc_plus_ok and lhs == rhs
    return RecurrenceCheck(z, v, j, k, l, I, certified, lhs, rhs)


def beta_rescale_check(w: Permutation) -> bool:
    """Check that rescaling x by -beta and specializing beta to -1 reproduces
    (-beta)^length times the generic polynomial."""
    g = grothendieck(w)
    lhs = g * (BetaInt.beta() ** perm_length(w)) * ((-1) ** perm_length(w))
    rhs = scale_x_by_neg_beta(set_beta(g, -1))
    return lhs == rhs
