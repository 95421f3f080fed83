"""Rational Dunkl operators, operator composition and the Dunkl pairing.

T_xi deforms the directional derivative by one divided-difference term per
positive indivisible root:

    T_xi p = d_xi p + sum_{alpha > 0} k_alpha alpha(xi) (p - r_alpha p) / alpha

The two-sided sum over Sigma with prefactor 1/2 collapses to this because
the alpha and -alpha terms coincide; dunkl_apply(literal=True) evaluates the
two-sided form so the collapse is itself checkable.  (1 - r_alpha) p is
always divisible by the linear form alpha; a failed division here means a
bug, never bad input, and exact arithmetic makes the check free of false
alarms.

p(T) substitutes a commuting Dunkl operator for each coordinate: coordinate
x_i is paired with the direction dual to it under the root system's
invariant form (for the orthogonal realizations this is just e_i).  The
pairing <p, q> = (p(T) q)(0) is then symmetric, W-invariant, and positive
definite for positive multiplicities, and the adjoint of T_xi is
multiplication by the linear form dual to xi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .exactalg import Polynomial, exact_divide, monomials_of_degree
from .rootsys import (MultiplicityAssignment, RootSystem, WeylGroup, act,
                      generate_weyl, invariant_basis, reynolds, root_system)


class InternalDivisionError(RuntimeError):
    """(1 - r_alpha) p was not divisible by alpha: implementation bug."""


@dataclass
class DunklContext:
    """A root system, its Weyl group, and a multiplicity assignment."""

    rs: RootSystem
    weyl: WeylGroup
    k: MultiplicityAssignment
    _terms: list = field(init=False, repr=False)
    _dual_directions: list = field(init=False, repr=False)

    def __post_init__(self):
        by_label = self.k.resolve(self.rs)
        self._terms = []
        for idx in self.rs.positive_indivisible():
            k_alpha = by_label[self.rs.orbit_labels[idx]]
            self._terms.append((k_alpha,
                                self.rs.roots[idx],
                                self.rs.root_polynomial(idx),
                                self.rs.reflection(idx)))
        form_inv = linalg.mat_inv(self.rs.form)
        self._dual_directions = [[row[i] for row in form_inv] for i in range(self.rs.rank)]

    @property
    def rank(self) -> int:
        return self.rs.rank

    def dual_form(self, xi: Sequence[Fraction | int]) -> Polynomial:
        """The linear form <xi, .> dual to the vector xi: multiplication partner of T_xi."""
        return Polynomial.linear_form(linalg.mat_vec(self.rs.form, xi))


def _reflection_difference(p: Polynomial, refl, alpha_poly: Polynomial) -> Polynomial:
    diff = p - p.substitute(refl)
    try:
        return exact_divide(diff, alpha_poly)
    except ArithmeticError as exc:  # pragma: no cover - signals a bug
        raise InternalDivisionError(str(exc)) from exc


def dunkl_apply(ctx: DunklContext, xi: Sequence[Fraction | int], p: Polynomial,
                literal: bool = False) -> Polynomial:
    """Apply T_xi to p; homogeneous degree d goes to homogeneous degree d-1.

    literal=True evaluates the two-sided sum over Sigma with prefactor 1/2
    instead of the positive-root form; the results agree identically.
    """
    if len(xi) != ctx.rank:
        raise ValueError(f"direction of length {len(xi)} for rank {ctx.rank}")
    xi = [Fraction(c) for c in xi]
    result = p.directional_derivative(xi)
    for k_alpha, row, alpha_poly, refl in ctx._terms:
        if not k_alpha:
            continue
        alpha_xi = sum((a * c for a, c in zip(row, xi)), Fraction(0))
        if not alpha_xi:
            continue
        quot = _reflection_difference(p, refl, alpha_poly)
        if literal:
            # alpha and -alpha each contribute half; their terms are equal.
            half = k_alpha * alpha_xi / 2
            result = result + quot * half
            neg_quot = _reflection_difference(p, refl, -alpha_poly)
            result = result + neg_quot * (k_alpha * (-alpha_xi) / 2)
        else:
            result = result + quot * (k_alpha * alpha_xi)
    return result


def dunkl_compose(ctx: DunklContext, p: Polynomial, q: Polynomial) -> Polynomial:
    """p(T) applied to q, expanding p monomial by monomial.

    Coordinate x_i acts as T along the form-dual of e_i (equal to e_i in the
    orthogonal realizations); exponents are applied right-to-left in
    variable-index order, which is immaterial since the T's commute.
    """
    if p.ambient_dim != ctx.rank or q.ambient_dim != ctx.rank:
        raise ValueError("polynomials must live on the reflection representation")
    total = Polynomial.zero(ctx.rank)
    for mono, coeff in p.terms.items():
        current = q
        for var, exp in sorted(mono, reverse=True):
            direction = ctx._dual_directions[var]
            for _ in range(exp):
                current = dunkl_apply(ctx, direction, current)
                if not current:
                    break
            if not current:
                break
        total = total + current * coeff
    return total


def commutator_check(ctx: DunklContext, xi: Sequence[Fraction | int],
                     eta: Sequence[Fraction | int], p: Polynomial) -> Polynomial:
    """T_xi T_eta p - T_eta T_xi p; must be the zero polynomial."""
    return (dunkl_apply(ctx, xi, dunkl_apply(ctx, eta, p))
            - dunkl_apply(ctx, eta, dunkl_apply(ctx, xi, p)))


def dunkl_pairing(ctx: DunklContext, p: Polynomial, q: Polynomial) -> Fraction:
    """<p, q> = (p(T) q)(0); symmetric, zero across distinct homogeneous degrees."""
    return dunkl_compose(ctx, p, q).evaluate_at_zero()


def gram_basis(ctx: DunklContext, degree: int, invariants_only: bool) -> list[Polynomial]:
    if invariants_only:
        return list(invariant_basis(ctx.weyl, degree).basis)
    return [Polynomial(ctx.rank, {mono: Fraction(1)})
            for mono in monomials_of_degree(ctx.rank, degree)]


def gram_matrix(ctx: DunklContext, degree: int,
                invariants_only: bool = False) -> list[list[Fraction]]:
    """Gram matrix of the pairing on the degree-d monomial or invariant basis."""
    basis = gram_basis(ctx, degree, invariants_only)
    return [[dunkl_pairing(ctx, b, c) for c in basis] for b in basis]


def positivity_certificate(matrix: Sequence[Sequence[Fraction]]) -> tuple[bool, list[Fraction]]:
    """Exact positive-definiteness via leading principal minors."""
    minors = linalg.leading_principal_minors(matrix)
    return all(m > 0 for m in minors), minors


def invariant_stability_check(ctx: DunklContext, p: Polynomial, q: Polynomial) -> bool:
    """For W-invariant p, q: is p(T) q again W-invariant?  Must be True."""
    if reynolds(ctx.weyl, p) != p or reynolds(ctx.weyl, q) != q:
        raise ValueError("invariant_stability_check requires W-invariant inputs")
    image = dunkl_compose(ctx, p, q)
    return reynolds(ctx.weyl, image) == image


def adjointness_check(ctx: DunklContext, xi: Sequence[Fraction | int],
                      p: Polynomial, q: Polynomial) -> bool:
    """<xi . p, q> == <p, T_xi q> with xi. multiplication by the dual form."""
    left = dunkl_pairing(ctx, ctx.dual_form(xi) * p, q)
    right = dunkl_pairing(ctx, p, dunkl_apply(ctx, xi, q))
    return left == right


def equivariance_check(ctx: DunklContext, w, xi: Sequence[Fraction | int],
                       p: Polynomial) -> bool:
    """w . T_xi (w^{-1} . p) == T_{w xi} p for a Weyl element w."""
    w_inv = ctx.weyl.inverse(w)
    inner = dunkl_apply(ctx, xi, act(w_inv, p))
    left = act(w, inner)
    right = dunkl_apply(ctx, linalg.mat_vec(w, xi), p)
    return left == right


def make_context(system: str, k: str | MultiplicityAssignment) -> DunklContext:
    """Convenience constructor from names, e.g. make_context("B2", "long=1,short=1/2")."""
    rs = root_system(system)
    if isinstance(k, str):
        k = MultiplicityAssignment.parse(k)
    return DunklContext(rs=rs, weyl=generate_weyl(rs), k=k)
