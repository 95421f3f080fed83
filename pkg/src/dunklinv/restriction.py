"""Chevalley-type restriction to the Cartan and the image criterion.

Restriction is coordinate projection: under the trace-form identification
the complement of h_m inside g_m is spanned by the root-vector coordinates,
so an invariant polynomial restricts by setting every non-Cartan variable
to zero.  The restricted ring S[h_m] keeps the base Weyl group acting
diagonally (same matrix on every T-level).

Membership in the restriction image is tested by two conditions:

  1. invariance under every diagonal reflection r_alpha, and
  2. for every root alpha and every n >= 1, the n-th power of the coordinate
     of H_alpha (x) T^m divides the n-th delta(H_alpha (x) T^m) derivative.

delta lowers degree by one, so n ranges over 1..deg(p).  For m = 1 this is
exactly the hatted-root divisibility condition (and it characterizes the
image); for m = 2 it is the direct generalization, which is necessary but
not sufficient: the generalized sl(2) case exhibits a one-dimensional gap
at degree 2.  The conditions are not meaningful for m = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg, rootsys
from .exactalg import Polynomial, divide_with_remainder, monomials_of_degree, render
from .liealg import LieAlgebra, TakiffAlgebra, invariants_graded, takiff_extend
from .linalg import GradedSubspace


class RestrictionError(RuntimeError):
    """An identity that is a theorem failed to hold: implementation bug."""


_LEVEL_LETTERS = "uvwz"


@dataclass(frozen=True)
class FrameRoot:
    label: str
    functional: tuple[Fraction, ...]   # alpha(h_c) in Cartan coordinates
    coroot: tuple[Fraction, ...]       # H_alpha in Cartan coordinates


class CartanFrame:
    """Cartan coordinates of a Takiff algebra with the diagonal Weyl action."""

    def __init__(self, gm: TakiffAlgebra):
        base = gm.base
        cartan = base.cartan_indices
        nc = len(cartan)
        self.gm = gm
        self.cartan_flat = [gm.flat(c, s) for s in range(gm.m + 1) for c in cartan]
        self.dim = len(self.cartan_flat)
        self.raw_pairs = [(c, s) for s in range(gm.m + 1) for c in cartan]
        if nc == 1:
            self.names = [_LEVEL_LETTERS[s] for s in range(gm.m + 1)]
        else:
            self.names = [f"{_LEVEL_LETTERS[s]}{k + 1}"
                          for s in range(gm.m + 1) for k in range(nc)]
        self._flat_to_frame = {flat: i for i, flat in enumerate(self.cartan_flat)}

        gram = [[base.form[cb][cc] for cc in cartan] for cb in cartan]
        gram_inv = linalg.mat_inv(gram)
        seen: set[tuple[Fraction, ...]] = set()
        self.roots: list[FrameRoot] = []
        for j in range(base.dim):
            if j in cartan:
                continue
            row = tuple(base.structure[c][j].get(j, Fraction(0)) for c in cartan)
            if row in seen:
                continue
            seen.add(row)
            coroot = tuple(linalg.mat_vec(gram_inv, row))
            pairing = sum((a * b for a, b in zip(row, coroot)), Fraction(0))
            if pairing != 2:
                raise RestrictionError("trace-form coroot fails alpha(H_alpha) = 2")
            label = "(" + ", ".join(str(x) for x in row) + ")"
            self.roots.append(FrameRoot(label=label, functional=row, coroot=coroot))
        self.positive_roots = [r for r in self.roots
                               if next(c for c in r.functional if c) > 0]

        reflections = []
        for root in self.positive_roots:
            reflections.append(tuple(
                tuple(Fraction(i == j) - root.coroot[i] * root.functional[j]
                      for j in range(nc)) for i in range(nc)))
        self.weyl_h = _close_group(reflections, nc)
        self._reflection_by_root = {r.functional: refl
                                    for r, refl in zip(self.positive_roots, reflections)}

    # -- diagonal action ----------------------------------------------------

    def _diag_substitution(self, w_h) -> list[list[Fraction]]:
        # Generators are vectors, so the induced map substitutes via w^T per level.
        nc = len(w_h)
        n = self.dim
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for s in range(self.gm.m + 1):
            for i in range(nc):
                for j in range(nc):
                    matrix[s * nc + i][s * nc + j] = w_h[j][i]
        return matrix

    def diag_act(self, w_h, p: Polynomial) -> Polynomial:
        return p.substitute(self._diag_substitution(w_h))

    def diag_reynolds(self, p: Polynomial) -> Polynomial:
        total = Polynomial.zero(self.dim)
        for w in self.weyl_h:
            total = total + self.diag_act(w, p)
        return total / len(self.weyl_h)

    # -- criterion ingredients ----------------------------------------------

    def divisor(self, root: FrameRoot) -> Polynomial:
        """The coordinate of H_alpha (x) T^m as a linear form on h_m."""
        nc = len(root.coroot)
        coeffs = [Fraction(0)] * self.dim
        for i, c in enumerate(root.coroot):
            coeffs[self.gm.m * nc + i] = c
        return Polynomial.linear_form(coeffs)

    def delta_direction(self, root: FrameRoot) -> list[Fraction]:
        """delta(H_alpha (x) T^m) on S[h_m]: the alpha-derivative in the s=0 slots."""
        direction = [Fraction(0)] * self.dim
        for i, a in enumerate(root.functional):
            direction[i] = a
        return direction

    def parse(self, text: str) -> Polynomial:
        from .exactalg import parse as parse_poly
        return parse_poly(text, names=self.names)

    def render(self, p: Polynomial) -> str:
        return render(p, self.names)


def _close_group(generators, rank):
    ident = tuple(tuple(row) for row in linalg.identity(rank))
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    gens = [tuple(tuple(Fraction(x) for x in row) for row in g) for g in generators]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                prod = tuple(tuple(row) for row in linalg.mat_mul(w, g))
                if prod not in seen:
                    seen.add(prod)
                    elements.append(prod)
                    nxt.append(prod)
                    if len(elements) > 1000:
                        raise RestrictionError("diagonal Weyl closure exceeded bound")
        frontier = nxt
    return elements


def restrict(frame: CartanFrame, p: Polynomial) -> Polynomial:
    """Set every non-Cartan coordinate of g_m to zero; a ring homomorphism."""
    if p.ambient_dim != frame.gm.dim:
        raise ValueError("polynomial does not live on g_m")
    out = {}
    lookup = frame._flat_to_frame
    for mono, coeff in p.terms.items():
        if all(v in lookup for v, _ in mono):
            out[tuple(sorted((lookup[v], e) for v, e in mono))] = coeff
    return Polynomial(frame.dim, out)


def image_basis(frame: CartanFrame, degree: int, work_bound: int = 20000) -> GradedSubspace:
    """Canonical basis of the degree-d restriction image Res S^d[g_m]^{g_m}."""
    invariants = invariants_graded(frame.gm, degree, work_bound)
    restricted = [restrict(frame, b) for b in invariants.basis]
    image = GradedSubspace.from_polynomials(restricted, frame.dim, degree)
    if image.dim != invariants.dim:
        raise RestrictionError("restriction failed to be injective on invariants")
    return image


@dataclass(frozen=True)
class CriterionReport:
    polynomial: str
    condition1: bool
    condition1_witness: str | None
    condition2: bool
    condition2_witness: tuple[str, int, str] | None   # (root, n, remainder)
    in_image: str                                      # "pass" | "fail" | "unknown"
    image_degree_bound: int

    def __post_init__(self):
        if self.in_image == "pass" and not (self.condition1 and self.condition2):
            raise RestrictionError("image member violating the necessary conditions")

    @property
    def passed(self) -> bool:
        return self.condition1 and self.condition2 and self.in_image != "fail"


def criterion_check(frame: CartanFrame, p: Polynomial,
                    image_degree_bound: int = 8,
                    work_bound: int = 20000) -> CriterionReport:
    """Run both membership conditions on p and, within bounds, test membership."""
    if p.ambient_dim != frame.dim:
        raise ValueError("polynomial does not live on h_m")
    cond1, witness1 = True, None
    for root in frame.positive_roots:
        refl = frame._reflection_by_root[root.functional]
        if frame.diag_act(refl, p) != p:
            cond1, witness1 = False, root.label
            break
    cond2, witness2 = True, None
    for root in frame.positive_roots:
        direction = frame.delta_direction(root)
        divisor = frame.divisor(root)
        q = p
        power = Polynomial.constant(frame.dim, 1)
        for n in range(1, max(p.degree(), 0) + 1):
            q = q.directional_derivative(direction)
            if not q:
                break
            power = power * divisor
            _, remainder = divide_with_remainder(q, power)
            if remainder:
                cond2, witness2 = False, (root.label, n, frame.render(remainder))
                break
        if not cond2:
            break
    membership = "pass"
    if p:
        degrees = sorted({sum(e for _, e in mono) for mono in p.terms})
        for d in degrees:
            if d > image_degree_bound:
                membership = "unknown"
                continue
            component = p.homogeneous_component(d)
            if not image_basis(frame, d, work_bound).contains(component):
                membership = "fail"
                break
    return CriterionReport(polynomial=frame.render(p),
                           condition1=cond1, condition1_witness=witness1,
                           condition2=cond2, condition2_witness=witness2,
                           in_image=membership, image_degree_bound=image_degree_bound)


def criterion_subspace(frame: CartanFrame, degree: int) -> GradedSubspace:
    """Degree-d polynomials on h_m satisfying both criterion conditions."""
    invariant = [frame.diag_reynolds(Polynomial(frame.dim, {mono: Fraction(1)}))
                 for mono in monomials_of_degree(frame.dim, degree)]
    base_space = GradedSubspace.from_polynomials(invariant, frame.dim, degree)
    basis = list(base_space.basis)
    if not basis:
        return base_space
    constraint_rows: list[list[Fraction]] = []
    for root in frame.positive_roots:
        direction = frame.delta_direction(root)
        divisor = frame.divisor(root)
        derivatives = list(basis)
        power = Polynomial.constant(frame.dim, 1)
        for n in range(1, degree + 1):
            derivatives = [q.directional_derivative(direction) for q in derivatives]
            if not any(derivatives):
                break
            power = power * divisor
            remainders = [divide_with_remainder(q, power)[1] for q in derivatives]
            support = set()
            for r in remainders:
                support.update(r.terms)
            for mono in sorted(support):
                constraint_rows.append([r.coefficient(mono) for r in remainders])
    if not constraint_rows:
        return base_space
    kernel = linalg.nullspace(constraint_rows, len(basis))
    combos = [sum((b * c for b, c in zip(basis, vec) if c), Polynomial.zero(frame.dim))
              for vec in kernel]
    return GradedSubspace.from_polynomials(combos, frame.dim, degree)


@dataclass(frozen=True)
class ChevalleyReport:
    degree: int
    dim_invariants: int
    dim_restricted: int
    dim_target: int

    @property
    def surjective(self) -> bool:
        return self.dim_restricted == self.dim_target

    @property
    def injective(self) -> bool:
        return self.dim_invariants == self.dim_restricted

    @property
    def isomorphic(self) -> bool:
        return self.surjective and self.injective


_TARGET_SYSTEM = {3: "A1", 8: "A2"}   # dim g -> Weyl group of its Cartan


def chevalley_graded_check(g: LieAlgebra, degree: int,
                           work_bound: int = 20000) -> ChevalleyReport:
    """Compare adjoint invariants, their restriction, and W-invariants at one degree."""
    gm = takiff_extend(g, 0)
    frame = CartanFrame(gm)
    invariants = invariants_graded(gm, degree, work_bound)
    image = image_basis(frame, degree, work_bound)
    system = _TARGET_SYSTEM.get(g.dim)
    if system is None:
        raise ValueError("no reference Weyl group for this algebra")
    rs = rootsys.root_system(system)
    weyl = rootsys.generate_weyl(rs)
    target = rootsys.invariant_basis(weyl, degree)
    return ChevalleyReport(degree=degree,
                           dim_invariants=invariants.dim,
                           dim_restricted=image.dim,
                           dim_target=target.dim)
