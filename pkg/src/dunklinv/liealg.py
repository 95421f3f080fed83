"""Concrete sl(n) by structure constants, Takiff extensions, and invariants.

The symmetric algebra S[g_m] is realized literally: polynomial variable
(i, s) *is* the basis vector X_i (x) T^s, with flat index s*dim(g) + i, and
the adjoint action extends Y -> [X, Y] as a derivation.  Invariance is
tested through these derivations (the group is connected, so Lie-algebra
invariance is group invariance) and graded invariant spaces are joint
kernels computed by exact elimination.

Rendered names follow the base algebra with a tensor-degree suffix:
"h" is h (x) 1 and "h_2" is h (x) T^2.

Two structural gradings cut the kernel problem down before any elimination:
monomials are filtered to weight zero under the base Cartan (those
derivations are diagonal), and the truncated bracket is graded by total
T-degree, so the invariant space splits by T-degree as well.  The result is
rechecked against every basis derivation by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .exactalg import Monomial, Polynomial, grlex_key, mono_mul, monomials_of_degree
from .linalg import GradedSubspace, det, nullspace


class WorkBoundExceeded(RuntimeError):
    """A graded computation would exceed the configured monomial budget."""


@dataclass
class LieAlgebra:
    """Finite-dimensional Lie algebra over Q with an invariant trace form."""

    dim: int
    basis_names: tuple[str, ...]
    structure: tuple[tuple[dict[int, Fraction], ...], ...]   # [X_i, X_j] = sum_k c_ijk X_k
    form: tuple[tuple[Fraction, ...], ...]
    cartan_indices: tuple[int, ...]

    def __post_init__(self):
        self._validate()

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        return self.structure[i][j]

    def _validate(self) -> None:
        for i in range(self.dim):
            for j in range(self.dim):
                anti = {k: -c for k, c in self.structure[j][i].items()}
                if self.structure[i][j] != anti:
                    raise ValueError("structure constants are not antisymmetric")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    acc: dict[int, Fraction] = {}
                    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                        for l, c in self.structure[y][z].items():
                            for r, c2 in self.structure[x][l].items():
                                acc[r] = acc.get(r, Fraction(0)) + c * c2
                    if any(acc.values()):
                        raise ValueError(f"Jacobi identity fails on basis triple {(i, j, k)}")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    lhs = sum((c * self.form[l][k] for l, c in self.structure[i][j].items()),
                              Fraction(0))
                    rhs = sum((c * self.form[j][l] for l, c in self.structure[i][k].items()),
                              Fraction(0))
                    if lhs + rhs != 0:
                        raise ValueError("trace form is not invariant")
        if det(self.form) == 0:
            raise ValueError("trace form is degenerate")


def _matrix_units(n: int) -> list[list[list[Fraction]]]:
    return [[[Fraction(int(r == i and c == j)) for c in range(n)] for r in range(n)]
            for i in range(n) for j in range(n)]


def make_sl(n: int) -> LieAlgebra:
    """Chevalley basis of sl(n) with the defining-representation trace form."""
    if n not in (2, 3):
        raise ValueError("only sl(2) and sl(3) are constructed")

    def unit(i: int, j: int) -> list[list[Fraction]]:
        return [[Fraction(int(r == i and c == j)) for c in range(n)] for r in range(n)]

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mats: list[list[list[Fraction]]] = []
    names: list[str] = []
    for i, j in pairs:
        mats.append(unit(i, j))
        names.append("e" if n == 2 else f"e{i + 1}{j + 1}")
    for k in range(n - 1):
        h = [[Fraction(0)] * n for _ in range(n)]
        h[k][k], h[k + 1][k + 1] = Fraction(1), Fraction(-1)
        mats.append(h)
        names.append("h" if n == 2 else f"h{k + 1}")
    for i, j in pairs:
        mats.append(unit(j, i))
        names.append("f" if n == 2 else f"f{i + 1}{j + 1}")
    cartan = tuple(range(len(pairs), len(pairs) + n - 1))
    dim = len(mats)

    def mat_mul(a, b):
        return [[sum((a[r][t] * b[t][c] for t in range(n)), Fraction(0))
                 for c in range(n)] for r in range(n)]

    def expand(mat) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for idx, (i, j) in enumerate(pairs):
            if mat[i][j]:
                out[idx] = mat[i][j]
            if mat[j][i]:
                out[len(pairs) + n - 1 + idx] = mat[j][i]
        partial = Fraction(0)
        for k in range(n - 1):
            partial += mat[k][k]
            if partial:
                out[len(pairs) + k] = partial
        return out

    structure = tuple(
        tuple(expand([[a - b for a, b in zip(row_ab, row_ba)]
                      for row_ab, row_ba in zip(mat_mul(x, y), mat_mul(y, x))])
              for y in mats)
        for x in mats)
    form = tuple(tuple(sum((x[r][c] * y[c][r] for r in range(n) for c in range(n)),
                           Fraction(0)) for y in mats) for x in mats)
    return LieAlgebra(dim=dim, basis_names=tuple(names), structure=structure,
                      form=form, cartan_indices=cartan)


@dataclass
class TakiffAlgebra:
    """g_m = g (x) C[T]/T^{m+1}, with truncated bracket and top-degree pairing."""

    base: LieAlgebra
    m: int
    _ad_cache: dict = field(default_factory=dict, repr=False)
    _inv_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._check_structure()

    @property
    def dim(self) -> int:
        return self.base.dim * (self.m + 1)

    @property
    def basis_names(self) -> tuple[str, ...]:
        names = []
        for s in range(self.m + 1):
            for name in self.base.basis_names:
                names.append(name if s == 0 else f"{name}_{s}")
        return tuple(names)

    def flat(self, i: int, s: int) -> int:
        return s * self.base.dim + i

    def unflat(self, x: int) -> tuple[int, int]:
        return x % self.base.dim, x // self.base.dim

    def bracket_flat(self, x: int, y: int) -> dict[int, Fraction]:
        i, s = self.unflat(x)
        j, t = self.unflat(y)
        if s + t > self.m:
            return {}
        return {self.flat(k, s + t): c for k, c in self.base.structure[i][j].items()}

    def pairing(self, x: int, y: int) -> Fraction:
        i, s = self.unflat(x)
        j, t = self.unflat(y)
        if s + t != self.m:
            return Fraction(0)
        return self.base.form[i][j]

    def pairing_with_element(self, element: Sequence[Fraction | int], y: int) -> Fraction:
        return sum((Fraction(c) * self.pairing(x, y)
                    for x, c in enumerate(element) if c), Fraction(0))

    def cartan_flat(self) -> list[int]:
        return [self.flat(c, s) for s in range(self.m + 1) for c in self.base.cartan_indices]

    def _check_structure(self) -> None:
        dim = self.dim
        for x in range(dim):
            for y in range(dim):
                for z in range(dim):
                    acc: dict[int, Fraction] = {}
                    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                        for l, cf in self.bracket_flat(b, c).items():
                            for r, cf2 in self.bracket_flat(a, l).items():
                                acc[r] = acc.get(r, Fraction(0)) + cf * cf2
                    if any(acc.values()):
                        raise ValueError("truncated bracket violates the Jacobi identity")
        pairing = [[self.pairing(x, y) for y in range(dim)] for x in range(dim)]
        if any(pairing[x][y] != pairing[y][x] for x in range(dim) for y in range(dim)):
            raise ValueError("pairing is not symmetric")
        if det(pairing) == 0:
            raise ValueError("pairing is degenerate")
        for x in range(dim):
            for y in range(dim):
                for z in range(dim):
                    lhs = sum((c * pairing[l][z] for l, c in self.bracket_flat(x, y).items()),
                              Fraction(0))
                    rhs = sum((c * pairing[y][l] for l, c in self.bracket_flat(x, z).items()),
                              Fraction(0))
                    if lhs + rhs != 0:
                        raise ValueError("pairing is not invariant")

    def _ad_images(self, x: int) -> list[dict[int, Fraction]]:
        if x not in self._ad_cache:
            self._ad_cache[x] = [self.bracket_flat(x, y) for y in range(self.dim)]
        return self._ad_cache[x]


def takiff_extend(g: LieAlgebra, m: int) -> TakiffAlgebra:
    """Build g_m; m = 0 returns g with its own form repackaged.

    Extensions are memoized per base algebra so graded results accumulate.
    """
    if not 0 <= m <= 3:
        raise ValueError("truncation order m must be within 0..3")
    cache = getattr(g, "_takiff_cache", None)
    if cache is None:
        cache = {}
        g._takiff_cache = cache
    if m not in cache:
        cache[m] = TakiffAlgebra(base=g, m=m)
    return cache[m]


def adjoint_derivation(gm: TakiffAlgebra, x: int, p: Polynomial) -> Polynomial:
    """The derivation of S[g_m] extending Y -> [X_x, Y] on generators."""
    if p.ambient_dim != gm.dim:
        raise ValueError("polynomial does not live on g_m")
    images = gm._ad_images(x)
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in p.terms.items():
        for idx, (v, e) in enumerate(mono):
            img = images[v]
            if not img:
                continue
            if e == 1:
                reduced = mono[:idx] + mono[idx + 1:]
            else:
                reduced = mono[:idx] + ((v, e - 1),) + mono[idx + 1:]
            scale = coeff * e
            for w, c in img.items():
                target = mono_mul(reduced, ((w, 1),))
                acc = out.get(target, Fraction(0)) + scale * c
                if acc:
                    out[target] = acc
                else:
                    del out[target]
    return Polynomial(gm.dim, out)


def delta_derivation(gm: TakiffAlgebra, x: int | Sequence[Fraction | int],
                     p: Polynomial) -> Polynomial:
    """The constant-coefficient derivation sending generator Y to <X, Y>."""
    if isinstance(x, int):
        direction = [gm.pairing(x, y) for y in range(gm.dim)]
    else:
        direction = [gm.pairing_with_element(x, y) for y in range(gm.dim)]
    return p.directional_derivative(direction)


def _cartan_weights(gm: TakiffAlgebra) -> list[list[Fraction]]:
    """Weight of each flat variable under each base Cartan element."""
    base = gm.base
    weights = []
    for c in base.cartan_indices:
        per_var = []
        for v in range(gm.dim):
            j, _ = gm.unflat(v)
            row = base.structure[c][j]
            if j in base.cartan_indices:
                if row:
                    raise ValueError("Cartan is not abelian")
                per_var.append(Fraction(0))
            else:
                if set(row) - {j}:
                    raise ValueError("basis is not a Cartan weight basis")
                per_var.append(row.get(j, Fraction(0)))
        weights.append(per_var)
    return weights


def derivation_generators(gm: TakiffAlgebra) -> list[int]:
    """All basis derivations except the diagonal base-Cartan ones."""
    skip = {gm.flat(c, 0) for c in gm.base.cartan_indices}
    return [x for x in range(gm.dim) if x not in skip]


def invariants_graded(gm: TakiffAlgebra, degree: int,
                      work_bound: int = 20000) -> GradedSubspace:
    """Canonical basis of the degree-d invariants S^d[g_m]^{g_m}."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    space_size = comb(gm.dim + degree - 1, degree) if degree else 1
    if space_size > work_bound:
        raise WorkBoundExceeded(
            f"degree-{degree} monomial space has dimension {space_size} > {work_bound}")
    key = degree
    if key in gm._inv_cache:
        return gm._inv_cache[key]

    weights = _cartan_weights(gm)
    t_degree = [gm.unflat(v)[1] for v in range(gm.dim)]
    blocks: dict[int, list[Monomial]] = {}
    for mono in monomials_of_degree(gm.dim, degree):
        if any(sum((e * w[v] for v, e in mono), Fraction(0)) for w in weights):
            continue
        tau = sum(e * t_degree[v] for v, e in mono)
        blocks.setdefault(tau, []).append(mono)

    generators = derivation_generators(gm)
    survivors: list[Polynomial] = []
    for tau in sorted(blocks):
        space = [Polynomial(gm.dim, {mono: Fraction(1)}) for mono in blocks[tau]]
        for x in generators:
            if not space:
                break
            images = [adjoint_derivation(gm, x, p) for p in space]
            support: set[Monomial] = set()
            for q in images:
                support.update(q.terms)
            if not support:
                continue
            rows_order = sorted(support, key=lambda mo: grlex_key(mo, gm.dim), reverse=True)
            matrix = [[q.coefficient(mo) for q in images] for mo in rows_order]
            kernel = nullspace(matrix, len(space))
            if len(kernel) == len(space):
                continue
            space = [
                sum((p * c for p, c in zip(space, vec) if c), Polynomial.zero(gm.dim))
                for vec in kernel
            ]
        survivors.extend(space)
    result = GradedSubspace.from_polynomials(survivors, gm.dim, degree)
    gm._inv_cache[key] = result
    return result


def invariant_dimension_series(generator_degrees: Sequence[int], upto: int) -> list[int]:
    """Coefficients of prod_i 1/(1 - t^{d_i}) up to degree `upto`."""
    coeffs = [1] + [0] * upto
    for d in generator_degrees:
        for i in range(d, upto + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs
