"""Sparse multivariate polynomials with exact rational coefficients.

This is the substrate every other module computes in.  A monomial is a
sorted tuple of (variable index, positive exponent) pairs, so x1^2*x3 in a
four-variable ring is ((0, 2), (2, 1)) and the empty tuple is 1.  A
polynomial maps monomials to nonzero Fractions; the zero polynomial has no
terms, so two polynomials are equal exactly when their term maps are.

Terms are ordered graded-lexicographically (total degree first, ties broken
with x1 before x2 before ...), highest first.  Rendering, leading terms and
every reduced basis downstream use this one order, which is what makes
rendered bases canonical.

All values are immutable after construction and every operation is a pure
function, so independent computations can safely run in parallel.  No
floating point appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[tuple[int, int], ...]

Scalar = Fraction | int


class DimensionMismatch(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class ParseError(ValueError):
    """Polynomial text did not match the grammar; carries the position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotDivisible(ArithmeticError):
    """Exact division failed; the remainder itself is meaningful output."""

    def __init__(self, dividend: "Polynomial", divisor: "Polynomial",
                 quotient: "Polynomial", remainder: "Polynomial"):
        super().__init__(f"{dividend!r} is not divisible by {divisor!r}")
        self.quotient = quotient
        self.remainder = remainder


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_from_exponents(exps: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    items = exps.items() if isinstance(exps, Mapping) else exps
    cleaned = [(v, e) for v, e in items if e != 0]
    if any(e < 0 for _, e in cleaned):
        raise ValueError("negative exponent in monomial")
    return tuple(sorted(cleaned))


def dense_exponents(mono: Monomial, ambient_dim: int) -> tuple[int, ...]:
    dense = [0] * ambient_dim
    for v, e in mono:
        dense[v] = e
    return tuple(dense)


def grlex_key(mono: Monomial, ambient_dim: int) -> tuple:
    """Sort key: graded-lex, so max() picks the leading monomial."""
    return (mono_degree(mono), dense_exponents(mono, ambient_dim))


class Polynomial:
    """Immutable sparse polynomial over Q in ``ambient_dim`` variables."""

    __slots__ = ("ambient_dim", "terms")

    def __init__(self, ambient_dim: int,
                 terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        if ambient_dim <= 0:
            raise ValueError("ambient_dim must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(sorted((v, e) for v, e in mono))
            for v, e in mono:
                if not 0 <= v < ambient_dim:
                    raise DimensionMismatch(
                        f"variable index {v} outside ring of dimension {ambient_dim}")
                if e <= 0:
                    raise ValueError("monomial stores a non-positive exponent")
            coeff = Fraction(coeff) + canonical.get(mono, Fraction(0))
            if coeff:
                canonical[mono] = coeff
            else:
                canonical.pop(mono, None)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "terms", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ambient_dim: int) -> "Polynomial":
        return cls(ambient_dim)

    @classmethod
    def constant(cls, ambient_dim: int, value: Scalar) -> "Polynomial":
        return cls(ambient_dim, {(): Fraction(value)})

    @classmethod
    def variable(cls, ambient_dim: int, index: int) -> "Polynomial":
        return cls(ambient_dim, {((index, 1),): Fraction(1)})

    @classmethod
    def linear_form(cls, coefficients: Sequence[Scalar]) -> "Polynomial":
        """The polynomial sum_i c_i x_i in len(coefficients) variables."""
        n = len(coefficients)
        return cls(n, {((i, 1),): Fraction(c) for i, c in enumerate(coefficients) if c})

    # -- ring structure ----------------------------------------------------

    def _require_same_ring(self, other: "Polynomial") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"mixed ambient dimensions {self.ambient_dim} and {other.ambient_dim}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, Fraction(0)) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return self._wrap(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return self._wrap({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial(self.ambient_dim)
            other = Fraction(other)
            return self._wrap({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = mono_mul(m1, m2)
                acc = out.get(mono, Fraction(0)) + c1 * c2
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
        return self._wrap(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Polynomial":
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.ambient_dim, 1)
        for _ in range(n):
            result = result * self
        return result

    def _wrap(self, terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = object.__new__(Polynomial)
        object.__setattr__(p, "ambient_dim", self.ambient_dim)
        object.__setattr__(p, "terms", terms)
        return p

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Polynomial)
                and self.ambient_dim == other.ambient_dim
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, tuple(sorted(self.terms.items()))))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.ambient_dim}, {render(self)!r})"

    # -- structure queries -------------------------------------------------

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> "Polynomial":
        return self._wrap({m: c for m, c in self.terms.items() if mono_degree(m) == d})

    def evaluate_at_zero(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def sorted_terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order."""
        n = self.ambient_dim
        for mono in sorted(self.terms, key=lambda m: grlex_key(m, n), reverse=True):
            yield mono, self.terms[mono]

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        n = self.ambient_dim
        mono = max(self.terms, key=lambda m: grlex_key(m, n))
        return mono, self.terms[mono]

    # -- calculus and substitution ----------------------------------------

    def directional_derivative(self, direction: Sequence[Scalar]) -> "Polynomial":
        """d_xi p = sum_i xi_i dp/dx_i; drops degree by one on homogeneous input."""
        if len(direction) != self.ambient_dim:
            raise DimensionMismatch(
                f"direction of length {len(direction)} in dimension {self.ambient_dim}")
        direction = [Fraction(c) for c in direction]
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            for i, (v, e) in enumerate(mono):
                if not direction[v]:
                    continue
                if e == 1:
                    reduced = mono[:i] + mono[i + 1:]
                else:
                    reduced = mono[:i] + ((v, e - 1),) + mono[i + 1:]
                acc = out.get(reduced, Fraction(0)) + coeff * e * direction[v]
                if acc:
                    out[reduced] = acc
                else:
                    del out[reduced]
        return self._wrap(out)

    def substitute(self, matrix: Sequence[Sequence[Scalar]]) -> "Polynomial":
        """p(Mx): variable x_i becomes the linear form sum_j M[i][j] x_j.

        Composes covariantly: p.substitute(M).substitute(N) == p.substitute(M@N).
        """
        n = self.ambient_dim
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise DimensionMismatch("substitution matrix shape does not match ring")
        images = [Polynomial.linear_form(row) for row in matrix]
        powers: dict[int, list[Polynomial]] = {}

        def power(v: int, e: int) -> Polynomial:
            tower = powers.setdefault(v, [Polynomial.constant(n, 1)])
            while len(tower) <= e:
                tower.append(tower[-1] * images[v])
            return tower[e]

        result = Polynomial(n)
        for mono, coeff in self.terms.items():
            factor = Polynomial.constant(n, coeff)
            for v, e in mono:
                factor = factor * power(v, e)
            result = result + factor
        return result


def divide_with_remainder(p: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Reduce p by d under graded-lex: p = q*d + r, no term of r divisible by lt(d).

    For a single divisor the remainder is linear in p and vanishes exactly
    when d divides p.
    """
    p._require_same_ring(d)
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    n = p.ambient_dim
    lt_mono, lt_coeff = d.leading_term()
    lt_exps = dict(lt_mono)
    work = dict(p.terms)
    quotient: dict[Monomial, Fraction] = {}
    remainder: dict[Monomial, Fraction] = {}
    while work:
        mono = max(work, key=lambda m: grlex_key(m, n))
        coeff = work.pop(mono)
        exps = dict(mono)
        if all(exps.get(v, 0) >= e for v, e in lt_exps.items()):
            q_mono = mono_from_exponents({v: e - lt_exps.get(v, 0) for v, e in exps.items()})
            q_coeff = coeff / lt_coeff
            quotient[q_mono] = quotient.get(q_mono, Fraction(0)) + q_coeff
            for m2, c2 in d.terms.items():
                if m2 == lt_mono:
                    continue
                target = mono_mul(q_mono, m2)
                acc = work.get(target, Fraction(0)) - q_coeff * c2
                if acc:
                    work[target] = acc
                else:
                    work.pop(target, None)
        else:
            remainder[mono] = coeff
    return Polynomial(n, quotient), Polynomial(n, remainder)


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Return q with p = d*q, raising NotDivisible (with the remainder) otherwise."""
    quotient, remainder = divide_with_remainder(p, d)
    if remainder:
        raise NotDivisible(p, d, quotient, remainder)
    return quotient


# -- text form ---------------------------------------------------------------
#
# term     ::= [sign] [rational] {var}
# var      ::= name "^" posint | name
# rational ::= int | int "/" posint
#
# Terms are joined by "+"/"-"; whitespace between variable factors implies
# multiplication.  Default names are x1..xn; callers may pass aliases.


def default_names(ambient_dim: int) -> list[str]:
    return [f"x{i + 1}" for i in range(ambient_dim)]


def render(p: Polynomial, names: Sequence[str] | None = None) -> str:
    """Graded-lex text form, highest degree first; inverse of parse."""
    if names is None:
        names = default_names(p.ambient_dim)
    if not p.terms:
        return "0"
    chunks: list[str] = []
    for mono, coeff in p.sorted_terms():
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        factors = [f"{names[v]}^{e}" if e > 1 else names[v] for v, e in mono]
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = " ".join(factors)
        else:
            body = " ".join([str(mag)] + factors)
        if not chunks:
            chunks.append(body if sign == "+" else f"-{body}")
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)


def parse(text: str, ambient_dim: int | None = None,
          names: Sequence[str] | None = None) -> Polynomial:
    """Parse the grammar above; raises ParseError with the offending position.

    >>> render(parse("x1 + x1", 2))
    '2 x1'
    >>> parse("3/2 x1^2 x2 - x3", 3).coefficient(((2, 1),))
    Fraction(-1, 1)
    """
    if names is None:
        if ambient_dim is None:
            raise ValueError("parse needs ambient_dim or names")
        names = default_names(ambient_dim)
    elif ambient_dim is None:
        ambient_dim = len(names)
    elif ambient_dim != len(names):
        raise ValueError("ambient_dim disagrees with len(names)")
    index = {name: i for i, name in enumerate(names)}

    pos = 0
    end = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < end and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < end and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected an integer", start)
        return int(text[start:pos])

    def read_name() -> str:
        nonlocal pos
        start = pos
        pos += 1
        while pos < end and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        return text[start:pos]

    terms: list[tuple[Monomial, Fraction]] = []
    skip_ws()
    if pos == end:
        raise ParseError("empty polynomial text", pos)
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    while True:
        skip_ws()
        coeff = Fraction(1)
        exps: dict[int, int] = {}
        seen = False
        if pos < end and text[pos].isdigit():
            num = read_int()
            skip_ws()
            if pos < end and text[pos] == "/":
                pos += 1
                skip_ws()
                den_at = pos
                den = read_int()
                if den == 0:
                    raise ParseError("zero denominator", den_at)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            seen = True
        while True:
            skip_ws()
            if pos < end and (text[pos].isalpha() or text[pos] == "_"):
                name_at = pos
                name = read_name()
                if name not in index:
                    raise ParseError(f"unknown variable {name!r}", name_at)
                e = 1
                if pos < end and text[pos] == "^":
                    pos += 1
                    exp_at = pos
                    e = read_int()
                    if e <= 0:
                        raise ParseError("exponent must be positive", exp_at)
                v = index[name]
                exps[v] = exps.get(v, 0) + e
                seen = True
            else:
                break
        if not seen:
            raise ParseError("expected a term", pos)
        terms.append((mono_from_exponents(exps), sign * coeff))
        skip_ws()
        if pos == end:
            break
        if text[pos] not in "+-":
            raise ParseError("expected '+' or '-' between terms", pos)
        sign = -1 if text[pos] == "-" else 1
        pos += 1
        skip_ws()
        if pos == end:
            raise ParseError("dangling sign", pos)
    return Polynomial(ambient_dim, terms)


def monomials_of_degree(ambient_dim: int, degree: int) -> list[Monomial]:
    """All monomials of total degree ``degree``, descending graded-lex."""
    if degree < 0:
        return []
    out: list[Monomial] = []

    def rec(var: int, remaining: int, acc: list[tuple[int, int]]) -> None:
        if var == ambient_dim - 1:
            if remaining:
                acc.append((var, remaining))
                out.append(tuple(acc))
                acc.pop()
            else:
                out.append(tuple(acc))
            return
        for e in range(remaining, -1, -1):
            if e:
                acc.append((var, e))
                rec(var + 1, remaining - e, acc)
                acc.pop()
            else:
                rec(var + 1, remaining, acc)

    rec(0, degree, [])
    return out
