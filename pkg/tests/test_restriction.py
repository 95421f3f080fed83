from fractions import Fraction

import pytest

from dunklinv.exactalg import Polynomial, parse
from dunklinv.liealg import invariants_graded, takiff_extend
from dunklinv.linalg import GradedSubspace
from dunklinv.restriction import (
    CartanFrame,
    CriterionReport,
    RestrictionError,
    chevalley_graded_check,
    criterion_check,
    criterion_subspace,
    image_basis,
    restrict,
)
from oracles import series_coefficients


@pytest.fixture(scope="module")
def frame1(sl2):
    return CartanFrame(takiff_extend(sl2, 1))


@pytest.fixture(scope="module")
def frame2(sl2):
    return CartanFrame(takiff_extend(sl2, 2))


def h_span(frame, texts, degree):
    return GradedSubspace.from_polynomials(
        [frame.parse(t) for t in texts], frame.dim, degree)


# -- frame construction ---------------------------------------------------------

def test_sl2_frame_layout(frame1):
    assert frame1.names == ["u", "v"]
    assert frame1.raw_pairs == [(1, 0), (1, 1)]
    root = frame1.positive_roots[0]
    assert root.functional == (Fraction(2),)
    assert root.coroot == (Fraction(1),)
    assert len(frame1.weyl_h) == 2


def test_sl3_frame_layout(sl3):
    frame = CartanFrame(takiff_extend(sl3, 1))
    assert frame.names == ["u1", "u2", "v1", "v2"]
    assert len(frame.positive_roots) == 3
    assert len(frame.weyl_h) == 6
    for root in frame.positive_roots:
        assert sum(a * h for a, h in zip(root.functional, root.coroot)) == 2


def test_divisor_and_delta_direction(frame1, frame2):
    root = frame1.positive_roots[0]
    assert frame1.divisor(root) == frame1.parse("v")
    assert frame1.delta_direction(root) == [Fraction(2), Fraction(0)]
    root2 = frame2.positive_roots[0]
    assert frame2.divisor(root2) == frame2.parse("w")
    assert frame2.delta_direction(root2) == [Fraction(2), Fraction(0), Fraction(0)]


# -- restriction ---------------------------------------------------------------------

def test_restrict_spec_examples(sl2, frame1):
    g1 = frame1.gm
    names = list(g1.basis_names)
    assert restrict(frame1, parse("h_1^2 + 4 e_1 f_1", names=names)) == frame1.parse("v^2")
    assert restrict(frame1, parse("2 h h_1 + 4 e f_1 + 4 f e_1", names=names)) == \
        frame1.parse("2 u v")
    assert restrict(frame1, parse("e f + e_1 f_1", names=names)) == Polynomial.zero(2)


def test_restrict_is_ring_homomorphism(frame1):
    g1 = frame1.gm
    names = list(g1.basis_names)
    p = parse("h^2 + 2 e f_1 + h_1", names=names)
    q = parse("h h_1 - f e_1 + 3", names=names)
    assert restrict(frame1, p * q) == restrict(frame1, p) * restrict(frame1, q)


# -- image bases -----------------------------------------------------------------------

def test_image_basis_sl2_m1_degree2(frame1):
    assert image_basis(frame1, 2) == h_span(frame1, ["v^2", "u v"], 2)


def test_image_basis_sl2_m1_degree4(frame1):
    assert image_basis(frame1, 4) == h_span(frame1, ["v^4", "u v^3", "u^2 v^2"], 4)


def test_image_basis_sl2_m2_degree2_paper_generators(frame2):
    expected = h_span(frame2, ["w^2", "v w", "v^2 + 2 u w"], 2)
    assert image_basis(frame2, 2) == expected


def test_image_dimension_equals_invariant_dimension(frame1, frame2):
    for frame in (frame1, frame2):
        for d in range(5):
            assert image_basis(frame, d).dim == invariants_graded(frame.gm, d).dim


def test_image_elements_diagonally_invariant(frame1):
    for d in range(5):
        for b in image_basis(frame1, d).basis:
            for w in frame1.weyl_h:
                assert frame1.diag_act(w, b) == b


# -- criterion checks ---------------------------------------------------------------------

def test_criterion_u_squared_fails_divisibility(frame1):
    report = criterion_check(frame1, frame1.parse("u^2"))
    assert report.condition1
    assert not report.condition2
    root, n, remainder = report.condition2_witness
    assert n == 1
    assert remainder == "4 u"
    assert report.in_image == "fail"
    assert not report.passed


def test_criterion_uv_passes(frame1):
    report = criterion_check(frame1, frame1.parse("u v"))
    assert report.condition1 and report.condition2
    assert report.in_image == "pass"
    assert report.passed


def test_criterion_v_squared_m2_shows_insufficiency(frame2):
    report = criterion_check(frame2, frame2.parse("v^2"))
    assert report.condition1 and report.condition2
    assert report.in_image == "fail"


def test_criterion_zero_polynomial(frame1):
    report = criterion_check(frame1, Polynomial.zero(2))
    assert report.condition1 and report.condition2 and report.in_image == "pass"


def test_criterion_odd_degree_fails_reflection(frame1):
    report = criterion_check(frame1, frame1.parse("u"))
    assert not report.condition1
    assert report.condition1_witness == "(2)"


def test_criterion_membership_bound(frame1):
    report = criterion_check(frame1, frame1.parse("u v"), image_degree_bound=1)
    assert report.in_image == "unknown"


def test_report_consistency_guard():
    with pytest.raises(RestrictionError):
        CriterionReport(polynomial="u", condition1=False, condition1_witness="(2)",
                        condition2=True, condition2_witness=None,
                        in_image="pass", image_degree_bound=8)


# -- criterion subspaces ---------------------------------------------------------------------

def test_criterion_subspace_sl2_m1(frame1):
    assert criterion_subspace(frame1, 2) == h_span(frame1, ["u v", "v^2"], 2)
    assert criterion_subspace(frame1, 3).dim == 0


def test_criterion_subspace_sl2_m2_degree2(frame2):
    space = criterion_subspace(frame2, 2)
    assert space == h_span(frame2, ["u w", "v^2", "v w", "w^2"], 2)
    assert space.contains(frame2.parse("v^2"))


def test_remark_strict_inclusion(frame2):
    image = image_basis(frame2, 2)
    criterion = criterion_subspace(frame2, 2)
    assert criterion.contains_subspace(image)
    assert not image.contains_subspace(criterion)
    assert criterion.dim - image.dim == 1


def test_theorem_base_case_equality_even_degrees(frame1):
    for d in range(0, 9, 2):
        assert image_basis(frame1, d) == criterion_subspace(frame1, d)


def test_necessity_every_image_element_passes(frame1):
    for d in range(9):
        for b in image_basis(frame1, d).basis:
            report = criterion_check(frame1, b, image_degree_bound=0)
            assert report.condition1 and report.condition2


# -- chevalley graded check ----------------------------------------------------------------------

def test_chevalley_sl2(sl2):
    dims = [chevalley_graded_check(sl2, d) for d in range(9)]
    expected = series_coefficients([2], 8)
    for d, rep in enumerate(dims):
        assert rep.dim_invariants == rep.dim_restricted == rep.dim_target == expected[d]
        assert rep.isomorphic


def test_chevalley_sl3_low_degrees(sl3):
    for d in (0, 1, 2, 3):
        rep = chevalley_graded_check(sl3, d)
        assert rep.isomorphic
        assert rep.dim_target == series_coefficients([2, 3], 3)[d]


def test_chevalley_degree_one_trivial(sl2, sl3):
    for g in (sl2, sl3):
        rep = chevalley_graded_check(g, 1)
        assert (rep.dim_invariants, rep.dim_restricted, rep.dim_target) == (0, 0, 0)
