from fractions import Fraction

import pytest

from dunklinv.exactalg import Polynomial, monomials_of_degree, parse
from dunklinv.linalg import identity, mat_mul, mat_vec
from dunklinv.rootsys import (
    SUPPORTED,
    WEYL_ORDER,
    MultiplicityAssignment,
    UnsupportedSystem,
    act,
    build_root_system,
    generate_weyl,
    invariant_basis,
    reynolds,
    root_orbits,
    root_system,
    transposed_rows,
)
from oracles import series_coefficients

ROOT_COUNTS = {"A1": 2, "A2": 6, "A3": 12, "B2": 8, "B3": 18,
               "C2": 8, "C3": 18, "D3": 12, "G2": 12}


@pytest.mark.parametrize("name", SUPPORTED)
def test_construction_table(name):
    rs = root_system(name)
    assert len(rs.roots) == ROOT_COUNTS[name]
    assert generate_weyl(rs).order == WEYL_ORDER[name]


@pytest.mark.parametrize("name", SUPPORTED)
def test_coroot_normalization(name):
    rs = root_system(name)
    for alpha, coroot in zip(rs.roots, rs.coroots):
        assert sum(a * h for a, h in zip(alpha, coroot)) == 2


@pytest.mark.parametrize("name", SUPPORTED)
def test_roots_closed_under_negation(name):
    rs = root_system(name)
    roots = set(rs.roots)
    for alpha in rs.roots:
        assert tuple(-a for a in alpha) in roots


@pytest.mark.parametrize("name", SUPPORTED)
def test_reflections_involutive_and_permute_roots(name):
    rs = root_system(name)
    root_index = {row: i for i, row in enumerate(rs.roots)}
    for i in range(len(rs.roots)):
        refl = rs.reflection(i)
        assert mat_mul(refl, refl) == identity(rs.rank)
        # r_alpha(H_alpha) = -H_alpha
        assert mat_vec(refl, rs.coroots[i]) == [-h for h in rs.coroots[i]]
        for j, beta in enumerate(rs.roots):
            image = tuple(mat_vec(transposed_rows(refl), beta))
            assert image in root_index
            # coroots transform along with their roots
            assert tuple(mat_vec(refl, rs.coroots[j])) == rs.coroots[root_index[image]]


@pytest.mark.parametrize("name", SUPPORTED)
def test_weyl_preserves_invariant_form(name):
    rs = root_system(name)
    weyl = generate_weyl(rs)
    form = [list(row) for row in rs.form]
    for w in weyl.generators:
        wt = transposed_rows(w)
        assert mat_mul(wt, mat_mul(form, [list(r) for r in w])) == form


def test_reflection_rejects_non_root():
    rs = root_system("A2")
    with pytest.raises(ValueError):
        rs.reflection((5, 5))


def test_unsupported_system():
    with pytest.raises(UnsupportedSystem):
        build_root_system("E", 8)
    with pytest.raises(UnsupportedSystem):
        build_root_system("A", 4)
    with pytest.raises(UnsupportedSystem):
        root_system("Q17")


# -- group action ---------------------------------------------------------------

def test_act_identity_and_sign():
    rs = root_system("A1")
    weyl = generate_weyl(rs)
    p = parse("x1^3", 1)
    assert act(weyl.elements[0], p) == p
    r = rs.reflection(0)
    assert act(r, parse("x1", 1)) == parse("-x1", 1)


def test_act_composition_law_exhaustive_a2():
    rs = root_system("A2")
    weyl = generate_weyl(rs)
    p = parse("x1^2 x2 - 3 x2^3 + x1", 2)
    for w1 in weyl.elements:
        for w2 in weyl.elements:
            w1w2 = tuple(tuple(row) for row in mat_mul(w1, w2))
            assert act(w1, act(w2, p)) == act(w1w2, p)


def test_reynolds_projector():
    rs = root_system("A1")
    weyl = generate_weyl(rs)
    assert reynolds(weyl, parse("x1", 1)) == Polynomial.zero(1)
    assert reynolds(weyl, parse("x1^2", 1)) == parse("x1^2", 1)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_reynolds_idempotent_and_invariant(name):
    rs = root_system(name)
    weyl = generate_weyl(rs)
    for d in range(6):
        p = Polynomial(rs.rank, {mono: Fraction(1 + i)
                                 for i, mono in enumerate(monomials_of_degree(rs.rank, d))})
        image = reynolds(weyl, p)
        assert reynolds(weyl, image) == image
        for w in weyl.elements:
            assert act(w, image) == image


def test_invariant_basis_a1():
    weyl = generate_weyl(root_system("A1"))
    assert invariant_basis(weyl, 2).render() == ["x1^2"]
    assert invariant_basis(weyl, 3).dim == 0


def test_invariant_dimensions_a2_match_hilbert_series():
    weyl = generate_weyl(root_system("A2"))
    expected = series_coefficients([2, 3], 6)
    assert expected == [1, 0, 1, 1, 1, 1, 2]
    dims = [invariant_basis(weyl, d).dim for d in range(7)]
    assert dims == expected


def test_invariant_dimensions_b2_match_hilbert_series():
    weyl = generate_weyl(root_system("B2"))
    expected = series_coefficients([2, 4], 5)
    dims = [invariant_basis(weyl, d).dim for d in range(6)]
    assert dims == expected


# -- orbits and multiplicities -----------------------------------------------------

def test_b2_orbit_structure():
    rs = root_system("B2")
    weyl = generate_weyl(rs)
    orbits = root_orbits(rs, weyl)
    assert sorted(len(o) for o in orbits) == [4, 4]
    for orbit in orbits:
        labels = {rs.orbit_labels[i] for i in orbit}
        assert len(labels) == 1


@pytest.mark.parametrize("name", SUPPORTED)
def test_orbit_labels_constant_on_orbits(name):
    rs = root_system(name)
    weyl = generate_weyl(rs)
    for orbit in root_orbits(rs, weyl):
        assert len({rs.orbit_labels[i] for i in orbit}) == 1


def test_g2_has_six_long_six_short():
    rs = root_system("G2")
    assert sorted(rs.orbit_labels).count("long") == 6
    assert sorted(rs.orbit_labels).count("short") == 6


def test_multiplicity_parse():
    k = MultiplicityAssignment.parse("all=1/2")
    assert k.values == {"all": Fraction(1, 2)}
    k = MultiplicityAssignment.parse("long=1,short=3/2")
    assert k.values == {"long": Fraction(1), "short": Fraction(3, 2)}


def test_multiplicity_validation():
    with pytest.raises(ValueError):
        MultiplicityAssignment({"all": Fraction(-1)})
    with pytest.raises(ValueError):
        MultiplicityAssignment({"weird": Fraction(1)})
    with pytest.raises(ValueError):
        MultiplicityAssignment.parse("all")


def test_multiplicity_resolution():
    b2 = root_system("B2")
    assert MultiplicityAssignment.parse("all=2").resolve(b2) == {
        "long": Fraction(2), "short": Fraction(2)}
    assert MultiplicityAssignment.parse("long=1,short=3/2").resolve(b2) == {
        "long": Fraction(1), "short": Fraction(3, 2)}
    with pytest.raises(ValueError):
        MultiplicityAssignment.parse("long=1").resolve(b2)
    with pytest.raises(ValueError):
        MultiplicityAssignment.parse("long=1,short=2").resolve(root_system("A2"))


def test_k_from_multiplicity_pairs():
    rs = root_system("B2").with_multiplicities({
        "short": (Fraction(2), Fraction(1)), "long": (Fraction(1), Fraction(0))})
    k = rs.weight_multiplicity_k()
    assert k.values == {"short": Fraction(3, 2), "long": Fraction(1, 2)}
    assert root_system("B2").weight_multiplicity_k().values == {
        "short": Fraction(1, 2), "long": Fraction(1, 2)}


def test_with_multiplicities_validation():
    rs = root_system("B2")
    with pytest.raises(ValueError):
        rs.with_multiplicities({"all": (1, 0)})
    with pytest.raises(ValueError):
        rs.with_multiplicities({"short": (1, 0), "long": (-1, 0)})
    with pytest.raises(ValueError):
        rs.with_multiplicities({"short": (1, 0)})


def test_positive_indivisible_picks_one_per_pair():
    for name in SUPPORTED:
        rs = root_system(name)
        positives = rs.positive_indivisible()
        assert len(positives) == len(rs.roots) // 2
        rows = {rs.roots[i] for i in positives}
        for row in rows:
            assert tuple(-a for a in row) not in rows


def test_generate_weyl_deterministic():
    rs = root_system("B2")
    assert generate_weyl(rs).elements == generate_weyl(rs).elements
