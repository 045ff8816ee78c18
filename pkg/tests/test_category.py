from fractions import Fraction

import pytest

from laxepi.category import (
    LinearCategory,
    Morphism,
    compose,
    from_algebra,
    from_quiver,
    opposite,
    validate_category,
)
from laxepi.corpus import (
    a2_category,
    field_category,
    product_field_category,
    summand_pair_category,
    truncated_polynomial_category,
    upper_triangular_category,
)

Q = Fraction


def test_field_category_valid():
    assert validate_category(field_category()) == []


def test_identity_law_violation_reported():
    bad = LinearCategory(
        ["*"], {("*", "*"): 1}, {("*", "*", "*"): [[[2]]]}, {"*": [1]}
    )
    report = validate_category(bad)
    assert report and any("id" in line for line in report)


def test_a2_path_category_valid_and_dims():
    c = a2_category()
    assert validate_category(c) == []
    assert c.hom_dim("1", "1") == 1
    assert c.hom_dim("2", "2") == 1
    assert c.hom_dim("1", "2") == 1
    assert c.hom_dim("2", "1") == 0


def test_compose_identity():
    c = upper_triangular_category()
    f = c.morphism("*", "*", [2, 3, 5])
    assert compose(c, c.identity("*"), f).coords == f.coords
    assert compose(c, f, c.identity("*")).coords == f.coords


def test_compose_matrix_units():
    c = upper_triangular_category()
    e11 = c.basis_morphism("*", "*", 0)
    e12 = c.basis_morphism("*", "*", 1)
    e22 = c.basis_morphism("*", "*", 2)
    assert compose(c, e11, e12).coords == (Q(0), Q(1), Q(0))  # e11·e12 = e12
    assert compose(c, e12, e22).coords == (Q(0), Q(1), Q(0))
    assert compose(c, e12, e11).is_zero()
    assert compose(c, e22, e12).is_zero()


def test_compose_zero_morphism():
    c = upper_triangular_category()
    z = c.zero_morphism("*", "*")
    f = c.morphism("*", "*", [1, 1, 1])
    assert compose(c, z, f).is_zero()


def test_opposite_involution():
    for c in (upper_triangular_category(), a2_category(), summand_pair_category()):
        cop = opposite(c)
        assert validate_category(cop) == []
        copop = opposite(cop)
        assert copop.comp == c.comp
        assert copop._hom == c._hom
        assert copop.identities == c.identities


def test_opposite_swaps_quiver():
    c = a2_category()
    cop = opposite(c)
    assert cop.hom_dim("2", "1") == 1
    assert cop.hom_dim("1", "2") == 0


def test_from_algebra_field():
    c = from_algebra([[[1]]], [1])
    assert c.objects == ("*",) and c.hom_dim("*", "*") == 1


def test_from_quiver_loop_truncated():
    c = from_quiver(["1"], [("x", "1", "1")], (), nilpotency=3)
    assert validate_category(c) == []
    assert c.hom_dim("1", "1") == 3
    x = c.quiver_arrows["x"]
    x2 = compose(c, x, x)
    assert not x2.is_zero()
    assert compose(c, x2, x).is_zero()  # x^3 = 0


def test_from_quiver_relation():
    # commuting square: two paths 1->4 identified
    c = from_quiver(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        relations=[[(1, ("a", "b")), (-1, ("c", "d"))]],
        nilpotency=3,
    )
    assert validate_category(c) == []
    assert c.hom_dim("1", "4") == 1
    ab = compose(c, c.quiver_arrows["b"], c.quiver_arrows["a"])
    cd = compose(c, c.quiver_arrows["d"], c.quiver_arrows["c"])
    assert ab.coords == cd.coords


def test_relation_collapsing_identity_rejected():
    with pytest.raises(ValueError):
        from_quiver(["1"], [("x", "1", "1")], relations=[[(1, ())]], nilpotency=2)


def test_total_dims_agree_t2_vs_a2():
    assert upper_triangular_category().total_dim() == a2_category().total_dim() == 3


def test_summand_pair_category_valid():
    c = summand_pair_category()
    assert validate_category(c) == []
    i1 = c.basis_morphism("P", "PP", 0)
    p1 = c.basis_morphism("PP", "P", 0)
    p2 = c.basis_morphism("PP", "P", 1)
    assert compose(c, p1, i1).coords == (Q(1),)
    assert compose(c, p2, i1).is_zero()
    e11 = compose(c, i1, p1)
    assert e11.coords == (Q(1), Q(0), Q(0), Q(0))


def test_constructors_pass_validation():
    for c in (
        field_category(),
        product_field_category(),
        upper_triangular_category(),
        truncated_polynomial_category(),
        a2_category(),
        summand_pair_category(),
    ):
        assert validate_category(c) == []
