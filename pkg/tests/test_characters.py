import pytest

from superbott.characters import (
    GradedCharacter,
    VirtualCharacter,
    dual_weight,
    external_product,
    lr_coefficient,
    pad_weight,
    rational_tensor,
    schur_product,
    skew_expand,
    weyl_dim,
)
from superbott.partitions import Partition, SkewShape, partitions_of, row_sum, dominates, contains


def test_pad_and_dual():
    assert pad_weight(Partition((2, 1)), 4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        pad_weight(Partition((1, 1, 1)), 2)
    assert dual_weight((2, 0, -1)) == (1, 0, -2)
    assert dual_weight(dual_weight((3, 1, 0))) == (3, 1, 0)


def test_weyl_dim():
    assert weyl_dim((1, 0, 0)) == 3
    assert weyl_dim((1, 1, 0)) == 3
    assert weyl_dim((2, 1, 0)) == 8
    assert weyl_dim((0,) * 5) == 1
    assert weyl_dim((1, 0, 0, -1)) == 15  # adjoint of sl4


def test_lr_basic_values():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (2, 1), (4, 2)) == 1
    assert lr_coefficient((2,), (1,), (2,)) == 0  # size mismatch
    assert lr_coefficient((3,), (1,), (2, 2)) == 0  # no containment


def test_lr_symmetry():
    shapes = [lam for n in range(5) for lam in partitions_of(n)]
    for lam in shapes:
        for mu in shapes:
            for nu in partitions_of(lam.size + mu.size):
                assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def test_lr_support_properties():
    shapes = [lam for n in range(5) for lam in partitions_of(n)]
    for lam in shapes:
        for mu in shapes:
            for nu in partitions_of(lam.size + mu.size):
                if lr_coefficient(lam, mu, nu):
                    assert contains(lam, nu) and contains(mu, nu)
                    assert dominates(row_sum(lam, mu), nu)


def test_schur_product_pieri():
    got = schur_product(Partition((2, 1)), Partition((1,)), max_length=10)
    assert got == {
        Partition((3, 1)): 1,
        Partition((2, 2)): 1,
        Partition((2, 1, 1)): 1,
    }


def test_schur_product_truncation():
    got = schur_product(Partition((1, 1)), Partition((1, 1)), max_length=2)
    assert got == {Partition((2, 2)): 1}


def test_skew_expand():
    got = skew_expand(SkewShape(Partition((2, 1)), Partition((1,))))
    assert got == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert skew_expand(SkewShape(Partition((2, 2)), Partition((1,)))) == {
        Partition((2, 1)): 1
    }


def test_rational_tensor_shift_invariance():
    # V tensor V* in GL(2): adjoint plus trivial
    got = rational_tensor((1, 0), (0, -1))
    assert got == {(1, -1): 1, (0, 0): 1}
    # dimensions match on both sides
    for a, b in [((2, 0), (1, -1)), ((1, 1, 0), (0, -1, -2))]:
        got = rational_tensor(a, b)
        assert sum(c * weyl_dim(w) for w, c in got.items()) == weyl_dim(a) * weyl_dim(b)


def test_rational_tensor_rank_mismatch():
    with pytest.raises(ValueError, match="rank mismatch"):
        rational_tensor((1, 0), (1, 0, 0))


def test_virtual_character_arithmetic():
    a = VirtualCharacter(2, 1)
    a.add_term(((1, 0), (0,)), 1)
    b = VirtualCharacter(2, 1)
    b.add_term(((1, 0), (0,)), -1)
    assert (a + b).is_zero()
    assert a - a == VirtualCharacter(2, 1)
    assert a.scale(3).total_dim() == 6
    with pytest.raises(ValueError, match="rank mismatch"):
        a.add_term(((1,), (0,)), 1)


def test_virtual_character_tensor_and_dual():
    a = VirtualCharacter(2, 0)
    a.add_term(((1, 0), ()), 1)
    sq = a * a
    assert sq.terms == {((2, 0), ()): 1, ((1, 1), ()): 1}
    d = a.dual()
    assert d.terms == {((0, -1), ()): 1}
    assert d.total_dim() == a.total_dim()


def test_virtual_character_json_roundtrip():
    a = VirtualCharacter(2, 1)
    a.add_term(((2, -1), (3,)), -4)
    a.add_term(((1, 0), (0,)), 2)
    obj = a.to_json_obj()
    assert VirtualCharacter.from_json_obj(2, 1, obj) == a


def test_external_product():
    a = VirtualCharacter(2, 0)
    a.add_term(((1, 0), ()), 2)
    b = VirtualCharacter(1, 0)
    b.add_term(((3,), ()), 1)
    got = external_product(a, b)
    assert got.terms == {((1, 0), (3,)): 2}
    assert (got.m, got.n) == (2, 1)


def test_graded_character():
    gc = GradedCharacter(2, 0)
    gc.add_term(0, ((1, 0), ()), 1)
    gc.add_term(2, ((1, 0), ()), 1)
    assert gc.degrees() == [0, 2]
    assert gc.total_dim() == 4
    assert not gc.has_odd_support()
    assert gc.euler_characteristic().terms == {((1, 0), ()): 2}
    gc.add_term(2, ((1, 0), ()), -1)
    assert gc.degrees() == [0]


def test_graded_character_diff():
    a = GradedCharacter(1, 0)
    a.add_term(0, ((2,), ()), 1)
    b = GradedCharacter(1, 0)
    b.add_term(1, ((2,), ()), 1)
    d = a.diff(b)
    assert set(d) == {0, 1}
    assert a.diff(a) == {}
