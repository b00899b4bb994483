import pytest

import tcores


def test_worked_example_chain():
    assert tcores.hook_lengths((3, 2, 1)) == [5, 3, 1, 3, 1, 1]
    assert tcores.structure_numbers((3, 2, 1)) == [5, 3, 1]
    assert tcores.abacus((3, 2, 1), 4) == [0, 2, 0, 1]
    assert tcores.ncoding((3, 2, 1), 4) == [1, -1, 1, -1]
    assert tcores.size_from_ncoding([1, -1, 1, -1]) == 6


def test_self_conjugate_four_core():
    assert tcores.normalized_abacus((4, 1, 1, 1), 4) == [0, 1, 1, 2]
    assert tcores.sc4_squares((4, 1, 1, 1)) == (6, 5)
    assert sorted(map(abs, tcores.sc_even_squares([-1, 0, 0, 1]))) == [1, 11]


def test_counts():
    assert tcores.count_t_cores(4, 1) == 1
    assert tcores.count_sc_t_cores(7, 89) == 3
    for n in range(12):
        brute = sum(1 for p in tcores.partitions(n) if tcores.is_t_core(p, 3))
        assert tcores.count_t_cores(3, n) == brute


def test_forms():
    assert tcores.class_count(-52) == 2
    assert tcores.class_count_7primitive(-2548) == 12
    assert tcores.reduce_form(2, 6, 7) == (2, 2, 3)
    assert str(tcores.class_count_hurwitz(-12)) == "4/3"
    m, n = tcores.gauss_lift(1, 0, 0)
    assert (m, n) == ((0, 1, 0), (0, 0, 1))
    a, b, c = tcores.phi_sc6(())
    assert b * b - 4 * a * c == -140


def test_map47():
    assert tcores.psi((0, 0, 1, 0)) == (-2, -1, 4)
    assert tcores.phi47((0, 0, 1, 0)) == [0, 1, 0, 0, 0, 0, 0]
    assert tcores.rho_inverse(4, 2, 1) == [0, 1, 0, 0, 0, 0, 0]
    assert tcores.verify_two_to_one(3).ok


def test_errors():
    with pytest.raises(tcores.DomainError):
        tcores.class_count(-5)
    with pytest.raises(ValueError):
        tcores.abacus((2,), 2)
    with pytest.raises(ValueError):
        tcores.size_from_ncoding([1, 0])


def test_suite_records():
    recs = tcores.run_suite("theorem15", 3, 5, 0, 5, jobs=2)
    assert len(recs) == 18 and all(r.ok for r in recs)
    bad = tcores.run_suite("theorem11", 4, 4, 6, 6)[0]
    assert not bad.ok and bad.witnesses
