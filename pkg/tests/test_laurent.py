import pytest

from spheremosaic.laurent import LaurentPolynomial as L


def test_construction_drops_zero_coefficients():
    assert L({3: 0, 1: 2}).coeffs == {1: 2}
    assert L().is_zero()
    assert not L({0: 1}).is_zero()


def test_ring_operations():
    p = L({0: 1, 1: 1})  # 1 + x
    q = L({-1: 2})  # 2/x
    assert p + q == L({-1: 2, 0: 1, 1: 1})
    assert p - p == L()
    assert p * q == L({-1: 2, 0: 2})
    assert p * 3 == L({0: 3, 1: 3})
    assert -p == L({0: -1, 1: -1})
    assert (p + 1) == L({0: 2, 1: 1})


def test_powers():
    p = L({0: 1, 1: 1})
    assert p**0 == L.one()
    assert p**3 == L({0: 1, 1: 3, 2: 3, 3: 1})
    assert L({2: -1}) ** -3 == L({-6: -1})
    with pytest.raises(ValueError):
        (p ** -1)


def test_shift_and_mirror():
    p = L({-1: 1, 2: -3})
    assert p.shift(4) == L({3: 1, 6: -3})
    assert p.mirror() == L({1: 1, -2: -3})
    assert p.mirror().mirror() == p
    assert L({-1: 2, 0: 5, 1: 2}).is_palindromic()
    assert not p.is_palindromic()


def test_evaluate():
    p = L({-2: 3, 0: 1, 3: -2})
    assert p.evaluate(1) == 2
    assert p.evaluate(-1) == 3 + 1 + 2
    assert L({2: 5}).evaluate(2) == 20
    with pytest.raises(ValueError):
        L({-1: 1}).evaluate(2)


def test_divide_exact():
    num = L({0: 1, 4: -1})  # 1 - x^4
    den = L({0: 1, 2: -1})  # 1 - x^2
    assert num.divide_exact(den) == L({0: 1, 2: 1})
    shifted = num.shift(-3)
    assert shifted.divide_exact(den) == L({-3: 1, -1: 1})
    with pytest.raises(ValueError):
        L({0: 1, 1: 1}).divide_exact(L({0: 2}))
    with pytest.raises(ZeroDivisionError):
        num.divide_exact(L())


def test_span_and_extremes():
    p = L({-4: 1, 3: 2})
    assert p.min_exp() == -4
    assert p.max_exp() == 3
    assert p.span() == 7
    assert L({0: 1}).span() == 0


def test_pairs_round_trip():
    p = L({-4: -1, -3: 1, -1: 1})
    assert L.from_pairs(p.to_pairs()) == p


def test_format():
    assert L().format() == "0"
    assert L({0: 1}).format() == "1"
    assert L({-4: -1, -3: 1, -1: 1}).format("t") == "-t^-4+t^-3+t^-1"
    assert L({1: 1, 2: -3}).format("t") == "t-3*t^2"


def test_hash_consistency():
    assert hash(L({1: 2})) == hash(L({1: 2, 5: 0}))
    assert L({1: 2}) == L({1: 2, 5: 0})
