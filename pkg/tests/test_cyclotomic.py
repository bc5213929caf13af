from fractions import Fraction

from spinaf.cyclotomic import (
    Cyc12,
    I,
    ZETA3,
    ZETA6,
    char_poly,
    cyclotomic_factors,
    lift_power_sign,
)


def test_zeta_orders():
    z = Cyc12.zeta_pow(1)
    acc = Cyc12(1)
    for k in range(1, 12):
        acc = acc * z
        assert acc == Cyc12.zeta_pow(k)
        assert (acc == Cyc12(1)) == (k % 12 == 0)
    assert acc * z == Cyc12(1)


def test_special_elements():
    assert I * I == Cyc12(-1)
    assert ZETA3 * ZETA3 * ZETA3 == Cyc12(1)
    assert ZETA6 * ZETA6 * ZETA6 == Cyc12(-1)
    # 1 + zeta3 + zeta3^2 = 0
    assert Cyc12(1) + ZETA3 + ZETA3 * ZETA3 == Cyc12(0)


def test_conjugate():
    z = Cyc12.zeta_pow(1)
    assert z.conjugate() == Cyc12.zeta_pow(11)
    x = Cyc12(1) + z
    n = x * x.conjugate()
    # the norm is fixed by conjugation (it is real but lies in Q(sqrt 3))
    assert n.conjugate() == n
    assert (x * Cyc12.zeta_pow(3)).conjugate() == x.conjugate() * Cyc12.zeta_pow(-3)


def test_rational_detection():
    assert Cyc12(Fraction(3, 2)).is_rational()
    assert Cyc12(Fraction(3, 2)).rational_part() == Fraction(3, 2)
    assert not I.is_rational()


ROT3 = ((1, 0, 0, 0), (0, 0, -1, 0), (0, 1, -1, 0), (0, 0, 0, 1))
ROT4 = ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
ROT6 = ((1, 0, 0, 0), (0, 0, 1, 0), (0, -1, 1, 0), (0, 0, 0, 1))
IDENT = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_char_poly():
    # identity: (x - 1)^4 = x^4 - 4x^3 + 6x^2 - 4x + 1
    assert char_poly(IDENT) == tuple(Fraction(c) for c in (1, -4, 6, -4, 1))


def test_cyclotomic_factors():
    f = cyclotomic_factors(char_poly(ROT3))
    assert f[3] == 1 and f[1] == 2
    f = cyclotomic_factors(char_poly(ROT4))
    assert f[4] == 1 and f[1] == 2
    f = cyclotomic_factors(char_poly(ROT6))
    assert f[6] == 1 and f[1] == 2


def test_lift_power_sign():
    # a rotation through 2 pi / m acting in one plane lifts to an element of
    # order 2m in Spin(4): its m-th power is -1
    assert lift_power_sign(ROT4, 4) == -1
    assert lift_power_sign(ROT6, 6) == -1
    # order-3 rotation lifts to order 3: cube is +1
    assert lift_power_sign(ROT3, 3) == 1
    assert lift_power_sign(IDENT, 1) == 1
