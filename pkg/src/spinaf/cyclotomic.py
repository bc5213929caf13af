"""Exact arithmetic in the cyclotomic field Q(zeta_12) and characteristic
polynomial helpers for integer holonomy matrices.

Every character value of the holonomy groups in dimension four lies in
Q(zeta_12): the eigenvalues of a finite-order element of GL(4, Z) are roots
of unity of order 1, 2, 3, 4, 6 or 12.  Elements are stored on the power
basis 1, z, z^2, z^3 modulo the minimal polynomial z^4 - z^2 + 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import InconsistentRecord

Coeffs = Tuple[Fraction, Fraction, Fraction, Fraction]


class Cyc12:
    """An element of Q(zeta_12) on the power basis (1, z, z^2, z^3)."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(
            self, "c", tuple(Fraction(x) for x in (c0, c1, c2, c3))
        )

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Cyc12 is immutable")

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> "Cyc12":
        out = object.__new__(cls)
        object.__setattr__(out, "c", tuple(coeffs))
        return out

    @classmethod
    def zeta_pow(cls, k: int) -> "Cyc12":
        """zeta_12 ** k for any integer k."""
        return _ZETA_POWERS[k % 12]

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyc12):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc12(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyc12._raw([a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc12._raw([-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                prod[i + j] += a * b
        # reduce modulo z^4 = z^2 - 1
        for k in range(6, 3, -1):
            if prod[k]:
                prod[k - 2] += prod[k]
                prod[k - 4] -= prod[k]
                prod[k] = Fraction(0)
        return Cyc12._raw(prod[:4])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc12._raw([a / other for a in self.c])
        return NotImplemented

    def conjugate(self) -> "Cyc12":
        """Complex conjugation: zeta -> zeta^-1."""
        out = Cyc12(self.c[0])
        for k in (1, 2, 3):
            if self.c[k]:
                out = out + Cyc12.zeta_pow(-k) * self.c[k]
        return out

    # -- inspection --------------------------------------------------------

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise InconsistentRecord(f"expected a rational value, got {self!r}")
        return self.c[0]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Cyc12{self.c}"

    def __str__(self):
        labels = ("", "z", "z^2", "z^3")
        parts = []
        for coeff, lab in zip(self.c, labels):
            if coeff == 0:
                continue
            if not lab:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(lab)
            elif coeff == -1:
                parts.append(f"-{lab}")
            else:
                parts.append(f"{coeff}{lab}")
        if not parts:
            return "0"
        out = parts[0]
        for pz in parts[1:]:
            out += f" - {pz[1:]}" if pz.startswith("-") else f" + {pz}"
        return out


def _zeta_power_table() -> List[Cyc12]:
    powers = [Cyc12(1)]
    z = Cyc12(0, 1)
    for _ in range(11):
        powers.append(powers[-1] * z)
    return powers


_ZETA_POWERS: List[Cyc12] = []
_ZETA_POWERS.extend(_zeta_power_table())

I = Cyc12.zeta_pow(3)
ZETA3 = Cyc12.zeta_pow(4)
ZETA6 = Cyc12.zeta_pow(2)


# ---------------------------------------------------------------------------
# Characteristic polynomials of integer matrices and cyclotomic factors
# ---------------------------------------------------------------------------

# Phi_d as coefficient lists, low degree first, for the d whose primitive
# roots of unity live in Q(zeta_12).
CYCLOTOMIC_POLYS = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    6: (1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


def char_poly(M: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    """Coefficients (low first) of det(tI - M), via Faddeev-LeVerrier."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        # Mk := A @ Mk ;  c_{n-k} = -tr(Mk)/k ;  Mk += c_{n-k} I
        Mk = [
            [sum(A[i][t] * Mk[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(Mk[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        for i in range(n):
            Mk[i][i] += c
    return tuple(coeffs)


def _poly_divmod(num, den):
    num = list(num)
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    r = [Fraction(x) for x in num]
    for i in range(len(q) - 1, -1, -1):
        if len(r) < len(den) + i:
            continue
        f = r[len(den) + i - 1] / den[-1]
        q[i] = f
        if f:
            for j, d in enumerate(den):
                r[i + j] -= f * d
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def cyclotomic_factors(poly: Sequence[Fraction]) -> dict:
    """Factor a monic polynomial into cyclotomic polynomials Phi_d with
    d in {1, 2, 3, 4, 6, 12}; raises InconsistentRecord if it does not
    split that way (i.e. the matrix was not finite order in GL_4(Z))."""
    rem = [Fraction(x) for x in poly]
    mult = {}
    for d, phi in CYCLOTOMIC_POLYS.items():
        phi_f = [Fraction(x) for x in phi]
        while len(rem) > 1:
            q, r = _poly_divmod(rem, phi_f)
            if r:
                break
            mult[d] = mult.get(d, 0) + 1
            rem = q
    if len(rem) != 1 or rem[0] != 1:
        raise InconsistentRecord(
            "characteristic polynomial is not a product of the supported cyclotomics"
        )
    return mult


def lift_power_sign(M: Sequence[Sequence[int]], m: int) -> int:
    """Sign s with x^m = s for either preimage x of M under the double cover.

    Requires M in SO(4) with M^m = 1.  For even m the answer is read off
    from the rotation angles: an eigenvalue pair e^(+-2 pi i j/d) (of
    multiplicative order d) contributes (-1)^(j m / d).  For odd m the
    preimage pair {x, -x} contains exactly one element with x^m = 1, so
    the question has no invariant answer and we return +1 by convention
    for the element of odd order.
    """
    if m % 2:
        return 1
    factors = cyclotomic_factors(char_poly(M))
    parity = 0
    for d, mu in factors.items():
        if d == 1:
            continue
        if m % d:
            raise InconsistentRecord(f"matrix has an eigenvalue of order {d}, but {d} does not divide {m}")
        if d == 2:
            # -1 eigenvalues come in pairs in SO(4); each pair is a half
            # turn and contributes m/2.
            if mu % 2:
                raise InconsistentRecord("odd number of -1 eigenvalues in SO(4)")
            parity += (mu // 2) * (m // 2)
        else:
            # each copy of Phi_d contributes the angles j/d for the j in
            # (Z/d)* with 0 < j < d/2
            js = [j for j in range(1, (d + 1) // 2) if _gcd(j, d) == 1]
            for j in js:
                parity += mu * j * (m // d)
    return -1 if parity % 2 else 1


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
