"""Exact character tables for the finite holonomy groups of rank ≤ 4.

Every character value lives in Q(zeta_12), which contains all roots of
unity of order dividing 12 — enough for groups of exponent dividing 12,
which covers every holonomy group occurring in dimension four.  All inner
products are computed exactly; decomposition therefore either returns
literal non-negative integers or raises.

Class representatives are stored as words in the table's abstract
generators, alongside a defining presentation (power relators) used to
match a concrete matrix group against the abstract one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .cyclotomic import Cyc12, I, ZETA3, ZETA6
from .errors import InconsistentRecord, UnknownGroup

ConcreteWord = Tuple[Tuple[str, int], ...]


def _c(x) -> Cyc12:
    return x if isinstance(x, Cyc12) else Cyc12(Fraction(x))


@dataclass(frozen=True)
class CharacterTable:
    name: str
    generators: Tuple[str, ...]
    # power relators (word, exponent) presenting the group
    relators: Tuple[Tuple[ConcreteWord, int], ...]
    class_reps: Tuple[ConcreteWord, ...]
    class_sizes: Tuple[int, ...]
    characters: Tuple[Tuple[Cyc12, ...], ...]

    @property
    def order(self) -> int:
        return sum(self.class_sizes)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(chi[0].rational_part().numerator for chi in self.characters)

    def verify(self) -> None:
        """Exact first and second orthogonality, and sum of squared degrees."""
        n = len(self.class_reps)
        if any(len(chi) != n for chi in self.characters):
            raise InconsistentRecord(f"{self.name}: ragged character table")
        order = self.order
        if sum(d * d for d in self.degrees) != order:
            raise InconsistentRecord(f"{self.name}: degrees do not sum to the order")
        zero = _c(0)
        for i, chi in enumerate(self.characters):
            for j, psi in enumerate(self.characters):
                acc = zero
                for size, a, b in zip(self.class_sizes, chi, psi):
                    acc = acc + _c(size) * a * b.conjugate()
                expected = _c(order if i == j else 0)
                if acc != expected:
                    raise InconsistentRecord(
                        f"{self.name}: row orthogonality fails for chi{i+1}, chi{j+1}"
                    )
        for j in range(n):
            for k in range(n):
                acc = zero
                for chi in self.characters:
                    acc = acc + chi[j] * chi[k].conjugate()
                expected = _c(order // self.class_sizes[j] if j == k else 0)
                if acc != expected:
                    raise InconsistentRecord(
                        f"{self.name}: column orthogonality fails at classes {j}, {k}"
                    )


def decompose(values: Sequence[Cyc12], table: CharacterTable) -> Tuple[int, ...]:
    """Multiplicities of ``values`` (a class function) in the irreducibles.

    Computed exactly in Q(zeta_12); raises InconsistentRecord unless every
    multiplicity is a non-negative integer.
    """
    if len(values) != len(table.class_reps):
        raise InconsistentRecord(
            f"{table.name}: class function has {len(values)} values, "
            f"table has {len(table.class_reps)} classes"
        )
    order = table.order
    out: List[int] = []
    for i, chi in enumerate(table.characters):
        acc = _c(0)
        for size, v, c in zip(table.class_sizes, values, chi):
            acc = acc + _c(size) * v * c.conjugate()
        if not acc.is_rational():
            raise InconsistentRecord(f"{table.name}: non-rational multiplicity of chi{i+1}")
        m = acc.rational_part() / order
        if m.denominator != 1 or m < 0:
            raise InconsistentRecord(
                f"{table.name}: multiplicity of chi{i+1} is {m}, not a non-negative integer"
            )
        out.append(int(m))
    return tuple(out)


def render_decomposition(mults: Sequence[int]) -> str:
    """Render multiplicities in the conventional compact form, e.g. 2χ1+χ3+χ4."""
    parts = []
    for i, m in enumerate(mults, start=1):
        if m == 0:
            continue
        parts.append(f"χ{i}" if m == 1 else f"{m}χ{i}")
    return "+".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# the tables
# ---------------------------------------------------------------------------

_ONE = _c(1)
_MONE = _c(-1)
_Z3 = ZETA3
_Z3SQ = ZETA3 * ZETA3
_Z6 = ZETA6
_Z6_POW = [_c(1)]
for _ in range(5):
    _Z6_POW.append(_Z6_POW[-1] * _Z6)


def _row(*vals) -> Tuple[Cyc12, ...]:
    return tuple(_c(v) for v in vals)


def _w(*letters) -> ConcreteWord:
    return tuple(letters)


TABLE_C1 = CharacterTable(
    name="C1",
    generators=(),
    relators=(),
    class_reps=(_w(),),
    class_sizes=(1,),
    characters=(_row(1),),
)

TABLE_C2 = CharacterTable(
    name="C2",
    generators=("a",),
    relators=(((("a", 1),), 2),),
    class_reps=(_w(), _w(("a", 1))),
    class_sizes=(1, 1),
    characters=(_row(1, 1), _row(1, -1)),
)

TABLE_C2xC2 = CharacterTable(
    name="C2xC2",
    generators=("a", "b"),
    relators=(
        ((("a", 1),), 2),
        ((("b", 1),), 2),
        ((("a", 1), ("b", 1)), 2),
    ),
    class_reps=(_w(), _w(("a", 1)), _w(("b", 1)), _w(("a", 1), ("b", 1))),
    class_sizes=(1, 1, 1, 1),
    characters=(
        _row(1, 1, 1, 1),
        _row(1, 1, -1, -1),
        _row(1, -1, 1, -1),
        _row(1, -1, -1, 1),
    ),
)

TABLE_C3 = CharacterTable(
    name="C3",
    generators=("a",),
    relators=(((("a", 1),), 3),),
    class_reps=(_w(), _w(("a", 1)), _w(("a", 2))),
    class_sizes=(1, 1, 1),
    characters=(
        _row(1, 1, 1),
        (_ONE, _Z3, _Z3SQ),
        (_ONE, _Z3SQ, _Z3),
    ),
)

TABLE_C4 = CharacterTable(
    name="C4",
    generators=("a",),
    relators=(((("a", 1),), 4),),
    class_reps=(_w(), _w(("a", 1)), _w(("a", 2)), _w(("a", 3))),
    class_sizes=(1, 1, 1, 1),
    characters=(
        _row(1, 1, 1, 1),
        _row(1, -1, 1, -1),
        (_ONE, I, _MONE, -I),
        (_ONE, -I, _MONE, I),
    ),
)

TABLE_C6 = CharacterTable(
    name="C6",
    generators=("a",),
    relators=(((("a", 1),), 6),),
    class_reps=tuple(_w(("a", k)) if k else _w() for k in range(6)),
    class_sizes=(1, 1, 1, 1, 1, 1),
    characters=(
        _row(1, 1, 1, 1, 1, 1),
        _row(1, -1, 1, -1, 1, -1),
        (_ONE, _Z3, _Z3SQ, _ONE, _Z3, _Z3SQ),
        (_ONE, _Z3SQ, _Z3, _ONE, _Z3SQ, _Z3),
        tuple(_Z6_POW[k % 6] for k in range(6)),
        tuple(_Z6_POW[(5 * k) % 6] for k in range(6)),
    ),
)

TABLE_S3 = CharacterTable(
    name="S3",
    generators=("a", "b"),
    relators=(
        ((("a", 1),), 3),
        ((("b", 1),), 2),
        ((("b", 1), ("a", 1)), 2),
    ),
    class_reps=(_w(), _w(("a", 1)), _w(("b", 1))),
    class_sizes=(1, 2, 3),
    characters=(
        _row(1, 1, 1),
        _row(1, 1, -1),
        _row(2, -1, 0),
    ),
)

TABLE_D8 = CharacterTable(
    name="D8",
    generators=("a", "b"),
    relators=(
        ((("a", 1),), 4),
        ((("b", 1),), 2),
        ((("a", 1), ("b", 1)), 2),
    ),
    # classes: 1, b, ab, a^2, a
    class_reps=(_w(), _w(("b", 1)), _w(("a", 1), ("b", 1)), _w(("a", 2)), _w(("a", 1))),
    class_sizes=(1, 2, 2, 1, 2),
    characters=(
        _row(1, 1, 1, 1, 1),
        _row(1, -1, -1, 1, 1),
        _row(1, 1, -1, 1, -1),
        _row(1, -1, 1, 1, -1),
        _row(2, 0, 0, -2, 0),
    ),
)

TABLE_D12 = CharacterTable(
    name="D12",
    generators=("a", "b"),
    relators=(
        ((("a", 1),), 2),
        ((("b", 1),), 6),
        ((("a", 1), ("b", 1)), 2),
    ),
    # classes: 1, a, b^3, b^2, ab, b
    class_reps=(
        _w(),
        _w(("a", 1)),
        _w(("b", 3)),
        _w(("b", 2)),
        _w(("a", 1), ("b", 1)),
        _w(("b", 1)),
    ),
    class_sizes=(1, 3, 1, 2, 3, 2),
    characters=(
        _row(1, 1, 1, 1, 1, 1),
        _row(1, -1, 1, 1, -1, 1),
        _row(1, -1, -1, 1, 1, -1),
        _row(1, 1, -1, 1, -1, -1),
        _row(2, 0, 2, -1, 0, -1),
        _row(2, 0, -2, -1, 0, 1),
    ),
)

TABLES: Dict[str, CharacterTable] = {
    t.name: t
    for t in (
        TABLE_C1,
        TABLE_C2,
        TABLE_C2xC2,
        TABLE_C3,
        TABLE_C4,
        TABLE_C6,
        TABLE_S3,
        TABLE_D8,
        TABLE_D12,
    )
}


def get_table(name: str) -> CharacterTable:
    try:
        return TABLES[name]
    except KeyError:
        raise UnknownGroup(f"no character table for group {name!r}") from None
