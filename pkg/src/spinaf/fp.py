"""Finitely presented almost-Bieberbach groups and the sign-enumeration
algorithm for counting spin structures.

A group record carries a presentation whose generators are split into
*lattice* generators (mapping into the nilpotent lattice, hence acting
trivially on the fibre) and *holonomy* generators (mapping onto the finite
holonomy group F, each with an assigned integral matrix).  Lifting the
induced orthogonal representation through the double cover amounts to
choosing a sign for each generator; a sign assignment works precisely when
every relator evaluates to +1 in Spin(4).

Because -1 is central, flipping the sign of a generator flips a relator's
value exactly when the relator's exponent sum in that generator is odd, so
validity of an assignment is an affine condition over F_2 on top of the
relator's base value.  ``enumerate_lifts`` exploits this (the full Clifford
evaluation is kept available in ``evaluate_word`` and exercised by the test
suite).

For holonomy groups of odd or mixed order the preimages need not have
coordinates in Q(sqrt 2); existence is then decided on the pullback of a
2-Sylow subgroup of F (whose holonomy *is* rational) and the count follows
from the torsor structure: 2^(mod-2 abelianization rank).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import groups, linalg, spin
from .clifford import CliffordElement
from .errors import (
    EnumerationBoundExceeded,
    InconsistentRecord,
    NotInSO,
    UnsupportedScalar,
)
from .groups import CosetTable

DIM = 4
MAX_DIRECT_GENERATORS = 20

LATTICE = "lattice"
HOLONOMY = "holonomy"


@dataclass(frozen=True)
class ExponentExpr:
    """Affine integer expression const + sum(coeff_i * param_i)."""

    const: int = 0
    coeffs: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def make(cls, const: int = 0, coeffs: Optional[Mapping[str, int]] = None) -> "ExponentExpr":
        items = tuple(sorted((k, v) for k, v in (coeffs or {}).items() if v != 0))
        return cls(const, items)

    def evaluate(self, params: Mapping[str, int]) -> int:
        total = self.const
        for name, coeff in self.coeffs:
            if name not in params:
                raise InconsistentRecord(f"parameter {name!r} has no assigned value")
            total += coeff * params[name]
        return total

    def __str__(self):
        parts = [str(self.const)] if self.const or not self.coeffs else []
        for name, coeff in self.coeffs:
            parts.append(f"{coeff:+d}*{name}")
        return " ".join(parts) if parts else "0"


Word = Tuple[Tuple[str, ExponentExpr], ...]
ConcreteWord = Tuple[Tuple[str, int], ...]


def word(*letters) -> Word:
    """Convenience constructor: word(("a", 2), ("al", ExponentExpr...))."""
    out = []
    for gen, exp in letters:
        if isinstance(exp, int):
            exp = ExponentExpr.make(exp)
        out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class GeneratorDecl:
    name: str
    role: str  # LATTICE or HOLONOMY

    def __post_init__(self):
        if self.role not in (LATTICE, HOLONOMY):
            raise InconsistentRecord(f"unknown generator role {self.role!r}")


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[GeneratorDecl, ...]
    relators: Tuple[Word, ...]
    parameters: Tuple[str, ...] = ()

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InconsistentRecord("duplicate generator names")
        declared = set(names)
        for rel in self.relators:
            for gen, _exp in rel:
                if gen not in declared:
                    raise InconsistentRecord(f"relator mentions undeclared generator {gen!r}")

    @property
    def generator_names(self) -> List[str]:
        return [g.name for g in self.generators]

    def holonomy_generators(self) -> List[str]:
        return [g.name for g in self.generators if g.role == HOLONOMY]

    def lattice_generators(self) -> List[str]:
        return [g.name for g in self.generators if g.role == LATTICE]


@dataclass(frozen=True)
class PowerRelator:
    """A holonomy-group relator of the shape word^power = 1."""

    base: Tuple[Tuple[str, int], ...]
    power: int


@dataclass(frozen=True)
class HolonomyPresentation:
    generators: Tuple[str, ...]
    power_relators: Tuple[PowerRelator, ...]
    sylow_generators: Tuple[Tuple[Tuple[str, int], ...], ...]


@dataclass(frozen=True)
class AlmostBieberbachRecord:
    family: str
    holonomy_name: str
    presentation: Presentation
    matrices: Mapping[str, Tuple[Tuple[int, ...], ...]]
    holonomy_presentation: Optional[HolonomyPresentation] = None
    nilpotency_class: int = 2
    source: str = "reconstruction"
    sylow_pullback: Optional["AlmostBieberbachRecord"] = None

    def matrix_of(self, gen: str) -> Tuple[Tuple[int, ...], ...]:
        if gen in self.matrices:
            return self.matrices[gen]
        return linalg.int_identity(DIM)


@dataclass(frozen=True)
class SignAssignment:
    signs: Tuple[Tuple[str, int], ...]

    def sign_of(self, gen: str) -> int:
        for name, s in self.signs:
            if name == gen:
                return s
        raise KeyError(gen)

    def as_dict(self) -> Dict[str, int]:
        return dict(self.signs)


@dataclass(frozen=True)
class LiftResult:
    exists: bool
    count: int
    valid_assignments: Tuple[SignAssignment, ...]
    strategy: str  # "direct" | "sylow"
    parallelizable: bool


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------


def reduce_params_mod2(record_or_params, params: Optional[Mapping[str, int]] = None) -> Dict[str, int]:
    """Reduce a parameter assignment mod 2 (the count only depends on this)."""
    p = params if params is not None else record_or_params
    return {k: v % 2 for k, v in p.items()}


def _check_params(record: AlmostBieberbachRecord, params: Mapping[str, int]) -> None:
    declared = set(record.presentation.parameters)
    given = set(params)
    if declared != given:
        raise InconsistentRecord(
            f"family {record.family}: expected parameters {sorted(declared)}, got {sorted(given)}"
        )


def instantiate_relators(presentation: Presentation, params: Mapping[str, int]) -> List[ConcreteWord]:
    out = []
    for rel in presentation.relators:
        concrete = []
        for gen, expr in rel:
            e = expr.evaluate(params)
            if e != 0:
                concrete.append((gen, e))
        out.append(tuple(concrete))
    return out


# ---------------------------------------------------------------------------
# base preimages and word evaluation
# ---------------------------------------------------------------------------


def base_preimages(
    record: AlmostBieberbachRecord, params: Optional[Mapping[str, int]] = None
) -> Dict[str, CliffordElement]:
    """Canonical spin preimage per generator (lattice generators map to 1).

    Raises UnsupportedScalar when some holonomy matrix has no preimage over
    Q(sqrt 2); callers fall back to the Sylow strategy.
    """
    del params  # the matrices do not depend on the parameters
    one = CliffordElement.scalar(DIM, 1)
    out: Dict[str, CliffordElement] = {}
    for gen in record.presentation.generators:
        if gen.role == LATTICE:
            out[gen.name] = one
            continue
        M = linalg.as_matrix(record.matrix_of(gen.name))
        if not linalg.is_orthogonal(M):
            raise UnsupportedScalar(
                f"holonomy matrix of {gen.name!r} is not orthogonal over Q(sqrt 2)"
            )
        x, _ = spin.preimage(M)
        out[gen.name] = x
    return out


def evaluate_word(
    w: Sequence[Tuple[str, object]],
    assignment: Mapping[str, int],
    base: Mapping[str, CliffordElement],
    params: Optional[Mapping[str, int]] = None,
) -> CliffordElement:
    """Honest Clifford product of (sign * base)^exponent along a word."""
    result = CliffordElement.scalar(DIM, 1)
    for gen, exp in w:
        if isinstance(exp, ExponentExpr):
            exp = exp.evaluate(params or {})
        x = base[gen]
        if assignment.get(gen, 1) < 0:
            x = -x
        if exp < 0:
            x = x.conjugate()  # inverse of a spin element
            exp = -exp
        result = result * x ** exp
    return result


def _relator_system(
    record: AlmostBieberbachRecord, params: Mapping[str, int]
) -> Tuple[List[str], List[int], List[int]]:
    """The affine F_2 system governing sign assignments.

    Returns (generator names, rows, rhs): an assignment s (bit vector,
    bit i = 1 meaning generator i carries -1) is valid iff for every
    relator r, parity(rows[r] & s) == rhs[r].
    """
    names = record.presentation.generator_names
    pos = {n: i for i, n in enumerate(names)}
    base = base_preimages(record)
    one = CliffordElement.scalar(DIM, 1)
    rows: List[int] = []
    rhs: List[int] = []
    for rel, concrete in zip(
        record.presentation.relators, instantiate_relators(record.presentation, params)
    ):
        value = evaluate_word(concrete, {}, base)
        if value == one:
            b = 0
        elif value == -one:
            b = 1
        else:
            raise InconsistentRecord(
                f"family {record.family}: relator {_render_word(rel)} evaluates to "
                f"{value}, not to +-1; the matrices do not satisfy the presentation"
            )
        row = 0
        for gen, exp in concrete:
            if exp % 2:
                row ^= 1 << pos[gen]
        rows.append(row)
        rhs.append(b)
    return names, rows, rhs


def _render_word(w: Word) -> str:
    if not w:
        return "1"
    return "*".join(f"{g}^({e})" for g, e in w)


def _f2_rank_and_consistency(rows: Sequence[int], rhs: Sequence[int]) -> Tuple[int, bool]:
    """Gaussian elimination over F_2 on an augmented system."""
    aug = [(row << 1) | b for row, b in zip(rows, rhs)]
    basis: List[int] = []
    consistent = True
    for v in aug:
        for b in basis:
            v = min(v, v ^ b)
        if v == 1:
            consistent = False
        elif v:
            basis.append(v)
    rank = sum(1 for b in basis if b > 1)
    return rank, consistent


def abelianization_mod2_rank(presentation: Presentation, params: Mapping[str, int]) -> int:
    """dim_F2 of Hom(Gamma, C_2) = |generators| - rank of the exponent matrix."""
    names = presentation.generator_names
    pos = {n: i for i, n in enumerate(names)}
    rows = []
    for concrete in instantiate_relators(presentation, params):
        row = 0
        for gen, exp in concrete:
            if exp % 2:
                row ^= 1 << pos[gen]
        rows.append(row)
    rank, _ = _f2_rank_and_consistency(rows, [0] * len(rows))
    return len(names) - rank


def enumerate_lifts(record: AlmostBieberbachRecord, params: Mapping[str, int]) -> LiftResult:
    """Count the lifts of the classifying representation to Spin(4).

    Iterates all sign assignments in declaration (lexicographic) order; an
    assignment is valid iff every relator evaluates to +1, which reduces to
    the parity condition computed by ``_relator_system`` because -1 is
    central and base relator values are +-1.
    """
    _check_params(record, params)
    names, rows, rhs = _relator_system(record, params)
    k = len(names)
    if k > MAX_DIRECT_GENERATORS:
        raise EnumerationBoundExceeded(
            f"{k} generators exceeds the direct enumeration bound {MAX_DIRECT_GENERATORS}"
        )
    valid = []
    for bits in range(1 << k):
        if all((bin(row & bits).count("1") & 1) == b for row, b in zip(rows, rhs)):
            valid.append(bits)
    assignments = tuple(
        SignAssignment(tuple((n, -1 if bits >> i & 1 else 1) for i, n in enumerate(names)))
        for bits in valid
    )
    exists = bool(valid)
    return LiftResult(
        exists=exists,
        count=len(valid),
        valid_assignments=assignments,
        strategy="direct",
        parallelizable=exists,
    )


# ---------------------------------------------------------------------------
# Sylow strategy
# ---------------------------------------------------------------------------


def _holonomy_order(record: AlmostBieberbachRecord) -> int:
    mats = [record.matrix_of(g) for g in record.presentation.holonomy_generators()]
    if not mats:
        return 1
    G = groups.FiniteGroup.generated(mats, linalg.int_mat_mul, linalg.int_identity(DIM))
    return len(G)


def is_two_group_holonomy(record: AlmostBieberbachRecord) -> bool:
    order = _holonomy_order(record)
    return order & (order - 1) == 0


def coset_enumerate(
    hol: HolonomyPresentation, subgroup_words: Sequence[Tuple[Tuple[str, int], ...]]
) -> CosetTable:
    """Todd-Coxeter on the holonomy presentation, named-generator flavour."""
    idx = {g: i + 1 for i, g in enumerate(hol.generators)}

    def to_letters(w) -> Tuple[int, ...]:
        out = []
        for gen, exp in w:
            letter = idx[gen] if exp > 0 else -idx[gen]
            out.extend([letter] * abs(exp))
        return tuple(out)

    relators = [to_letters(pr.base) * pr.power for pr in hol.power_relators]
    return groups.todd_coxeter(len(hol.generators), relators, [to_letters(w) for w in subgroup_words])


def sylow_pullback_record(
    record: AlmostBieberbachRecord, params: Mapping[str, int]
) -> AlmostBieberbachRecord:
    """The record for the preimage of Syl_2(F), via Reidemeister-Schreier.

    The Schreier generators' holonomy matrices are the theta-images of the
    corresponding words; generators whose matrix is the identity become
    lattice generators of the pullback.
    """
    hol = record.holonomy_presentation
    if hol is None:
        raise InconsistentRecord(
            f"family {record.family}: no holonomy presentation for the Sylow strategy"
        )
    f_table = coset_enumerate(hol, hol.sylow_generators)
    # Lift the coset action from F to Gamma: lattice generators act
    # trivially, holonomy generators act as their F-images.
    names = record.presentation.generator_names
    pos = {n: i for i, n in enumerate(names)}
    hol_letter = {g: i for i, g in enumerate(hol.generators)}
    nletters = 2 * len(names)
    lifted_rows = []
    for c in range(f_table.index):
        row = [c] * nletters
        for g, fi in hol_letter.items():
            gi = pos[g]
            row[2 * gi] = f_table.table[c][2 * fi]
            row[2 * gi + 1] = f_table.table[c][2 * fi + 1]
        lifted_rows.append(row)
    gamma_table = CosetTable(len(names), lifted_rows)

    def to_letters(concrete: ConcreteWord) -> Tuple[int, ...]:
        out: List[int] = []
        for gen, exp in concrete:
            letter = pos[gen] + 1 if exp > 0 else -(pos[gen] + 1)
            out.extend([letter] * abs(exp))
        return tuple(out)

    gamma_relators = [to_letters(w) for w in instantiate_relators(record.presentation, params)]
    subgens, subrels, transversal = groups.reidemeister_schreier(
        len(names), gamma_relators, gamma_table
    )

    def theta_of_word(letters: Sequence[int]):
        M = linalg.int_identity(DIM)
        for letter in letters:
            g = record.matrix_of(names[abs(letter) - 1])
            if letter < 0:
                g = linalg.int_mat_inverse(g)
            M = linalg.int_mat_mul(M, g)
        return M

    identity = linalg.int_identity(DIM)
    new_gens: List[GeneratorDecl] = []
    new_mats: Dict[str, Tuple[Tuple[int, ...], ...]] = {}
    gen_names = []
    for i, (coset, g) in enumerate(subgens):
        w = transversal[coset] + (g,)
        target = gamma_table.apply_word(0, w)
        M = theta_of_word(list(transversal[coset]) + [g] + [-x for x in reversed(transversal[target])])
        name = f"s{i}"
        gen_names.append(name)
        if M == identity:
            new_gens.append(GeneratorDecl(name, LATTICE))
        else:
            new_gens.append(GeneratorDecl(name, HOLONOMY))
            new_mats[name] = M
    new_relators = tuple(
        tuple((gen_names[abs(letter) - 1], ExponentExpr.make(1 if letter > 0 else -1)) for letter in rel)
        for rel in subrels
    )
    return AlmostBieberbachRecord(
        family=f"{record.family}/Syl2",
        holonomy_name="Syl2",
        presentation=Presentation(tuple(new_gens), new_relators, ()),
        matrices=new_mats,
        holonomy_presentation=None,
        nilpotency_class=record.nilpotency_class,
        source=record.source,
    )


def sylow_strategy(record: AlmostBieberbachRecord, params: Mapping[str, int]) -> LiftResult:
    """Lift count via restriction to the 2-Sylow pullback.

    For 2-group holonomy this is literally direct enumeration.  Otherwise
    existence is decided on the pullback record (all of whose holonomy
    matrices are 2-group images, hence rational) and the count is
    2^(mod-2 abelianization rank) of the full record when a lift exists.
    """
    _check_params(record, params)
    if is_two_group_holonomy(record):
        return enumerate_lifts(record, params)
    pullback = record.sylow_pullback or sylow_pullback_record(record, params)
    _, rows, rhs = _relator_system(pullback, {})
    _, consistent = _f2_rank_and_consistency(rows, rhs)
    if not consistent:
        return LiftResult(False, 0, (), "sylow", False)
    d = abelianization_mod2_rank(record.presentation, params)
    return LiftResult(True, 2 ** d, (), "sylow", True)


@dataclass(frozen=True)
class LiftGroupResult:
    """The preimage of the holonomy group under the double cover."""

    name: str
    order: int
    realization: str  # "spin" (explicit Clifford elements) or "abstract"
    elements: Tuple[CliffordElement, ...] = ()


def _lift_group_abstract(record: AlmostBieberbachRecord) -> LiftGroupResult:
    """Identify the preimage group from the holonomy presentation alone.

    The preimage is the central extension of F by the order-2 kernel; each
    power relator w^m = 1 of F lifts to w^m = (sign) where the sign is read
    off from the rotation angles of theta(w) (its cyclotomic factor
    structure).  Coset enumeration of the extension presentation then
    realizes the group by permutations.
    """
    from .cyclotomic import lift_power_sign

    hol = record.holonomy_presentation
    if hol is None:
        raise InconsistentRecord(
            f"family {record.family}: no holonomy presentation to lift"
        )
    idx = {g: i + 1 for i, g in enumerate(hol.generators)}
    c = len(hol.generators) + 1  # the central kernel generator
    relators: List[Tuple[int, ...]] = [(c, c)]
    for g in idx.values():
        relators.append((g, c, -g, -c))

    def to_letters(w) -> Tuple[int, ...]:
        out: List[int] = []
        for gen, exp in w:
            letter = idx[gen] if exp > 0 else -idx[gen]
            out.extend([letter] * abs(exp))
        return tuple(out)

    for pr in hol.power_relators:
        M = linalg.int_identity(DIM)
        for gen, exp in pr.base:
            g = record.matrix_of(gen)
            if exp < 0:
                g = linalg.int_mat_inverse(g)
            M = linalg.int_mat_mul(M, linalg.int_mat_pow(g, abs(exp)))
        sign = lift_power_sign(M, pr.power)
        rel = to_letters(pr.base) * pr.power
        if sign < 0:
            rel = rel + (c,)
        relators.append(rel)
    G = groups.regular_representation(c, relators)
    name = groups.identify_group(G)
    return LiftGroupResult(name=name, order=len(G), realization="abstract")


def lift_group(record: AlmostBieberbachRecord) -> LiftGroupResult:
    """The preimage group of the holonomy group under the double cover.

    When every holonomy matrix has a spin preimage over Q(sqrt 2) the group
    is closed explicitly inside the Clifford algebra (together with -1);
    otherwise it is identified abstractly from the holonomy presentation.
    """
    try:
        base = base_preimages(record)
    except UnsupportedScalar:
        return _lift_group_abstract(record)
    one = CliffordElement.scalar(DIM, 1)
    gens = [base[g] for g in record.presentation.holonomy_generators()]
    gens.append(-one)
    elements = spin.subgroup_closure(gens)
    G = groups.FiniteGroup(tuple(elements), lambda x, y: x * y, one)
    name = groups.identify_group(G)
    return LiftGroupResult(
        name=name, order=len(elements), realization="spin", elements=tuple(elements)
    )


def count_lifts(record: AlmostBieberbachRecord, params: Mapping[str, int]) -> LiftResult:
    """Dispatch: direct enumeration whenever every holonomy matrix has a
    spin preimage over Q(sqrt 2); otherwise fall back to the Sylow
    strategy."""
    try:
        return enumerate_lifts(record, params)
    except UnsupportedScalar:
        return sylow_strategy(record, params)
