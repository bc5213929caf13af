import itertools
import random

import pytest

from spinaf import catalog as cat
from spinaf import fp
from spinaf.clifford import CliffordElement
from spinaf.errors import InconsistentRecord, UnsupportedScalar


@pytest.fixture(scope="module")
def catalog():
    return cat.load_catalog(cat.bundled_path("catalog.json"))


def params_of(record, bits):
    names = record.presentation.parameters
    assert len(bits) == len(names)
    return dict(zip(names, bits))


def test_family_4_counts(catalog):
    r = catalog.find("4")
    expected = {(0, 0, 0, 0): 16, (0, 1, 0, 0): 8, (1, 0, 0, 0): 8}
    for bits, count in expected.items():
        res = fp.enumerate_lifts(r, params_of(r, bits))
        assert res.count == count
        assert res.strategy == "direct"
        assert len(res.valid_assignments) == count
        assert res.parallelizable == (count > 0)


def test_family_5_nonspin_row(catalog):
    r = catalog.find("5")
    res = fp.enumerate_lifts(r, params_of(r, (1, 0, 0, 1)))
    assert res.count == 0
    assert not res.exists
    assert not res.parallelizable


def test_c6_sylow_counts(catalog):
    r = catalog.find("173")
    assert not fp.is_two_group_holonomy(r)
    for bits, count in {(0, 0, 0, 0): 4, (1, 0, 0, 0): 2,
                        (0, 0, 0, 1): 4, (1, 0, 0, 1): 2}.items():
        res = fp.sylow_strategy(r, params_of(r, bits))
        assert res.count == count
        assert res.strategy == "sylow"


def test_direct_strategy_rejects_irrational_holonomy(catalog):
    r = catalog.find("143")
    with pytest.raises(UnsupportedScalar):
        fp.base_preimages(r)
    with pytest.raises(UnsupportedScalar):
        fp.enumerate_lifts(r, params_of(r, (0, 0, 0, 0)))
    # count_lifts falls back to the sylow strategy transparently
    assert fp.count_lifts(r, params_of(r, (0, 0, 0, 0))).count == 4


def test_strategies_agree_on_two_group_holonomy(catalog):
    for family in ["3", "27", "75", "103", "B4"]:
        r = catalog.find(family)
        assert fp.is_two_group_holonomy(r)
        names = r.presentation.parameters
        rng = random.Random(hash(family) & 0xFFFF)
        for _ in range(4):
            bits = tuple(rng.randint(0, 1) for _ in names)
            p = dict(zip(names, bits))
            assert (fp.enumerate_lifts(r, p).count
                    == fp.sylow_strategy(r, p).count)


def brute_force_count(record, params):
    """Independent oracle: try all sign assignments on the holonomy and
    lattice generators and evaluate every relator as a Clifford product."""
    base = fp.base_preimages(record)
    names = record.presentation.generator_names
    relators = fp.instantiate_relators(record.presentation, params)
    one = CliffordElement.scalar(fp.DIM, 1)
    count = 0
    for signs in itertools.product((1, -1), repeat=len(names)):
        assignment = dict(zip(names, signs))
        if all(fp.evaluate_word(rel, assignment, base) == one for rel in relators):
            count += 1
    return count


def test_count_is_2_to_rank_against_brute_force(catalog):
    rng = random.Random(20)
    for family in ["1", "4", "9b", "27", "33b", "75", "104", "B1", "B5b"]:
        r = catalog.find(family)
        names = r.presentation.parameters
        for _ in range(3):
            params = {n: rng.randint(0, 1) for n in names}
            res = fp.enumerate_lifts(r, params)
            assert res.count == brute_force_count(r, params)
            if res.count:
                # count = 2^(n - rank) is a power of two
                assert res.count & (res.count - 1) == 0


def test_mod2_invariance(catalog):
    rng = random.Random(21)
    for family in ["4", "41", "80", "173", "158"]:
        r = catalog.find(family)
        names = r.presentation.parameters
        for _ in range(3):
            bits = {n: rng.randint(0, 1) for n in names}
            shifted = {n: v + 2 * rng.randint(0, 3) for n, v in bits.items()}
            assert (fp.count_lifts(r, fp.reduce_params_mod2(shifted)).count
                    == fp.count_lifts(r, bits).count)


def test_valid_assignments_form_a_torsor(catalog):
    # the set of valid assignments is a coset of the solution space of the
    # homogeneous system: the pointwise product (XOR) of two valid
    # assignments with a third is again valid
    r = catalog.find("29b")
    res = fp.enumerate_lifts(r, params_of(r, (1, 0, 1, 0, 0)))
    assert res.count == 8
    rng = random.Random(22)
    valid = {tuple(sorted(a.as_dict().items())) for a in res.valid_assignments}
    picks = [rng.choice(res.valid_assignments) for _ in range(9)]
    for x, y, z in zip(picks[0::3], picks[1::3], picks[2::3]):
        combo = {
            g: x.as_dict()[g] * y.as_dict()[g] * z.as_dict()[g]
            for g in x.as_dict()
        }
        assert tuple(sorted(combo.items())) in valid


def test_lift_groups_have_double_order(catalog):
    expected = {
        "1": "C2", "4": "C4", "27": "Q8", "75": "C8", "103": "Q16",
        "143": "C6", "158": "C3:C4", "168": "C12", "184": "C3:Q8",
    }
    from spinaf import holonomy
    for family, name in expected.items():
        r = catalog.find(family)
        g = fp.lift_group(r)
        assert g.name == name
        assert g.order == 2 * holonomy.matrix_group_closure(r).order


def test_wrong_parameter_count_rejected(catalog):
    r = catalog.find("4")
    with pytest.raises(InconsistentRecord):
        cat.classify_record(r, (0, 0))


def test_exponent_expr():
    e = fp.ExponentExpr.make(1, {"k1": 2})
    assert e.evaluate({"k1": 3}) == 7
    assert fp.ExponentExpr.make(0).evaluate({}) == 0
