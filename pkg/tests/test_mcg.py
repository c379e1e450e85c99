import pytest

from gdaha import mcg
from gdaha.generators import idempotent
from gdaha.words import CORE, Word, rho


def _ids(reports):
    return {r.id: r for r in reports}


@pytest.mark.parametrize("group", [mcg.braid_checks, mcg.commutation_checks, mcg.inverse_checks,
                                   mcg.composite_display_checks, mcg.sigma_checks, mcg.three_chain_checks])
def test_group_passes(group):
    reps = group()
    assert reps and all(r.passed for r in reps), [r.id for r in reps if not r.passed]


def test_counts():
    assert len(mcg.braid_checks()) == 4
    assert len(mcg.commutation_checks()) == 6


def test_conjugator_on_e():
    e = idempotent()
    assert rho(mcg.C_WORD) * e == e.scale(-1 / mcg.Q)


def test_chain_order_matters():
    # the displayed action is T1 T2 T3 T4 T5 with T5 acting first
    disp = mcg._displayed_t12345()
    rev = mcg.chain(5, 4, 3, 2, 1)
    assert not all(rho(rev(Word.gen(s))) == rho(disp[s]) for s in CORE)


def test_power_images_level_one():
    imgs = mcg.power_images(1)
    phi = mcg.chain(1, 2, 3, 4, 5)
    for s in CORE:
        assert imgs[(s, 1)] == rho(phi(Word.gen(s)))


WD = _ids(mcg.verify_well_definedness())


@pytest.mark.parametrize("rid", sorted(WD))
def test_well_defined(rid):
    if rid in mcg.KNOWN_FAILURES:
        pytest.xfail("T4 does not preserve the T1 Hecke pair")
    assert WD[rid].passed


@pytest.mark.parametrize("rid", sorted(mcg.KNOWN_FAILURES))
def test_known_failures_still_fail(rid):
    assert not WD[rid].passed
