import pytest

from gdaha import relations
from gdaha.relations import catalogue, manifest, relation, verify_relation

IDS = [r.id for r in catalogue()]


def test_ids_unique_and_sorted():
    assert IDS == sorted(set(IDS))


def test_manifest_matches_catalogue():
    rows = manifest()
    assert [r["id"] for r in rows] == IDS
    assert all(r["expected_residual"] == "0" and r["anchor"] for r in rows)


def test_unknown_relation():
    with pytest.raises(relations.UnknownRelation):
        relation("no.such.relation")


@pytest.mark.parametrize("rid", IDS)
def test_relation(rid):
    rep = verify_relation(rid)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("rid", ["hecke.star.prod_TTTT", "dual.presentation.U1_T1_X_e"])
def test_fast_mode_agrees(rid):
    assert verify_relation(rid, "fast").passed


def test_broken_relation_fails():
    rel = relation(IDS[0])
    bad = relations.Relation("bad", rel.suite, "", "exact", lambda: (rel.pair()[0], rel.pair()[0] * 2))
    for mode in ("exact", "fast"):
        rep = verify_relation(bad, mode)
        assert not rep.passed and rep.summary() != "0"


def test_curve_table_covers_eleven_curves():
    curves = {rid.split(".")[1] for rid in IDS if rid.startswith("curves.")}
    assert curves == set(relations.CURVE_IDS) and len(curves) == 11
