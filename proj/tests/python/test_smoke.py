import json

import pytest

import gwakit


def test_gwa_counts():
    assert len(gwakit.all_gwa_on_group(gwakit.group_from_spec("klein4"))) == 10
    assert len(gwakit.all_gwa_on_group(gwakit.small_group(8, 2))) == 32
    assert len(gwakit.all_gwa_on_group(gwakit.small_group(8, 5))) == 736


def test_is_gwa():
    kl4 = gwakit.small_group(4, 2)
    ok, msg = gwakit.is_gwa(kl4, [[0, 1, 2, 3], [0, 1, 2, 3], [0, 1, 3, 2], [0, 1, 3, 2]])
    assert ok and msg == ""
    ok, msg = gwakit.is_gwa(kl4, [[0, 1, 2, 3], [0, 2, 1, 3], [0, 1, 2, 3], [0, 1, 2, 3]])
    assert not ok and msg


def test_group_roundtrip():
    g = gwakit.group_from_spec("A4")
    assert g.order == 12 and not g.is_abelian()
    h = gwakit.Group.from_table(g.table())
    assert h.order == 12
    gwa = gwakit.gwa_conjugation(g)
    assert gwa.group == g
    assert [len(s) for s in gwakit.lower_central_series(gwa)] == [12, 4]


def test_classify_kl4():
    rows = gwakit.classify(gwakit.all_gwa_on_group(gwakit.small_group(4, 2)))
    assert sum(r["members"] for r in rows) == 10
    assert sorted(r["nilpotency_class"] for r in rows for _ in range(r["members"])) == [0] * 6 + [1] + [2] * 3
    csv = gwakit.classification_csv(gwakit.all_gwa_on_group(gwakit.small_group(4, 2)))
    assert csv.splitlines()[0] == "family,members,representative,ideals,nilpotency_class,condition1"


def test_xmods():
    pre, full = gwakit.all_xmods_by_id(4, 1, 4, 2, jobs=2)
    assert (len(pre), len(full)) == (416, 184)
    assert sum(gwakit.is_xmod_c1(x) for x in full) == 88
    x = full[0]
    assert gwakit.is_xmod(x)[0]
    assert json.loads(x.to_json())


def test_roundtrip_ideal_inclusion():
    gwa = gwakit.all_gwa_on_group(gwakit.small_group(8, 2))[5]
    for ideal in gwakit.all_ideals(gwa):
        x = gwakit.xmod_by_ideal(gwa, ideal)
        rep = gwakit.roundtrip(x)
        assert rep["roundtrip_ok"], rep["error"]
        assert rep["moore_length"] <= 1


def test_errors():
    with pytest.raises(gwakit.CatalogError):
        gwakit.group_from_spec("nosuch")
    with pytest.raises(gwakit.Error):
        gwakit.small_group(8, 99)
    with pytest.raises(gwakit.Error):
        gwakit.gwa_from_json("{}")


def test_version():
    assert gwakit.__version__
