import pytest

from partialhopf import catalog
from partialhopf.algebra import AlgebraElement, StructureAlgebra
from partialhopf.errors import UnknownCatalogId
from partialhopf.hopf import HopfData
from partialhopf.partial_action import PartialActionData, cocycle
from partialhopf.symbolic import parse_polynomial


def test_payload_types():
    kinds = {"hs": StructureAlgebra, "hss": StructureAlgebra, "h00": StructureAlgebra,
             "h4": HopfData, "action_hss": PartialActionData, "action_hs": PartialActionData,
             "action_h00": PartialActionData}
    assert set(kinds) == set(catalog.CATALOG_IDS)
    for cid, kind in kinds.items():
        entry = catalog.load(cid)
        assert isinstance(entry.payload, kind)
        assert entry.id == cid and entry.provenance


def test_unknown_id():
    with pytest.raises(UnknownCatalogId):
        catalog.load("octonions")


@pytest.mark.parametrize("cid,params", [
    ("action_hss", ("k1", "k2", "k3", "k4", "l1", "l2", "l3", "l4")),
    ("action_hs", ("l1", "l2", "l3", "l4")),
    ("action_h00", ("k1", "k2", "k3", "l1", "l2", "l3", "l4")),
])
def test_declared_parameters(cid, params):
    entry = catalog.load(cid)
    assert entry.document.params == params
    assert set(entry.payload.parameters()) == set(params)


def test_loads_are_fresh():
    assert catalog.load("hss").payload is not catalog.load("hss").payload
    assert catalog.load("hss").payload == catalog.load("hss").payload


def test_hs_nu_row():
    P = catalog.load("action_hs").payload
    row = [P.action_value("nu", a) for a in P.A.basis]
    assert row == [P.A.basis_element(x) for x in ("e3", "e2", "e1", "1")]


def test_h00_cocycle_nu_gnu():
    P = catalog.load("action_h00").payload
    want = P.A.element({"e1": parse_polynomial("k1*l1"), "e2": parse_polynomial("k2*l1"),
                        "e3": parse_polynomial("k3*l1 - k2*l2 + k1*l3")})
    assert cocycle(P, "nu", "gnu") == want


def test_h00_gnu_on_unit_uses_the_unit_slot():
    P = catalog.load("action_h00").payload
    got = P.action_value("gnu", "1")
    assert isinstance(got, AlgebraElement)
    assert got.coord("1") == parse_polynomial("l1")
