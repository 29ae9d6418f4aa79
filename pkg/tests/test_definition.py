import pytest

from partialhopf import catalog
from partialhopf.algebra import check_unital
from partialhopf.definition import load_definition, parse_definition, print_definition
from partialhopf.errors import (
    DefinitionSyntaxError,
    DuplicateBlock,
    UndeclaredLabel,
    UndeclaredParameter,
)

SMALL = """\
name tiny
params k1

algebra dual
  basis 1 e
  unit 1
  mul e e = 0
end
"""


def test_hss_file_parses():
    doc = catalog.load_document("hss")
    A = doc.algebras["hss"]
    assert A.basis == ("1", "e1", "e2", "e3")
    assert len(A.products()) == 16


def test_omitted_products_default_to_zero():
    doc = parse_definition(SMALL)
    A = doc.algebras["dual"]
    assert A.product("e", "e").is_zero()
    # even unit products must be written out; the unital check catches it
    assert A.product("1", "e").is_zero()
    assert not check_unital(A).passed
    full = A.with_product("1", "e", {"e": 1}).with_product("e", "1", {"e": 1}).with_product("1", "1", {"1": 1})
    assert check_unital(full).passed


def test_undeclared_label():
    text = SMALL.replace("mul e e = 0", "mul e e = e5")
    with pytest.raises(UndeclaredLabel) as info:
        parse_definition(text, source="bad.def")
    assert info.value.name == "e5"
    assert (info.value.line, info.value.column) == (7, 13)
    assert str(info.value).startswith("bad.def:7:13:")


def test_undeclared_parameter_in_cocycle():
    text = catalog.catalog_text("action_hss").replace("omega g g = 0", "omega g g = m1*e1")
    with pytest.raises(UndeclaredParameter) as info:
        parse_definition(text, loader=catalog._resource_loader)
    assert info.value.name == "m1"
    assert info.value.line > 0


def test_duplicate_block():
    text = SMALL + SMALL.split("\n", 3)[3]
    with pytest.raises(DuplicateBlock) as info:
        parse_definition(text)
    assert info.value.name == "dual"


@pytest.mark.parametrize("text,line", [
    ("algebra a\n  basis 1 x\n  unit 1\n  mul x x = (1\nend\n", 4),
    ("algebra a\n  basis 1 x\n  unit 1\n", 1),
    ("algebra a\n  basis 1 x\n  frobnicate\nend\n", 3),
])
def test_syntax_errors_have_locations(text, line):
    with pytest.raises(DefinitionSyntaxError) as info:
        parse_definition(text)
    assert info.value.line == line


@pytest.mark.parametrize("cid", catalog.CATALOG_IDS)
def test_round_trip(cid):
    doc = catalog.load_document(cid)
    text = print_definition(doc)
    again = parse_definition(text)
    assert again == doc
    assert print_definition(again) == text


def test_include_resolves_next_to_file(tmp_path):
    (tmp_path / "hss.def").write_text(catalog.catalog_text("hss"))
    (tmp_path / "h4.def").write_text(catalog.catalog_text("h4"))
    (tmp_path / "act.def").write_text(catalog.catalog_text("action_hss"))
    doc = load_definition(tmp_path / "act.def")
    assert doc.action().name == "action_hss"
