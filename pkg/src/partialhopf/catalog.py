"""Built-in algebras, the Sweedler Hopf algebra and three twisted partial actions.

The data ships as definition files under ``partialhopf/data`` and is read
through the ordinary parser, so the files double as format examples.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .definition import DefinitionDocument, parse_definition
from .errors import UnknownCatalogId

CATALOG_IDS = ("hs", "hss", "h00", "h4", "action_hss", "action_hs", "action_h00")

_DESCRIPTIONS = {
    "hs": "split quaternions",
    "hss": "split semi-quaternions",
    "h00": "1/4-quaternions",
    "h4": "Sweedler Hopf algebra",
    "action_hss": "twisted partial action of h4 on hss (params k1..k4, l1..l4)",
    "action_hs": "twisted partial action of h4 on hs (params l1..l4)",
    "action_h00": "twisted partial action of h4 on h00 (params k1..k3, l1..l4)",
}


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    payload: object
    provenance: str
    document: DefinitionDocument


def _resource_loader(name: str, source: str) -> tuple[str, str]:
    return catalog_text(name.removesuffix(".def")), name


def catalog_text(id: str) -> str:
    if id not in CATALOG_IDS:
        raise UnknownCatalogId(id)
    return resources.files("partialhopf").joinpath("data", f"{id}.def").read_text(encoding="utf-8")


def load_document(id: str) -> DefinitionDocument:
    return parse_definition(catalog_text(id), source=f"{id}.def", loader=_resource_loader)


def load(id: str) -> CatalogEntry:
    """Freshly parse catalog entry ``id``."""
    doc = load_document(id)
    payload = doc.block(id)
    return CatalogEntry(id, payload, doc.provenance, doc)


def describe(id: str) -> str:
    if id not in CATALOG_IDS:
        raise UnknownCatalogId(id)
    return _DESCRIPTIONS[id]
