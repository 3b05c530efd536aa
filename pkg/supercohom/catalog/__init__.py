from ..family import CatalogEntry, CatalogFamily, Parameter
from .coboundaries import (
    EtaPartial2K,
    EtaPlusK,
    Partial2,
    Theta2,
    Theta2Eta1,
    Theta2Eta2,
    ThetaEtaK,
    relative_coboundary_generators,
)
from .gamma import BLOCK_SLOTS, GammaDiagonal, GammaK, GammaKTilde, lift
from .upsilon import UpsilonDiagonal, UpsilonDiagonalTilde, UpsilonK, UpsilonKBar, UpsilonKTilde

FAMILIES: tuple[CatalogFamily, ...] = (
    UpsilonDiagonal(),
    UpsilonDiagonalTilde(),
    UpsilonK(),
    UpsilonKTilde(),
    UpsilonKBar(),
    GammaDiagonal(),
    GammaK(),
    GammaKTilde(),
    Partial2(),
    Theta2(),
    EtaPlusK(),
    ThetaEtaK(),
    EtaPartial2K(),
    Theta2Eta2(),
    Theta2Eta1(),
)

REGISTRY: dict[str, CatalogFamily] = {f.name: f for f in FAMILIES}


def family(name: str) -> CatalogFamily:
    try:
        return REGISTRY[name]
    except KeyError:
        known = ", ".join(REGISTRY)
        raise KeyError(f"Unknown catalog family {name!r}; known: {known}") from None


def make(name: str, parameter: Parameter) -> CatalogEntry:
    """Instantiate the family *name* at *parameter*."""
    return family(name).make(parameter)


def catalog_list() -> list[dict[str, str]]:
    return [f.describe() for f in FAMILIES]


__all__ = [
    "FAMILIES",
    "REGISTRY",
    "BLOCK_SLOTS",
    "family",
    "make",
    "catalog_list",
    "lift",
    "relative_coboundary_generators",
    "UpsilonDiagonal",
    "UpsilonDiagonalTilde",
    "UpsilonK",
    "UpsilonKTilde",
    "UpsilonKBar",
    "GammaDiagonal",
    "GammaK",
    "GammaKTilde",
]
