"""The three worked graphs shipped with the package, with their partitions.

``signed_gm_8``     signed GM switching, C_1={0,1,2}, C_2={3,4,5,6}, D={7}
``unsigned_ggm_8``  all-positive generalized GM switching, m=3, ell=-1
``signed_ggm_14``   signed generalized GM switching, m=5, ell=-1
"""

from __future__ import annotations

from importlib import resources

from .core import SignedGraph
from .ggm import GGMPartition
from .gm import GMPartition
from .graphio import parse_graph

FIXTURES = ("signed_gm_8", "unsigned_ggm_8", "signed_ggm_14")

PARTITIONS = {
    "signed_gm_8": GMPartition(((0, 1, 2), (3, 4, 5, 6)), (7,)),
    "unsigned_ggm_8": GGMPartition((0, 1, 2), (3, 4, 5), (6, 7)),
    "signed_ggm_14": GGMPartition((0, 1, 2, 3, 4), (5, 6, 7, 8, 9), (10, 11, 12, 13)),
}


def fixture_path(name: str):
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURES}")
    return resources.files("cospec") / "data" / f"{name}.sg"


def load_fixture(name: str) -> SignedGraph:
    return parse_graph(fixture_path(name).read_text())


def fixture_partition(name: str):
    return PARTITIONS[name]
