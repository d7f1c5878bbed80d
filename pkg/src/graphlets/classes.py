"""The 17-class taxonomy of induced graphlets on 2, 3, and 4 nodes.

Class ids (``g2_1`` .. ``g4_11``) are the canonical keys used in every JSON
output; ``name`` is the human label. Order within each size is fixed and
deterministic everywhere (GFD vectors, feature rows, JSON).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GraphletClass:
    id: str
    k: int
    connected: bool
    name: str
    complement_id: str


_CLASS_DEFS = [
    # id, k, connected, name, complement id
    ("g2_1", 2, True, "edge", "g2_2"),
    ("g2_2", 2, False, "2-node-independent", "g2_1"),
    ("g3_1", 3, True, "triangle", "g3_4"),
    ("g3_2", 3, True, "2-star", "g3_3"),
    ("g3_3", 3, False, "3-node-1-edge", "g3_2"),
    ("g3_4", 3, False, "3-node-independent", "g3_1"),
    ("g4_1", 4, True, "4-clique", "g4_11"),
    ("g4_2", 4, True, "4-chordalcycle", "g4_10"),
    ("g4_3", 4, True, "4-tailedtriangle", "g4_8"),
    ("g4_4", 4, True, "4-cycle", "g4_9"),
    ("g4_5", 4, True, "3-star", "g4_7"),
    ("g4_6", 4, True, "4-path", "g4_6"),  # self-complementary
    ("g4_7", 4, False, "4-node-1-triangle", "g4_5"),
    ("g4_8", 4, False, "4-node-2-star", "g4_3"),
    ("g4_9", 4, False, "4-node-2-edge", "g4_4"),
    ("g4_10", 4, False, "4-node-1-edge", "g4_2"),
    ("g4_11", 4, False, "4-node-independent", "g4_1"),
]

ALL_CLASSES: tuple[GraphletClass, ...] = tuple(
    GraphletClass(i, k, c, n, p) for i, k, c, n, p in _CLASS_DEFS
)

CLASS_BY_ID: dict[str, GraphletClass] = {c.id: c for c in ALL_CLASSES}

CLASS_IDS: tuple[str, ...] = tuple(c.id for c in ALL_CLASSES)

K2_IDS = tuple(c.id for c in ALL_CLASSES if c.k == 2)
K3_IDS = tuple(c.id for c in ALL_CLASSES if c.k == 3)
K4_IDS = tuple(c.id for c in ALL_CLASSES if c.k == 4)
K4_CONNECTED_IDS = tuple(c.id for c in ALL_CLASSES if c.k == 4 and c.connected)
K3_CONNECTED_IDS = tuple(c.id for c in ALL_CLASSES if c.k == 3 and c.connected)


def complement_class(class_id: str) -> str:
    """Complement pairing: the class a pattern maps to when edges and
    non-edges are swapped on the same node set."""
    return CLASS_BY_ID[class_id].complement_id


def classes_for(k: int, connected_only: bool = False) -> tuple[str, ...]:
    if k == 2:
        return ("g2_1",) if connected_only else K2_IDS
    if k == 3:
        return K3_CONNECTED_IDS if connected_only else K3_IDS
    if k == 4:
        return K4_CONNECTED_IDS if connected_only else K4_IDS
    raise ValueError(f"unsupported graphlet size k={k}")
