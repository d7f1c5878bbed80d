"""Global graphlet frequencies: the 17 class counts for one graph.

Counts are plain Python integers, so the 10^18-and-beyond totals that large
graphs produce never overflow; arithmetic stays exact everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .classes import CLASS_IDS, K3_IDS, K4_IDS
from .errors import ConsistencyError
from .serialize import counts_from_json, counts_to_json


@dataclass
class GraphletFrequencies:
    counts: dict[str, int]
    n: int
    m: int

    def __post_init__(self):
        missing = [cid for cid in CLASS_IDS if cid not in self.counts]
        if missing:
            raise ValueError(f"missing class counts: {missing}")
        # Keep canonical ordering regardless of how the dict was built.
        self.counts = {cid: int(self.counts[cid]) for cid in CLASS_IDS}

    def of(self, class_id: str) -> int:
        return self.counts[class_id]

    def validate(self) -> None:
        """Assert the structural sum identities; raises ConsistencyError on
        violation (which would mean a census bug, not bad input)."""
        if any(v < 0 for v in self.counts.values()):
            raise ConsistencyError("negative graphlet count")
        if self.counts["g2_1"] != self.m:
            raise ConsistencyError("f(g2_1) != m")
        if self.counts["g2_2"] != comb(self.n, 2) - self.m:
            raise ConsistencyError("f(g2_2) != C(n,2) - m")
        if sum(self.counts[c] for c in K3_IDS) != comb(self.n, 3):
            raise ConsistencyError("k=3 counts do not sum to C(n,3)")
        if sum(self.counts[c] for c in K4_IDS) != comb(self.n, 4):
            raise ConsistencyError("k=4 counts do not sum to C(n,4)")

    def to_json_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "counts": counts_to_json(self.counts)}

    @staticmethod
    def from_json_dict(obj: dict) -> "GraphletFrequencies":
        return GraphletFrequencies(
            counts=counts_from_json(obj["counts"]), n=int(obj["n"]), m=int(obj["m"])
        )

    def __eq__(self, other):
        if not isinstance(other, GraphletFrequencies):
            return NotImplemented
        return self.n == other.n and self.m == other.m and self.counts == other.counts
