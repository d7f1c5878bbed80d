#!/usr/bin/env python3
"""Download the public benchmark graphs the acceptance suite checks against.

Fetches the networkrepository.com snapshots of ia-enron-only, bio-diseasome
and bio-celegans into data/, keeping the original MatrixMarket/edge files so
the declared vertex counts survive. Needs outbound network access; the test
suite skips the published-counts checks when these files are absent.
"""

from __future__ import annotations

import io
import sys
import urllib.request
import zipfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from graphlets import Graph  # noqa: E402

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

DATASETS = {
    "ia-enron-only": {
        "url": "https://nrvis.com/download/data/ia/ia-enron-only.zip",
        "expect_n": 143,
        "expect_m": 623,
    },
    "bio-diseasome": {
        "url": "https://nrvis.com/download/data/bio/bio-diseasome.zip",
        "expect_n": 516,
        "expect_m": None,  # Table displays 1.2k
    },
    "bio-celegans": {
        "url": "https://nrvis.com/download/data/bio/bio-celegans.zip",
        "expect_n": 453,
        "expect_m": None,  # Table displays 2.0k
    },
}

MEMBER_EXTENSIONS = (".mtx", ".edges", ".txt")


def pick_member(zf: zipfile.ZipFile) -> str:
    candidates = [name for name in zf.namelist()
                  if name.lower().endswith(MEMBER_EXTENSIONS)]
    if not candidates:
        raise RuntimeError(f"no edge-list member found among {zf.namelist()}")
    # Prefer MatrixMarket (carries the declared vertex count).
    candidates.sort(key=lambda name: (not name.lower().endswith(".mtx"), name))
    return candidates[0]


def fetch(name: str, info: dict) -> Path:
    print(f"downloading {info['url']} ...")
    with urllib.request.urlopen(info["url"], timeout=60) as response:
        blob = response.read()
    zf = zipfile.ZipFile(io.BytesIO(blob))
    member = pick_member(zf)
    suffix = Path(member).suffix.lower()
    out = DATA_DIR / f"{name}{suffix}"
    out.write_bytes(zf.read(member))

    g = Graph.from_file(out)
    print(f"  saved {out}  n={g.n} m={g.m}")
    if info["expect_n"] is not None and g.n != info["expect_n"]:
        print(f"  WARNING: expected n={info['expect_n']}, snapshot has n={g.n}; "
              "the published-counts tests will report the discrepancy")
    if info["expect_m"] is not None and g.m != info["expect_m"]:
        print(f"  WARNING: expected m={info['expect_m']}, snapshot has m={g.m}")
    return out


def main() -> int:
    DATA_DIR.mkdir(exist_ok=True)
    failures = []
    for name, info in DATASETS.items():
        try:
            fetch(name, info)
        except Exception as exc:
            failures.append((name, exc))
            print(f"  FAILED: {type(exc).__name__}: {exc}")
    if failures:
        print("\nsome downloads failed; the acceptance suite will skip the "
              "published-counts checks for the missing graphs")
        return 1
    print("\nall datasets fetched; rerun `pytest tests/test_acceptance.py -s`")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
