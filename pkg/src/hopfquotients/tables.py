"""Expected-value tables and the machinery to diff computed
decompositions against them.

The packaged data file transcribes the two published computation tables
cell by cell; "zero" marks empty cells, "unknown" marks cells printed
as question marks.  Verification recomputes known cells and diffs,
computes unknown cells and reports them as NEW, and treats flagged
partitions inside a cell as report-only.
"""

from __future__ import annotations

import json
from importlib.resources import files

from .decompose import decompose
from .hopf import HopfAlgebra
from .presentations import FunctorSpec
from .version import engine_version

ZERO = "zero"
UNKNOWN = "unknown"


def packaged_table_path():
    return files("hopfquotients").joinpath("data/paper-tables.json")


def load_expected(path=None) -> dict:
    if path is None:
        text = packaged_table_path().read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    table = json.loads(text)
    if "entries" not in table:
        raise ValueError("expected-table file has no entries")
    return table


def decomposition_to_pairs(value) -> list:
    """[(partition, mult), ...] in descending lexicographic order."""
    if value == ZERO:
        return []
    pairs = [(tuple(item["partition"]), item["mult"]) for item in value["decomposition"]]
    return sorted(pairs, reverse=True)


def entries_in_scope(table, functor=None, rank=None, hopf=None, max_degree=None):
    for entry in table["entries"]:
        if functor is not None and entry["functor"] != functor:
            continue
        if rank is not None and entry["rank"] != rank:
            continue
        if hopf is not None and entry["hopf"] != hopf:
            continue
        if max_degree is not None and entry["degree"] > max_degree:
            continue
        yield entry


def _computed_pairs(entry, jobs=1, cache_dir=None):
    spec = FunctorSpec(entry["functor"], entry["rank"], HopfAlgebra(entry["hopf"], 1))
    dec = decompose(spec, entry["degree"], jobs=jobs, cache_dir=cache_dir)
    return sorted(dec.entries.items(), reverse=True)


def _pairs_payload(pairs):
    return [{"partition": list(p), "mult": m} for p, m in pairs]


def verify_against(table, functor=None, rank=None, hopf=None, max_degree=None,
                   jobs=1, cache_dir=None) -> dict:
    """Recompute every in-scope entry and diff against the table."""
    matches = []
    mismatches = []
    new = []
    flagged = []
    for entry in entries_in_scope(table, functor, rank, hopf, max_degree):
        key = {k: entry[k] for k in ("functor", "rank", "hopf", "degree")}
        computed = _computed_pairs(entry, jobs=jobs, cache_dir=cache_dir)
        if entry["value"] == UNKNOWN:
            new.append({**key, "computed": _pairs_payload(computed)})
            continue
        expected = decomposition_to_pairs(entry["value"])
        flagged_parts = {tuple(f["partition"]): f.get("note", "") for f in entry.get("flags", [])}
        computed_map = dict(computed)
        expected_map = dict(expected)
        diff = []
        for lam in sorted(set(computed_map) | set(expected_map), reverse=True):
            want = expected_map.get(lam, 0)
            got = computed_map.get(lam, 0)
            if lam in flagged_parts:
                flagged.append({**key, "partition": list(lam), "computed": got,
                                "note": flagged_parts[lam]})
                continue
            if want != got:
                diff.append({"partition": list(lam), "expected": want, "computed": got})
        if diff:
            mismatches.append({**key,
                               "expected": _pairs_payload(expected),
                               "computed": _pairs_payload(computed),
                               "diff": diff})
        else:
            matches.append(key)
    return {
        "engine_version": engine_version(),
        "checked": len(matches) + len(mismatches),
        "matches": len(matches),
        "mismatches": mismatches,
        "new": new,
        "flagged": flagged,
    }
