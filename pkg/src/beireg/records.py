"""Per-graph result records and their JSONL persistence.

A record carries the canonical code (the primary key), the structural
invariants, the certified rules interval with full provenance, and the
oracle result when one was computed.  Records are append-only; re-running
a command on the same input and version produces byte-identical rows
except for the timing fields.  A record whose oracle value falls outside
its rules interval is refused at write time: that combination means a
bug in either the rules or the oracle, and it must abort the run rather
than enter the cache.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import metadata

from .graphs import Graph, is_tree
from .rules import RegularityInterval, apply_all_rules, longest_induced_path_length
from .structure import clique_count, is_block_graph
from .taxonomy import classify_tree, is_lobster, spine_decompositions
from .trees import canonical_code

try:
    TOOL_VERSION = metadata.version("beireg")
except metadata.PackageNotFoundError:  # running from a source tree
    TOOL_VERSION = "0.1.0"


class RecordError(RuntimeError):
    """An internally inconsistent record: the oracle value escaped the
    certified rules interval."""


def _spine_stats(g: Graph) -> tuple[int | None, int | None, int | None]:
    """(ell, t, r) of the reporting spine: the decomposition whose formula
    value is smallest, ties broken lexicographically."""
    decs = spine_decompositions(g)
    if not decs:
        return None, None, None

    def key(dec):
        formula = dec.ell + dec.t + (dec.r + 2 if dec.r else 0)
        return (formula, dec.ell, dec.t, dec.r, dec.spine)

    best = min(decs, key=key)
    return best.ell, best.t, best.r


def compute_invariants(g: Graph) -> dict:
    """Structural invariants stored on every record: size, class flags,
    and the counts the rules quote (internal vertices, clique count,
    spine statistics)."""
    inv: dict = {
        "n": g.n,
        "edges": g.num_edges(),
        "is_tree": is_tree(g),
        "is_block_graph": is_block_graph(g),
        "is_caterpillar": False,
        "is_lobster": False,
        "is_pure_lobster": False,
        "contains_jewel": False,
        "m": None,
        "c": None,
        "ell": None,
        "t": None,
        "r": None,
    }
    if inv["is_tree"]:
        profile = classify_tree(g)
        inv["is_caterpillar"] = profile.is_caterpillar
        inv["is_lobster"] = profile.is_lobster
        inv["is_pure_lobster"] = profile.is_pure_lobster
        inv["contains_jewel"] = profile.contains_jewel
        inv["m"] = profile.internal_count
    if inv["is_block_graph"]:
        inv["c"] = clique_count(g)
    if inv["is_tree"] and is_lobster(g):
        inv["ell"], inv["t"], inv["r"] = _spine_stats(g)
    else:
        inv["ell"] = longest_induced_path_length(g)
    return inv


@dataclass(frozen=True)
class ResultRecord:
    graph_id: str
    n: int
    invariants: dict
    rules: dict
    oracle: dict | None
    timings: dict
    version: str

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "invariants": self.invariants,
            "rules": self.rules,
            "oracle": self.oracle,
            "timings": self.timings,
            "version": self.version,
        }

    def stable_dict(self) -> dict:
        """The record without its timing fields: the part that must be
        byte-identical across re-runs on the same input and version."""
        out = self.to_dict()
        del out["timings"]
        return out

    def to_line(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _check_containment(graph_id: str, interval_lo: int, interval_hi,
                       oracle: dict | None) -> None:
    if oracle is None:
        return
    reg = oracle["reg"]
    hi = float("inf") if interval_hi is None else interval_hi
    if not interval_lo <= reg <= hi:
        raise RecordError(
            f"oracle regularity {reg} for {graph_id} escapes the certified "
            f"interval [{interval_lo}, {interval_hi}]; the rules or the "
            "oracle are wrong and the run must stop")


def build_record(g: Graph, interval: RegularityInterval | None = None,
                 oracle=None, rules_s: float = 0.0,
                 oracle_s: float | None = None) -> ResultRecord:
    """Assemble the record for a graph.  `oracle` is a RegularityResult
    or None; the oracle value is checked against the rules interval and a
    violation aborts by raising RecordError."""
    if interval is None:
        interval = apply_all_rules(g)
    rules = interval.to_json()
    oracle_dict = None
    if oracle is not None:
        oracle_dict = {"reg": oracle.value, "tier": oracle.tier, "p": oracle.p}
    graph_id = canonical_code(g)
    _check_containment(graph_id, rules["lo"], rules["hi"], oracle_dict)
    timings = {"rules_s": round(rules_s, 3)}
    if oracle_s is not None:
        timings["oracle_s"] = round(oracle_s, 3)
    return ResultRecord(
        graph_id=graph_id,
        n=g.n,
        invariants=compute_invariants(g),
        rules=rules,
        oracle=oracle_dict,
        timings=timings,
        version=TOOL_VERSION,
    )


def append_record(path: str, record: ResultRecord) -> None:
    """Append one record; the oracle-in-interval invariant is re-checked
    at write time so no inconsistent row can enter the cache."""
    _check_containment(record.graph_id, record.rules["lo"],
                       record.rules["hi"], record.oracle)
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(record.to_line() + "\n")


def iter_records(path: str):
    """Parsed rows of a JSONL cache, in file order; a missing file is an
    empty cache."""
    if not os.path.exists(path):
        return
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)


def load_index(path: str) -> dict[str, dict]:
    """Rows keyed by canonical code; the last row wins when a key
    repeats."""
    out: dict[str, dict] = {}
    for row in iter_records(path):
        out[row["graph_id"]] = row
    return out
