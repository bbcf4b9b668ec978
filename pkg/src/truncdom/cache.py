"""Append-only JSON-lines cache of exact solve results.

One record per line: {"m", "n", "t", "r", "gamma", "witness", "proved",
"runtime_ms"} with the witness as [a, x, y] vertex triples. Later records
for the same key win; unparsable lines (e.g. a truncated final line after
a crash) are skipped rather than fatal. The default location is
./trunc-dom-cache.jsonl, overridable with the TRUNC_DOM_CACHE variable.
"""

import json
import os

DEFAULT_CACHE = "./trunc-dom-cache.jsonl"
ENV_VAR = "TRUNC_DOM_CACHE"

_KEY_FIELDS = ("m", "n", "t", "r")


def cache_path(override=None) -> str:
    return override or os.environ.get(ENV_VAR) or DEFAULT_CACHE


def load(path) -> dict:
    """All cached records keyed by (m, n, t, r)."""
    records = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    key = tuple(int(rec[f]) for f in _KEY_FIELDS)
                except (ValueError, KeyError, TypeError):
                    continue
                records[key] = rec
    except FileNotFoundError:
        pass
    return records


def lookup(path, m, n, t, r):
    return load(path).get((m, n, t, r))


def append(path, record) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


def make_record(m, n, t, r, result, g, runtime_ms) -> dict:
    """Build the cache record for a grid solve."""
    witness = sorted(g.coords[i] for i in result.witness.vertices)
    return {
        "m": m,
        "n": n,
        "t": t,
        "r": r,
        "gamma": result.gamma,
        "witness": [v.to_json() for v in witness],
        "proved": result.proof_of_minimality,
        "runtime_ms": runtime_ms,
    }
