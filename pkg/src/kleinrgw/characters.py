"""
Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule, run on beta-sets: removing a
border strip of length k from a Young diagram is the same as lowering one
bead of its beta-set by k onto an empty position, and the sign of the strip
is (-1) to the number of beads jumped over.

Completed tables are cached in memory and as one JSON file per degree.  The
directory comes from ``$KLEINRGW_CACHE_DIR`` and otherwise defaults to
``$XDG_CACHE_HOME/kleinrgw`` (``~/.cache/kleinrgw``).
"""
import json
import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .combinatorics import Partition, check_degree, dim_rep, partitions_of
from .errors import ArgumentError

log = logging.getLogger(__name__)

CACHE_FORMAT_VERSION = 1
CACHE_ENV = "KLEINRGW_CACHE_DIR"


def _beta_set(rho, length):
    return tuple(rho[i] if i < len(rho) else 0 for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta, alpha):
    """Character value for the partition encoded by ``beta`` on cycle type ``alpha``.

    ``beta`` holds the strictly decreasing beta-numbers; ``alpha`` the parts
    still to be removed.
    """
    if not alpha:
        return 1
    k, rest = alpha[0], alpha[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted((beads - {b}) | {target}, reverse=True))
        value = _mn(new_beta, rest)
        if value:
            total += -value if jumped % 2 else value
    return total


def character(rho, alpha):
    """chi_rho(alpha): the trace of the irreducible ``rho`` on the class ``alpha``."""
    rho, alpha = Partition(rho), Partition(alpha)
    if rho.size != alpha.size:
        raise ArgumentError("size mismatch: |%r| != |%r|" % (rho, alpha))
    n = len(rho)
    beta = tuple(rho[i] + (n - 1 - i) for i in range(n))
    return _mn(beta, tuple(alpha))


@dataclass(frozen=True)
class CharacterTable:
    """Character values of S_d; rows are representations, columns are classes."""

    d: int
    partitions: tuple
    values: tuple
    dims: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(dim_rep(p) for p in self.partitions))

    @property
    def index(self):
        return _index(self.partitions)

    def __call__(self, rho, alpha):
        idx = self.index
        return self.values[idx[Partition(rho)]][idx[Partition(alpha)]]

    def row(self, rho):
        return self.values[self.index[Partition(rho)]]

    def to_json(self):
        doc = {
            "format": CACHE_FORMAT_VERSION,
            "d": self.d,
            "partitions": [list(p) for p in self.partitions],
            "values": [list(r) for r in self.values],
        }
        return json.dumps(doc, separators=(",", ":"), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        if doc.get("format") != CACHE_FORMAT_VERSION:
            raise ValueError("unsupported cache format %r" % doc.get("format"))
        parts = tuple(Partition(p) for p in doc["partitions"])
        values = tuple(tuple(int(v) for v in r) for r in doc["values"])
        return cls(int(doc["d"]), parts, values)


@lru_cache(maxsize=None)
def _index(partitions):
    return {p: i for i, p in enumerate(partitions)}


def compute_table(d):
    """Build the table from scratch, bypassing every cache."""
    check_degree(d)
    parts = tuple(partitions_of(d))
    values = tuple(tuple(character(r, a) for a in parts) for r in parts)
    return CharacterTable(d, parts, values)


def cache_dir():
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    root = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(root) / "kleinrgw"


def cache_path(d, directory=None):
    base = Path(directory) if directory is not None else cache_dir()
    return base / ("characters-v%d-d%d.json" % (CACHE_FORMAT_VERSION, d))


_memory = {}


def character_table(d, use_cache=True, directory=None):
    """Character table of S_d, memoized in memory and persisted to disk."""
    check_degree(d)
    if d in _memory:
        return _memory[d]
    path = cache_path(d, directory)
    table = None
    if use_cache and path.exists():
        try:
            table = CharacterTable.from_json(path.read_text())
        except (ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", path, exc)
    if table is None:
        table = compute_table(d)
        if use_cache:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix(".tmp")
                tmp.write_text(table.to_json())
                tmp.replace(path)
            except OSError as exc:
                log.warning("could not write cache file %s: %s", path, exc)
    _memory[d] = table
    return table


def clear_memory_cache():
    _memory.clear()
