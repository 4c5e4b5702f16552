"""Combinatorial codes over labeled base sets.

A code is a finite collection of codewords (subsets of a base set of
labels).  The empty codeword is present in every code by convention, so
``make_code`` inserts it.  All values here are immutable and hashable;
equality is canonical-form equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

KINDS = ("plain", "alpha", "beta", "gamma", "delta")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}


class CodeError(ValueError):
    """Raised on malformed code input (unknown labels, bad kinds, ...)."""


@dataclass(frozen=True, order=False)
class Label:
    """A base-set element: a kind tag plus a positive index.

    Plain labels model ordinary integer neuron indices; the other kinds
    carry the four-fold symbol families used by the layered code
    constructions.  Sorting is by (kind, index).
    """

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise CodeError(f"unknown label kind {self.kind!r}")
        if not isinstance(self.index, int) or self.index < 1:
            raise CodeError(f"label index must be a positive integer, got {self.index!r}")

    @property
    def sort_key(self) -> Tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.index)

    def __lt__(self, other: "Label") -> bool:
        return self.sort_key < other.sort_key

    def __le__(self, other: "Label") -> bool:
        return self.sort_key <= other.sort_key

    def __str__(self) -> str:
        if self.kind == "plain":
            return str(self.index)
        return f"{self.kind}_{self.index}"

    @staticmethod
    def parse(text: str) -> "Label":
        text = str(text)
        if "_" in text:
            kind, _, idx = text.rpartition("_")
            return Label(kind, int(idx))
        return Label("plain", int(text))


def plain(index: int) -> Label:
    return Label("plain", index)


def alpha(index: int) -> Label:
    return Label("alpha", index)


def beta(index: int) -> Label:
    return Label("beta", index)


def gamma(index: int) -> Label:
    return Label("gamma", index)


def delta(index: int) -> Label:
    return Label("delta", index)


@dataclass(frozen=True)
class Codeword:
    """A set of labels.  Stored as a frozenset; serialized in sorted order."""

    labels: FrozenSet[Label]

    def __init__(self, labels: Iterable[Label] = ()):
        object.__setattr__(self, "labels", frozenset(labels))

    @property
    def sorted_labels(self) -> Tuple[Label, ...]:
        return tuple(sorted(self.labels, key=lambda l: l.sort_key))

    @property
    def sort_key(self):
        return tuple(l.sort_key for l in self.sorted_labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.sorted_labels)

    def __contains__(self, label: Label) -> bool:
        return label in self.labels

    def __le__(self, other: "Codeword") -> bool:
        return self.labels <= other.labels

    def __lt__(self, other: "Codeword") -> bool:
        return self.labels < other.labels

    def union(self, other: "Codeword") -> "Codeword":
        return Codeword(self.labels | other.labels)

    def intersection(self, other: "Codeword") -> "Codeword":
        return Codeword(self.labels & other.labels)

    def difference(self, dropped: Iterable[Label]) -> "Codeword":
        return Codeword(self.labels - frozenset(dropped))

    def __str__(self) -> str:
        if not self.labels:
            return "{}"
        return "{" + ",".join(str(l) for l in self.sorted_labels) + "}"


EMPTY_WORD = Codeword()


@dataclass(frozen=True)
class Code:
    """A finite set of codewords over a base set; the empty word is always in."""

    base: FrozenSet[Label]
    codewords: FrozenSet[Codeword]

    @property
    def sorted_base(self) -> Tuple[Label, ...]:
        return tuple(sorted(self.base, key=lambda l: l.sort_key))

    @property
    def sorted_codewords(self) -> Tuple[Codeword, ...]:
        return tuple(sorted(self.codewords, key=lambda w: (len(w), w.sort_key)))

    def __len__(self) -> int:
        return len(self.codewords)

    def __contains__(self, word: Codeword) -> bool:
        return word in self.codewords

    def __str__(self) -> str:
        words = ", ".join(str(w) for w in self.sorted_codewords)
        return f"Code(base={{{','.join(str(l) for l in self.sorted_base)}}}, words=[{words}])"


def make_code(base: Iterable[Label], words: Iterable[Codeword]) -> Code:
    """Build a code: deduplicate, check labels against the base, insert {}."""
    base_set = frozenset(base)
    word_set = set()
    for w in words:
        if not isinstance(w, Codeword):
            w = Codeword(w)
        stray = w.labels - base_set
        if stray:
            names = ",".join(sorted(str(l) for l in stray))
            raise CodeError(f"codeword {w} uses labels outside the base set: {names}")
        word_set.add(w)
    word_set.add(EMPTY_WORD)
    return Code(base_set, frozenset(word_set))


def disjoint_union(c: Code, d: Code) -> Code:
    """Union of two codes on disjoint base sets (the empty word merges)."""
    overlap = c.base & d.base
    if overlap:
        names = ",".join(sorted(str(l) for l in overlap))
        raise CodeError(f"base sets overlap: {names}")
    return Code(c.base | d.base, c.codewords | d.codewords)


def delete_labels(c: Code, dropped: Iterable[Label]) -> Code:
    """Remove labels from the base set and from every codeword, merging duplicates."""
    dropped_set = frozenset(dropped)
    stray = dropped_set - c.base
    if stray:
        names = ",".join(sorted(str(l) for l in stray))
        raise CodeError(f"cannot delete labels not in the base set: {names}")
    words = frozenset(w.difference(dropped_set) for w in c.codewords)
    return Code(c.base - dropped_set, words)


def is_intersection_complete(c: Code) -> bool:
    """True iff the intersection of any two codewords is again a codeword."""
    words = list(c.codewords)
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            if a.intersection(b) not in c.codewords:
                return False
    return True


def maximal_codewords(c: Code) -> FrozenSet[Codeword]:
    """Codewords not strictly contained in any other codeword of the code."""
    out = set()
    for w in c.codewords:
        if not any(w < v for v in c.codewords if v is not w):
            out.add(w)
    return frozenset(out)


def restrict_to_labels(c: Code, keep: Iterable[Label]) -> Code:
    """Delete every base label except ``keep``."""
    keep_set = frozenset(keep)
    return delete_labels(c, c.base - keep_set)


# --- canonical text form ----------------------------------------------------

def label_to_json(l: Label):
    if l.kind == "plain":
        return l.index
    return {"kind": l.kind, "index": l.index}


def label_from_json(obj) -> Label:
    if isinstance(obj, int):
        return Label("plain", obj)
    if isinstance(obj, str):
        return Label.parse(obj)
    if isinstance(obj, dict):
        return Label(obj["kind"], int(obj["index"]))
    raise CodeError(f"cannot parse label from {obj!r}")


def code_to_json(c: Code) -> dict:
    return {
        "base": [label_to_json(l) for l in c.sorted_base],
        "codewords": [[label_to_json(l) for l in w] for w in c.sorted_codewords],
    }


def code_from_json(obj: dict) -> Code:
    base = [label_from_json(x) for x in obj["base"]]
    words = [Codeword(label_from_json(x) for x in w) for w in obj["codewords"]]
    return make_code(base, words)


def canonical_serialize(c: Code) -> str:
    """Deterministic, order-independent text form; equal codes serialize equally."""
    return json.dumps(code_to_json(c), sort_keys=True, separators=(",", ":"))


def parse_code(text: str) -> Code:
    return code_from_json(json.loads(text))


def words(*groups: Iterable[Iterable[Label]]) -> list:
    """Convenience: flatten iterables of label iterables into Codewords."""
    out = []
    for g in groups:
        for labs in g:
            out.append(Codeword(labs))
    return out
