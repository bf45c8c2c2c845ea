"""Pieri elements: finitely supported per-class box or swap counts.

An element encodes a weight gamma with lambda+gamma a candidate constituent
of the tensor product.  Canonical within-class placement makes the class
data a faithful encoding: symmetric-power boxes all sit at the class minimum,
exterior-power boxes fill an initial segment, and a Fock swap pair (r, s)
removes the terminal r elements of the A-part and adds the initial s elements
of the B-part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .errors import GlpieriError
from .profiles import ClassKey, classkey_from_str, classkey_to_str

KIND_SYM = "sym"
KIND_EXT = "ext"
KIND_FOCK = "fock"


@dataclass(frozen=True)
class PieriElement:
    kind: str
    # sym/ext: ((key, count), ...); fock: ((key, (r, s)), ...); zero entries
    # dropped, keys sorted for hashability and determinism.
    entries: tuple

    def counts(self) -> dict[ClassKey, int]:
        assert self.kind in (KIND_SYM, KIND_EXT)
        return dict(self.entries)

    def swaps(self) -> dict[ClassKey, tuple[int, int]]:
        assert self.kind == KIND_FOCK
        return dict(self.entries)

    def total_boxes(self) -> int:
        if self.kind == KIND_FOCK:
            return sum(r for _, (r, _) in self.entries)
        return sum(c for _, c in self.entries)

    def delta(self) -> dict[ClassKey, int]:
        """Class-level coordinate vector of gamma relative to the reference
        weight of the module (the empty element)."""
        if self.kind == KIND_FOCK:
            return {k: s - r for k, (r, s) in self.entries}
        return dict(self.entries)

    def __repr__(self):
        if not self.entries:
            return f"<{self.kind}: 0>"
        if self.kind == KIND_FOCK:
            parts = [f"{k}:({r},{s})" for k, (r, s) in self.entries]
        else:
            parts = [f"{k}:{c}" for k, c in self.entries]
        return f"<{self.kind}: {' '.join(parts)}>"


def _sorted_entries(mapping, keep) -> tuple:
    # (side, n) is deterministic though not the profile order; sorting in
    # profile order happens where a profile is in scope
    items = [(k, v) for k, v in mapping.items() if keep(v)]
    items.sort(key=lambda kv: (kv[0].side, kv[0].n))
    return tuple(items)


def sym_element(counts: Mapping[ClassKey, int]) -> PieriElement:
    _check_nonneg(counts.values())
    return PieriElement(KIND_SYM, _sorted_entries(counts, lambda c: c != 0))


def ext_element(counts: Mapping[ClassKey, int]) -> PieriElement:
    _check_nonneg(counts.values())
    return PieriElement(KIND_EXT, _sorted_entries(counts, lambda c: c != 0))


def fock_element(swaps: Mapping[ClassKey, tuple[int, int]]) -> PieriElement:
    flat = []
    for k, (r, s) in swaps.items():
        if r < 0 or s < 0:
            raise GlpieriError("swap counts must be nonnegative")
        flat.append((k, (r, s)))
    if sum(r for _, (r, _) in flat) != sum(s for _, (_, s) in flat):
        raise GlpieriError("total removals must equal total insertions")
    return PieriElement(
        KIND_FOCK, _sorted_entries(dict(flat), lambda rs: rs != (0, 0))
    )


def _check_nonneg(values):
    for v in values:
        if v < 0:
            raise GlpieriError("box counts must be nonnegative")


def element_to_json(e: PieriElement) -> dict:
    if e.kind == KIND_FOCK:
        return {
            "swaps": {classkey_to_str(k): [r, s] for k, (r, s) in e.entries}
        }
    return {"counts": {classkey_to_str(k): c for k, c in e.entries}}


def element_from_json(obj, kind: str) -> PieriElement:
    if kind == KIND_FOCK:
        swaps = {
            classkey_from_str(k): (int(r), int(s))
            for k, (r, s) in obj.get("swaps", {}).items()
        }
        return fock_element(swaps)
    counts = {classkey_from_str(k): int(c) for k, c in obj.get("counts", {}).items()}
    return sym_element(counts) if kind == KIND_SYM else ext_element(counts)
