"""Combinatorial model of the 27 lines on a smooth cubic surface.

Lines carry the blowup-model labels: six exceptional classes E_i, six conic
classes G_j, and fifteen span classes F_ij.  Incidence is the standard rule
derived from the intersection numbers of those classes; no coordinates or
surface equation appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ToolkitError, UnsupportedConfigurationError

INDEX_RANGE = (1, 2, 3, 4, 5, 6)


@dataclass(frozen=True, order=True)
class Line:
    """One of the 27 labels: E_i, G_j, or F_ij with i < j."""

    kind: str
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.kind in ("E", "G"):
            if len(self.indices) != 1 or self.indices[0] not in INDEX_RANGE:
                raise ToolkitError(f"bad {self.kind} label {self.indices}")
        elif self.kind == "F":
            if (
                len(self.indices) != 2
                or self.indices[0] >= self.indices[1]
                or any(i not in INDEX_RANGE for i in self.indices)
            ):
                raise ToolkitError(f"bad F label {self.indices}")
        else:
            raise ToolkitError(f"unknown line kind {self.kind!r}")

    @property
    def label(self) -> str:
        return self.kind + "".join(str(i) for i in self.indices)


def are_incident(a: Line, b: Line) -> bool:
    """Blowup-model incidence rule for two distinct lines.

    E meets no E, G no G; E_i meets G_j for i != j; E_i meets F_kl when
    i is one of k, l; G_j meets F_kl when j is one of k, l; two F's meet
    exactly when their index pairs are disjoint.
    """
    if a == b:
        return False
    kinds = {a.kind, b.kind}
    if kinds == {"E"} or kinds == {"G"}:
        return False
    if kinds == {"E", "G"}:
        return a.indices[0] != b.indices[0]
    if kinds == {"E", "F"} or kinds == {"G", "F"}:
        single, pair = (a, b) if a.kind in ("E", "G") else (b, a)
        return single.indices[0] in pair.indices
    # F vs F
    return not set(a.indices) & set(b.indices)


@dataclass(frozen=True)
class Configuration27:
    lines: tuple[Line, ...]
    incidences: frozenset

    def incident(self, a: Line, b: Line) -> bool:
        return frozenset((a, b)) in self.incidences

    def neighbors(self, a: Line) -> tuple[Line, ...]:
        return tuple(b for b in self.lines if self.incident(a, b))


def build_configuration(model: str = "cubic-surface") -> Configuration27:
    """The 27-line configuration; no other line configuration is modeled."""
    if model != "cubic-surface":
        raise UnsupportedConfigurationError(
            f"only the cubic-surface configuration is modeled, not {model!r}"
        )
    lines = (
        tuple(Line("E", (i,)) for i in INDEX_RANGE)
        + tuple(Line("G", (j,)) for j in INDEX_RANGE)
        + tuple(Line("F", pair) for pair in combinations(INDEX_RANGE, 2))
    )
    incidences = frozenset(
        frozenset((a, b)) for a, b in combinations(lines, 2) if are_incident(a, b)
    )
    return Configuration27(lines, incidences)


def tritangent_triples(config: Configuration27) -> frozenset:
    """All 45 coplanar triples: {E_i, G_j, F_ij} with i != j, and F-partitions."""
    triples = set()
    for i in INDEX_RANGE:
        for j in INDEX_RANGE:
            if i == j:
                continue
            pair = (min(i, j), max(i, j))
            triples.add(
                frozenset((Line("E", (i,)), Line("G", (j,)), Line("F", pair)))
            )
    rest = INDEX_RANGE[1:]
    for partner in rest:
        first = (1, partner)
        remaining = [i for i in rest if i != partner]
        a, b, c, d = remaining
        for second, third in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            triples.add(
                frozenset((Line("F", first), Line("F", second), Line("F", third)))
            )
    for t in triples:
        for a, b in combinations(sorted(t), 2):
            if not config.incident(a, b):
                raise ToolkitError(f"triple {sorted(t)} is not pairwise incident")
    return frozenset(triples)


def tritangent_type_counts(triples) -> dict[str, int]:
    """Counts of {E, G, F} versus {F, F, F} labeled triples."""
    counts = {"EGF": 0, "FFF": 0}
    for t in triples:
        kinds = sorted(line.kind for line in t)
        if kinds == ["E", "F", "G"]:
            counts["EGF"] += 1
        elif kinds == ["F", "F", "F"]:
            counts["FFF"] += 1
        else:
            raise ToolkitError(f"unexpected triple kinds {kinds}")
    return counts


@dataclass(frozen=True)
class DualStratification:
    dual_line_count: int
    triple_point_count: int
    triples_per_line: int
    lines_per_triple: int


def dual_stratification_counts(config: Configuration27) -> DualStratification:
    """Counts (27, 45, 5, 3) with the double-count identity 27*5 = 45*3.

    Everything is recomputed from the configuration: per-line triple counts
    must be uniform, and the incidence double count must balance.
    """
    triples = tritangent_triples(config)
    per_line = {
        line: sum(1 for t in triples if line in t) for line in config.lines
    }
    values = set(per_line.values())
    if len(values) != 1:
        raise ToolkitError(f"triples per line is not uniform: {sorted(values)}")
    per_line_count = values.pop()
    sizes = {len(t) for t in triples}
    if sizes != {3}:
        raise ToolkitError(f"unexpected triple sizes {sorted(sizes)}")
    counts = DualStratification(
        len(config.lines), len(triples), per_line_count, 3
    )
    if counts.dual_line_count * counts.triples_per_line != (
        counts.triple_point_count * counts.lines_per_triple
    ):
        raise ToolkitError("line/triple double count does not balance")
    return counts
