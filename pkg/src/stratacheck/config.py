"""Configuration documents: the shared input format for every subcommand.

A config is a JSON object with up to five sections (actions, involutions,
groups, bases, ledgers), integer-only numeric fields throughout.  The
built-in document carries the whole bundled verification suite, and a user
document overrides entries of the same name section by section.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import ledger as ledger_mod
from .errors import ConfigError, LedgerError, ToolkitError
from .invariants import CoordinateInvolution, DiagonalAction
from .ledger import Ledger, StratumEntry
from .singularities import CyclicDiagonalElement, FiniteDiagonalGroup
from .surfaces import ClassBasis


@dataclass(frozen=True)
class ConfigDocument:
    label: str
    actions: dict[str, DiagonalAction] = field(default_factory=dict)
    involutions: dict[str, CoordinateInvolution] = field(default_factory=dict)
    groups: dict[str, FiniteDiagonalGroup] = field(default_factory=dict)
    bases: dict[str, ClassBasis] = field(default_factory=dict)
    ledgers: dict[str, Ledger] = field(default_factory=dict)

    def require(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            raise ConfigError(f"config {self.label!r} lacks {section} entry {name!r}")
        return table[name]


def builtin_config() -> ConfigDocument:
    """The bundled verification inputs; verify-all needs nothing else."""
    pair_weights = ((1, 1, 1, 1, -1, -1, -1, -1),)
    triple_weights = (
        (1, 1, 1, 1, 0, 0, -1, -1, -1, -1, 0, 0),
        (0, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1, -1),
    )
    actions = {
        "torus-pair": DiagonalAction(8, pair_weights),
        "torus-triple": DiagonalAction(12, triple_weights),
        "negation-c4": DiagonalAction(4, (), ((2, (1, 1, 1, 1)),)),
        "z2z2-c6": DiagonalAction(
            6, (), ((2, (0, 0, 1, 1, 1, 1)), (2, (1, 1, 0, 0, 1, 1)))
        ),
    }
    involutions = {
        # x1..x4 are variables 0..3, their duals y1..y4 are 4..7
        "swap-pair": CoordinateInvolution((5, 4, 7, 6, 1, 0, 3, 2)),
        # blocks (x12, x13, x23, y12, y13, y23), two variables each
        "swap-triple": CoordinateInvolution((7, 6, 9, 8, 11, 10, 1, 0, 3, 2, 5, 4)),
    }
    groups = {
        "negation-c2": FiniteDiagonalGroup((CyclicDiagonalElement(2, (1, 1)),)),
        "negation-c4": FiniteDiagonalGroup((CyclicDiagonalElement(2, (1, 1, 1, 1)),)),
        "z2z2-c6": FiniteDiagonalGroup(
            (
                CyclicDiagonalElement(2, (0, 0, 1, 1, 1, 1)),
                CyclicDiagonalElement(2, (1, 1, 0, 0, 1, 1)),
            )
        ),
    }
    bases = {
        "curve-square": ClassBasis(
            ("f1", "f2", "diag"), ((0, 1, 1), (1, 0, 1), (1, 1, -6))
        ),
    }
    ledgers = {
        "cubic": ledger_mod.cubic_paper_ledger(),
        "degree2": ledger_mod.degree2_paper_ledger(),
    }
    return ConfigDocument("builtin", actions, involutions, groups, bases, ledgers)


# ---------------------------------------------------------------------------
# parsing


def _need(table: dict, key: str, kind, where: str):
    if key not in table:
        raise ConfigError(f"{where}: missing field {key!r}")
    value = table[key]
    if kind is int and isinstance(value, bool):
        raise ConfigError(f"{where}: field {key!r} must be an integer")
    if not isinstance(value, kind):
        raise ConfigError(f"{where}: field {key!r} has wrong type")
    return value


def _int_list(values, where: str) -> tuple[int, ...]:
    if not isinstance(values, list) or any(
        not isinstance(v, int) or isinstance(v, bool) for v in values
    ):
        raise ConfigError(f"{where}: expected a list of integers")
    return tuple(values)


def _parse_action(name: str, raw: dict) -> DiagonalAction:
    where = f"actions.{name}"
    dim = _need(raw, "ambient_dim", int, where)
    torus = tuple(
        _int_list(row, f"{where}.torus_weights") for row in raw.get("torus_weights", [])
    )
    finite = []
    for pair in raw.get("finite_factors", []):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ConfigError(f"{where}.finite_factors: expected [modulus, weights]")
        modulus, weights = pair
        if not isinstance(modulus, int) or isinstance(modulus, bool):
            raise ConfigError(f"{where}.finite_factors: modulus must be an integer")
        finite.append((modulus, _int_list(weights, f"{where}.finite_factors")))
    try:
        return DiagonalAction(dim, torus, tuple(finite))
    except ToolkitError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _parse_involution(name: str, raw: dict) -> CoordinateInvolution:
    where = f"involutions.{name}"
    image = _int_list(_need(raw, "permutation", list, where), where)
    signs = raw.get("signs")
    try:
        if signs is None:
            return CoordinateInvolution(image)
        return CoordinateInvolution(image, _int_list(signs, where))
    except ToolkitError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _parse_group(name: str, raw: dict) -> FiniteDiagonalGroup:
    where = f"groups.{name}"
    gens = []
    for i, g in enumerate(_need(raw, "generators", list, where)):
        if not isinstance(g, dict):
            raise ConfigError(f"{where}.generators[{i}]: expected an object")
        order = _need(g, "order", int, f"{where}.generators[{i}]")
        exps = _int_list(
            _need(g, "exponents", list, f"{where}.generators[{i}]"),
            f"{where}.generators[{i}]",
        )
        try:
            gens.append(CyclicDiagonalElement(order, exps))
        except ToolkitError as exc:
            raise ConfigError(f"{where}.generators[{i}]: {exc}") from exc
    try:
        return FiniteDiagonalGroup(tuple(gens))
    except ToolkitError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _parse_basis(name: str, raw: dict) -> ClassBasis:
    where = f"bases.{name}"
    labels = _need(raw, "labels", list, where)
    if any(not isinstance(s, str) for s in labels):
        raise ConfigError(f"{where}: labels must be strings")
    pairing = tuple(
        _int_list(row, f"{where}.pairing") for row in _need(raw, "pairing", list, where)
    )
    try:
        return ClassBasis(tuple(labels), pairing)
    except ToolkitError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _parse_ledger(name: str, raw: dict) -> Ledger:
    where = f"ledgers.{name}"
    mode = raw.get("mode", "paper")
    entries = []
    for i, row in enumerate(_need(raw, "entries", list, where)):
        if not isinstance(row, dict):
            raise ConfigError(f"{where}.entries[{i}]: expected an object")
        rwhere = f"{where}.entries[{i}]"
        label = _need(row, "label", str, rwhere)
        dimension = _need(row, "dimension", int, rwhere)
        chi_base = row.get("chi_base")
        if chi_base is not None and (not isinstance(chi_base, int) or isinstance(chi_base, bool)):
            raise ConfigError(f"{rwhere}: chi_base must be an integer or null")
        chi_fiber = _need(row, "chi_fiber", int, rwhere)
        provenance = row.get("provenance", "paper")
        try:
            entries.append(
                StratumEntry(
                    label,
                    dimension,
                    chi_base,
                    chi_fiber,
                    provenance,
                    row.get("recipe", ""),
                    row.get("description", ""),
                )
            )
        except (LedgerError, ToolkitError) as exc:
            raise ConfigError(f"{rwhere}: {exc}") from exc
    required = {
        "cubic": ledger_mod.CUBIC_LABELS,
        "degree2": ledger_mod.DEGREE2_LABELS,
    }.get(name, tuple(e.label for e in entries))
    try:
        return Ledger(name, mode, tuple(entries), required)
    except LedgerError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


_SECTION_PARSERS = {
    "actions": _parse_action,
    "involutions": _parse_involution,
    "groups": _parse_group,
    "bases": _parse_basis,
    "ledgers": _parse_ledger,
}


def parse_config(raw: dict, label: str) -> ConfigDocument:
    """Validate a parsed JSON object and merge it over the built-in document."""
    if not isinstance(raw, dict):
        raise ConfigError("config document must be a JSON object")
    unknown = set(raw) - set(_SECTION_PARSERS)
    if unknown:
        raise ConfigError(f"unknown config sections {sorted(unknown)}")
    base = builtin_config()
    merged = {
        "actions": dict(base.actions),
        "involutions": dict(base.involutions),
        "groups": dict(base.groups),
        "bases": dict(base.bases),
        "ledgers": dict(base.ledgers),
    }
    for section, parser in _SECTION_PARSERS.items():
        table = raw.get(section, {})
        if not isinstance(table, dict):
            raise ConfigError(f"section {section!r} must be an object")
        for name, body in table.items():
            if not isinstance(body, dict):
                raise ConfigError(f"{section}.{name}: expected an object")
            merged[section][name] = parser(name, body)
    return ConfigDocument(label, **merged)


def load_config(path) -> ConfigDocument:
    text = Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
    return parse_config(raw, str(path))
