"""Workspace files: named algebras, actions, tensors, and triangle structures.

A workspace is one JSON document.  Scalars are exact: bare integers or
"p/q" strings.  Structure tables may omit trailing rows, entries, or
coordinates, which default to zero.  Cross-references are by name;
built objects emitted by the CLI inline their parts instead, and the
loader accepts either form wherever a reference can appear.  Algebras
declaring a flavor are re-verified on load; a declared flavor that
fails its axiom check is a load error, never a silent downgrade.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .algebras import Algebra, FLAVORS, UNCHECKED, check_leibniz, check_lie
from .errors import (
    DimensionMismatch,
    FlavorViolation,
    ParseError,
    UnresolvedReference,
)
from .graded import DEFAULT_ARITY_CAP, MultiMap
from .leibniz_lie import LeibnizLie
from .linalg import Matrix, Vector, parse_scalar, scalar_to_json, zero_vector
from .tensors import Action, EmbeddingTensor

DEFAULT_MAX_DEGREE = 4


@dataclass
class Settings:
    max_degree: int = DEFAULT_MAX_DEGREE
    arity_cap: int = DEFAULT_ARITY_CAP


@dataclass
class Workspace:
    algebras: dict[str, Algebra] = field(default_factory=dict)
    actions: dict[str, Action] = field(default_factory=dict)
    tensors: dict[str, EmbeddingTensor] = field(default_factory=dict)
    leibniz_lie: dict[str, LeibnizLie] = field(default_factory=dict)
    settings: Settings = field(default_factory=Settings)

    def algebra(self, name: str) -> Algebra:
        return _lookup(self.algebras, name, "algebra")

    def action(self, name: str) -> Action:
        return _lookup(self.actions, name, "action")

    def tensor(self, name: str) -> EmbeddingTensor:
        return _lookup(self.tensors, name, "tensor")

    def leibniz_lie_structure(self, name: str) -> LeibnizLie:
        return _lookup(self.leibniz_lie, name, "leibnizLie entry")


def _lookup(table: dict, name: str, kind: str):
    if name not in table:
        raise UnresolvedReference(f"unknown {kind} {name!r}")
    return table[name]


# ---------------------------------------------------------------------------
# scalar / vector / matrix pieces
# ---------------------------------------------------------------------------

def _scalar(value, path: str):
    try:
        return parse_scalar(value)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _vector(data, length: int, path: str) -> Vector:
    if data is None:
        return zero_vector(length)
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a coordinate list")
    if len(data) > length:
        raise ParseError(f"{path}: {len(data)} coordinates in dimension {length}")
    vals = [_scalar(x, f"{path}[{i}]") for i, x in enumerate(data)]
    vals.extend([parse_scalar(0)] * (length - len(vals)))
    return tuple(vals)


def vector_to_json(v: Vector) -> list:
    return [scalar_to_json(x) for x in v]


def matrix_from_json(data, rows: int, cols: int, path: str) -> Matrix:
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"{path}: expected {rows} rows")
    return Matrix.from_rows([_vector(r, cols, f"{path}[{i}]") for i, r in enumerate(data)])


def matrix_to_json(m: Matrix) -> list:
    return [vector_to_json(m.row(i)) for i in range(m.rows)]


def _table(data, dim: int, path: str) -> tuple[tuple[Vector, ...], ...]:
    """A dim x dim table of coordinate vectors; omitted entries are zero."""
    if data is None:
        data = []
    if not isinstance(data, list) or len(data) > dim:
        raise ParseError(f"{path}: expected at most {dim} rows")
    rows = []
    for i in range(dim):
        row_data = data[i] if i < len(data) else None
        if row_data is None:
            row_data = []
        if not isinstance(row_data, list) or len(row_data) > dim:
            raise ParseError(f"{path}[{i}]: expected at most {dim} entries")
        row = [_vector(row_data[j] if j < len(row_data) else None, dim, f"{path}[{i}][{j}]")
               for j in range(dim)]
        rows.append(tuple(row))
    return tuple(rows)


def table_to_json(table) -> list:
    return [[vector_to_json(v) for v in row] for row in table]


# ---------------------------------------------------------------------------
# the four object kinds
# ---------------------------------------------------------------------------

def algebra_from_json(data, name: str, path: str) -> Algebra:
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected an object")
    if "dim" not in data or not isinstance(data["dim"], int) or data["dim"] < 0:
        raise ParseError(f"{path}.dim: a nonnegative integer is required")
    dim = data["dim"]
    flavor = data.get("flavor", UNCHECKED)
    if flavor not in FLAVORS:
        raise ParseError(f"{path}.flavor: unknown flavor {flavor!r}")
    sc = _table(data.get("sc"), dim, f"{path}.sc")
    algebra = Algebra(str(data.get("name", name)), dim, sc, flavor)
    _verify_flavor(algebra, path)
    return algebra


def _verify_flavor(algebra: Algebra, path: str) -> None:
    if algebra.flavor == "lie":
        report = check_lie(algebra)
        if not report.ok:
            w = report.witness
            raise FlavorViolation(
                f"{path}: algebra {algebra.name!r} declared lie but fails "
                f"{w.law} at basis tuple {w.where}")
    elif algebra.flavor == "leibniz":
        report = check_leibniz(algebra)
        if not report.ok:
            w = report.witness
            raise FlavorViolation(
                f"{path}: algebra {algebra.name!r} declared leibniz but fails "
                f"{w.law} at basis tuple {w.where}")


def algebra_to_json(a: Algebra) -> dict:
    return {"name": a.name, "dim": a.dim, "flavor": a.flavor, "sc": table_to_json(a.sc)}


def _resolve_algebra(ref, ws: Workspace, path: str) -> Algebra:
    if isinstance(ref, str):
        if ref not in ws.algebras:
            raise UnresolvedReference(f"{path}: unknown algebra {ref!r}")
        return ws.algebras[ref]
    return algebra_from_json(ref, f"inline@{path}", path)


def action_from_json(data, ws: Workspace, path: str) -> Action:
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected an object")
    for key in ("source", "target", "rho"):
        if key not in data:
            raise ParseError(f"{path}.{key}: required")
    source = _resolve_algebra(data["source"], ws, f"{path}.source")
    target = _resolve_algebra(data["target"], ws, f"{path}.target")
    rho_data = data["rho"]
    if not isinstance(rho_data, list) or len(rho_data) != source.dim:
        raise ParseError(f"{path}.rho: expected {source.dim} operator matrices")
    rho = tuple(matrix_from_json(m, target.dim, target.dim, f"{path}.rho[{i}]")
                for i, m in enumerate(rho_data))
    return Action(source, target, rho)


def action_to_json(a: Action) -> dict:
    return {
        "source": algebra_to_json(a.source),
        "target": algebra_to_json(a.target),
        "rho": [matrix_to_json(m) for m in a.rho],
    }


def _resolve_action(ref, ws: Workspace, path: str) -> Action:
    if isinstance(ref, str):
        if ref not in ws.actions:
            raise UnresolvedReference(f"{path}: unknown action {ref!r}")
        return ws.actions[ref]
    return action_from_json(ref, ws, path)


def tensor_from_json(data, ws: Workspace, path: str) -> EmbeddingTensor:
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected an object")
    for key in ("action", "matrix"):
        if key not in data:
            raise ParseError(f"{path}.{key}: required")
    action = _resolve_action(data["action"], ws, f"{path}.action")
    matrix = matrix_from_json(data["matrix"], action.source.dim, action.target.dim,
                              f"{path}.matrix")
    return EmbeddingTensor(action, matrix)


def tensor_to_json(t: EmbeddingTensor) -> dict:
    return {"action": action_to_json(t.action), "matrix": matrix_to_json(t.matrix)}


def leibniz_lie_from_json(data, ws: Workspace, path: str) -> LeibnizLie:
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected an object")
    if "lie" not in data:
        raise ParseError(f"{path}.lie: required")
    lie = _resolve_algebra(data["lie"], ws, f"{path}.lie")
    triangle = _table(data.get("triangle"), lie.dim, f"{path}.triangle")
    return LeibnizLie(lie, triangle)


def leibniz_lie_to_json(l: LeibnizLie) -> dict:
    return {"lie": algebra_to_json(l.lie), "triangle": table_to_json(l.triangle)}


def multimap_to_json(f: MultiMap) -> dict:
    return {
        "arity": f.arity,
        "domainDim": f.domain_dim,
        "codomainDim": f.codomain_dim,
        "coeffs": f.to_nested(),
    }


def multimap_from_json(data, path: str = "multimap") -> MultiMap:
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected an object")
    for key in ("arity", "domainDim", "codomainDim", "coeffs"):
        if key not in data:
            raise ParseError(f"{path}.{key}: required")
    arity = _positive_int(data["arity"], f"{path}.arity")
    n, m = data["domainDim"], data["codomainDim"]
    if not isinstance(n, int) or not isinstance(m, int) or n < 1 or m < 0:
        raise ParseError(f"{path}: bad dimensions")
    flat: list = []

    def walk(node, depth: int, at: str) -> None:
        if depth == arity:
            flat.extend(_vector(node, m, at))
            return
        if not isinstance(node, list) or len(node) != n:
            raise ParseError(f"{at}: expected {n} entries")
        for i, child in enumerate(node):
            walk(child, depth + 1, f"{at}[{i}]")

    walk(data["coeffs"], 0, f"{path}.coeffs")
    return MultiMap(arity, n, m, tuple(flat))


# ---------------------------------------------------------------------------
# loading
# ---------------------------------------------------------------------------

def workspace_from_dict(data) -> Workspace:
    if not isinstance(data, dict):
        raise ParseError("workspace: expected a JSON object at top level")
    ws = Workspace()
    settings = data.get("settings", {})
    if not isinstance(settings, dict):
        raise ParseError("settings: expected an object")
    ws.settings = Settings(
        max_degree=_positive_int(settings.get("maxDegree", DEFAULT_MAX_DEGREE), "settings.maxDegree"),
        arity_cap=_positive_int(settings.get("arityCap", DEFAULT_ARITY_CAP), "settings.arityCap"),
    )
    for section, loader, store in (
            ("algebras", None, ws.algebras),
            ("actions", action_from_json, ws.actions),
            ("tensors", tensor_from_json, ws.tensors),
            ("leibnizLie", leibniz_lie_from_json, ws.leibniz_lie)):
        entries = data.get(section, {})
        if not isinstance(entries, dict):
            raise ParseError(f"{section}: expected an object of named entries")
        for name, entry in entries.items():
            path = f"{section}.{name}"
            try:
                if section == "algebras":
                    store[name] = algebra_from_json(entry, name, path)
                else:
                    store[name] = loader(entry, ws, path)
            except (DimensionMismatch, ValueError) as exc:
                raise ParseError(f"{path}: {exc}") from exc
    return ws


def _positive_int(value, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ParseError(f"{path}: a positive integer is required")
    return value


def _reject_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ParseError(f"duplicate name {key!r}")
        seen.add(key)
    return dict(pairs)


def load_workspace(path: str | Path) -> Workspace:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return workspace_from_dict(data)
