"""Reading and writing torus input documents (JSON).

Field names are documented in docs/FORMAT.md. Integers are written as
decimal strings; on input plain JSON integers are accepted as well. Every
error message names the offending field path.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .assembly import GlobalTorusSpec, PlaceData
from .errors import InvalidInput
from .groups import FiniteGroup, Subgroup
from .lattice import GaloisLattice, validate
from .local import LocalTorusData
from .matrix import IntMatrix

FORMAT_TAG = "torus-lattice/1"
_INT = re.compile(r"[+-]?[0-9]+")


class InputError(InvalidInput):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def _int(x: Any, path: str) -> int:
    if isinstance(x, bool):
        raise InputError(path, "expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and _INT.fullmatch(x.strip()):
        return int(x.strip())
    raise InputError(path, f"expected an integer as a decimal string, got {x!r}")


def _list(x: Any, path: str) -> list:
    if not isinstance(x, list):
        raise InputError(path, f"expected a list, got {type(x).__name__}")
    return x


def _obj(x: Any, path: str) -> dict:
    if not isinstance(x, dict):
        raise InputError(path, f"expected an object, got {type(x).__name__}")
    return x


def _get(d: dict, key: str, path: str) -> Any:
    if key not in d:
        raise InputError(f"{path}.{key}" if path else key, "missing field")
    return d[key]


def _matrix(x: Any, n: int, path: str) -> IntMatrix:
    rows = _list(x, path)
    if len(rows) != n:
        raise InputError(path, f"expected {n} rows, got {len(rows)}")
    out = []
    for i, r in enumerate(rows):
        r = _list(r, f"{path}[{i}]")
        if len(r) != n:
            raise InputError(f"{path}[{i}]", f"expected {n} entries, got {len(r)}")
        out.append([_int(v, f"{path}[{i}][{j}]") for j, v in enumerate(r)])
    return IntMatrix(out, n, n)


def parse_group(doc: dict, path: str = "group") -> FiniteGroup:
    g = _obj(doc, path)
    n = _int(_get(g, "order", path), f"{path}.order")
    if n < 1:
        raise InputError(f"{path}.order", "must be >= 1")
    table = _list(_get(g, "mult_table", path), f"{path}.mult_table")
    if len(table) != n:
        raise InputError(f"{path}.mult_table", f"expected {n} rows, got {len(table)}")
    rows = []
    for i, r in enumerate(table):
        r = _list(r, f"{path}.mult_table[{i}]")
        if len(r) != n:
            raise InputError(f"{path}.mult_table[{i}]", f"expected {n} entries, got {len(r)}")
        rows.append(tuple(_int(v, f"{path}.mult_table[{i}][{j}]") for j, v in enumerate(r)))
    try:
        return FiniteGroup(tuple(rows))
    except InvalidInput as e:
        raise InputError(f"{path}.mult_table", str(e)) from e


def parse_lattice(doc: dict, group: FiniteGroup, path: str = "lattice") -> GaloisLattice:
    lat = _obj(doc, path)
    d = _int(_get(lat, "rank", path), f"{path}.rank")
    if d < 0:
        raise InputError(f"{path}.rank", "must be >= 0")
    acts = _list(_get(lat, "action", path), f"{path}.action")
    if len(acts) != group.order:
        raise InputError(f"{path}.action", f"expected {group.order} matrices, got {len(acts)}")
    L = GaloisLattice(group, d, tuple(_matrix(m, d, f"{path}.action[{g}]")
                                      for g, m in enumerate(acts)))
    problem = validate(L)
    if problem:
        raise InputError(f"{path}.action", problem)
    return L


def _subgroup(x: Any, group: FiniteGroup, path: str) -> Subgroup:
    els = [_int(v, f"{path}[{i}]") for i, v in enumerate(_list(x, path))]
    try:
        return Subgroup(group, tuple(els))
    except InvalidInput as e:
        raise InputError(path, str(e)) from e


@dataclass(frozen=True)
class InputDocument:
    group: FiniteGroup
    lattice: GaloisLattice
    local: LocalTorusData | None = None
    global_spec: GlobalTorusSpec | None = None


def parse_document(doc: Any) -> InputDocument:
    doc = _obj(doc, "")
    group = parse_group(_get(doc, "group", ""))
    L = parse_lattice(_get(doc, "lattice", ""), group)
    local = None
    if "local" in doc:
        loc = _obj(doc["local"], "local")
        inertia = _subgroup(_get(loc, "inertia", "local"), group, "local.inertia")
        frob = _int(_get(loc, "frobenius", "local"), "local.frobenius")
        q = _int(_get(loc, "residue_q", "local"), "local.residue_q")
        try:
            local = LocalTorusData(L, inertia, frob, q)
        except InvalidInput as e:
            raise InputError("local", str(e)) from e
    spec = None
    if "global" in doc:
        spec = _parse_global(_obj(doc["global"], "global"), L)
    return InputDocument(group, L, local, spec)


def _parse_global(g: dict, L: GaloisLattice) -> GlobalTorusSpec:
    case = _get(g, "case", "global")
    if case not in ("F", "N"):
        raise InputError("global.case", f"must be \"F\" or \"N\", got {case!r}")
    places = []
    for i, p in enumerate(_list(g.get("places", []), "global.places")):
        path = f"global.places[{i}]"
        p = _obj(p, path)
        label = str(p.get("label", f"p{i}"))
        D = _subgroup(_get(p, "decomposition", path), L.group, f"{path}.decomposition")
        I = _subgroup(_get(p, "inertia", path), L.group, f"{path}.inertia")
        places.append(PlaceData(label, D, I, _int(_get(p, "frobenius", path), f"{path}.frobenius"),
                                _int(_get(p, "residue_q", path), f"{path}.residue_q")))
    try:
        if case == "F":
            return GlobalTorusSpec("F", L, tuple(places),
                                   constants_q=_int(_get(g, "q", "global"), "global.q"),
                                   genus=_int(_get(g, "genus", "global"), "global.genus"))
        return GlobalTorusSpec("N", L, tuple(places),
                               discriminant=_int(_get(g, "discriminant", "global"),
                                                 "global.discriminant"))
    except InputError:
        raise
    except InvalidInput as e:
        raise InputError("global", str(e)) from e


def load(path: str | Path) -> InputDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError("", f"cannot read {path}: {e.strerror}") from e
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("", f"{path}: invalid JSON at line {e.lineno} column {e.colno}: "
                             f"{e.msg}") from e
    return parse_document(doc)


# ---------------------------------------------------------------------------
# writing


def _s(m: IntMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.rows]


def dump_group(G: FiniteGroup) -> dict:
    return {"order": str(G.order), "mult_table": [[str(x) for x in r] for r in G.mult_table]}


def dump_lattice(L: GaloisLattice) -> dict:
    return {"rank": str(L.rank), "action": [_s(m) for m in L.action]}


def dump_local(data: LocalTorusData) -> dict:
    return {"inertia": [str(h) for h in data.inertia.elements],
            "frobenius": str(data.frobenius), "residue_q": str(data.residue_q)}


def dump_global(spec: GlobalTorusSpec) -> dict:
    out: dict[str, Any] = {"case": spec.case}
    if spec.case == "F":
        out["q"] = str(spec.constants_q)
        out["genus"] = str(spec.genus)
    else:
        out["discriminant"] = str(spec.discriminant)
    out["places"] = [{"label": p.label,
                      "decomposition": [str(x) for x in p.decomposition.elements],
                      "inertia": [str(x) for x in p.inertia.elements],
                      "frobenius": str(p.frobenius), "residue_q": str(p.residue_q)}
                     for p in spec.places]
    return out


def dump_document(L: GaloisLattice, local: LocalTorusData | None = None,
                  spec: GlobalTorusSpec | None = None) -> dict:
    doc: dict[str, Any] = {"format": FORMAT_TAG, "group": dump_group(L.group),
                           "lattice": dump_lattice(L)}
    if local is not None:
        doc["local"] = dump_local(local)
    if spec is not None:
        doc["global"] = dump_global(spec)
    return doc


def save(path: str | Path, doc: dict) -> None:
    Path(path).write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
