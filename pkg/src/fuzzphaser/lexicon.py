"""JSON lexicon documents: load, validate, and write back canonically.

Document shape::

    {"spaces": {"concepts": 4},
     "entries": [{"name": "red", "space": "concepts", "kind": "pure",
                  "mechanism": "projector", "data": [[0.8, 0], ...]}]}

Complex numbers are [re, im] pairs (bare reals accepted on input);
density matrices are row-major nested arrays; double density matrices
are {"factors": [{"y": r, "branches": [{"x": r, "phi": [...]}]}]}.
A transitive verb declares "space" as a two-element array and its
operand lives on the product space.
"""

from __future__ import annotations

import json

import numpy as np

from .ddm import DdmBranch, DdmFactor, DoubleDensityMatrix
from .density import DensityMatrix, PureState
from .errors import FuzzPhaserError, LexiconError
from .textcirc import Lexicon, LexiconEntry


def _real_in(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise LexiconError(f"{where}: expected a real number")
    return float(value)


def _complex_in(value, where: str) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(float(value), 0.0)
    if isinstance(value, list) and len(value) == 2:
        return complex(_real_in(value[0], where), _real_in(value[1], where))
    raise LexiconError(f"{where}: expected a number or an [re, im] pair")


def _vector_in(data, where: str) -> np.ndarray:
    if not isinstance(data, list) or not data:
        raise LexiconError(f"{where}: expected a non-empty vector")
    return np.array([_complex_in(v, where) for v in data], dtype=np.complex128)


def _matrix_in(data, where: str) -> np.ndarray:
    if not isinstance(data, list) or not data:
        raise LexiconError(f"{where}: expected a non-empty matrix")
    rows = [_vector_in(row, where) for row in data]
    if any(row.size != len(rows) for row in rows):
        raise LexiconError(f"{where}: matrix must be square, rows of equal length")
    return np.array(rows, dtype=np.complex128)


def _ddm_in(data, where: str) -> DoubleDensityMatrix:
    if not isinstance(data, dict) or not isinstance(data.get("factors"), list):
        raise LexiconError(f'{where}: ddm data must be {{"factors": [...]}}')
    factors = []
    for k, fdoc in enumerate(data["factors"]):
        fwhere = f"{where}.factors[{k}]"
        if not isinstance(fdoc, dict) or not isinstance(fdoc.get("branches"), list):
            raise LexiconError(f"{fwhere}: expected y and a branch list")
        branches = []
        for i, bdoc in enumerate(fdoc["branches"]):
            bwhere = f"{fwhere}.branches[{i}]"
            if not isinstance(bdoc, dict):
                raise LexiconError(f"{bwhere}: expected x and phi")
            branches.append(
                DdmBranch(
                    _real_in(bdoc.get("x"), f"{bwhere}.x"),
                    PureState(_vector_in(bdoc.get("phi"), f"{bwhere}.phi")),
                )
            )
        factors.append(DdmFactor(_real_in(fdoc.get("y"), f"{fwhere}.y"), branches))
    return DoubleDensityMatrix(factors)


def entry_from_document(obj, where: str = "entry") -> LexiconEntry:
    if not isinstance(obj, dict):
        raise LexiconError(f"{where}: expected an object")
    for key in ("name", "space", "kind", "mechanism", "data"):
        if key not in obj:
            raise LexiconError(f"{where}: missing key {key!r}")
    name, kind = obj["name"], obj["kind"]
    where = f"{where} ({name!r})"
    try:
        if kind == "pure":
            operand = PureState(_vector_in(obj["data"], where))
        elif kind == "density":
            operand = DensityMatrix(_matrix_in(obj["data"], where))
        elif kind == "ddm":
            operand = _ddm_in(obj["data"], where)
        else:
            raise LexiconError(f"{where}: unknown kind {kind!r}")
        return LexiconEntry(name, obj["space"], kind, obj["mechanism"], operand)
    except LexiconError:
        raise
    except (FuzzPhaserError, ValueError, TypeError) as exc:
        raise LexiconError(f"{where}: {exc}") from exc


def lexicon_from_document(doc) -> Lexicon:
    if not isinstance(doc, dict):
        raise LexiconError("lexicon document must be a JSON object")
    spaces, entries = doc.get("spaces"), doc.get("entries")
    if not isinstance(spaces, dict) or not spaces:
        raise LexiconError('"spaces" must map space names to dimensions')
    if not isinstance(entries, list):
        raise LexiconError('"entries" must be a list')
    for label, dim in spaces.items():
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            raise LexiconError(f"space {label!r}: dimension must be a positive integer")
    parsed = [
        entry_from_document(obj, where=f"entries[{i}]") for i, obj in enumerate(entries)
    ]
    return Lexicon(spaces, parsed)


def _complex_out(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _vector_out(v: np.ndarray) -> list:
    return [_complex_out(z) for z in np.asarray(v)]


def _matrix_out(m: np.ndarray) -> list:
    return [_vector_out(row) for row in np.asarray(m)]


def entry_to_document(entry: LexiconEntry) -> dict:
    if entry.kind == "pure":
        data = _vector_out(entry.operand.amplitudes)
    elif entry.kind == "density":
        data = _matrix_out(entry.operand.matrix)
    else:
        data = {
            "factors": [
                {
                    "y": float(f.y),
                    "branches": [
                        {"x": float(b.x), "phi": _vector_out(b.phi.amplitudes)}
                        for b in f.branches
                    ],
                }
                for f in entry.operand.factors
            ]
        }
    space = entry.space[0] if len(entry.space) == 1 else list(entry.space)
    return {
        "name": entry.name,
        "space": space,
        "kind": entry.kind,
        "mechanism": entry.mechanism,
        "data": data,
    }


def lexicon_to_document(lexicon: Lexicon) -> dict:
    return {
        "spaces": dict(lexicon.spaces),
        "entries": [entry_to_document(e) for e in lexicon.entries.values()],
    }


def load_lexicon(path) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LexiconError(f"{path}: not valid JSON ({exc})") from exc
    return lexicon_from_document(doc)


def save_lexicon(lexicon: Lexicon, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(lexicon_to_document(lexicon), fh, indent=2)
        fh.write("\n")
