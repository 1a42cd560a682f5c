"""Front data model: ingestion, validation, dominance filtering, normalization.

A front is a finite set of candidate solutions with one row of objective
values each.  All values are stored in minimization form; columns declared
"max" are negated once at load time and the declared senses are kept as
provenance.  Normalization divides each column by its spread (max - min),
which makes per-column deviations from the column minimum dimensionless and
confined to [0, 1].
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import IO, Mapping, Sequence

import numpy as np

from .errors import (
    AllDimensionsDegenerate,
    DegenerateSpreadWarning,
    DuplicateId,
    EmptyFront,
    NonFiniteValue,
    ParseError,
    UnknownId,
)

SENSE_MIN = "min"
SENSE_MAX = "max"
_SENSE_ALIASES = {
    "min": SENSE_MIN,
    "minimize": SENSE_MIN,
    "minimise": SENSE_MIN,
    "max": SENSE_MAX,
    "maximize": SENSE_MAX,
    "maximise": SENSE_MAX,
}


def _canonical_sense(value: str) -> str:
    try:
        return _SENSE_ALIASES[str(value).strip().lower()]
    except KeyError:
        raise ParseError(f"unknown sense {value!r} (expected 'min' or 'max')") from None


@dataclass(frozen=True, eq=False)
class Front:
    """M solutions by N objectives, minimization form, immutable.

    Fields:
        objective_names: N column labels.
        senses: original orientation of each column ("min" or "max");
            values in ``objectives`` are already negated for "max" columns.
        ids: M unique solution ids, in input order.
        objectives: read-only (M, N) float array.
        decision_vectors: optional per-solution decision-variable payloads,
            aligned with ``ids``; entries may be None.
    """

    objective_names: tuple[str, ...]
    senses: tuple[str, ...]
    ids: tuple[str, ...]
    objectives: np.ndarray
    decision_vectors: tuple[tuple[float, ...] | None, ...] | None = None

    def __post_init__(self):
        names = tuple(str(n) for n in self.objective_names)
        senses = tuple(_canonical_sense(s) for s in self.senses)
        ids = tuple(str(i) for i in self.ids)
        f = np.array(self.objectives, dtype=float)

        if f.ndim != 2:
            raise ParseError(f"objective matrix must be 2-D, got shape {f.shape}")
        m, n = f.shape
        if m < 1:
            raise EmptyFront("front has no solutions")
        if n < 2:
            raise ParseError(f"need at least 2 objectives, got {n}")
        if len(names) != n:
            raise ParseError(f"{len(names)} objective names for {n} columns")
        if len(senses) != n:
            raise ParseError(f"{len(senses)} senses for {n} columns")
        if len(ids) != m:
            raise ParseError(f"{len(ids)} ids for {m} rows")

        seen: set[str] = set()
        for sid in ids:
            if sid in seen:
                raise DuplicateId(sid)
            seen.add(sid)

        bad = ~np.isfinite(f)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            raise NonFiniteValue(ids[row], names[col])

        xs = self.decision_vectors
        if xs is not None:
            xs = tuple(None if x is None else tuple(float(v) for v in x) for x in xs)
            if len(xs) != m:
                raise ParseError(f"{len(xs)} decision vectors for {m} rows")

        f.flags.writeable = False
        object.__setattr__(self, "objective_names", names)
        object.__setattr__(self, "senses", senses)
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "objectives", f)
        object.__setattr__(self, "decision_vectors", xs)

    @property
    def m(self) -> int:
        return self.objectives.shape[0]

    @property
    def n(self) -> int:
        return self.objectives.shape[1]

    @cached_property
    def _row_of(self) -> dict[str, int]:
        return {sid: k for k, sid in enumerate(self.ids)}

    def index_of(self, solution_id: str) -> int:
        try:
            return self._row_of[solution_id]
        except KeyError:
            raise UnknownId(solution_id) from None

    def take(self, indices: Sequence[int]) -> "Front":
        """Sub-front with the given rows, keeping names and senses."""
        idx = list(indices)
        xs = None
        if self.decision_vectors is not None:
            xs = tuple(self.decision_vectors[k] for k in idx)
        return Front(
            objective_names=self.objective_names,
            senses=self.senses,
            ids=tuple(self.ids[k] for k in idx),
            objectives=self.objectives[idx],
            decision_vectors=xs,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Front):
            return NotImplemented
        return (
            self.objective_names == other.objective_names
            and self.senses == other.senses
            and self.ids == other.ids
            and np.array_equal(self.objectives, other.objectives)
            and self.decision_vectors == other.decision_vectors
        )


@dataclass(frozen=True, eq=False)
class NormalizedFront:
    """A front together with its per-column spreads and normalized image.

    Fields:
        base: the source front.
        L: per-column spreads, max - min (problem units).
        ell: per-column minima (problem units).
        y: (M, N) normalized values f/L; zero on degenerate columns.
        y_opt: normalized ideal vector ell/L; zero on degenerate columns.
        degenerate_dims: indices of columns with zero spread.  They carry no
            preference information and contribute 0 to every score.
    """

    base: Front
    L: np.ndarray
    ell: np.ndarray
    y: np.ndarray
    y_opt: np.ndarray
    degenerate_dims: frozenset[int]

    @cached_property
    def deviations(self) -> np.ndarray:
        """(M, N) matrix of (f - ell)/L, 0 on degenerate columns.

        Computed from raw values rather than as y - y_opt: subtracting the
        stored column minimum before dividing keeps the entries accurate when
        the raw values are offset far from zero.
        """
        scale = np.where(self.L > 0.0, self.L, 1.0)
        dev = (self.base.objectives - self.ell) / scale
        if self.degenerate_dims:
            dev[:, sorted(self.degenerate_dims)] = 0.0
        dev.flags.writeable = False
        return dev

    @cached_property
    def mmd_scores(self) -> np.ndarray:
        """Manhattan distance of each normalized row from the ideal vector."""
        d = self.deviations.sum(axis=1)
        d.flags.writeable = False
        return d

    @cached_property
    def ws_scores(self) -> np.ndarray:
        """Spread-reciprocal weighted sum of each row (sum of f/L)."""
        s = self.y.sum(axis=1)
        s.flags.writeable = False
        return s

    @property
    def ideal_offset(self) -> float:
        """Sum of ell/L over non-degenerate dimensions; the constant by which
        weighted sums exceed Manhattan distances."""
        return float(self.y_opt.sum())

    def index_of(self, solution_id: str) -> int:
        return self.base.index_of(solution_id)


def normalize(front: Front) -> NormalizedFront:
    """Compute spreads, minima, normalized matrix and ideal vector.

    Columns with zero spread are flagged degenerate: their normalized values
    are set to 0 so they contribute nothing to any score, and a
    DegenerateSpreadWarning is issued.  Raises AllDimensionsDegenerate when
    several solutions coincide in every objective; a single-solution front is
    allowed and trivially selects itself.
    """
    f = front.objectives
    ell = f.min(axis=0)
    L = f.max(axis=0) - ell
    degenerate = np.flatnonzero(L == 0.0)

    if len(degenerate) == front.n and front.m > 1:
        raise AllDimensionsDegenerate(
            "all objectives have zero spread; solutions are indistinguishable"
        )
    if len(degenerate) and front.m > 1:
        names = ", ".join(front.objective_names[k] for k in degenerate)
        warnings.warn(
            f"zero-spread objective(s) excluded from scoring: {names}",
            DegenerateSpreadWarning,
            stacklevel=2,
        )

    scale = np.where(L > 0.0, L, 1.0)
    y = f / scale
    y_opt = ell / scale
    if len(degenerate):
        y[:, degenerate] = 0.0
        y_opt[degenerate] = 0.0

    for arr in (ell, L, y, y_opt):
        arr.flags.writeable = False
    return NormalizedFront(
        base=front,
        L=L,
        ell=ell,
        y=y,
        y_opt=y_opt,
        degenerate_dims=frozenset(int(k) for k in degenerate),
    )


def dominance_filter(front: Front) -> tuple[Front, list[str]]:
    """Drop every solution dominated by another one.

    A row is dominated when some other row is <= in every column and < in at
    least one.  Exact duplicates dominate nothing and are all kept.  Returns
    the surviving sub-front (input order preserved) and the removed ids in
    input order.
    """
    f = front.objectives
    # le[j, i]: row j <= row i everywhere; lt[j, i]: row j < row i somewhere
    le = np.all(f[:, None, :] <= f[None, :, :], axis=2)
    lt = np.any(f[:, None, :] < f[None, :, :], axis=2)
    dominated = np.any(le & lt, axis=0)
    keep = np.flatnonzero(~dominated)
    removed = [front.ids[k] for k in np.flatnonzero(dominated)]
    return front.take(keep), removed


def _resolve_senses(
    names: Sequence[str],
    file_senses: Sequence[str] | None,
    overrides: Mapping[str, str] | Sequence[str] | None,
) -> tuple[str, ...]:
    senses = [SENSE_MIN] * len(names)
    if file_senses is not None:
        if len(file_senses) != len(names):
            raise ParseError(
                f"{len(file_senses)} senses for {len(names)} objectives"
            )
        senses = [_canonical_sense(s) for s in file_senses]
    if overrides is None:
        return tuple(senses)
    if isinstance(overrides, Mapping):
        index = {name: k for k, name in enumerate(names)}
        for name, sense in overrides.items():
            if name not in index:
                raise ParseError(f"sense override for unknown objective {name!r}")
            senses[index[name]] = _canonical_sense(sense)
        return tuple(senses)
    if len(overrides) != len(names):
        raise ParseError(f"{len(overrides)} sense overrides for {len(names)} objectives")
    return tuple(_canonical_sense(s) for s in overrides)


def _as_text(source: IO | str | bytes) -> io.StringIO:
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, str):
        return io.StringIO(source)
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return io.StringIO(data)


def load_front(
    source: IO | str | bytes,
    format: str = "csv",
    senses: Mapping[str, str] | Sequence[str] | None = None,
) -> Front:
    """Read a front from a CSV or JSON stream (or in-memory text/bytes).

    CSV: header line ``id,<name1>,...,<nameN>``, one row per solution,
    ``#`` comment lines ignored.  JSON: an object with "objectives",
    optional "senses", and "solutions" records carrying "id", "f" and an
    optional "x".

    ``senses`` optionally overrides column orientation, either as a mapping
    from objective name to sense or as a full per-column sequence.  Columns
    whose resolved sense is "max" are negated so that every stored column is
    minimized; row order is preserved.
    """
    if format == "csv":
        return _load_csv(_as_text(source), senses)
    if format == "json":
        return _load_json(_as_text(source), senses)
    raise ParseError(f"unknown front format {format!r}")


def _load_csv(text: io.StringIO, overrides) -> Front:
    rows = [
        row
        for row in csv.reader(line for line in text if not line.lstrip().startswith("#"))
        if row
    ]
    if not rows:
        raise EmptyFront("no header line")
    header = [cell.strip() for cell in rows[0]]
    if not header or header[0] != "id":
        raise ParseError("first CSV column must be 'id'")
    names = header[1:]
    if len(names) < 2:
        raise ParseError("need at least 2 objective columns")
    if not rows[1:]:
        raise EmptyFront("no solution rows")

    ids = []
    values = []
    for row in rows[1:]:
        if len(row) != len(header):
            raise ParseError(
                f"row {row[0] if row else '?'!r}: expected {len(header)} cells, got {len(row)}"
            )
        ids.append(row[0].strip())
        try:
            values.append([float(cell) for cell in row[1:]])
        except ValueError as exc:
            raise ParseError(f"row {row[0]!r}: {exc}") from None
    return _assemble(names, None, overrides, ids, np.array(values), None)


def _load_json(text: io.StringIO, overrides) -> Front:
    try:
        doc = json.load(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    try:
        names = [str(n) for n in doc["objectives"]]
        solutions = doc["solutions"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing front field: {exc}") from None
    if len(names) < 2:
        raise ParseError("need at least 2 objectives")
    if not isinstance(solutions, list) or not solutions:
        raise EmptyFront("no solution records")

    ids, values, xs = [], [], []
    for rec in solutions:
        try:
            ids.append(str(rec["id"]))
            f = rec["f"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad solution record: {exc}") from None
        if not isinstance(f, list) or len(f) != len(names):
            raise ParseError(f"solution {ids[-1]!r}: expected {len(names)} objective values")
        try:
            values.append([float(v) for v in f])
        except (TypeError, ValueError) as exc:
            raise ParseError(f"solution {ids[-1]!r}: {exc}") from None
        x = rec.get("x")
        xs.append(None if x is None else tuple(float(v) for v in x))
    decision = None if all(x is None for x in xs) else tuple(xs)
    return _assemble(names, doc.get("senses"), overrides, ids, np.array(values), decision)


def _assemble(names, file_senses, overrides, ids, values, decision) -> Front:
    senses = _resolve_senses(names, file_senses, overrides)
    flip = [k for k, s in enumerate(senses) if s == SENSE_MAX]
    if flip:
        values = values.copy()
        values[:, flip] = -values[:, flip]
    return Front(
        objective_names=tuple(names),
        senses=senses,
        ids=tuple(ids),
        objectives=values,
        decision_vectors=decision,
    )


def write_front(front: Front, stream: IO, format: str = "csv") -> None:
    """Write a front so that loading the output reproduces it.

    JSON keeps full fidelity: "max" columns are written back in their
    original orientation together with the senses, and decision vectors are
    included.  CSV carries only ids and objective values; they are written in
    minimization form, so reloading with default senses reproduces the stored
    matrix (sense provenance and decision vectors do not fit the CSV schema).
    """
    if format == "csv":
        _write_csv(front, stream)
    elif format == "json":
        _write_json(front, stream)
    else:
        raise ParseError(f"unknown front format {format!r}")


def _write_csv(front: Front, stream: IO) -> None:
    stream.write("id," + ",".join(front.objective_names) + "\n")
    for sid, row in zip(front.ids, front.objectives):
        stream.write(sid + "," + ",".join(repr(float(v)) for v in row) + "\n")


def _write_json(front: Front, stream: IO) -> None:
    flip = [k for k, s in enumerate(front.senses) if s == SENSE_MAX]
    values = front.objectives.copy()
    if flip:
        values[:, flip] = -values[:, flip]
    solutions = []
    for k, sid in enumerate(front.ids):
        rec: dict = {"id": sid, "f": [float(v) for v in values[k]]}
        if front.decision_vectors is not None and front.decision_vectors[k] is not None:
            rec["x"] = list(front.decision_vectors[k])
        solutions.append(rec)
    json.dump(
        {
            "objectives": list(front.objective_names),
            "senses": list(front.senses),
            "solutions": solutions,
        },
        stream,
        indent=2,
    )
    stream.write("\n")
