"""Molecular property datasets and index/property correlation."""

from __future__ import annotations

import csv
import io
import statistics
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .graph import GraphFormatError, SimpleGraph, is_tree
from .indices import IndexSpec, evaluate_index


class DatasetError(ValueError):
    pass


class RowRejected(UserWarning):
    """Emitted when a dataset row is skipped."""


@dataclass(frozen=True)
class Molecule:
    id: str
    graph: SimpleGraph
    properties: Dict[str, float]


@dataclass
class PropertyDataset:
    rows: List[Molecule]
    properties: Tuple[str, ...]
    kind: Optional[str] = None
    rejected: List[str] = field(default_factory=list)

    def column(self, name: str) -> List[float]:
        if name not in self.properties:
            raise KeyError(f"no property {name!r}; have {', '.join(self.properties)}")
        return [m.properties[name] for m in self.rows]


def parse_edge_field(text: str) -> SimpleGraph:
    """Parse the ``u-v;u-v;...`` edge field. An empty field is a single atom."""
    text = text.strip()
    if not text:
        return SimpleGraph(1, ((),))
    edges = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        try:
            a, b = item.split("-")
            edges.append((int(a), int(b)))
        except ValueError:
            raise GraphFormatError(f"bad edge {item!r}") from None
    ids = {x for e in edges for x in e}
    n = max(ids) + 1
    if min(ids) < 0 or len(ids) != n:
        raise GraphFormatError("vertex ids must be 0..n-1")
    return SimpleGraph.from_edges(n, edges)


def _parse_decimal(cell: str) -> float:
    cell = cell.strip()
    if "," in cell:
        raise ValueError(f"only '.' is accepted as decimal separator: {cell!r}")
    return float(cell)


def read_dataset(text: str, kind: Optional[str] = None) -> PropertyDataset:
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise DatasetError("empty dataset") from None
    if header[:2] != ["id", "edges"] or len(header) < 3:
        raise DatasetError("header must be id,edges,<property>,...")
    props = tuple(header[2:])
    if len(set(props)) != len(props):
        raise DatasetError("duplicate property column")
    rows: List[Molecule] = []
    rejected: List[str] = []
    seen = set()

    def reject(label: str, why: str) -> None:
        rejected.append(label)
        warnings.warn(f"row {label}: {why}; skipped", RowRejected, stacklevel=3)

    for lineno, rec in enumerate(reader, start=2):
        if not rec or all(not c.strip() for c in rec):
            continue
        label = rec[0].strip() or f"line {lineno}"
        if len(rec) != len(header):
            reject(label, f"expected {len(header)} cells, got {len(rec)}")
            continue
        if label in seen:
            raise DatasetError(f"duplicate molecule id {label!r}")
        try:
            g = parse_edge_field(rec[1])
        except GraphFormatError as exc:
            reject(label, f"invalid graph ({exc})")
            continue
        if kind == "alkane" and (not is_tree(g) or (g.n > 1 and g.max_degree() > 4)):
            reject(label, "not a molecular tree")
            continue
        values = {}
        try:
            for name, cell in zip(props, rec[2:]):
                if not cell.strip():
                    raise ValueError(f"missing {name}")
                values[name] = _parse_decimal(cell)
        except ValueError as exc:
            reject(label, str(exc))
            continue
        seen.add(label)
        rows.append(Molecule(label, g, values))
    return PropertyDataset(rows, props, kind, rejected)


def load_dataset(
    path: Union[str, Path], format: str = "csv", kind: Optional[str] = None
) -> PropertyDataset:
    """Load ``id,edges,<prop>...`` CSV data; rows with bad graphs or cells are skipped."""
    if format != "csv":
        raise DatasetError(f"unsupported format {format!r}")
    return read_dataset(Path(path).read_text(encoding="utf-8"), kind=kind)


def octane_graphs() -> Dict[str, SimpleGraph]:
    """Carbon skeletons of the 18 octane isomers, keyed by name."""
    text = resources.files("topoindex").joinpath("data/octane_template.csv").read_text()
    reader = csv.reader(io.StringIO(text))
    next(reader)
    return {rec[0]: parse_edge_field(rec[1]) for rec in reader if rec}


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    if len(xs) < 2:
        raise ValueError("need at least two points")
    xs = [float(x) for x in xs]
    ys = [float(y) for y in ys]
    if len(set(xs)) == 1 or len(set(ys)) == 1:
        raise ValueError("correlation undefined for constant input")
    r = statistics.correlation(xs, ys)
    return max(-1.0, min(1.0, r))


def correlate(ds: PropertyDataset, spec: IndexSpec, prop: str) -> Tuple[float, float]:
    """Pearson r (and |r|) between an index and a property column."""
    ys = ds.column(prop)
    xs = [float(evaluate_index(m.graph, spec)) for m in ds.rows]
    r = pearson(xs, ys)
    return r, abs(r)
