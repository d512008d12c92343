"""JSON preparation tasks and deterministic serialisation helpers."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .fock_schur import LabeledSuperposition, MappingError, StatisticsSector, map_superposition
from .repr_core import Partition

FLOAT_DIGITS = 12


class TaskSchemaError(ValueError):
    pass


@dataclass
class PreparationTask:
    d: int
    N: int
    statistics: StatisticsSector
    configs: list[tuple[int, ...]]
    coeffs: list[complex]
    lam: tuple[int, ...] | None = None
    estimator: dict[str, Any] = field(default_factory=dict)

    def labeled(self) -> LabeledSuperposition:
        return map_superposition(self.configs, self.coeffs, self.statistics, self.lam)


def _int(doc, key):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise TaskSchemaError(f"field {key!r} must be an integer, got {v!r}")
    return v


def parse_task(doc: dict) -> PreparationTask:
    if not isinstance(doc, dict):
        raise TaskSchemaError("task must be a JSON object")
    allowed = {"d", "N", "statistics", "order", "lambda", "terms", "estimator"}
    extra = set(doc) - allowed
    if extra:
        raise TaskSchemaError(f"unknown task fields {sorted(extra)}")
    d, N = _int(doc, "d"), _int(doc, "N")
    if d < 1 or N < 1:
        raise TaskSchemaError("d and N must be positive")
    kind = doc.get("statistics")
    if not isinstance(kind, str):
        raise TaskSchemaError("field 'statistics' must be a string")
    order = doc.get("order")
    lam = doc.get("lambda")
    if lam is not None:
        if not isinstance(lam, list) or not all(isinstance(x, int) for x in lam):
            raise TaskSchemaError("field 'lambda' must be a list of integers")
        lam = tuple(lam)
    try:
        if kind == "explicit":
            if lam is None:
                raise TaskSchemaError("explicit statistics needs 'lambda'")
            stat = StatisticsSector.explicit(Partition.of(lam, d))
        else:
            stat = StatisticsSector(kind, order)
    except TaskSchemaError:
        raise
    except ValueError as exc:
        raise TaskSchemaError(str(exc)) from None
    terms = doc.get("terms")
    if not isinstance(terms, list) or not terms:
        raise TaskSchemaError("field 'terms' must be a nonempty list")
    configs, coeffs = [], []
    for t in terms:
        if not isinstance(t, dict) or "occupations" not in t:
            raise TaskSchemaError(f"term {t!r} needs 'occupations'")
        occ = t["occupations"]
        if not isinstance(occ, list) or len(occ) != d or not all(isinstance(x, int) for x in occ):
            raise TaskSchemaError(f"occupations {occ!r} must list {d} integers")
        if sum(occ) != N:
            raise TaskSchemaError(f"occupations {occ} do not sum to N={N}")
        re, im = t.get("re", 0.0), t.get("im", 0.0)
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in (re, im)):
            raise TaskSchemaError(f"coefficient of {occ} must be numeric")
        configs.append(tuple(occ))
        coeffs.append(complex(re, im))
    est = doc.get("estimator", {})
    if not isinstance(est, dict):
        raise TaskSchemaError("field 'estimator' must be an object")
    return PreparationTask(d, N, stat, configs, coeffs, lam, est)


def load_task(path: str | Path) -> PreparationTask:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise TaskSchemaError(f"{path}: invalid JSON ({exc})") from None
    return parse_task(doc)


def fmt_float(x: float) -> str:
    return f"{x:.{FLOAT_DIGITS}g}"


def canonical(obj):
    """Floats rounded to 12 significant digits, fractions folded to float, stable containers."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else canonical(float(obj))
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return str(obj)
        return float(fmt_float(obj))
    if isinstance(obj, complex):
        return {"re": canonical(obj.real), "im": canonical(obj.imag)}
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(canonical(obj), indent=2, ensure_ascii=False)


def csv_cell(v) -> str:
    if isinstance(v, bool) or v is None:
        return "" if v is None else str(v).lower()
    if isinstance(v, Fraction):
        v = int(v) if v.denominator == 1 else float(v)
    if isinstance(v, float):
        return fmt_float(v)
    return str(v)


__all__ = ["PreparationTask", "TaskSchemaError", "parse_task", "load_task", "dumps", "canonical",
           "csv_cell", "fmt_float", "MappingError"]
