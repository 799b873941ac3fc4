"""Serialization helpers: exact rationals as ``"p/q"`` strings, complex as ``[re, im]``."""
from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .rootdata import format_group, parse_group

__all__ = [
    "JobConfig",
    "frac_str",
    "parse_rational",
    "parse_vector",
    "complex_pairs",
    "parse_complex_pairs",
    "load_samples",
    "load_json",
]


def frac_str(v) -> str:
    # integers print bare, as in GridSpec.to_json
    return str(Fraction(v))


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError("exact rationals must be given as 'p/q' strings, not floats")
    return Fraction(str(text).strip())


def parse_vector(text) -> tuple[Fraction, ...]:
    """``"1/3,1/3"`` or a list of strings/ints -> tuple of Fractions."""
    if isinstance(text, str):
        text = [t for t in text.replace(" ", "").split(",") if t]
    return tuple(parse_rational(t) for t in text)


def complex_pairs(values) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=complex).reshape(-1)]


def parse_complex_pairs(pairs) -> np.ndarray:
    out = []
    for p in pairs:
        if isinstance(p, (int, float)):
            out.append(complex(p))
        elif len(p) == 2:
            out.append(complex(float(p[0]), float(p[1])))
        else:
            raise ValueError(f"complex value must be [re, im], got {p!r}")
    return np.array(out, dtype=complex)


def load_json(path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def load_samples(path) -> np.ndarray:
    """Read a sample vector from JSON or CSV.

    JSON: ``{"values": [[re, im], ...]}`` (extra keys such as ``points`` are
    ignored) or a bare list of pairs.  CSV: rows ``index, re, im``, header
    optional, any row order.
    """
    path = Path(path)
    if path.suffix.lower() == ".csv":
        rows = []
        with open(path, newline="") as fh:
            for n, row in enumerate(r for r in csv.reader(fh) if r and r[0].strip()):
                if n == 0 and not row[0].strip().lstrip("-").isdigit():
                    continue  # header
                if len(row) < 3:
                    raise ValueError(f"CSV row needs index, re, im: {row!r}")
                rows.append((int(row[0]), float(row[1]), float(row[2])))
        rows.sort()
        if [r[0] for r in rows] != list(range(len(rows))):
            raise ValueError("CSV point indices must be 0..N-1")
        return np.array([complex(r[1], r[2]) for r in rows], dtype=complex)
    data = load_json(path)
    if isinstance(data, dict):
        data = data["values"]
    return parse_complex_pairs(data)


@dataclass
class JobConfig:
    """Parameters of one CLI job."""

    group: str
    M: int = 1
    gamma: str = "pcheck"
    flavor: str = "C"
    tol: float | None = None
    input: str | None = None
    output: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        # normalise and reject malformed group strings early
        self.group = format_group(parse_group(self.group))
        self.M = int(self.M)
        if self.M < 1:
            raise ValueError("M must be a positive integer")
        self.flavor = str(self.flavor).upper()
        if self.flavor not in ("C", "S", "E"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.gamma not in ("pcheck", "qcheck"):
            raise ValueError(f"unknown gamma flavor {self.gamma!r}")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "JobConfig":
        return cls(**d)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "JobConfig":
        return cls.from_dict(json.loads(text))
