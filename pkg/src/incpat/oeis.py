"""OEIS b-file reading/writing and regression comparison.

A b-file is plain text with one ``<index> <value>`` pair per line; lines
starting with ``#`` are comments. Bindings tie an A-number to one of the
computations in :mod:`incpat.enumeration`; they live in a tab-separated table
(see ``data/bindings.tsv``) with columns::

    id  family  s  r  index_shift

``family`` is ``perm`` or ``uniform``; the computation argument is
``n = index + index_shift``.
"""

from __future__ import annotations

import csv
import io
import re
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

from .enumeration import count_permutations, count_uniform

_ID_RE = re.compile(r"^A\d{6}$")


class BFileError(ValueError):
    """Malformed b-file text."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class BindingError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceRecord:
    id: str
    offset: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.id and not _ID_RE.match(self.id):
            raise ValueError(f"not an OEIS id: {self.id!r}")

    @property
    def terms(self) -> list[tuple[int, int]]:
        return [(self.offset + i, v) for i, v in enumerate(self.values)]

    def __len__(self):
        return len(self.values)


def parse_bfile(text: Union[str, TextIO], id: str = "") -> SequenceRecord:
    if not isinstance(text, str):
        text = text.read()
    offset = None
    values: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"expected '<index> <value>', got {raw!r}", lineno)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"non-integer field in {raw!r}", lineno) from None
        if offset is None:
            offset = index
        expected = offset + len(values)
        if index != expected:
            raise BFileError(f"index {index} out of sequence, expected {expected}", lineno)
        values.append(value)
    return SequenceRecord(id, 0 if offset is None else offset, tuple(values))


def render_bfile(record: SequenceRecord, header: bool = True) -> str:
    lines = [f"# {record.id}"] if header and record.id else []
    lines.extend(f"{i} {v}" for i, v in record.terms)
    return "".join(line + "\n" for line in lines)


def read_bfile(path: Union[str, Path], id: Optional[str] = None) -> SequenceRecord:
    path = Path(path)
    if id is None:
        m = re.match(r"^[bA](\d{6})", path.name)
        id = f"A{m.group(1)}" if m else ""
    return parse_bfile(path.read_text(encoding="utf-8"), id=id)


@dataclass(frozen=True)
class SequenceBinding:
    id: str
    family: str
    r: int
    s: int = 1
    index_shift: int = 0

    def __post_init__(self):
        if not _ID_RE.match(self.id):
            raise BindingError(f"not an OEIS id: {self.id!r}")
        if self.family not in ("perm", "uniform"):
            raise BindingError(f"unknown family {self.family!r}")
        if self.r < 2 or self.s < 1:
            raise BindingError(f"bad parameters r={self.r} s={self.s}")

    def argument(self, index: int) -> int:
        n = index + self.index_shift
        if n < 0:
            raise BindingError(f"{self.id}: index {index} maps to n={n} < 0")
        return n

    def compute(self, index: int) -> int:
        n = self.argument(index)
        if self.family == "perm":
            return count_permutations(n, self.r)
        return count_uniform(self.s, n, self.r)


def parse_bindings(text: str) -> dict[str, SequenceBinding]:
    rows = [
        line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")
    ]
    out = {}
    for row in csv.reader(rows, delimiter="\t"):
        if row[0] == "id":
            continue
        try:
            ident, family, s, r, shift = (f.strip() for f in row)
            b = SequenceBinding(ident, family, r=int(r), s=int(s), index_shift=int(shift))
        except ValueError as exc:
            raise BindingError(f"bad binding row {row!r}: {exc}") from None
        out[b.id] = b
    return out


def load_bindings(path: Union[str, Path, None] = None) -> dict[str, SequenceBinding]:
    if path is None:
        text = resources.files("incpat").joinpath("data/bindings.tsv").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_bindings(text)


def default_data_dir() -> Path:
    return Path(str(resources.files("incpat").joinpath("data/oeis")))


def bfile_path(data_dir: Union[str, Path], id: str) -> Path:
    return Path(data_dir) / f"b{id[1:]}.txt"


@dataclass
class ComparisonReport:
    id: str
    rows: list[tuple[int, int, int]] = field(default_factory=list)  # (index, oeis, computed)
    warnings: list[str] = field(default_factory=list)

    @property
    def mismatches(self) -> list[tuple[int, int, int]]:
        return [row for row in self.rows if row[1] != row[2]]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        verdict = "match" if self.passed else "MISMATCH"
        text = f"{self.id}: {verdict} ({len(self.rows)} terms compared)"
        if not self.passed:
            i, want, got = self.mismatches[0]
            text += f"; first difference at index {i}: oeis {want}, computed {got}"
        for w in self.warnings:
            text += f"; warning: {w}"
        return text


def compare_sequence(
    binding: SequenceBinding, record: SequenceRecord, max_terms: Optional[int] = None
) -> ComparisonReport:
    """Recompute the first ``max_terms`` terms of ``record`` and compare."""
    report = ComparisonReport(binding.id)
    if not record.values:
        msg = f"{binding.id}: empty record, nothing compared"
        report.warnings.append(msg)
        warnings.warn(msg, stacklevel=2)
        return report
    terms = record.terms if max_terms is None else record.terms[:max_terms]
    for index, value in terms:
        report.rows.append((index, value, binding.compute(index)))
    return report


def fetch_url(id: str) -> str:
    return f"https://oeis.org/{id}/b{id[1:]}.txt"
