"""Plain-text CSV formats for sequences, spectra, and analysis tables.

A sequence file is:

    # key=value            (zero or more metadata lines; Ts is recognized)
    n,re,im                (fixed header)
    0,<re>,<im>            (one row per sample, contiguous 0-based index)
    ...

Floats are serialized with shortest round-trip formatting, so writing and
re-reading reproduces every sample bit for bit; the reader also accepts any
other decimal float spelling.  Tables share the serialization and write an
empty field for the -inf decibel sentinel.
"""

import math
import os
from io import StringIO

import numpy as np

from .transforms import Sequence

__all__ = ["ParseError", "SEQUENCE_HEADER", "read_sequence", "write_sequence", "write_table"]

SEQUENCE_HEADER = "n,re,im"


class ParseError(ValueError):
    """Malformed sequence file; carries the offending 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def _format_float(value: float) -> str:
    return repr(float(value))


def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    number = float(value)
    if math.isinf(number) and number < 0:
        return ""
    return _format_float(number)


def _write_text(sink, text: str):
    if hasattr(sink, "write"):
        sink.write(text)
        return
    with open(os.fspath(sink), "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _read_lines(source):
    if hasattr(source, "read"):
        return StringIO(source.read())
    with open(os.fspath(source), "r", encoding="utf-8") as handle:
        return StringIO(handle.read())


def write_sequence(x, sink, metadata=None):
    """Write a sequence in the `n,re,im` CSV format.

    The sample period (when present) is emitted first as ``# Ts=...``;
    caller metadata follows in the given order, so identical inputs always
    produce identical bytes.
    """
    seq = x if isinstance(x, Sequence) else Sequence(x)
    lines = []
    if seq.sample_period is not None:
        lines.append(f"# Ts={_format_float(seq.sample_period)}")
    for key, value in (metadata or {}).items():
        if key == "Ts":
            continue
        lines.append(f"# {key}={value}")
    lines.append(SEQUENCE_HEADER)
    for index, sample in enumerate(seq.samples):
        lines.append(f"{index},{_format_float(sample.real)},{_format_float(sample.imag)}")
    _write_text(sink, "\n".join(lines) + "\n")


def read_sequence(source) -> Sequence:
    """Parse a sequence file; raises ParseError with the offending line number.

    ``# Ts=...`` sets the sample period; other metadata keys are ignored.
    Rows must carry contiguous 0-based indices and finite values.
    """
    handle = _read_lines(source)
    sample_period = None
    samples = []
    header_seen = False
    expected_index = 0
    line_number = 0
    for line_number, raw in enumerate(handle, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition("=")
            if sep and key.strip() == "Ts":
                try:
                    sample_period = float(value.strip())
                except ValueError:
                    raise ParseError(line_number, f"invalid Ts value {value.strip()!r}") from None
                if not math.isfinite(sample_period) or sample_period <= 0:
                    raise ParseError(line_number, "Ts must be a positive number")
            continue
        if not header_seen:
            if [part.strip() for part in line.split(",")] != ["n", "re", "im"]:
                raise ParseError(line_number, f"expected header {SEQUENCE_HEADER!r}")
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ParseError(line_number, "expected 3 comma-separated fields")
        try:
            index = int(parts[0].strip())
            real = float(parts[1])
            imag = float(parts[2])
        except ValueError:
            raise ParseError(line_number, f"malformed row {line!r}") from None
        if index != expected_index:
            raise ParseError(
                line_number, f"row index {index} is not contiguous (expected {expected_index})"
            )
        if not (math.isfinite(real) and math.isfinite(imag)):
            raise ParseError(line_number, "sample values must be finite")
        samples.append(complex(real, imag))
        expected_index += 1
    if not header_seen:
        raise ParseError(line_number + 1, f"missing header {SEQUENCE_HEADER!r}")
    if not samples:
        raise ParseError(line_number + 1, "file holds no sample rows")
    return Sequence(np.array(samples, dtype=np.complex128), sample_period)


def write_table(rows, column_names, sink, metadata=None):
    """Write analysis rows as CSV under the given header.

    Optional metadata is emitted as leading ``# key=value`` lines.  A -inf
    cell (the exact-zero decibel sentinel) serializes as an empty field.
    """
    lines = [f"# {key}={value}" for key, value in (metadata or {}).items()]
    lines.append(",".join(column_names))
    for row in rows:
        if len(row) != len(column_names):
            raise ValueError(f"row width {len(row)} does not match {len(column_names)} columns")
        lines.append(",".join(_format_cell(value) for value in row))
    _write_text(sink, "\n".join(lines) + "\n")
