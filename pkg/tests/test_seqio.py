import math
from io import StringIO
from pathlib import Path

import numpy as np
import pytest

from fftinterp.analysis import KERNEL_COLUMNS
from fftinterp.seqio import ParseError, read_sequence, write_sequence, write_table
from fftinterp.transforms import Sequence

DATA = Path(__file__).parent / "data"


def random_complex(n, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def roundtrip(seq, metadata=None):
    sink = StringIO()
    write_sequence(seq, sink, metadata)
    return read_sequence(StringIO(sink.getvalue())), sink.getvalue()


class TestRoundTrip:
    def test_samples_survive_bit_for_bit(self):
        seq = Sequence(random_complex(16, 12))
        back, _ = roundtrip(seq)
        np.testing.assert_array_equal(back.samples, seq.samples)

    def test_sample_period_round_trips(self):
        seq = Sequence([1 + 2j, 3], sample_period=0.5)
        back, text = roundtrip(seq)
        assert back.sample_period == 0.5
        assert text.startswith("# Ts=0.5\n")

    def test_one_third_precision(self):
        seq = Sequence([1 / 3 + (1 / 7) * 1j])
        back, _ = roundtrip(seq)
        assert back.samples[0] == seq.samples[0]

    def test_no_metadata_emits_header_then_rows(self):
        _, text = roundtrip(Sequence([1.0, 2.0]))
        assert text.splitlines()[0] == "n,re,im"
        assert len(text.splitlines()) == 3

    def test_deterministic_bytes(self):
        seq = Sequence(random_complex(8, 3), sample_period=2.0)
        _, first = roundtrip(seq, {"method": "fft"})
        _, second = roundtrip(seq, {"method": "fft"})
        assert first == second

    def test_path_sinks_and_sources(self, tmp_path):
        target = tmp_path / "seq.csv"
        seq = Sequence(random_complex(5, 8), sample_period=0.25)
        write_sequence(seq, target)
        back = read_sequence(target)
        np.testing.assert_array_equal(back.samples, seq.samples)
        assert back.sample_period == 0.25


class TestReadErrors:
    def test_metadata_sets_sample_period(self):
        text = "# Ts=0.5\nn,re,im\n0,1.0,0.0\n"
        assert read_sequence(StringIO(text)).sample_period == 0.5

    def test_unknown_metadata_ignored(self):
        text = "# flavor=vanilla\nn,re,im\n0,1.0,0.0\n"
        seq = read_sequence(StringIO(text))
        assert seq.samples[0] == 1.0

    def test_malformed_row_names_line_four(self):
        text = "n,re,im\n0,1.0,0.0\n1,2.0,0.0\n2,1.0,xyz\n"
        with pytest.raises(ParseError) as excinfo:
            read_sequence(StringIO(text))
        assert excinfo.value.line_number == 4
        assert "line 4" in str(excinfo.value)

    def test_non_contiguous_index(self):
        text = "n,re,im\n0,1.0,0.0\n2,2.0,0.0\n"
        with pytest.raises(ParseError) as excinfo:
            read_sequence(StringIO(text))
        assert excinfo.value.line_number == 3

    def test_non_finite_value(self):
        text = "n,re,im\n0,nan,0.0\n"
        with pytest.raises(ParseError):
            read_sequence(StringIO(text))

    def test_missing_header(self):
        with pytest.raises(ParseError):
            read_sequence(StringIO("0,1.0,0.0\n"))

    def test_empty_body(self):
        with pytest.raises(ParseError):
            read_sequence(StringIO("n,re,im\n"))

    def test_bad_ts_metadata(self):
        with pytest.raises(ParseError):
            read_sequence(StringIO("# Ts=soon\nn,re,im\n0,1.0,0.0\n"))
        with pytest.raises(ParseError):
            read_sequence(StringIO("# Ts=-1\nn,re,im\n0,1.0,0.0\n"))

    def test_wrong_field_count(self):
        with pytest.raises(ParseError):
            read_sequence(StringIO("n,re,im\n0,1.0\n"))


class TestTables:
    def test_header_plus_rows(self):
        sink = StringIO()
        write_table([(1, "fft", 0.5)], ("n", "method", "median_seconds"), sink)
        lines = sink.getvalue().splitlines()
        assert lines[0] == "n,method,median_seconds"
        assert lines[1] == "1,fft,0.5"

    def test_neg_inf_serializes_empty(self):
        sink = StringIO()
        write_table([(0.0, -math.inf)], ("omega", "db"), sink)
        assert sink.getvalue().splitlines()[1] == "0.0,"

    def test_row_width_checked(self):
        with pytest.raises(ValueError):
            write_table([(1, 2)], ("a", "b", "c"), StringIO())

    def test_deterministic_bytes(self):
        rows = [(0.5, 1, 0.25), (1.5, 2, 0.125)]
        first, second = StringIO(), StringIO()
        write_table(rows, ("omega", "l", "value"), first, {"n": "8"})
        write_table(rows, ("omega", "l", "value"), second, {"n": "8"})
        assert first.getvalue() == second.getvalue()


class TestGoldenFixtures:
    def test_sequence_fixture_round_trips_byte_exactly(self):
        fixture = (DATA / "golden_sequence.csv").read_text()
        seq = read_sequence(StringIO(fixture))
        assert seq.sample_period == 0.5
        np.testing.assert_array_equal(
            seq.samples,
            np.array([1.0, 1 / 3 - 0.125j, -2.5e-06 + 1e300j, 0.7071067811865476]),
        )
        sink = StringIO()
        write_sequence(seq, sink, {"kind": "demo", "seed": "7"})
        assert sink.getvalue() == fixture

    def test_table_fixture_matches_writer_output(self):
        fixture = (DATA / "golden_table.csv").read_text()
        rows = [
            (0.0, 0, 1.0, 1.0, -math.inf),
            (1.5, 2, 0.25, 0.2, -26.020599913279625),
        ]
        sink = StringIO()
        write_table(rows, KERNEL_COLUMNS, sink, {"n": "4"})
        assert sink.getvalue() == fixture
