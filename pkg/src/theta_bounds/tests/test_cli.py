# Copyright 2026 Open Collector, Inc,
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import json
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def run():
    from ..cli import run

    return run


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    monkeypatch.setenv("THETA_BOUNDS_WORKERS", "1")


class TestPolynomialCommands:
    def test_krawtchouk(self, run, capsys):
        assert run(["krawtchouk", "--n", "4", "--k", "2"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "K^4_2(t) = 2*t^2 - 8*t + 6"
        assert "K^4_2(1) = 0" in out

    def test_krawtchouk_json(self, run, capsys):
        assert run(["krawtchouk", "--n", "3", "--k", "1", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["coefficients"] == ["3", "-2"]
        assert doc["values"] == [3, 1, -1, -3]

    def test_krawtchouk_degree_too_large(self, run, capsys):
        assert run(["krawtchouk", "--n", "3", "--k", "4"]) == 1
        assert capsys.readouterr().err.startswith("error: ")

    def test_jacobi(self, run, capsys):
        assert run(["jacobi", "--n", "4", "--k", "2", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["alpha"] == "1/2"
        assert doc["coefficients"] == ["-1/3", "0", "4/3"]


class TestHammingCommands:
    def test_complete_graph(self, run, capsys):
        assert run(["hamming-lp", "--n", "4", "--d", "5"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_json(self, run, capsys):
        assert run(["hamming-lp", "--n", "3", "--d", "3", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["bound"] == "2"
        assert doc["bound_decimal"] == "2.000000"
        assert doc["mode"] == "exact"

    def test_float(self, run, capsys):
        assert run(["hamming-lp", "--n", "3", "--d", "2", "--float", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["bound"] == pytest.approx(4.0)

    def test_table_csv(self, run, capsys):
        assert run(["hamming-table", "--n-max", "2"]) == 0
        assert capsys.readouterr().out == (
            "n,d,bound_exact,bound_decimal\n"
            "1,1,2,2.000000\n"
            "2,1,4,4.000000\n"
            "2,2,2,2.000000\n"
        )

    def test_table_independent_of_workers(self, run, capsys):
        assert run(["--workers", "1", "hamming-table", "--n-max", "5", "--json"]) == 0
        serial = capsys.readouterr().out
        assert run(["--workers", "3", "hamming-table", "--n-max", "5", "--json"]) == 0
        assert capsys.readouterr().out == serial
        rows = json.loads(serial)["rows"]
        assert len(rows) == 15
        assert {"n": 3, "d": 2, "bound_exact": "4", "bound_decimal": "4.000000"} in rows

    @pytest.mark.slow
    def test_table_nonincreasing_in_d(self, run, capsys):
        import csv
        import fractions

        assert run(["--workers", "4", "hamming-table", "--n-max", "64"]) == 0
        rows = list(csv.DictReader(capsys.readouterr().out.splitlines()))
        assert len(rows) == 64 * 65 // 2
        by_n = {}
        for row in rows:
            by_n.setdefault(int(row["n"]), []).append(
                (int(row["d"]), fractions.Fraction(row["bound_exact"]))
            )
        for n, cells in by_n.items():
            bounds = [b for _, b in sorted(cells)]
            assert bounds == sorted(bounds, reverse=True), n

    def test_json_conflicts_with_format(self, run, capsys):
        assert run(["hamming-table", "--n-max", "2", "--json", "--format", "csv"]) == 2
        assert "conflicts" in capsys.readouterr().err

    def test_missing_option(self, run, capsys):
        assert run(["hamming-lp", "--n", "4"]) == 2

    def test_bad_worker_environment(self, run, capsys, monkeypatch):
        monkeypatch.setenv("THETA_BOUNDS_WORKERS", "none")
        assert run(["hamming-table", "--n-max", "2"]) == 2


class TestSphereCommands:
    def test_cross_polytope(self, run, capsys):
        assert run(["sphere-lp", "--n", "4", "--cos-theta", "0"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0].startswith("bound=8 degree=2 ")
        assert out[1:] == ["f_0 = 0", "f_1 = 4", "f_2 = 3"]

    def test_bad_cos_theta(self, run, capsys):
        assert run(["sphere-lp", "--n", "4", "--cos-theta", "zero"]) == 2

    def test_e8_json(self, run, capsys):
        assert run(["sphere-lp", "--n", "8", "--cos-theta", "1/2", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["bound"] == "240"
        assert doc["lower_bound"] == "240"
        assert doc["exact"] is True
        assert doc["mode"] == "exact"

    def test_icosahedron_in_floating_point(self, run, capsys):
        argv = ["sphere-lp", "--n", "3", "--cos-theta", "1/sqrt(5)", "--degree", "5"]
        assert run(argv + ["--float", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["mode"] == "float"
        assert doc["bound"] == pytest.approx(12, rel=1e-4)
        assert doc["lower_bound"] <= doc["bound"]

    def test_float_text(self, run, capsys):
        argv = ["sphere-lp", "--n", "4", "--cos-theta", "0", "--float"]
        assert run(argv) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0].startswith("bound~8.000000 degree=2 ")

    @pytest.mark.parametrize(
        ("extra", "message"),
        [([], "not rational"), (["--float", "--emit-cert", "cert.json"], "--emit-cert")],
    )
    def test_irrational_cosine_usage(self, run, capsys, extra, message):
        argv = ["sphere-lp", "--n", "3", "--cos-theta", "1/sqrt(5)", "--degree", "5"]
        assert run(argv + extra) == 2
        assert message in capsys.readouterr().err

    def test_emitted_certificate_verifies(self, run, capsys, tmp_path):
        path = tmp_path / "cert.json"
        assert run(["sphere-lp", "--n", "5", "--cos-theta", "0", "--emit-cert", str(path)]) == 0
        capsys.readouterr()
        assert run(["verify", "--certificate", str(path)]) == 0
        assert capsys.readouterr().out == "VALID bound=10\n"

    def test_verify_fixture(self, run, capsys):
        assert run(["verify", "--certificate", str(FIXTURES / "cross_polytope_n4.json")]) == 0
        assert capsys.readouterr().out == "VALID bound=8\n"

    @pytest.mark.parametrize(
        ("changes", "reason"),
        [
            ({"coeffs": ["0", "-1", "3"], "bound": "3"}, "NegativeCoefficient"),
            ({"bound": "9"}, "BoundMismatch"),
            ({"coeffs": ["0", "4", "2"], "bound": "7"}, "IntervalViolation"),
            ({"cos_theta": "3/2"}, "MalformedCertificate"),
            ({"coeffs": ["0", "four", "3"]}, "MalformedCertificate"),
        ],
    )
    def test_verify_rejects(self, run, capsys, tmp_path, changes, reason):
        doc = json.loads((FIXTURES / "cross_polytope_n4.json").read_text())
        doc.update(changes)
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(doc))
        assert run(["verify", "--certificate", str(path), "--json"]) == 1
        assert json.loads(capsys.readouterr().out)["reason"] == reason

    def test_verify_text_failure(self, run, capsys, tmp_path):
        path = tmp_path / "cert.json"
        path.write_text('{"space": "sphere"}')
        assert run(["verify", "--certificate", str(path)]) == 1
        assert capsys.readouterr().out == (
            "INVALID reason=MalformedCertificate: /coeffs: no such property\n"
        )

    def test_verify_missing_file(self, run, capsys, tmp_path):
        assert run(["verify", "--certificate", str(tmp_path / "absent.json")]) == 2

    def test_verify_truncated_json(self, run, capsys, tmp_path):
        path = tmp_path / "cert.json"
        path.write_text('{"space": "sphere", "coeffs": [')
        assert run(["verify", "--certificate", str(path), "--json"]) == 1
        assert json.loads(capsys.readouterr().out)["reason"] == "MalformedCertificate"


class TestThetaCommand:
    def test_pentagon(self, run, capsys):
        assert run(["theta", "--input", str(FIXTURES / "c5.json"), "--alpha", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["theta"] == pytest.approx(5**0.5, abs=1e-6)
        assert doc["alpha"] == 2

    def test_petersen_text(self, run, capsys):
        assert run(["theta", "--input", str(FIXTURES / "petersen.yaml")]) == 0
        (line,) = capsys.readouterr().out.splitlines()
        key, _, value = line.partition("=")
        assert key == "theta_prime"
        assert float(value) == pytest.approx(4.0, abs=1e-6)

    def test_invalid_graph_file(self, run, capsys):
        assert run(["theta", "--input", str(FIXTURES / "bad_graph.yaml")]) == 1
        assert "/edges/1/1" in capsys.readouterr().err

    def test_malformed_yaml(self, run, capsys, tmp_path):
        path = tmp_path / "graph.yaml"
        path.write_text("vertices: [1\n")
        assert run(["theta", "--input", str(path)]) == 1
        assert capsys.readouterr().err.startswith("error: /: ")

    def test_not_transitive(self, run, capsys, tmp_path):
        path = tmp_path / "path.json"
        path.write_text('{"vertices": 3, "edges": [[0, 1], [1, 2]], "generators": [[2, 1, 0]]}')
        assert run(["theta", "--input", str(path)]) == 1
        assert "transitive" in capsys.readouterr().err
