"""CLI integration: problem files, output files, exit codes, membership."""

import io

import pytest

from ncpoly import (Alphabet, MonomialOrdering, divide, mora, parse_polynomial,
                    reduce_basis)
from ncpoly.cli import (EXIT_CAP, EXIT_OK, EXIT_USAGE, main, membership_repl,
                        parse_problem_file)

from conftest import P


S3_FILE = """\
# monoid presentation of S3
vars: Y > X > y > x
ordering: deglex
x^3 - 1
y^2 - 1
x*y*x*y - 1
X*x - 1
x*X - 1
Y*y - 1
y*Y - 1
"""

MORA_FILE = """\
vars: x > y > z
ordering: deglex
x*y - z
y*z + 2*x + z   # generators may carry trailing comments
y*z + x
"""


def write(tmp_path, name, body):
    path = tmp_path / name
    path.write_text(body)
    return path


def read_output(path):
    lines = path.read_text().splitlines()
    polys = [l for l in lines if not l.startswith(("vars:", "ordering:", "#"))]
    stats = [l for l in lines if l.startswith("# stats:")]
    return polys, stats


# ---------------------------------------------------------------------------
# problem file parsing
# ---------------------------------------------------------------------------

def test_parse_problem_file(tmp_path):
    path = write(tmp_path, "mora.txt", MORA_FILE)
    alphabet, gens, ordering = parse_problem_file(str(path))
    assert alphabet == Alphabet(["x", "y", "z"])
    assert ordering == "deglex"
    assert [text for _, text in gens] == [
        "x*y - z", "y*z + 2*x + z", "y*z + x"]


def test_problem_file_errors(tmp_path):
    cases = {
        "novars.txt": "x*y - z\n",
        "nogens.txt": "vars: x > y\n",
        "badvars.txt": "vars: x > > y\nx\n",
    }
    for name, body in cases.items():
        path = write(tmp_path, name, body)
        assert main([str(path)]) == EXIT_USAGE


def test_generator_parse_error_exits_usage(tmp_path):
    path = write(tmp_path, "bad.txt", "vars: x > y\nx*q + 1\n")
    assert main([str(path)]) == EXIT_USAGE


# ---------------------------------------------------------------------------
# algorithm runs and output files
# ---------------------------------------------------------------------------

def test_groebner_run_writes_output(tmp_path):
    path = write(tmp_path, "mora.txt", MORA_FILE)
    assert main([str(path), "--algorithm", "groebner"]) == EXIT_OK
    out = tmp_path / "mora.deg.gb"
    assert out.exists()
    polys, stats = read_output(out)
    assert polys == ["x*y - z", "y*z + 2*x + z", "y*z + x",
                     "x + z", "-z*y - z", "2*z^2"]
    assert any("status=complete" in l for l in stats)
    assert any("basis_size=6" in l for l in stats)
    assert any("wall_time=" in l for l in stats)


def test_s3_involutive_run(tmp_path):
    path = write(tmp_path, "s3.txt", S3_FILE)
    assert main([str(path), "--algorithm", "involutive",
                 "--division", "1"]) == EXIT_OK
    polys, _ = read_output(tmp_path / "s3.deg.inv")
    assert len(polys) == 19


def test_strong_left_overlap_thick_run(tmp_path):
    body = ("vars: x > y\nordering: deglex\n"
            "x^2*y^2 - 2*x*y^2 + x^2\nx^2*y - 2*x*y\n")
    path = write(tmp_path, "pair.txt", body)
    assert main([str(path), "--algorithm", "involutive", "--division", "4",
                 "--divisors", "thick"]) == EXIT_OK
    polys, _ = read_output(tmp_path / "pair.deg.inv")
    assert len(polys) == 5


def test_cap_hit_exit_code(tmp_path):
    body = ("vars: x > y > z\nordering: deglex\n"
            "x*y - z\nx + z\ny*z - z\nx*z\nz*y + z\nz^2\n")
    path = write(tmp_path, "loop.txt", body)
    assert main([str(path), "--algorithm", "involutive", "--division", "1",
                 "--max-degree", "8"]) == EXIT_CAP
    _, stats = read_output(tmp_path / "loop.deg.inv")
    assert any("status=degree_cap_hit" in l for l in stats)


def test_walk_runs(tmp_path):
    body = ("vars: x > y\n"
            "2*x*y + y^2 + 5\nx^2 + y^2 + 8\n")
    path = write(tmp_path, "walk.txt", body)
    assert main([str(path), "--algorithm", "gwalk", "--source-ordering",
                 "degrevlex", "--ordering", "deglex"]) == EXIT_OK
    polys, _ = read_output(tmp_path / "walk.deg.gwk")
    assert len(polys) == 4
    assert main([str(path), "--algorithm", "iwalk", "--source-ordering",
                 "deglex", "--ordering", "degrevlex", "--division", "1"]) \
        == EXIT_OK
    polys, _ = read_output(tmp_path / "walk.drl.iwk")
    assert len(polys) == 5


def test_output_round_trip(tmp_path):
    path = write(tmp_path, "mora.txt", MORA_FILE)
    main([str(path), "--algorithm", "groebner"])
    alphabet, gens, kind = parse_problem_file(str(tmp_path / "mora.deg.gb"))
    o = MonomialOrdering(kind, alphabet)
    basis = [parse_polynomial(text, alphabet, o) for _, text in gens]
    assert reduce_basis(basis, o) == reduce_basis(reduce_basis(basis, o), o)
    assert reduce_basis(basis, o) == P(alphabet, o, "y*z - z", "z*y + z",
                                       "z^2", "x + z")


def test_verbosity_does_not_change_results(tmp_path, capsys):
    path = write(tmp_path, "mora.txt", MORA_FILE)
    main([str(path)])
    quiet = (tmp_path / "mora.deg.gb").read_text()
    quiet_polys = [l for l in quiet.splitlines() if not l.startswith("#")]
    main([str(path), "-v"])
    loud = (tmp_path / "mora.deg.gb").read_text()
    loud_polys = [l for l in loud.splitlines() if not l.startswith("#")]
    assert quiet_polys == loud_polys


def test_default_ordering_is_degrevlex(tmp_path):
    path = write(tmp_path, "plain.txt", "vars: x > y\nx*y - 1\n")
    assert main([str(path)]) == EXIT_OK
    assert (tmp_path / "plain.drl.gb").exists()


def test_bad_flags_exit_usage(tmp_path):
    path = write(tmp_path, "plain.txt", "vars: x > y\nx*y - 1\n")
    assert main([str(path), "--algorithm", "nonsense"]) == EXIT_USAGE
    assert main([str(path), "--division", "99", "--algorithm",
                 "involutive"]) == EXIT_USAGE
    assert main(["/does/not/exist.txt"]) == EXIT_USAGE


# ---------------------------------------------------------------------------
# membership loop
# ---------------------------------------------------------------------------

@pytest.fixture
def membership_gb(xyz):
    o = MonomialOrdering("deglex", xyz)
    F = P(xyz, o, "x + y + z - 3", "x^2 + y^2 + z^2 - 9",
          "x^3 + y^3 + z^3 - 24")
    return reduce_basis(mora(F, o).basis, o), o


def run_repl(gb, o, text):
    out, err = io.StringIO(), io.StringIO()
    membership_repl(gb, o, inp=io.StringIO(text), out=out, err=err)
    return out.getvalue(), err.getvalue()


def test_membership_of_generator(membership_gb):
    gb, o = membership_gb
    out, _ = run_repl(gb, o, "x + y + z - 3\n")
    assert out.strip() == "member"


def test_membership_answers_match_division_oracle(membership_gb, xyz):
    gb, o = membership_gb
    for query in ("x + y + z - 2", "x*z^2 + y*z^2 - 1",
                  "x^2*y + y^2*z + z^2*x"):
        p = P(xyz, o, query)
        oracle, _ = divide(p, gb, o)
        out, _ = run_repl(gb, o, query + "\n")
        if oracle.is_zero():
            assert out.strip() == "member"
        else:
            assert out.strip() == f"non-member, remainder: {oracle!r}"


def test_membership_parse_error_continues(membership_gb):
    gb, o = membership_gb
    out, err = run_repl(gb, o, "q + 1\nx + y + z - 3\nquit\nx\n")
    assert "error:" in err
    assert out.strip() == "member"     # the loop continued, quit stopped it


def test_membership_flag_end_to_end(tmp_path, capfd, monkeypatch):
    path = write(tmp_path, "mem.txt",
                 "vars: x > y > z\nordering: deglex\n"
                 "x + y + z - 3\nx^2 + y^2 + z^2 - 9\nx^3 + y^3 + z^3 - 24\n")
    monkeypatch.setattr("sys.stdin", io.StringIO("x + y + z - 3\nquit\n"))
    assert main([str(path), "--membership"]) == EXIT_OK
    assert "member" in capfd.readouterr().out
