import io

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

import kelpbed.demazure
from kelpbed.biword import Biword
from kelpbed.cli import main
from kelpbed.formats import (ParseError, format_biword, format_matrices, format_matrix, parse_biword,
                             parse_matrices, parse_matrix)
from kelpbed.verification import CHECKS, rng_from_seed, verify

from conftest import M77, PHI_X, PHI_XY, PHI_Y, X_EX, XY_EX, Y_EX


def run(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, io.StringIO(stdin_text), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, A):
        p = tmp_path / name
        p.write_text(format_matrix(A))
        return str(p)
    return write


# --- text formats ----------------------------------------------------------------

def test_format_matrix_example():
    assert format_matrix([[1, 2], [3, 4]]) == "2\n1 2\n3 4\n"
    assert parse_matrix("2\n1 2\n3 4\n").tolist() == [[1, 2], [3, 4]]


@given(st.integers(1, 5).flatmap(lambda n: arrays(np.int64, (n, n), elements=st.integers(0, 2**31))))
def test_matrix_round_trip(A):
    assert np.array_equal(parse_matrix(format_matrix(A)), A)


def test_matrices_stream():
    mats = [X_EX, Y_EX, np.array([[5]])]
    back = parse_matrices(format_matrices(mats))
    assert all(np.array_equal(a, b) for a, b in zip(mats, back)) and len(back) == 3
    assert parse_matrices("") == []


@pytest.mark.parametrize("text", [
    "2\n1 2\n3\n",            # short row
    "2\n1 2\n",               # missing row
    "x\n",                    # bad dimension
    "0\n",                    # non-positive dimension
    "1\n-1\n",                # negative entry
    f"1\n{2**31 + 1}\n",      # too large
    "1\n1.5\n",               # not an integer
])
def test_parse_matrix_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_parse_matrix_signed_and_count():
    assert parse_matrix("1\n-3\n", signed=True).tolist() == [[-3]]
    with pytest.raises(ParseError):
        parse_matrix("1\n1\n\n1\n2\n")


def test_biword_format():
    w = parse_biword("3 1 2\n1 2 2\n")
    assert w == Biword((1, 2, 3), (2, 2, 1))
    assert parse_biword(format_biword(w)) == w
    assert len(parse_biword("")) == 0
    with pytest.raises(ParseError):
        parse_biword("1 2\n1\n")


# --- subcommands -----------------------------------------------------------------

def test_cli_star_example(files):
    code, out, _ = run(["star", files("x", X_EX), files("y", Y_EX)])
    assert code == 0
    assert out == format_matrix(XY_EX)


def test_cli_star_stdin(files):
    code, out, _ = run(["star", "-", files("y", Y_EX)], format_matrix(X_EX))
    assert code == 0 and np.array_equal(parse_matrix(out), XY_EX)


def test_cli_phi_and_inverse(files):
    assert run(["phi", files("x", X_EX)])[1] == format_matrix(PHI_X)
    assert run(["phi-inv", files("p", PHI_XY)])[1] == format_matrix(XY_EX)


@pytest.mark.parametrize("fast", [[], ["--fast"]])
def test_cli_dprod(files, fast):
    code, out, _ = run(["dprod", files("a", PHI_X), files("b", PHI_Y)] + fast)
    assert code == 0 and out == format_matrix(PHI_XY)


def test_cli_check(files):
    code, out, _ = run(["check", files("p", PHI_X)])
    assert code == 0 and out == "monge: yes\nsimple: yes\n"
    code, out, _ = run(["check", files("q", [[1, 0], [0, 1]])])
    assert code == 1
    assert out.startswith("monge: no (rows 1-2, columns 1-2")


def test_cli_decompose(files):
    A = np.array([[8, 5, 6], [7, 3, 1], [13, 5, 1]])
    code, out, _ = run(["decompose", files("a", A)])
    assert code == 0
    simple, summ = parse_matrices(out.replace("simple part:\n", "").replace("sum part:\n", "\n"),
                                  signed=True)
    assert np.array_equal(simple + summ, A)


def test_cli_series():
    code, out, _ = run(["series", "--norm", "l11-inf", "--trunc", "8"])
    assert code == 0
    assert out.split() == "1 1 3 5 11 17 34 52 94".split()
    assert run(["series", "--norm", "max", "--n", "2", "--trunc", "3", "--csv"])[1] == "1,4,10,20\n"
    out = run(["series", "--norm", "max", "--n", "2", "--trunc", "3", "--partial-sums", "--csv"])[1]
    assert out == "1,5,15,35\n"
    assert run(["series", "--norm", "l11", "--trunc", "3"])[0] == 1


def test_cli_enumerate():
    code, out, _ = run(["enumerate", "--n", "2", "--k", "1", "--norm", "max"])
    assert code == 0 and len(parse_matrices(out)) == 4
    assert run(["enumerate", "--n", "3", "--k", "6", "--norm", "max", "--cap", "10"])[0] == 1


def test_cli_biject(files):
    code, out, _ = run(["biject", files("m", M77)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k: 77"
    assert lines[1] == "pi: 12[3], 9[2], 6[2], 6[3]^3, 4[1]^2, 4[2], 4[3]^3, 3[2], 2[2]^2, 1[1]"
    assert lines[2].startswith("rho: 4(1)^3, 3(1)^6")
    assert lines[4] == "sigma-bar:"


def test_cli_biject_inverse():
    code, out, _ = run(["biject", "--inverse", "3(1)^2, 3(2)"])
    assert code == 0
    M = parse_matrix(out.split("k:")[0])
    assert "k: 9" in out and "rho: 3(1)^2, 3(2)" in out
    # count of 3_(j) is the tail sum of row 3 from column -j: 2 = M[3,-1] + M[3,-2], 1 = M[3,-2]
    assert M[2, -1] == 1 and M[2, -2] == 1 and M.sum() == 2
    assert run(["biject", "--inverse", "3(2)"])[0] == 1
    assert run(["biject", "--inverse", "3[x]"])[0] == 2


def test_cli_exit_codes(files, tmp_path):
    code, _, err = run(["star", str(tmp_path / "missing"), files("y", Y_EX)])
    assert code == 2 and err.startswith("parse error")
    code, _, err = run(["star", files("x", X_EX), files("z", np.zeros((2, 2), dtype=int))])
    assert code == 1 and err.startswith("error:") and err.count("\n") == 1
    code, _, err = run(["phi-inv", files("t", [[1, 0], [0, 1]])])
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_cli_oracle_env_override(monkeypatch):
    monkeypatch.setenv("KELPBED_ORACLE_BOUND", "0")
    code, out, _ = run(["verify", "--trials", "5", "--n", "3", "--seed", "1"])
    assert code == 0 and "(5 skipped above oracle bound)" in out
    monkeypatch.setenv("KELPBED_ORACLE_BOUND", "3")
    assert run(["biject", "--inverse", "2(1)^2"])[0] == 0
    assert run(["biject", "--inverse", "4(1)"])[0] == 0


# --- verification ----------------------------------------------------------------

def test_verify_vacuous():
    code, out, _ = run(["verify", "--trials", "0"])
    assert code == 0 and out.endswith("all checks passed\n")


def test_verify_passes_and_is_deterministic():
    a = run(["verify", "--trials", "40", "--n", "5", "--seed", "7"])
    b = run(["verify", "--trials", "40", "--n", "5", "--seed", "7"])
    assert a == b and a[0] == 0
    assert "isomorphism: 40/40 passed" in a[1]
    report = verify(40, 5, 3, 7)
    assert set(report) == set(CHECKS)


def test_prng_reproducible():
    assert np.array_equal(rng_from_seed(3).integers(0, 100, 20), rng_from_seed(3).integers(0, 100, 20))
    assert not np.array_equal(rng_from_seed(3).integers(0, 100, 20), rng_from_seed(4).integers(0, 100, 20))


def test_verify_catches_corrupted_product(monkeypatch):
    honest = kelpbed.demazure.star

    def corrupted(X, Y):
        Z = np.array(honest(X, Y))
        Z[-1, 0] += 1
        return Z

    monkeypatch.setattr(kelpbed.demazure, "star", corrupted)
    code, out, _ = run(["verify", "--trials", "20", "--n", "4", "--seed", "0"])
    assert code == 1
    assert "FAILURES detected" in out
