import json

import pytest

from ckext.cli import (
    EXIT_INPUT_ERROR,
    EXIT_NOT_ISOMORPHIC,
    EXIT_OK,
    ParseError,
    main,
    parse_matrix_text,
)
from ckext.corpus import A1, A4, A5, A6, FIBONACCI, cuntz_rows


def write_matrix(tmp_path, name, rows, header=""):
    path = tmp_path / name
    body = header + "\n".join(" ".join(str(x) for x in row) for row in rows) + "\n"
    path.write_text(body)
    return str(path)


# --- file grammar --------------------------------------------------------

def test_parse_accepts_comments_and_blank_lines():
    rows = parse_matrix_text("# a comment\n\n0 1\n# another\n1 1\n")
    assert rows == [[0, 1], [1, 1]]


def test_parse_rejects_bad_token():
    with pytest.raises(ParseError):
        parse_matrix_text("0 2\n1 1\n")
    with pytest.raises(ParseError):
        parse_matrix_text("0 x\n1 1\n")


def test_parse_rejects_ragged_rows():
    with pytest.raises(ParseError):
        parse_matrix_text("0 1\n1\n")


def test_parse_rejects_non_square():
    with pytest.raises(ParseError):
        parse_matrix_text("0 1 1\n1 1 0\n")


def test_parse_rejects_empty():
    with pytest.raises(ParseError):
        parse_matrix_text("# nothing\n")


# --- compute -------------------------------------------------------------

def test_compute_a1_structured(tmp_path, capsys):
    path = write_matrix(tmp_path, "a1.txt", A1, header="# example\n")
    assert main(["compute", path]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 3
    assert doc["matrix"] == [list(r) for r in A1]
    assert doc["extw"]["free_rank"] == 0 and doc["extw"]["torsion"] == [3]
    assert doc["exts"]["free_rank"] == 1 and doc["exts"]["torsion"] == []
    assert doc["det_i_minus_a"] == -3
    assert doc["iota_kernel_generator"] == 0


def test_compute_a4_free_weak_group(tmp_path, capsys):
    path = write_matrix(tmp_path, "a4.txt", A4)
    assert main(["compute", path]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["extw"]["free_rank"] == 1 and doc["extw"]["torsion"] == []


def test_compute_rejects_permutation(tmp_path, capsys):
    path = write_matrix(tmp_path, "p.txt", [[0, 1], [1, 0]])
    assert main(["compute", path]) == EXIT_INPUT_ERROR
    assert "IsPermutation" in capsys.readouterr().err


def test_compute_rejects_parse_error(tmp_path, capsys):
    path = write_matrix(tmp_path, "bad.txt", [[0, 7], [1, 1]])
    assert main(["compute", path]) == EXIT_INPUT_ERROR
    assert "ParseError" in capsys.readouterr().err


def test_compute_missing_file(capsys):
    assert main(["compute", "/nonexistent/matrix.txt"]) == EXIT_INPUT_ERROR


def test_compute_force_allows_reducible(tmp_path, capsys):
    path = write_matrix(tmp_path, "red.txt", [[1, 1], [0, 1]])
    assert main(["compute", path]) == EXIT_INPUT_ERROR
    capsys.readouterr()
    assert main(["compute", path, "--force"]) == EXIT_OK
    captured = capsys.readouterr()
    assert "warning" in captured.err
    json.loads(captured.out)


def test_compute_transpose_matches_transposed_input(tmp_path, capsys):
    p5 = write_matrix(tmp_path, "a5.txt", A5)
    p6 = write_matrix(tmp_path, "a6.txt", A6)
    assert main(["compute", p5, "--transpose"]) == EXIT_OK
    out_t = capsys.readouterr().out
    assert main(["compute", p6]) == EXIT_OK
    assert out_t == capsys.readouterr().out


def test_compute_deterministic(tmp_path, capsys):
    path = write_matrix(tmp_path, "a1.txt", A1)
    main(["compute", path])
    first = capsys.readouterr().out
    main(["compute", path])
    assert capsys.readouterr().out == first


def test_compute_text_roundtrip(tmp_path, capsys):
    path = write_matrix(tmp_path, "a1.txt", A1)
    assert main(["compute", path, "--format", "text"]) == EXIT_OK
    text = capsys.readouterr().out
    echoed = [line.strip() for line in text.splitlines()
              if line.startswith("  ") and set(line.split()) <= {"0", "1"}]
    assert parse_matrix_text("\n".join(echoed)) == [list(r) for r in A1]


def test_compute_verify_flag_embeds_booleans(tmp_path, capsys):
    path = write_matrix(tmp_path, "f.txt", FIBONACCI)
    assert main(["compute", path, "--verify"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["verification"]["im0_identity"] is True


# --- compare -------------------------------------------------------------

def test_compare_distinguishes_a5_a6(tmp_path, capsys):
    p5 = write_matrix(tmp_path, "a5.txt", A5)
    p6 = write_matrix(tmp_path, "a6.txt", A6)
    assert main(["compare", p5, p6]) == EXIT_NOT_ISOMORPHIC
    doc = json.loads(capsys.readouterr().out)
    assert doc["isomorphic"] is False


def test_compare_fibonacci_with_cuntz_2(tmp_path, capsys):
    pf = write_matrix(tmp_path, "f.txt", FIBONACCI)
    p2 = write_matrix(tmp_path, "o2.txt", cuntz_rows(2))
    assert main(["compare", pf, p2]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["isomorphic"] is True


def test_compare_reflexive(tmp_path, capsys):
    p1 = write_matrix(tmp_path, "a1.txt", A1)
    assert main(["compare", p1, p1]) == EXIT_OK


# --- verify --------------------------------------------------------------

def test_verify_passes_on_corpus_member(tmp_path, capsys):
    path = write_matrix(tmp_path, "a2.txt", [[0, 1, 1], [1, 0, 1], [1, 1, 1]])
    assert main(["verify", path]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_passed"] is True
    assert all(doc["exact_sequence"].values())


def test_verify_flags_degenerate_determinant(tmp_path, capsys):
    path = write_matrix(tmp_path, "gap.txt", [[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    assert main(["verify", path]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_passed"] is True
    assert doc["det_i_minus_a"] == 0
    assert doc["kernel_sum_generator"] == 0


# --- examples ------------------------------------------------------------

def test_examples_all_pass(capsys):
    assert main(["examples", "--format", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l]
    assert len(lines) >= 10
    assert all(l.startswith("PASS") for l in lines)


def test_examples_structured(capsys):
    assert main(["examples"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_passed"] is True
    assert len(doc["results"]) == 22
