import pytest

from ngons import format_graph, make_cycle, make_path, parse_graph, fano_graph
from ngons.cli import main


@pytest.fixture()
def fano_file(tmp_path):
    p = tmp_path / "fano.txt"
    p.write_text(format_graph(fano_graph()))
    return str(p)


@pytest.fixture()
def cyc8_file(tmp_path):
    p = tmp_path / "cyc8.txt"
    p.write_text(format_graph(make_cycle(3, 8)))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_delta_and_dmin(capsys, fano_file):
    code, out, _ = run(capsys, "delta", fano_file, "0,1,2")
    assert code == 0 and out.strip() == "6"
    code, out, _ = run(capsys, "dmin", fano_file, "0,1", "--format", "structured")
    assert code == 0 and out.strip() == "dmin 4"


def test_named_subset(capsys, tmp_path):
    g = make_path(3, 2)
    p = tmp_path / "p.txt"
    p.write_text(format_graph(g))
    code, out, _ = run(capsys, "delta", str(p), "endpoints")
    assert code == 0 and out.strip() == "4"


def test_strong_exit_codes(capsys, fano_file):
    code, out, err = run(capsys, "strong", fano_file, "0,1,2")
    assert code == 1 and out.strip() == "false" and err.startswith("violator")
    code, out, _ = run(capsys, "strong", fano_file, "0")
    assert code == 0 and out.strip() == "true"


def test_closure(capsys, cyc8_file):
    code, out, _ = run(capsys, "closure", cyc8_file, "0,1")
    assert code == 0 and out.strip() == "0,1"


def test_zeroalg(capsys, tmp_path):
    g = make_path(3, 2)
    p = tmp_path / "p.txt"
    p.write_text(format_graph(g))
    code, out, _ = run(capsys, "zeroalg", str(p), "--base", "endpoints",
                       "--body", "interior")
    assert code == 0
    assert out.splitlines() == ["true", "true"]
    code, out, _ = run(capsys, "zeroalg", str(p), "--enumerate")
    assert code == 0 and out.strip() == "PAIR base=0,2 body=1"
    code, _, err = run(capsys, "zeroalg", str(p))
    assert code == 2


def test_kmu(capsys, cyc8_file, tmp_path):
    code, out, _ = run(capsys, "kmu", cyc8_file)
    assert code == 0 and out.strip() == "true"
    bad = tmp_path / "bad.txt"
    bad.write_text(format_graph(make_cycle(3, 4)))
    code, out, _ = run(capsys, "kmu", str(bad))
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "false"
    assert any(line.startswith("VIOLATION short_cycle") for line in lines[1:])


def test_witness_round_trip(capsys, tmp_path):
    out_file = tmp_path / "w.txt"
    for argv in (["witness", "path", "3", "4"],
                 ["witness", "cycle", "4", "10"],
                 ["witness", "gamma", "5"],
                 ["witness", "cl", "3", "2", "--with-b"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        g = parse_graph(out)
        code, _, _ = run(capsys, *argv, "-o", str(out_file))
        assert code == 0
        assert parse_graph(out_file.read_text()) == g


def test_grow_cli(capsys, cyc8_file, tmp_path):
    out_file = tmp_path / "g.txt"
    log_file = tmp_path / "g.log"
    code, _, _ = run(capsys, "grow", cyc8_file, "--steps", "5", "--seed", "4",
                     "-o", str(out_file), "--log", str(log_file))
    assert code == 0
    g = parse_graph(out_file.read_text())
    log = log_file.read_text().splitlines()
    assert len(log) == 5 and all(line.startswith("STEP ") for line in log)
    # determinism: repeat byte-identically
    out2 = tmp_path / "g2.txt"
    run(capsys, "grow", cyc8_file, "--steps", "5", "--seed", "4",
        "-o", str(out2), "--log", str(log_file))
    assert out2.read_bytes() == out_file.read_bytes()
    # the seed is mandatory
    code, _, _ = run(capsys, "grow", cyc8_file, "--steps", "5",
                     "-o", str(out_file))
    assert code == 2


def test_verify_ngon(capsys, fano_file, tmp_path):
    code, out, _ = run(capsys, "verify-ngon", fano_file, "--thick")
    assert code == 0 and out.strip() == "true"
    p = tmp_path / "p.txt"
    p.write_text(format_graph(make_path(3, 3)))
    code, out, err = run(capsys, "verify-ngon", str(p))
    assert code == 1 and out.strip() == "false" and err


def test_group_commands(capsys, fano_file):
    code, out, _ = run(capsys, "aut", fano_file, "--type-preserving")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "order 168"
    assert all(line.startswith("(") for line in lines[1:])
    code, out, _ = run(capsys, "strans", fano_file)
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "moufang", fano_file)
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "transdeg", fano_file, "0")
    assert code == 0 and out.strip() == "3"


def test_malformed_inputs(capsys, tmp_path, fano_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("vertex 0 0\n")
    for argv in (["delta", str(bad), "0"],
                 ["kmu", str(bad)],
                 ["aut", str(bad)],
                 ["delta", str(tmp_path / "missing.txt"), "0"],
                 ["delta", fano_file, "0,99"],
                 ["transdeg", fano_file, "99"]):
        code, _, err = run(capsys, *argv)
        assert code == 2 and err


def test_unknown_command(capsys):
    code = main(["frobnicate"])
    assert code == 2
