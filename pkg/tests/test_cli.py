from berge import from_text, parse_witness, to_text, validate_berge_cycle
from berge.cli import main
from berge.constructions import construction4, tight_cycle


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "tight-cycle", "--n", "6", "--r", "3")
    assert code == 0
    assert from_text(out) == tight_cycle(6, 3)
    assert out == to_text(tight_cycle(6, 3))

    path = tmp_path / "c4.txt"
    code, _, _ = run(capsys, "gen", "c4", "--k", "6", "--r", "3", "--out", str(path))
    assert code == 0
    H = from_text(path.read_text())
    assert H == construction4(6, 3)
    assert H.n == 18 and H.edge_count == 24

    code, out, _ = run(capsys, "gen", "c1", "--n", "9", "--r", "4")
    assert code == 0
    assert from_text(out).edge_count == 10


def test_spectrum_command_reports_gap(tmp_path, capsys):
    path = tmp_path / "c3.txt"
    run(capsys, "gen", "c3", "--n", "6", "--r", "3", "--out", str(path))
    code, out, _ = run(capsys, "spectrum", str(path))
    assert code == 0
    assert out.splitlines()[-1] == "6 ABSENT"


def test_spectrum_cap_marks_unknown(tmp_path, capsys):
    path = tmp_path / "c1.txt"
    run(capsys, "gen", "c1", "--n", "9", "--r", "4", "--out", str(path))
    code, out, _ = run(capsys, "spectrum", str(path), "--lo", "9", "--hi", "9", "--cap", "3")
    assert code == 0
    assert out.strip() == "9 UNKNOWN"


def test_extract_command_witnesses_revalidate(tmp_path, capsys):
    path = tmp_path / "tc.txt"
    run(capsys, "gen", "tight-cycle", "--n", "8", "--r", "4", "--out", str(path))
    code, out, _ = run(capsys, "extract", str(path), "--lengths", "2..n")
    assert code == 0
    H = tight_cycle(8, 4)
    lines = out.splitlines()
    assert len(lines) == 7
    for line in lines:
        toks = line.split()
        assert toks[1] == "BRANCH"
        witness = parse_witness(" ".join(toks[toks.index("WITNESS") + 1 :]))
        assert validate_berge_cycle(H, witness) == ()
        assert witness.length == int(toks[0])


def test_extract_rejects_below_hypotheses(tmp_path, capsys):
    # tight cycle at r = (n-1)/2 has no extra edges at all
    path = tmp_path / "tc9.txt"
    run(capsys, "gen", "tight-cycle", "--n", "9", "--r", "4", "--out", str(path))
    code, _, err = run(capsys, "extract", str(path), "--lengths", "3")
    assert code == 2
    assert ">= 6" in err


def test_check_command(tmp_path, capsys):
    path = tmp_path / "tc.txt"
    run(capsys, "gen", "tight-cycle", "--n", "6", "--r", "3", "--out", str(path))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0 and out.startswith("HAMILTONIAN ")
    witness = parse_witness(out.split(" ", 1)[1])
    assert validate_berge_cycle(tight_cycle(6, 3), witness) == ()

    path2 = tmp_path / "c3.txt"
    run(capsys, "gen", "c3", "--n", "6", "--r", "3", "--out", str(path2))
    code, out, _ = run(capsys, "check", str(path2))
    assert code == 0 and out.strip() == "NOT_HAMILTONIAN"


def test_sweep_deterministic_and_seeded_construction(capsys):
    args = [
        "sweep", "--n", "6", "--r", "half+1", "--offsets", "-1,0",
        "--samples", "3", "--seed", "7",
    ]
    code, out1, _ = run(capsys, *args)
    assert code == 0
    code, out2, _ = run(capsys, *args)
    assert out1 == out2
    lines = out1.splitlines()
    assert lines[0].startswith("n\tr\toffset")
    row_off_minus1 = lines[1].split("\t")
    assert row_off_minus1[2] == "-1"
    # the seeded sharpness instance is not hamiltonian, so neither fraction is 1
    assert float(row_off_minus1[4]) < 1.0
    assert float(row_off_minus1[5]) < 1.0


def test_sweep_empty_samples_prints_header_only(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "6", "--r", "3", "--samples", "0")
    assert code == 0
    assert out.splitlines() == ["n\tr\toffset\tsamples\tfrac_hamiltonian\tfrac_pancyclic\tfrac_unknown\tmean_nodes"]


def test_cli_error_paths(tmp_path, capsys):
    code, _, err = run(capsys, "spectrum", str(tmp_path / "missing.txt"))
    assert code == 2 and "error:" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1 2\n2 0\n")
    code, _, err = run(capsys, "spectrum", str(bad))
    assert code == 2 and "error:" in err
