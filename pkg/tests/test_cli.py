import pytest

from booltermorders.catalog import noncoherent_five, rigid_noncoherent_six
from booltermorders.cli import main
from booltermorders.core import parse_order, serialize_order


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.bto"
    path.write_text(serialize_order(noncoherent_five()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_count_only(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--count-only")
    assert code == 0
    assert out == "classes=546 total=65520\n"


def test_enumerate_out_dir(capsys, tmp_path):
    out_dir = tmp_path / "orders"
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--out", str(out_dir))
    assert code == 0
    files = sorted(out_dir.glob("*.bto"))
    assert len(files) == 2
    for f in files:
        parse_order(f.read_text())


def test_charpoly_pinned(capsys):
    code, out, _ = run(capsys, "charpoly", "--n", "2")
    assert code == 0
    assert out == "x^2 - 4x + 3 = (x-1)(x-3)\n"


def test_regions(capsys):
    code, out, _ = run(capsys, "regions", "--n", "3")
    assert code == 0
    assert out == "regions=96\n"


def test_coherence_incoherent(capsys, example_file):
    code, out, _ = run(capsys, "coherence", example_file)
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "incoherent"
    assert all(line.startswith("pair: ") and " x" in line for line in lines[1:])
    assert len(lines) > 1


def test_coherence_coherent(capsys, tmp_path):
    code, out, _ = run(capsys, "realize", "--w", "7,10,16,20,22")
    assert code == 0
    path = tmp_path / "coh.bto"
    path.write_text(out)
    code, out, _ = run(capsys, "coherence", str(path))
    assert code == 0
    assert out.startswith("coherent w=(")


def test_realize_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "realize", "--w", "1,2,4")
    assert code == 0
    order = parse_order(out)
    assert order.chain == tuple(range(8))


def test_realize_tie(capsys):
    code, _, err = run(capsys, "realize", "--w", "1,2,3")
    assert code == 1
    assert "tie" in err


def test_flips_listing(capsys, example_file):
    code, out, _ = run(capsys, "flips", example_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "primitive=11 flippable=5"
    assert sum(1 for line in lines[1:] if line.endswith("*")) == 5


def test_flip_and_verify(capsys, example_file, tmp_path):
    code, out, _ = run(capsys, "flip", example_file, "--pair", "4<1,2")
    assert code == 0
    path = tmp_path / "flipped.bto"
    path.write_text(out)
    code, out, _ = run(capsys, "coherence", str(path))
    assert code == 0
    assert out.strip() == "coherent w=(7,10,16,20,22)"


def test_flip_rejects_bad_pair(capsys, example_file):
    code, _, err = run(capsys, "flip", example_file, "--pair", "1<3")
    assert code == 1


def test_flipgraph_connected(capsys):
    code, out, _ = run(capsys, "flipgraph", "--n", "4", "--check-connected")
    assert code == 0
    assert "connected: yes" in out
    assert out.startswith("vertices=14 ")


def test_certify_valid(capsys, example_file, tmp_path):
    cert = tmp_path / "cert.bto"
    cert.write_text(
        "pair: 4 < 1,2 x1\npair: 2,3 < 1,4 x1\npair: 1,5 < 2,4 x1\npair: 1,2,4 < 3,5 x1\n"
    )
    code, out, _ = run(capsys, "certify", example_file, "--cert", str(cert), "--verify")
    assert code == 0
    assert out == "certificate: valid\n"


def test_certify_invalid(capsys, example_file, tmp_path):
    cert = tmp_path / "cert.bto"
    cert.write_text("pair: 1 < 2 x1\n")
    code, out, _ = run(capsys, "certify", example_file, "--cert", str(cert), "--verify")
    assert code == 1
    assert out.startswith("certificate: invalid")


def test_validate(capsys, example_file, tmp_path):
    code, out, _ = run(capsys, "validate", example_file)
    assert code == 0 and out == "valid\n"
    bad = tmp_path / "bad.bto"
    bad.write_text("n=2\n-\n1,2\n1\n2\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1 and out.startswith("invalid")


def test_localize_check(capsys, example_file):
    code, out, _ = run(capsys, "localize", example_file, "--check")
    assert code == 0
    assert "localization: yes" in out
    assert "mu-conditions: ok" in out


def test_localize_dump(capsys, tmp_path):
    path = tmp_path / "o.bto"
    path.write_text("n=2\n-\n1\n2\n1,2\n")
    code, out, _ = run(capsys, "localize", str(path))
    assert code == 0
    assert out.splitlines() == ["++ +", "+0 +", "+- -", "0+ +"]


def test_baues_coherent_above(capsys, tmp_path):
    path = tmp_path / "rigid.bto"
    path.write_text(serialize_order(rigid_noncoherent_six()))
    code, out, _ = run(capsys, "baues", str(path), "--coherent-above")
    assert code == 0
    assert out.splitlines()[0] == "coherent-above-only-trivial: yes"


def test_baues_partial(capsys, tmp_path):
    path = tmp_path / "p.bto"
    path.write_text("n=2\n-\n1=2\n1,2\n")
    code, out, _ = run(capsys, "baues", str(path))
    assert code == 0
    assert out == "levels=3 coherent=yes\n"


def test_missing_file(capsys):
    code, _, err = run(capsys, "coherence", "/nonexistent/file.bto")
    assert code == 2
    assert "error" in err


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_threads_flag_accepted(capsys):
    code, out, _ = run(capsys, "--threads", "2", "regions", "--n", "2")
    assert code == 0
    assert out == "regions=8\n"
