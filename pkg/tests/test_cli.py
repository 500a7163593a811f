import pytest

from surfcoh.cli import main
from surfcoh.fixtures import path as fixture_path

ABELIAN = str(fixture_path("abelian.surface"))
Q0 = str(fixture_path("q0_k3like.surface"))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_fixtures(capsys):
    for path in (ABELIAN, Q0):
        code, out, err = run(capsys, "validate", path)
        assert code == 0
        assert err == ""
        assert f"validate {path}" in out
        assert "valid: yes" in out
        assert "classes: c, m, m_minus_c" in out
        assert "moments: src" in out


def test_validate_missing_file(capsys):
    code, out, err = run(capsys, "validate", "/no/such/file.surface")
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")


def test_validate_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.surface"
    bad.write_text("q x\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert "line 1" in err


def test_validate_reports_problems(capsys, tmp_path):
    text = fixture_path("abelian.surface").read_text()
    broken = tmp_path / "broken.surface"
    broken.write_text(text.replace("k 0 0 0 0 0 0", "k 1 0 0 0 0 0"))
    code, out, err = run(capsys, "validate", str(broken))
    assert code == 1
    assert "problem:" in out
    assert "valid: no" in out


def test_validate_reports_moment_problems(capsys, tmp_path):
    path = tmp_path / "odd.surface"
    path.write_text(
        "q 0\nchi 1\nh2_rank 1\n1\nk -1\n"
        "class a 1\nmoments s a\nmoment -: 1\nend\n"
    )
    code, out, err = run(capsys, "validate", str(path))
    assert code == 1
    assert "problem: moments s:" in out


def test_grr_fixture_passes(capsys):
    code, out, err = run(capsys, "grr", ABELIAN, "--samples", "4")
    assert code == 0
    assert "seed: 0" in out
    assert "samples: 4" in out
    assert "fuzz surfaces: no" in out
    assert out.count(" ok") == 4
    assert "result: 4/4 passed" in out


def test_grr_deterministic(capsys):
    argv = ["grr", ABELIAN, "--samples", "6", "--seed", "3", "--fuzz-surfaces"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "fuzz surfaces: yes" in out1
    assert "q=" in out1 and "rank=" in out1


def test_grr_rejects_invalid_surface(capsys, tmp_path):
    text = fixture_path("abelian.surface").read_text()
    broken = tmp_path / "broken.surface"
    broken.write_text(text.replace("k 0 0 0 0 0 0", "k 1 0 0 0 0 0"))
    code, out, err = run(capsys, "grr", str(broken))
    assert code == 2
    assert "surface data is invalid" in err


def test_relate_moments_worked_example(capsys):
    code, out, err = run(
        capsys, "relate", ABELIAN, "--m", "m", "--c", "c", "--input", "src"
    )
    assert code == 0
    lines = out.splitlines()
    assert "direction: down" in lines
    assert "kind: moments" in lines
    assert "exponent base: 1" in lines
    assert "a_0 = 1 2: 2; 3 4: 2" in lines
    assert "a_1 = -: 5" in lines


def test_relate_moments_scalar_shift(capsys):
    code, out, err = run(
        capsys, "relate", Q0, "--m", "m", "--c", "c", "--input", "src"
    )
    assert code == 0
    lines = out.splitlines()
    assert "exponent base: 1" in lines
    assert "a_0 = -: 0" in lines
    assert "a_1 = -: 9" in lines


def test_relate_form_kind(capsys):
    code, out, err = run(
        capsys, "relate", ABELIAN,
        "--m", "m", "--c", "c", "--input", "src", "--kind", "form",
    )
    assert code == 0
    lines = out.splitlines()
    assert "input invariant = -: 3; 1 2: 1; 3 4: 2; 1 2 3 4: 1" in lines
    assert "output invariant = -: 5; 1 2: 2; 3 4: 2" in lines


def test_relate_unknown_names(capsys):
    code, out, err = run(
        capsys, "relate", ABELIAN, "--m", "nope", "--c", "c", "--input", "src"
    )
    assert code == 2
    assert "no class named 'nope'" in err
    code, out, err = run(
        capsys, "relate", ABELIAN, "--m", "m", "--c", "c", "--input", "nope"
    )
    assert code == 2
    assert "no moments named 'nope'" in err


def test_relate_direction_class_mismatch(capsys):
    code, out, err = run(
        capsys, "relate", ABELIAN,
        "--m", "m", "--c", "c", "--input", "src", "--direction", "up",
    )
    assert code == 2
    assert "direction 'up' needs class" in err


def test_adjunction_exit_codes(capsys):
    code, out, err = run(
        capsys, "adjunction", ABELIAN,
        "--curve", "c", "--pa", "0", "--basics", "m", "m_minus_c",
    )
    assert code == 0
    assert "basic classes taken as declared" in out
    assert "class m: m.c=-1 k.c=0 allowed" in out
    assert "result: 2/2 allowed" in out

    code, out, err = run(
        capsys, "adjunction", ABELIAN,
        "--curve", "c", "--pa", "1", "--basics", "m",
    )
    assert code == 1
    assert "class m: m.c=-1 k.c=0 VIOLATED" in out
    assert "result: 0/1 allowed" in out


def test_os_equiv(capsys):
    code, out, err = run(capsys, "os-equiv", ABELIAN, "--box", "6")
    assert code == 0
    assert "pairs checked: 169" in out
    assert "equivalence failures: 0" in out
    assert "class c: g=1 n=0 k.c=0 identity holds" in out
    assert "result: pass" in out


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["relate", ABELIAN])
    assert err.value.code == 2
