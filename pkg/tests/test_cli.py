import json

from ratpark.cli import main
from ratpark.reference import PARKING_WORDS_4_3


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "4", "--n", "3")
    assert code == 0
    assert set(out.split()) == set(PARKING_WORDS_4_3)


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--m", "3", "--n", "3", "--word", "000")
    assert code == 0
    assert out.strip() == "infinitely-many-fixed-points"


def test_fixed_point_text_and_json(capsys):
    code, out, _ = run(
        capsys, "fixed-point", "--m", "3", "--n", "5", "--word", "10011"
    )
    assert code == 0
    assert out.strip() == "fixed -1,3,4"
    code, out, _ = run(
        capsys, "fixed-point", "--m", "3", "--n", "5", "--word", "10011", "--json"
    )
    payload = json.loads(out)
    assert payload["outcome"] == "fixed"
    assert payload["point"]["coords"] == [-1, 3, 4]


def test_fixed_point_divergence(capsys):
    code, out, _ = run(
        capsys, "fixed-point", "--m", "4", "--n", "3", "--word", "022", "--json"
    )
    assert code == 0
    assert json.loads(out)["outcome"] == "diverged"


def test_zeta_round_trip(capsys):
    code, out, _ = run(capsys, "zeta", "--m", "4", "--n", "3", "--word", "012")
    assert code == 0 and out.strip() == "000"
    code, out, _ = run(capsys, "zeta-inv", "--m", "4", "--n", "3", "--word", "000")
    assert code == 0 and out.strip() == "012"
    code, out, _ = run(
        capsys, "zeta-inv", "--m", "4", "--n", "3", "--word", "000", "--oracle"
    )
    assert code == 0 and out.strip() == "012"


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--m", "3", "--n", "5", "--word", "10001")
    assert code == 0
    assert out.strip() == "area 2 dinv 1"


def test_qt_table_csv(capsys):
    code, out, _ = run(capsys, "qt-table", "--m", "5", "--n", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "area\\dinv,0,1,2,3,4"
    assert lines[1] == "0,0,1,2,2,1"


def test_qt_table_json(capsys):
    code, out, _ = run(
        capsys, "qt-table", "--m", "4", "--n", "3", "--format", "json"
    )
    payload = json.loads(out)
    assert payload["counts"][0] == [1, 2, 2, 1]


def test_sweep_and_inverse(capsys):
    # build the (4,7) fixture paths from the library to avoid hand errors
    from ratpark import Filter, dyck_filter_to_path

    steps, _ = dyck_filter_to_path(Filter(4, 7, (0, 6, 7, 9)))
    code, out, _ = run(capsys, "sweep", "--m", "4", "--n", "7", "--path", steps)
    assert code == 0
    assert out.strip().split("\n")[-1] == "row minima 0,5,7,14"
    swept_steps, _ = dyck_filter_to_path(Filter(4, 7, (0, 5, 7, 14)))
    code, out, _ = run(
        capsys, "sweep-inv", "--m", "4", "--n", "7", "--path", swept_steps
    )
    assert code == 0
    assert out.strip().split("\n")[-1] == "row minima 0,6,7,9"


def test_affine_subcommands(capsys):
    code, out, _ = run(
        capsys, "affine", "--window", "3,-1,2,5,6", "--m", "3", "--pak-stanley"
    )
    assert code == 0 and out.strip() == "10011"
    code, out, _ = run(
        capsys, "affine", "--window", "3,-1,2,5,6", "--m", "3", "--anderson"
    )
    assert code == 0 and out.strip() == "10001"
    code, out, _ = run(
        capsys, "affine", "--window", "3,-1,2,5,6", "--m", "3", "--sommers-check"
    )
    assert code == 0 and out.strip() == "yes"
    code, out, _ = run(
        capsys, "affine", "--window=-1,2,3,5,6", "--m", "3", "--swap"
    )
    assert code == 0 and out.strip() == "-1,3,4"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "zeta", "--m", "4", "--n", "3", "--word", "022")
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "classify", "--m", "4", "--n", "3", "--word", "09")
    assert code == 2


def test_verify_reference_only(capsys):
    code, out, _ = run(capsys, "verify", "--paper")
    assert code == 0
    assert "OK" in out
    assert all(line.startswith(("PASS", "OK")) for line in out.strip().split("\n"))


def test_verify_single_pair(capsys):
    code, out, _ = run(capsys, "verify", "--m", "4", "--n", "3")
    assert code == 0
    assert "FAIL" not in out


def test_verify_output_is_byte_stable(capsys):
    _, first, _ = run(capsys, "verify", "--m", "3", "--n", "4", "--json")
    _, second, _ = run(capsys, "verify", "--m", "3", "--n", "4", "--json")
    assert first == second


def test_internal_inconsistency_exit_code(capsys, monkeypatch):
    from ratpark import InternalInconsistency
    from ratpark import cli as cli_module

    def boom(*args, **kwargs):
        raise InternalInconsistency("synthetic cycle")

    monkeypatch.setattr(cli_module, "find_fixed_point", boom)
    code, _, err = run(
        capsys, "fixed-point", "--m", "3", "--n", "5", "--word", "10011"
    )
    assert code == 3
    assert "inconsistency" in err


def test_env_var_budget(capsys, monkeypatch):
    monkeypatch.setenv("RATPARK_MAX_ITER", "1")
    code, _, err = run(
        capsys, "fixed-point", "--m", "4", "--n", "3", "--word", "022"
    )
    assert code == 2
    assert "within 1" in err
