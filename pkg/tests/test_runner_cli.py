"""End-to-end behavior of the definition-file runner and the command line."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from lieworkbench.catalog import catalog_entry, catalog_get, catalog_names
from lieworkbench.cli import main
from lieworkbench.runner import (
    LoadError,
    RunOptions,
    catalog_list,
    entry_source,
    exit_code,
    load,
    render_structured,
    render_text,
    run_source,
)
from lieworkbench import dsl

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


# -- running sources -------------------------------------------------------------------


def test_statuses_across_check_kinds():
    src = """
tensor odd = vp (x) h on osp12;
check jacobi sl2;
check jacobi mu.prime;
check cybe odd on osp12;
"""
    results = run_source(src)
    assert [r.status for r in results] == ["pass", "fail", "unsupported"]
    assert exit_code(results) == 1
    flagged = results[2]
    assert flagged.details == (
        "schouten bracket requires parity-even terms; got ('vp', 'h')",)


def test_file_declarations_shadow_the_catalog():
    src = """
algebra sl2 { basis a:even b:even c:even;
              bracket [a,b] = b; bracket [a,c] = b; bracket [b,c] = a; }
check jacobi sl2;
"""
    (result,) = run_source(src)
    assert result.status == "fail"
    assert result.details == ("witness triple (a, b, c)", "residual -a")


def test_declared_tensors_find_their_declared_carrier():
    src = """
algebra B { basis h:even x:even; bracket [h,x] = 2*x; }
tensor t = h (x) x - x (x) h;
check cybe t;
check jacobi B;
"""
    results = run_source(src)
    assert [r.status for r in results] == ["pass", "pass"]
    assert exit_code(results) == 0


def test_empty_files_run_no_checks():
    assert run_source("") == []
    assert exit_code([]) == 0


def test_coboundary_check_reports_the_solution_and_comparison():
    (result,) = run_source("check coboundary mu2star over mu1star compare psi;")
    assert result.status == "pass"
    details = "\n".join(result.details)
    assert "solver status: solved" in details
    assert "Xp_hat -> -h_hat" in details
    assert "d1 image differs at ('(vm_hat, vm_hat)',)" in details
    assert "<== differs" in details


def test_obstructed_coboundary_fails_without_assumptions():
    src = "check coboundary dual.jordan.sl2 over dual.standard.sl2;"
    (result,) = run_source(src)
    assert result.status == "fail"
    assert any("solver status: obstructed" in d for d in result.details)
    assert any("every solution inverts h" in d for d in result.details)

    (unlocked,) = run_source(src, RunOptions(assume_nonzero=("h",)))
    assert unlocked.status == "pass"
    assert any("(2*xi/h)*H1_hat" in d for d in unlocked.details)


def test_twist_checks_run_at_the_requested_order():
    results = run_source("check twist jordanian order 2;\n"
                         "check twist extended 3 order 2;")
    assert [r.status for r in results] == ["pass", "pass"]


def test_load_errors_carry_line_numbers():
    with pytest.raises(LoadError) as err:
        run_source("check jacobi nowhere;")
    assert str(err.value) == "line 1: unknown algebra 'nowhere'"
    with pytest.raises(LoadError) as err:
        run_source("check cybe r.dj on sl2;")
    assert "does not carry this tensor" in str(err.value)


def test_checks_cannot_reference_later_declarations():
    with pytest.raises(LoadError):
        run_source("check cybe t on sl2;\ntensor t = H1 (x) H1 on sl2;")


# -- reports -----------------------------------------------------------------------------


def test_text_report_shape():
    text = render_text(run_source("check jacobi sl2;\ncheck jacobi mu.prime;"))
    lines = text.splitlines()
    assert lines[0].startswith("[pass] jacobi sl2")
    assert lines[-1] == "1 passed, 1 failed, 0 unsupported"


def test_structured_report_is_bit_stable_and_time_free():
    src = "check jacobi sl2;\ncheck mcybe r.dj on sl3;"
    first = render_structured(run_source(src))
    second = render_structured(run_source(src))
    assert first == second
    tree = json.loads(first)
    assert set(tree) == {"checks", "summary"}
    assert tree["summary"] == {"pass": 2, "fail": 0, "unsupported": 0}
    assert all(set(check) == {"label", "status", "details"}
               for check in tree["checks"])
    assert "elapsed" not in first


# -- the catalog and its definition files ---------------------------------------------------


def test_catalog_listing_mentions_every_entry():
    listing = catalog_list()
    for name in catalog_names():
        assert name in listing


def test_golden_files_match_the_generator():
    for name in catalog_names():
        assert (GOLDEN / f"{name}.wb").read_text() == entry_source(name)


def test_golden_files_load_back_to_the_catalog_objects():
    for name in catalog_names():
        entry = catalog_entry(name)
        env, checks = load(dsl.parse((GOLDEN / f"{name}.wb").read_text()))
        assert checks == []
        obj = catalog_get(name)
        if entry.kind == "algebra":
            loaded = env.algebras[name]
            assert loaded.basis == obj.basis
            assert loaded.table == obj.table
        elif entry.kind == "tensor":
            assert env.tensors[name] == obj
        else:
            loaded = env.cochains[name]
            assert loaded.basis == obj.basis
            assert loaded.parity == obj.parity
            assert loaded == obj


# -- the command line -------------------------------------------------------------------------


def _write(tmp_path: Path, text: str) -> str:
    path = tmp_path / "checks.wb"
    path.write_text(text)
    return str(path)


def test_cli_run_passing_file(tmp_path, capsys):
    path = _write(tmp_path, "check jacobi sl2;\n")
    assert main(["run", path]) == 0
    out = capsys.readouterr().out
    assert "[pass] jacobi sl2" in out
    assert "1 passed, 0 failed, 0 unsupported" in out


def test_cli_run_failing_file(tmp_path, capsys):
    path = _write(tmp_path, "check jacobi mu.prime;\n")
    assert main(["run", path]) == 1
    assert "[fail]" in capsys.readouterr().out


def test_cli_run_structured_format(tmp_path, capsys):
    path = _write(tmp_path, "check jacobi sl2;\n")
    assert main(["run", path, "--format", "structured"]) == 0
    tree = json.loads(capsys.readouterr().out)
    assert tree["summary"]["pass"] == 1


def test_cli_run_empty_file(tmp_path, capsys):
    path = _write(tmp_path, "")
    assert main(["run", path]) == 0
    assert "0 passed, 0 failed, 0 unsupported" in capsys.readouterr().out


def test_cli_assume_flag(tmp_path):
    path = _write(tmp_path,
                  "check coboundary dual.jordan.sl2 over dual.standard.sl2;\n")
    assert main(["run", path]) == 1
    assert main(["run", path, "--assume", "h!=0"]) == 0
    assert main(["run", path, "--assume", "h"]) == 0


def test_cli_out_option(tmp_path, capsys):
    path = _write(tmp_path, "check jacobi sl2;\n")
    target = tmp_path / "report.json"
    assert main(["run", path, "--format", "structured",
                 "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["summary"]["pass"] == 1


def test_cli_missing_file_is_a_usage_error(tmp_path, capsys):
    assert main(["run", str(tmp_path / "absent.wb")]) == 2
    assert capsys.readouterr().err != ""


def test_cli_parse_error_is_a_usage_error(tmp_path, capsys):
    path = _write(tmp_path, "tensor t = 1 +;\n")
    assert main(["run", path]) == 2
    err = capsys.readouterr().err
    assert "line 1, col 15" in err


def test_cli_rejects_nonpositive_orders(tmp_path, capsys):
    path = _write(tmp_path, "check jacobi sl2;\n")
    assert main(["run", path, "--order", "0"]) == 2


def test_cli_catalog(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    for name in ("osp12", "r.jordan", "psi", "dual.standard.sl2"):
        assert name in out


def test_cli_runs_every_golden_file(tmp_path, capsys):
    for path in sorted(GOLDEN.glob("*.wb")):
        assert main(["run", str(path)]) == 0, path.name
    capsys.readouterr()


def test_cli_paper_suite_prints_a_verdict(capsys):
    # One criterion is red by design (see the suite module docstring), so
    # the battery exits 1 while the other ten criteria pass.
    assert main(["paper-suite", "--order", "2"]) == 1
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 10
    assert out.count("[FAIL]") == 1
    assert out.rstrip().endswith("10/11 criteria pass")
