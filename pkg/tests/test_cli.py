import math

import pytest

from graphenergy.cli import main, parse_values
from graphenergy.spectra import PHI


def test_parse_values():
    assert parse_values("15,-3:3") == [15.0, -3.0, -3.0, -3.0]
    assert parse_values("phi-1:2,-phi") == [PHI - 1, PHI - 1, -PHI]
    assert parse_values("sqrt2:2") == [math.sqrt(2.0)] * 2
    assert parse_values("") == []
    with pytest.raises(ValueError):
        parse_values("abc")
    with pytest.raises(ValueError):
        parse_values("1:0")


def test_complete_command(capsys):
    code = main(["complete", "--n", "16", "--m", "80", "--known", "10",
                 "--best", "max"])
    out = capsys.readouterr().out
    assert code == 0
    assert "40.0000" in out
    assert "best (max, all): p=5" in out
    assert out.count("\n") >= 15


def test_complete_full_range(capsys):
    code = main(["complete", "--n", "16", "--m", "80", "--known", "10",
                 "--full-range"])
    out = capsys.readouterr().out
    assert code == 0
    # 14 p-values, two roots each
    assert sum(1 for line in out.splitlines() if line.strip().startswith(("1 ", "2 "))) >= 2


def test_complete_infeasible_exit_code(capsys):
    code = main(["complete", "--n", "10", "--m", "1", "--known", "10"])
    assert code == 1
    assert "infeasible" in capsys.readouterr().err


def test_format_error_exit_codes(capsys):
    assert main(["complete", "--n", "10", "--m", "9", "--known", "x,y"]) == 3
    assert main(["spectrum", "--graph6", "A"]) == 3
    assert main(["unknown-command"]) == 3


def test_spectrum_command(capsys):
    code = main(["spectrum", "--graph6", "I~qkzXZLw"])
    out = capsys.readouterr().out
    assert code == 0
    assert "n=10 m=30" in out
    assert "energy: 20.0000" in out
    assert "integral" in out


def test_search_command(capsys):
    code = main(["search", "--n", "4", "--objective", "max"])
    out = capsys.readouterr().out
    assert code == 0
    assert "C~" in out  # complete graph on 4 vertices


def test_search_budget_exit_code(capsys):
    code = main([
        "search", "--n", "12", "--objective", "max", "--budget-graphs", "1000",
    ])
    out = capsys.readouterr().out
    assert code == 2
    assert "not certified" in out


def test_search_complement_cycles(capsys):
    code = main([
        "search", "--n", "18", "--complement-cycles", "--objective", "max",
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "energy=38.9443" in out


def test_realize_certified_unrealizable(capsys):
    code = main([
        "realize", "--n", "10", "--m", "30",
        "--target", "6,1.4415:3,-1.7208:6", "--tol", "1e-3",
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "certified unrealizable" in out
    assert "third moment" in out


def test_realize_heawood(capsys):
    code = main([
        "realize", "--n", "14", "--bipartite", "--regular", "3",
        "--target", "3,sqrt2:6,-sqrt2:6,-3",
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "energy=22.9706" in out


def test_realize_target_length_mismatch(capsys):
    assert main(["realize", "--n", "4", "--target", "1,-1"]) == 3


def test_verify_tables(capsys):
    code = main(["verify-tables"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("PASS") == 13
    assert "FAIL" not in out


def test_report_commands(tmp_path, capsys):
    out_dir = str(tmp_path / "reports")
    assert main(["report", "complete", "--n", "16", "--m", "80",
                 "--known", "10", "--out-dir", out_dir]) == 0
    assert main(["report", "spectrum", "--graph6", "I~qkzXZLw",
                 "--out-dir", out_dir]) == 0
    assert main(["report", "catalog", "--out-dir", out_dir]) == 0
    produced = sorted(p.name for p in (tmp_path / "reports").iterdir())
    assert produced == [
        "candidates.csv", "candidates.png",
        "known-extremal.csv", "known-extremal.png",
        "spectrum.csv", "spectrum.png",
    ]
    csv_text = (tmp_path / "reports" / "candidates.csv").read_text()
    assert csv_text.splitlines()[0].startswith("p,q,x,y,energy")
    assert len(csv_text.splitlines()) == 15
