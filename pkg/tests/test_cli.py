import subprocess
import sys
from pathlib import Path

import pytest

from radiolabel.cli import main, parse_range, UsageError
from radiolabel.documents import GraphDocument, read_graph, write_graph
from radiolabel.graph import mpn, path_graph

DATA = Path(__file__).parent / "data"


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def construct(n, out):
    assert main(["construct", "--n", str(n), "--out", str(out)]) == 0
    return out / f"mpn{n}.graph", out / f"mpn{n}.labeling"


def test_construct_n4(workdir, capsys):
    graph_file, labeling_file = construct(4, workdir)
    assert "span=15 formula=15" in capsys.readouterr().out
    assert graph_file.exists() and labeling_file.exists()
    assert read_graph(graph_file) == mpn(4)


def test_construct_n5(workdir, capsys):
    construct(5, workdir)
    assert "span=24 formula=24" in capsys.readouterr().out


def test_construct_n1(workdir, capsys):
    assert main(["construct", "--n", "1", "--out", str(workdir)]) == 2
    assert "n must be >= 2" in capsys.readouterr().err


def test_verify_construction(workdir, capsys):
    graph_file, labeling_file = construct(6, workdir)
    assert main(["verify", str(graph_file), str(labeling_file)]) == 0
    assert "valid radio labeling" in capsys.readouterr().out


def test_verify_tampered(workdir, capsys):
    graph_file, labeling_file = construct(6, workdir)
    lines = labeling_file.read_text().splitlines()
    # decrement the largest label
    idx = max(range(len(lines)), key=lambda i: int(lines[i].split()[1]) if lines[i].startswith("v") else -1)
    name, value = lines[idx].split()
    lines[idx] = f"{name} {int(value) - 1}"
    labeling_file.write_text("\n".join(lines) + "\n")
    capsys.readouterr()
    assert main(["verify", str(graph_file), str(labeling_file)]) == 1
    out = capsys.readouterr().out
    assert "violation" in out and "required gap" in out


def test_verify_as_L21(workdir):
    graph_file, labeling_file = construct(3, workdir)
    assert main(["verify", str(graph_file), str(labeling_file), "--kind", "L21"]) == 0


def test_verify_malformed(workdir):
    graph_file, _ = construct(3, workdir)
    bad = workdir / "bad.labeling"
    bad.write_text("format: something-else\n")
    assert main(["verify", str(graph_file), str(bad)]) == 2
    (workdir / "bad.graph").write_text("vertices a b\n")
    assert main(["verify", str(workdir / "bad.graph"), str(bad)]) == 2


def test_solve_radio(workdir, capsys):
    graph_file, _ = construct(3, workdir)
    capsys.readouterr()
    witness = workdir / "w" / "witness.labeling"
    witness.parent.mkdir()
    assert main(["solve", str(graph_file), "--kind", "radio", "--out", str(witness)]) == 0
    assert "optimum=8 proven" in capsys.readouterr().out
    assert "graph: ../mpn3.graph" in witness.read_text()
    assert main(["verify", str(graph_file), str(witness)]) == 0


def test_solve_lambda(workdir, capsys):
    graph_file, _ = construct(6, workdir)
    capsys.readouterr()
    assert main(["solve", str(graph_file), "--kind", "lambda"]) == 0
    assert "optimum=6 proven" in capsys.readouterr().out


def test_solve_budget_limited(workdir, capsys):
    write_graph(workdir / "big.graph", mpn(30))
    assert main(["solve", "big.graph", "--budget-nodes", "20"]) == 1
    assert "upper bound" in capsys.readouterr().out


def test_solve_disconnected(workdir):
    (workdir / "d.graph").write_text(GraphDocument(["a", "b", "c"], [("a", "b")]).dumps())
    assert main(["solve", "d.graph"]) == 2


def test_solve_threads(workdir, capsys):
    graph_file, _ = construct(4, workdir)
    capsys.readouterr()
    assert main(["solve", str(graph_file), "--threads", "2"]) == 0
    assert "optimum=15 proven" in capsys.readouterr().out


def test_table_golden(workdir):
    assert main(["table", "--range", "2..10", "--out", "t.csv"]) == 0
    assert (workdir / "t.csv").read_text() == (DATA / "table_2_10.csv").read_text()


def test_table_exact(workdir):
    assert main(["table", "--range", "2..5", "--exact", "--out", "t.csv"]) == 0
    rows = [line.split(",") for line in (workdir / "t.csv").read_text().splitlines()[1:]]
    assert [r[8] for r in rows] == ["3", "8", "15", "24"]
    assert all(r[8] == r[7] and r[9] == "true" for r in rows)


def test_table_exact_unproven(workdir):
    assert main(["table", "--range", "8..8", "--exact", "--budget-nodes", "5", "--out", "t.csv"]) == 1
    assert (workdir / "t.csv").read_text().splitlines()[1].split(",")[8] == ""


@pytest.mark.parametrize("rng", ["5..2", "x..3", "1..4"])
def test_table_bad_range(workdir, rng):
    assert main(["table", "--range", rng]) == 2


def test_parse_range():
    assert parse_range("2..10") == range(2, 11)
    assert parse_range("7") == range(7, 8)
    with pytest.raises(UsageError):
        parse_range("3..1")


def test_export(workdir, capsys):
    write_graph(workdir / "m3.graph", mpn(3))
    assert main(["export", "m3.graph", "--out", "m3.dot"]) == 0
    dot = (workdir / "m3.dot").read_text()
    assert dot.count("[shape=") == 5 and dot.count(" -- ") == 5
    write_graph(workdir / "p2.graph", path_graph(2))
    assert main(["export", "p2.graph"]) == 0
    out = capsys.readouterr().out
    assert out.count("[shape=") == 2 and out.count(" -- ") == 1


def test_export_missing(workdir):
    assert main(["export", "nope.graph"]) == 2


def test_bad_arguments_exit_2(workdir):
    with pytest.raises(SystemExit) as exc:
        main(["construct"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "x.graph", "--kind", "other"])
    assert exc.value.code == 2


def test_module_entry_point(workdir):
    proc = subprocess.run(
        [sys.executable, "-m", "radiolabel", "construct", "--n", "2", "--out", str(workdir)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "span=3 formula=3" in proc.stdout
