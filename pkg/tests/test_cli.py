import json

import pytest

from f2moduli.cli import main

GENUS2_CSV = "degree,value\n0,1\n1,0\n2,1\n3,5\n4,5\n5,5\n6,5\n7,1\n8,0\n9,1\n"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------


def test_usage_errors_exit_1(capsys):
    assert run(capsys, ["betti", "--genus", "0"])[0] == 1
    assert run(capsys, ["betti"])[0] == 1  # --genus required
    assert run(capsys, ["no-such-command"])[0] == 1
    assert run(capsys, [])[0] == 1
    assert run(capsys, ["mv", "--split", "banana"])[0] == 1
    assert run(capsys, ["infer", "--split", "1+1", "--unknown", "nu2"])[0] == 1


def test_help_exits_0(capsys):
    assert run(capsys, ["--help"])[0] == 0
    assert run(capsys, ["betti", "--help"])[0] == 0


def test_missing_ring_file_exits_1(capsys, tmp_path):
    code, _, err = run(capsys, ["serre", "--ring-file", str(tmp_path / "nope.json")])
    assert code == 1
    assert "nope.json" in err


def test_csv_unavailable_for_reports(capsys):
    code, _, err = run(capsys, ["verify", "--max-genus", "2", "--format", "csv"])
    assert code == 1
    assert "csv" in err


# ---------------------------------------------------------------------------
# betti
# ---------------------------------------------------------------------------


def test_betti_csv_golden(capsys):
    code, out, _ = run(capsys, ["betti", "--genus", "2", "--field", "f2", "--format", "csv"])
    assert code == 0
    assert out == GENUS2_CSV


def test_betti_json_is_canonical(capsys):
    code, out, _ = run(capsys, ["betti", "--genus", "3", "--field", "q", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == [1, 0, 1, 6, 1, 6, 15, 0, 0, 15, 6, 1, 6, 1, 0, 1]
    # canonical emission: parse -> dump -> identical bytes
    assert json.dumps(payload, sort_keys=True, indent=2) + "\n" == out


def test_betti_markdown(capsys):
    code, out, _ = run(capsys, ["betti", "--genus", "1"])
    assert code == 0
    assert "| 0 | 1 |" in out and "genus 1" in out


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def test_tables_half_columns_and_footnote(capsys):
    code, out, _ = run(capsys, ["tables", "--max-genus", "6"])
    assert code == 0
    assert "duality" in out
    # the F2 table comes first; its degree-16 row ends the g=6 column
    deg16 = [l for l in out.splitlines() if l.startswith("| 16 ")]
    assert deg16[0].endswith("| 1586 |")
    # half columns stop at degree 3g-2
    assert "| 17 |" not in out
    _, jout, _ = run(capsys, ["tables", "--max-genus", "6", "--format", "json"])
    payload = json.loads(jout)
    by_field = {t["field"]: t["columns"] for t in payload["tables"]}
    f2g6 = next(c for c in by_field["F2"] if c["genus"] == 6)["values"]
    qg6 = next(c for c in by_field["Q"] if c["genus"] == 6)["values"]
    assert len(f2g6) == 17 and f2g6[-3:] == [794, 1586, 1586]
    assert len(qg6) == 17 and qg6[-3:] == [495, 792, 0]


def test_tables_full_reaches_top_degree(capsys):
    code, out, _ = run(capsys, ["tables", "--max-genus", "2", "--full"])
    assert code == 0
    payload_code, jout, _ = run(
        capsys, ["tables", "--max-genus", "2", "--full", "--format", "json"]
    )
    payload = json.loads(jout)
    f2 = next(t for t in payload["tables"] if t["field"] == "F2")
    g2 = next(c for c in f2["columns"] if c["genus"] == 2)
    assert g2["values"] == [1, 0, 1, 5, 5, 5, 5, 1, 0, 1]


def test_tables_csv_json_same_numbers(capsys):
    _, jout, _ = run(capsys, ["tables", "--max-genus", "3", "--format", "json"])
    _, cout, _ = run(capsys, ["tables", "--max-genus", "3", "--format", "csv"])
    payload = json.loads(jout)
    lines = [l.split(",") for l in cout.strip().splitlines()]
    header, rows = lines[0], lines[1:]
    col = header.index("f2_g3")
    csv_vals = [int(r[col]) for r in rows if r[col] != ""]
    f2 = next(t for t in payload["tables"] if t["field"] == "F2")
    assert csv_vals == next(c for c in f2["columns"] if c["genus"] == 3)["values"]


# ---------------------------------------------------------------------------
# nplus / profiles
# ---------------------------------------------------------------------------


def test_nplus_row(capsys):
    code, out, _ = run(capsys, ["nplus", "--genus", "1", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["halfspace"] == [1, 0, 1, 3, 1, 0, 0]
    assert payload["relative"] == [0, 0, 1, 3, 1, 0, 1]


def test_profiles_notation_and_note(capsys):
    code, out, _ = run(capsys, ["profiles", "--genus", "1"])
    assert code == 0
    assert "| 3 | 1 | 3 | 1_2^3 | 1_1^3 | 1_1^3* |" in out
    assert "recorded-genus1-halfspace@5" in out


def test_profiles_genus2_json(capsys):
    code, out, _ = run(capsys, ["profiles", "--genus", "2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    row6 = next(r for r in payload["rows"] if r["degree"] == 6)
    assert row6["mu"] == "5_10^11" and row6["nu"] == "5_5^11"
    assert row6["nu_deduced"] is True
    assert payload["notes"] == []


def test_profiles_rejects_genus3(capsys):
    assert run(capsys, ["profiles", "--genus", "3"])[0] == 1


# ---------------------------------------------------------------------------
# serre
# ---------------------------------------------------------------------------


def test_serre_builtin_matches(capsys):
    code, out, _ = run(capsys, ["serre", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["values"] == [1, 0, 1, 5, 5, 5, 5, 1, 0, 1]
    assert payload["matches_recursion"] is True


def test_serre_ring_file_round_trip(capsys, tmp_path):
    from f2moduli.ringdata import write_profile

    path = tmp_path / "g3.json"
    write_profile(path, 3)
    code, out, _ = run(capsys, ["serre", "--ring-file", str(path), "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 3 and payload["matches_recursion"] is True


def test_serre_wrong_ranks_exit_2(capsys, tmp_path):
    # structurally valid profile whose numbers do not reproduce the table:
    # a verified inconsistency, not a usage error
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps({"genus": 2, "dims": [1, 0, 1, 4, 1, 0, 1], "alpha_ranks": [0, 0, 0, 0, 0]})
    )
    code, out, _ = run(capsys, ["serre", "--ring-file", str(path)])
    assert code == 2
    assert "DIVERGES" in out


def test_serre_genus3_without_file_exits_1(capsys):
    assert run(capsys, ["serre", "--genus", "3"])[0] == 1


# ---------------------------------------------------------------------------
# mv
# ---------------------------------------------------------------------------


def test_mv_11_glues(capsys):
    code, out, _ = run(capsys, ["mv", "--split", "1+1"])
    assert code == 0
    assert "glued table matches the genus-2 recursion values" in out


def test_mv_single_degree_json(capsys):
    code, out, _ = run(capsys, ["mv", "--split", "1+2", "--degree", "4", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    (row,) = payload["rows"]
    assert (row["ker"], row["cok"]) == (1, 1)
    assert row["closed_form"] == [1, 1]
    assert payload["glue_matches"] is None


def test_mv_degree_out_of_range(capsys):
    assert run(capsys, ["mv", "--split", "1+1", "--degree", "40"])[0] == 1


def test_mv_describe_dumps_edges(capsys):
    code, out, _ = run(capsys, ["mv", "--split", "1+1", "--degree", "3", "--describe"])
    assert code == 0
    assert "split 1+1 degree 3" in out
    assert "dom[0,0]: dim" in out and "-> red[" in out


def test_mv_samples_stable(capsys):
    code, out, _ = run(capsys, ["mv", "--split", "1+1", "--samples", "3"])
    assert code == 0
    assert "rows stable across seeds 0..2" in out


def test_mv_22_report(capsys):
    code, out, _ = run(capsys, ["mv", "--split", "2+2"])
    assert code == 0
    assert "chain matches the recorded rows" in out
    assert "(nu_5, nu_6) = (5, 5): passes" in out


def test_mv_22_json(capsys):
    code, out, _ = run(capsys, ["mv", "--split", "2+2", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["chain_matches_recorded"] is True
    row10 = next(r for r in payload["rows"] if r["degree"] == 10)
    assert row10["chain"] == [25, 85] and row10["recorded"] == [25, 85]
    assert [5, 5, True] in payload["enumeration"]


# ---------------------------------------------------------------------------
# infer / verify
# ---------------------------------------------------------------------------


def test_infer_scan_finds_degree(capsys):
    code, out, _ = run(capsys, ["infer", "--split", "1+2", "--unknown", "nu_9^2"])
    assert code == 0
    assert "at degree 11" in out
    assert "deduced rank nu_9^2 = 1" in out


def test_infer_fixed_degree_json(capsys):
    code, out, _ = run(
        capsys,
        ["infer", "--split", "1+1", "--unknown", "nu_2^1", "--at-degree", "3", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["deduced"] == 1
    assert {"rank": 0, "glue": 7, "status": "inconsistent"} in payload["candidates"]


def test_verify_passes_with_note(capsys):
    code, out, _ = run(capsys, ["verify", "--max-genus", "4"])
    assert code == 0
    assert "note recorded-genus1-halfspace@5" in out
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, ["verify", "--max-genus", "3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(c["ok"] for c in payload["checks"])
    assert any("recorded-genus1-halfspace@5" in n for n in payload["notes"])


def test_deterministic_output(capsys):
    first = run(capsys, ["mv", "--split", "1+2", "--seed", "5"])
    second = run(capsys, ["mv", "--split", "1+2", "--seed", "5"])
    assert first == second
