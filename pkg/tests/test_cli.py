import json

from twistcalc import cli, verification


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_braid_info(capsys):
    code, out, _ = run(capsys, "braid", "info", "B3: 2 1 2 -1")
    assert code == 0
    payload = json.loads(out)
    assert payload["strands"] == 3
    assert payload["exponent_sum"] == 2
    assert payload["schema_version"] == 1


def test_braid_info_rejects_out_of_range_letter(capsys):
    code, _, err = run(capsys, "braid", "info", "B2: 2")
    assert code == 2
    assert "position" in err


def test_braid_genus_trefoil(capsys):
    code, out, _ = run(capsys, "braid", "genus", "B2: 1 1 1")
    payload = json.loads(out)
    assert code == 0
    assert payload["genus"] == 1
    assert payload["seifert_matrix"] == [[-1, 1], [0, -1]]


def test_braid_normal_form_equality(capsys):
    code, out, _ = run(capsys, "braid", "normal-form", "B3: 1 2 1", "--equals", "B3: 2 1 2")
    payload = json.loads(out)
    assert code == 0
    assert payload["equals"] is True


def test_alex_ribbon(capsys):
    code, out, _ = run(capsys, "alex", "ribbon", "--m", "1", "--n", "1")
    payload = json.loads(out)
    assert code == 0
    assert payload["alexander"] == "1 - 2*x + 3*x^2 - 2*x^3 + x^4"
    assert payload["span"] == 4
    assert payload["genus_lower_bound"] == 2


def test_alex_seifert_matrix_json(capsys):
    code, out, _ = run(capsys, "alex", "seifert", "--matrix", "[[-1, 1], [0, -1]]")
    payload = json.loads(out)
    assert code == 0
    assert payload["alexander"] == "1 - t + t^2"
    assert payload["signature"] == -2


def test_family_table_torus_axis(capsys):
    spec = '{"omega":3,"eta":3,"g0":3,"g4_0":3,"s0":6}'
    code, out, _ = run(capsys, "family", "table", "--spec", spec, "--n-from", "0", "--n-to", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# schema_version=1")
    header = lines[1].split(",")
    genus_column = [line.split(",")[header.index("g")] for line in lines[2:]]
    assert genus_column == ["3", "6", "9", "12", "15", "18"]


def test_family_table_wind_zero_marker(capsys):
    spec = '{"omega":0,"eta":2,"g0":2,"g4_0":1}'
    code, out, _ = run(capsys, "family", "table", "--spec", spec, "--n-to", "2")
    assert code == 0
    assert "not-covered" in out.splitlines()[0]


def test_family_table_json_and_slope(capsys):
    spec = '{"omega":2,"eta":2,"g0":1,"g4_0":1,"s0":2}'
    code, out, _ = run(
        capsys, "family", "table", "--spec", spec, "--n-to", "3", "--slope", "7", "--json"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["limit_ratio"] == "1"
    assert [row["r_n"] for row in payload["rows"]] == ["7", "11", "15", "19"]


def test_family_table_accepts_braid_presentation(capsys):
    # g0 derived from the positive braid closure: delta^4 in B3 is T(3,4)
    spec = '{"omega":3,"eta":3,"braid":"B3: 2 1 2 1 2 1 2 1","g4_0":3,"s0":6}'
    code, out, _ = run(capsys, "family", "table", "--spec", spec, "--n-to", "2")
    assert code == 0
    lines = out.strip().splitlines()
    header = lines[1].split(",")
    genus_column = [line.split(",")[header.index("g")] for line in lines[2:]]
    assert genus_column == ["3", "6", "9"]


def test_family_table_determinism(capsys):
    spec = '{"omega":3,"eta":3,"g0":3,"g4_0":3,"s0":6}'
    first = run(capsys, "family", "table", "--spec", spec)
    second = run(capsys, "family", "table", "--spec", spec)
    assert first == second


def test_lspace_cable(capsys):
    code, out, _ = run(
        capsys, "lspace", "cable", "--omega", "2", "--q", "3", "--genus", "1"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["positive_lspace_cable"] is True


def test_lspace_satellite(capsys):
    code, out, _ = run(
        capsys, "lspace", "satellite", "--omega", "2", "--gp", "1", "--gk", "1"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["verdict"] == "both_one_cable23_trefoil"
    assert payload["rational_longitude"] == "4/5"
    assert payload["cover_check"] is True


def test_lspace_triad(capsys):
    code, out, _ = run(
        capsys,
        "lspace", "triad", "--omega", "2", "--slope", "7",
        "--start", "0", "--limit-lspace", "--up-to", "6",
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["certified_twists"] == list(range(7))


def test_lspace_cover(capsys):
    image = json.dumps({"kind": "interval", "lo": "0", "hi": "1"})
    other = json.dumps({"kind": "all-but-longitude", "longitude": "4/5"})
    code, out, _ = run(capsys, "lspace", "cover", "--image", image, "--other", other)
    payload = json.loads(out)
    assert code == 0
    assert payload["covers"] is True


def test_verify_full_suite(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert "all" in lines[-1]


def test_verify_filter(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "torres")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert "[torres]" in lines[0]


def test_verify_unknown_filter(capsys):
    code, out, _ = run(capsys, "verify", "--filter", "nonsense")
    assert code == 2


def test_verify_reports_failure(capsys, monkeypatch):
    # a corrupted identity must surface as a nonzero exit with its name
    broken = verification.Check("torres", "broken-check", lambda: (_ for _ in ()).throw(AssertionError("boom")))
    monkeypatch.setattr(verification, "CHECKS", [broken])
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL" in out and "broken-check" in out


def test_verify_determinism(capsys):
    first = run(capsys, "verify", "--filter", "garside")
    second = run(capsys, "verify", "--filter", "garside")
    assert first == second


def test_input_error_exit_code(capsys):
    code, _, err = run(capsys, "family", "table", "--spec", "{not json")
    assert code == 2
