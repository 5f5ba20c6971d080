"""End-to-end command-line tests: worked examples, JSON round-trips,
exit codes, and byte-level determinism."""

import json

import pytest

from loopsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cocharge_worked_word(capsys):
    code, out, _ = run(capsys, "cocharge", "3222311111233")
    assert code == 0
    assert out == "4\n"


def test_cocharge_left_rule(capsys):
    code, out, _ = run(capsys, "cocharge", "3222311111233", "--rule", "left")
    assert code == 0 and out == "8\n"


def test_e_symbolic_canonical(capsys):
    code, out, _ = run(capsys, "e", "--n", "2", "--m", "3", "--k", "2", "--r", "1",
                       "--symbolic")
    assert code == 0
    assert out == "x[1]^(1)*x[2]^(2) + x[1]^(1)*x[3]^(2) + x[2]^(1)*x[3]^(2)\n"


def test_e_numeric(capsys):
    vars_json = json.dumps({"n": 2, "m": 3, "values": [[1, 2], [3, 4], [5, 6]]})
    code, out, _ = run(capsys, "e", "--n", "2", "--m", "3", "--k", "2", "--r", "1",
                       "--vars", vars_json)
    assert code == 0
    assert out == "%d\n" % (1 * 4 + 1 * 6 + 3 * 6)


def test_vars_shape_mismatch_is_domain_error(capsys):
    vars_json = json.dumps({"n": 2, "m": 2, "values": [[1, 2], [3, 4]]})
    code, _, err = run(capsys, "e", "--n", "2", "--m", "3", "--k", "1", "--r", "1",
                       "--vars", vars_json)
    assert code == 1
    assert err.startswith("error:")


def test_schur_routes_print_identically(capsys):
    outs = []
    for method in ("tableaux", "jt", "alternant"):
        code, out, _ = run(capsys, "schur", "--n", "2", "--m", "2", "--r", "1",
                           "--shape", "[2,1]", "--method", method)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_schur_skew_shape(capsys):
    shape = json.dumps({"outer": [2, 1], "inner": [1]})
    code, out, _ = run(capsys, "schur", "--n", "2", "--m", "2", "--r", "1",
                       "--shape", shape, "--method", "jt")
    assert code == 0 and out.strip()


def test_schur_alternant_rejects_skew(capsys):
    shape = json.dumps({"outer": [2, 1], "inner": [1]})
    code, _, err = run(capsys, "schur", "--n", "2", "--m", "2", "--r", "1",
                       "--shape", shape, "--method", "alternant")
    assert code == 1 and "straight" in err


def test_powersum(capsys):
    code, out, _ = run(capsys, "powersum", "--n", "2", "--m", "2", "--k", "1")
    assert code == 0
    assert out == "x[1]^(1)*x[1]^(2) + x[2]^(1)*x[2]^(2)\n"


def test_mn_expansion_json(capsys):
    code, out, _ = run(capsys, "mn", "--n", "2", "--k", "1", "--lam", "[1]")
    assert code == 0
    rows = json.loads(out)
    assert {"mu": [3], "sign": 1} in rows
    assert {"mu": [1, 1, 1], "sign": -1} in rows


def test_rmatrix_involution_round_trip(capsys):
    vars_json = json.dumps(
        {"n": 2, "m": 2, "values": [[1, 2], [3, "1/2"]]}
    )
    code, once, _ = run(capsys, "rmatrix", "--n", "2", "--m", "2", "--word", "s1",
                        "--vars", vars_json)
    assert code == 0
    swapped = json.loads(once)
    # the emitted grid is itself valid --vars input
    code, twice, _ = run(capsys, "rmatrix", "--n", "2", "--m", "2", "--word", "s1",
                         "--vars", json.dumps(swapped))
    assert code == 0
    back = json.loads(twice)
    assert back["values"] == [[1, 2], [3, "1/2"]]


def test_rmatrix_symbolic_exprs(capsys):
    code, out, _ = run(capsys, "rmatrix", "--n", "2", "--m", "2", "--word", "s1",
                       "--symbolic")
    assert code == 0
    payload = json.loads(out)
    assert "exprs" in payload and len(payload["exprs"]) == 2


def test_hopf_check_passes(capsys):
    code, out, _ = run(capsys, "hopf-check", "--n", "2", "--max-i", "2")
    assert code == 0
    assert out.count("ok") == 6 and "FAIL" not in out


def test_trop_expression_and_value(capsys):
    code, out, _ = run(capsys, "trop", "--n", "3", "--component", "x", "--color", "2")
    assert code == 0 and "min(" in out
    code, out, _ = run(capsys, "trop", "--n", "3", "--component", "x", "--color", "2",
                       "--point", json.dumps({"x": [1, 1, 1], "y": [3, 2, 0]}))
    assert code == 0
    assert out == "1\n"


def test_comb_r_worked_example(capsys):
    for method in ("trop", "jdt"):
        code, out, _ = run(capsys, "comb-r", "--n", "3", "--b1", "123",
                           "--b2", "11333", "--method", method)
        assert code == 0
        assert json.loads(out) == {"c1": "12333", "c2": "113"}


def test_energy_worked_tableau(capsys):
    tab = json.dumps({"inner": [], "rows": [[1, 1, 1, 1, 1, 2, 3, 3], [2, 2, 2, 3], [3]]})
    code, out, _ = run(capsys, "energy", "--tableau", tab)
    assert code == 0 and out == "4\n"


def test_boxball_json_final_positions(capsys):
    state = json.dumps({"boxes": [0, 1, 1, 1, 0, 0, 0, 0, 1]})
    code, out, _ = run(capsys, "boxball", "--state", state, "--steps", "4",
                       "--render", "json")
    assert code == 0
    boxes = json.loads(out)["boxes"]
    assert [i for i, b in enumerate(boxes) if b] == [10, 15, 16, 17]


def test_boxball_json_round_trip(capsys):
    state = json.dumps({"boxes": [0, 1, 1, 0]})
    code, out, _ = run(capsys, "boxball", "--state", state, "--steps", "1",
                       "--render", "json")
    assert code == 0
    code, again, _ = run(capsys, "boxball", "--state", out.strip(), "--steps", "0",
                         "--render", "json")
    assert code == 0
    assert json.loads(again)["boxes"] == json.loads(out)["boxes"]


def test_boxball_ascii_frames(capsys):
    state = json.dumps({"boxes": [0, 1, 1, 1, 0, 0, 0, 0, 1]})
    code, out, _ = run(capsys, "boxball", "--state", state, "--steps", "4")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert lines[0].startswith(".ooo....o")
    assert len(set(map(len, lines))) == 1
    assert lines[-1].rstrip(".").endswith("ooo")


def test_boxball_leftmost_rule_agrees(capsys):
    state = json.dumps({"boxes": [1, 1, 0, 1]})
    _, a, _ = run(capsys, "boxball", "--state", state, "--steps", "3",
                  "--render", "json", "--rule", "carrier")
    _, b, _ = run(capsys, "boxball", "--state", state, "--steps", "3",
                  "--render", "json", "--rule", "leftmost")
    assert a == b


def test_factor_scalar_quadratic(capsys):
    poly = json.dumps({"n": 1, "coeffs": [[[1]], [[3]], [[2]]]})
    code, out, _ = run(capsys, "factor", "--poly", poly, "--m", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["converged"] is True
    assert sorted(v[0] for v in payload["params"]["values"]) == [1.0, 2.0]


def test_factor_complex_roots_exit_one(capsys):
    poly = json.dumps({"n": 1, "coeffs": [[[1]], [[1]], [[1]]]})
    code, _, err = run(capsys, "factor", "--poly", poly, "--m", "2")
    assert code == 1 and err.startswith("error:")


def test_factor_round_trip_via_json(capsys):
    # factor output params recompose to the input polynomial
    from loopsym.jsonio import loopvars_from_json, matrixpoly_from_json
    from loopsym.lsym import whirl_product

    poly = {"n": 2, "coeffs": [[[1, 4], [0, 1]], [[1, 0], [3, 6]]]}
    code, out, _ = run(capsys, "factor", "--poly", json.dumps(poly), "--m", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["converged"] is True and payload["residual"] <= 1e-8
    params = loopvars_from_json(payload["params"])
    got = whirl_product(
        type(params).numeric(
            params.n,
            params.m,
            [
                [float(params.value(i, j)) for j in range(1, params.n + 1)]
                for i in range(1, params.m + 1)
            ],
        )
    )
    want = matrixpoly_from_json(poly).map_scalars(float)
    top = max(got.max_degree(), want.max_degree())
    for i in (1, 2):
        for j in (1, 2):
            for d in range(top + 1):
                assert float(got.coeff(i, j, d)) == pytest.approx(
                    float(want.coeff(i, j, d)), abs=1e-7
                )


def test_tnn_violation_report(capsys):
    poly = json.dumps({"n": 1, "coeffs": [[[1]], [[-1]]]})
    code, out, _ = run(capsys, "tnn", "--poly", poly, "--window", "2", "--order", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is False
    assert {"rows": [1], "cols": [2], "value": -1} in payload["violations"]


def test_certify_schur_nonnegative(capsys):
    poly = json.dumps({"n": 2, "coeffs": [[[1, 4], [0, 1]], [[1, 0], [3, 6]]]})
    code, out, _ = run(capsys, "certify-schur", "--poly", poly, "--box", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True and payload["negatives"] == []


def test_verify_suite_deterministic(capsys):
    code, first, _ = run(capsys, "verify", "--suite", "hopf")
    assert code == 0
    code, second, _ = run(capsys, "verify", "--suite", "hopf")
    assert code == 0
    assert first == second
    assert first.splitlines()[-1] == "34/34 passed"


def test_verify_all_exits_clean(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--points", "3")
    assert code == 0
    assert "FAIL" not in out


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["e", "--n", "2", "--badflag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
