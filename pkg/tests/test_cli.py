import io
import json
import sys

from tbraid.braid import format_word, transversal_commutator
from tbraid.cli import run


def invoke(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old_out, old_err, old_in = sys.stdout, sys.stderr, sys.stdin
    sys.stdout, sys.stderr = out, err
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv)
    finally:
        sys.stdout, sys.stderr, sys.stdin = old_out, old_err, old_in
    return code, out.getvalue(), err.getvalue()


def test_nf_json_is_byte_exact():
    code, out, _ = invoke(["--n", "4", "--json", "nf", "1 1"])
    assert code == 0
    assert out == '{"perm":[1,2,3,4],"bit":0,"vec":[1,0,0,0]}\n'


def test_eq_tbn_on_transversal_commutator():
    word = format_word(transversal_commutator(5))
    code, out, _ = invoke(["--n", "5", "--json", "eq", "--group", "tbn", word, ""])
    assert code == 0
    assert out == '"equal"\n'
    code, out, _ = invoke(["--n", "5", "eq", "--group", "bn", word, ""])
    assert code == 1
    assert out == "not-equal\n"


def test_eq_human_mode():
    code, out, _ = invoke(["--n", "4", "eq", "1 2 1", "2 1 2"])
    assert code == 0 and out == "equal\n"


def test_kernel():
    from tbraid.braid import quadrangle_relator

    word = format_word(quadrangle_relator(4))
    code, out, _ = invoke(["--n", "4", "kernel", word])
    assert code == 0 and out == "yes\n"
    code, out, _ = invoke(["--n", "4", "kernel", "1 1"])
    assert code == 1 and out == "no\n"


def test_act_and_lift_roundtrip():
    code, out, _ = invoke(["--n", "4", "act", "0;1,0,0,0", "2"])
    assert code == 0 and out.strip() == "1;1,0,1,0"
    code, out, _ = invoke(["--n", "4", "lift", "1;0,0,0,0"])
    assert code == 0 and out.strip() == "1 1 2 2 -1 -1 -2 -2"
    code, out, _ = invoke(["--n", "4", "nf", out.strip()])
    assert code == 0 and "bit: 1" in out


def test_lk():
    code, out, _ = invoke(["--n", "4", "--json", "lk", "1 1"])
    assert code == 0
    assert json.loads(out) == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    code, _, err = invoke(["--n", "4", "lk", "1"])
    assert code == 2 and "pure" in err


def test_classify():
    code, out, _ = invoke(["--n", "4", "--json", "classify", "1||+", "2||+"])
    assert code == 0
    assert json.loads(out) == {
        "commute": False, "triple": True, "common_endpoints": 1,
        "label": "consecutive",
    }
    code, _, err = invoke(["--n", "4", "classify", "1|+", "2||+"])
    assert code == 2 and "half-twist" in err


def test_prime_check():
    code, out, _ = invoke(["--n", "5", "--json",
                           "prime-check", "1;0,-1,0,0,0", "1;0,0,0,0,0"])
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"
    code, out, _ = invoke(["--n", "5", "--json",
                           "prime-check", "0;1,0,0,0,0", "1;0,0,0,0,0"])
    assert code == 1
    assert json.loads(out)["verdict"] == "fail(1)"


def test_prop71_check():
    code, out, _ = invoke(["--n", "5", "--json", "--bound", "3",
                           "prop71-check", "1;0,-1,0,0,0"])
    assert code == 0
    assert json.loads(out)["verdict"] == "pass-up-to-bound(3)"
    code, out, _ = invoke(["--n", "5", "--json", "prop71-check", "1;0,0,0,0,0"])
    assert code == 1
    assert json.loads(out)["verdict"] == "fail(0)"


def test_stdin_word():
    code, out, _ = invoke(["--n", "4", "--json", "nf", "-"], stdin="1 1\n")
    assert code == 0
    assert json.loads(out) == {"perm": [1, 2, 3, 4], "bit": 0, "vec": [1, 0, 0, 0]}


def test_verify_single_suite():
    code, out, _ = invoke(["--n", "5", "--json", "verify", "tits", "--cases", "20"])
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert set(payload["suites"]) == {"tits"}
    assert all(payload["suites"]["tits"].values())


def test_dump_tables():
    code, out, _ = invoke(["--n", "4", "--json", "--dump-tables"])
    assert code == 0
    payload = json.loads(out)
    assert payload["s_ij"]["s_12"] == "0;1,0,0,0"
    assert payload["s_ij"]["s_23"] == "1;1,1,1,0"
    assert payload["actions"]["X_2"]["g0"] == "1;1,0,1,0"
    code, _, err = invoke(["--n", "4"])
    assert code == 2


def test_format_errors_exit_2():
    code, _, err = invoke(["--n", "4", "nf", "1 x"])
    assert code == 2 and "'x'" in err
    code, _, err = invoke(["--n", "4", "nf", "9"])
    assert code == 2 and "'9'" in err
    code, _, err = invoke(["--n", "3", "nf", "1"])
    assert code == 2 and "n >= 4" in err
    code, _, err = invoke(["--n", "5", "act", "5;1", "1"])
    assert code == 2
    code, _, err = invoke(["nf", "1 1"])
    assert code == 2 and "--n" in err


def test_json_mode_emits_one_document():
    for argv in (["--n", "4", "--json", "nf", "1 -2"],
                 ["--n", "4", "--json", "eq", "1", "2"],
                 ["--n", "4", "--json", "kernel", ""],
                 ["--n", "4", "--json", "--dump-tables"]):
        _, out, _ = invoke(argv)
        json.loads(out)  # exactly one parseable document
        assert out.count("\n") == 1
