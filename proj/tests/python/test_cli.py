import json

THREE = "1 + (1 + 1)"
REVERSE_IN = "(1 + (1 + 1)) * ((1 + (1 + 1)) * (1 + (1 + 1)))"
REVERSE_VAL = "(inl (), (inr (inl ()), inr (inr ())))"


# -- exit-status contract -----------------------------------------------------


def test_exit_0_on_success(run_cli, program):
    result = run_cli("run", program("not.pi"), "--value", "inl ()")
    assert result.returncode == 0
    assert result.stdout.strip() == "inr ()"


def test_exit_1_on_domain_failure(run_cli, program):
    result = run_cli("run", program("not.pi"), "--value", "()")
    assert result.returncode == 1
    assert result.stdout.splitlines()[0].startswith("ERROR ValueError:")


def test_exit_1_on_missing_file(run_cli):
    result = run_cli("run", "no_such_file.pi", "--value", "()")
    assert result.returncode == 1
    assert result.stdout.splitlines()[0].startswith("ERROR IoError:")


def test_exit_2_on_usage_failure(run_cli, program):
    assert run_cli().returncode == 2  # missing subcommand
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("run", program("not.pi")).returncode == 2  # missing --value
    assert run_cli("run", program("not.pi"), "--bogus").returncode == 2


def test_help_exits_0(run_cli):
    assert run_cli("--help").returncode == 0
    assert run_cli("run", "--help").returncode == 0


# -- run ----------------------------------------------------------------------


def test_run_reverse_flag_inverts(run_cli, program):
    fwd = run_cli("run", program("not.pi"), "--value", "inl ()")
    back = run_cli("run", program("not.pi"), "--value", "inr ()", "--reverse")
    assert fwd.stdout.strip() == "inr ()"
    assert back.stdout.strip() == "inl ()"


def test_run_trace_matches_golden(run_cli, program, golden):
    result = run_cli(
        "run", program("reverse.pi"), "--in", REVERSE_IN,
        "--value", REVERSE_VAL, "--trace",
    )
    assert result.returncode == 0
    assert result.stdout == golden("reverse_trace.txt")


def test_run_trace_json(run_cli, program):
    result = run_cli(
        "run", program("reverse.pi"), "--in", REVERSE_IN,
        "--value", REVERSE_VAL, "--trace", "--format", "json",
    )
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["input"] == REVERSE_VAL
    assert len(doc["trace"]) == 3
    assert doc["trace"][0]["comb"] == "swap*"
    assert doc["result"] == "(inr (inr ()), (inr (inl ()), inl ()))"


def test_run_output_is_deterministic(run_cli, program):
    args = ("run", program("ifcnot.pi"), "--value",
            "(inl (), (inl (), inl ()))", "--trace")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


# -- invert ---------------------------------------------------------------------


def test_invert_emits_a_valid_program(run_cli, program, tmp_path):
    result = run_cli("invert", program("ifnot.pi"))
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "type: (1 + 1) * (1 + 1) <-> (1 + 1) * (1 + 1)"
    assert lines[1] == "(dist ; ((id * swap+) + (id * id))) ; factor"

    # The inverted text is itself a runnable program that undoes the original.
    inverted = tmp_path / "inverted.pi"
    inverted.write_text(result.stdout)
    fwd = run_cli("run", program("ifnot.pi"), "--value", "(inl (), inl ())")
    back = run_cli("run", str(inverted), "--value", fwd.stdout.strip())
    assert back.stdout.strip() == "(inl (), inl ())"


def test_invert_json(run_cli, program):
    result = run_cli("invert", program("not.pi"), "--format", "json")
    doc = json.loads(result.stdout)
    assert doc == {"comb": "swap+", "dom": "1 + 1", "cod": "1 + 1"}


# -- perm -----------------------------------------------------------------------


def test_perm_compiles_programs(run_cli, program, golden):
    assert run_cli("perm", program("not.pi")).stdout == golden("perm_not.txt")
    assert run_cli("perm", program("ifcnot.pi")).stdout == golden(
        "perm_ifcnot.txt"
    )


def test_perm_reads_perm_files(run_cli, program, golden):
    result = run_cli("perm", program("fulladder.perm"))
    assert result.returncode == 0
    assert result.stdout == golden("perm_fulladder.txt")


def test_perm_json(run_cli, program):
    doc = json.loads(
        run_cli("perm", program("not.pi"), "--format", "json").stdout
    )
    assert doc == {"arity": 2, "perm": [1, 0]}


def test_perm_needs_a_type(run_cli, program):
    result = run_cli("perm", program("reverse.pi"))  # headerless program
    assert result.returncode == 1
    assert result.stdout.startswith("ERROR TypeError:")


# -- equiv ----------------------------------------------------------------------


def test_equiv_equivalent(run_cli, program, golden):
    result = run_cli(
        "equiv", program("swapfl1.pi"), program("swapfl2.pi"), "--in", THREE
    )
    assert result.returncode == 0
    assert result.stdout == golden("equiv_swapfl.txt")


def test_equiv_witness(run_cli, program, tmp_path):
    ident = tmp_path / "ident.pi"
    ident.write_text("type: 1 + 1 <-> 1 + 1\nid\n")
    result = run_cli("equiv", program("not.pi"), str(ident))
    assert result.returncode == 1
    assert result.stdout.startswith("not equivalent (witness inl ():")
    doc = json.loads(
        run_cli(
            "equiv", program("not.pi"), str(ident), "--format", "json"
        ).stdout
    )
    assert doc["equivalent"] is False
    assert doc["witness"] == "inl ()"


def test_equiv_cap_env(run_cli, program):
    result = run_cli(
        "equiv", program("swapfl1.pi"), program("swapfl2.pi"), "--in", THREE,
        env={"PI_BRUTE_FORCE_CAP": "2"},
    )
    assert result.returncode == 1
    assert result.stdout.startswith("ERROR RefusedTooLarge:")


# -- normalize --------------------------------------------------------------------


def test_normalize_golden(run_cli, golden):
    result = run_cli("normalize", "--type", "(1 + 1) * (1 + 1)")
    assert result.returncode == 0
    assert result.stdout == golden("normalize_bool2.txt")


def test_normalize_json(run_cli):
    doc = json.loads(
        run_cli("normalize", "--type", "1 + 1", "--format", "json").stdout
    )
    assert doc["comb"] == "id + uniti+r"
    assert doc["dom"] == "1 + 1"
    assert doc["cod"] == "1 + (1 + 0)"
    assert doc["size"] == 2


# -- prove ------------------------------------------------------------------------


def test_prove_accepts_bundled_proof(run_cli, program, golden):
    result = run_cli("prove", program("swapfl.piproof"))
    assert result.returncode == 0
    assert result.stdout == golden("prove_swapfl.txt")


def test_prove_rejects_corrupted_proof(run_cli, root, tmp_path):
    text = (root / "programs" / "swapfl.piproof").read_text()
    bad = tmp_path / "bad.piproof"
    bad.write_text(text.replace("  by assoc_seq_r", "  by id2", 1))
    result = run_cli("prove", str(bad))
    assert result.returncode == 1
    assert result.stdout.startswith("rejected (step 5):")
    doc = json.loads(run_cli("prove", str(bad), "--format", "json").stdout)
    assert doc["accepted"] is False
    assert doc["failing_step"] == 5


# -- rules ------------------------------------------------------------------------


def test_rules_listing(run_cli):
    result = run_cli("rules")
    names = result.stdout.splitlines()
    assert len(names) == 108
    assert "assoc_seq_l" in names

    as_json = json.loads(run_cli("rules", "--format", "json").stdout)
    assert as_json == names


def test_rules_dump(run_cli):
    result = run_cli("rules", "--dump")
    doc = json.loads(result.stdout)
    assert len(doc) == 108
    sample = {e["name"]: e for e in doc}["assoc_seq_l"]
    assert sample["direction"] == "l2r"
    assert sample["lhs"] == "c1 ; (c2 ; c3)"
    assert sample["rhs"] == "(c1 ; c2) ; c3"
