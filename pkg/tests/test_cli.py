import json

import pytest

from deduce.cli import main

EXPECTED_TABLE = """\
P  Q  P y Q
V  V  V
V  F  F
F  V  F
F  F  F
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    envelope = json.loads(out)
    assert set(envelope) == {"status", "command", "result", "counterexample"}
    return code, envelope, err


class TestClassify:
    def test_tautology_exits_zero(self, capsys):
        code, out, _ = run(capsys, "classify", "P ó ¬P")
        assert code == 0
        assert out == "tautología\n"

    def test_contradiction_exits_one(self, capsys):
        code, out, _ = run(capsys, "classify", "P y ¬P")
        assert code == 1
        assert out.splitlines()[0] == "contradicción"

    def test_contingent_reports_counterexample(self, capsys):
        code, out, _ = run(capsys, "classify", "P => Q")
        assert code == 1
        assert out == "contingente\ncontraejemplo: P=V Q=F\n"

    def test_json_envelope(self, capsys):
        code, envelope, _ = run_json(capsys, "classify", "P ó ¬P")
        assert code == 0
        assert envelope["status"] == "ok"
        assert envelope["command"] == "classify"
        assert envelope["result"] == {
            "formula": "P | !P",
            "classification": "tautology",
        }
        assert envelope["counterexample"] is None

    def test_json_counterexample_on_exit_one(self, capsys):
        code, envelope, _ = run_json(capsys, "classify", "P -> Q")
        assert code == 1
        assert envelope["status"] == "invalid"
        assert envelope["counterexample"] == {"P": True, "Q": False}


class TestTable:
    def test_conjunction_matches_the_classic_layout(self, capsys):
        code, out, _ = run(capsys, "table", "P y Q")
        assert code == 0
        assert out == EXPECTED_TABLE

    def test_json_rows_use_booleans(self, capsys):
        code, envelope, _ = run_json(capsys, "table", "P y Q")
        assert code == 0
        rows = envelope["result"]["rows"]
        assert rows[0] == {"valuation": {"P": True, "Q": True}, "value": True}
        assert len(rows) == 4
        assert envelope["result"]["formula"] == "P & Q"


class TestEquiv:
    def test_equivalent_pair(self, capsys):
        code, out, _ = run(capsys, "equiv", "P -> Q", "¬P ó Q")
        assert code == 0
        assert out == "equivalentes\n"

    def test_inequivalent_pair_exits_one(self, capsys):
        code, out, _ = run(capsys, "equiv", "P", "Q")
        assert code == 1
        assert out.startswith("no equivalentes\ncontraejemplo: ")

    def test_json_counterexample(self, capsys):
        code, envelope, _ = run_json(capsys, "equiv", "P", "Q")
        assert code == 1
        assert envelope["counterexample"] == {"P": True, "Q": False}
        assert envelope["result"]["equivalent"] is False


class TestRules:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "rules", "list")
        assert code == 0
        names = out.splitlines()
        assert len(names) == 8
        assert names[0] == "modus-ponens"
        assert names[-1] == "exportacion"

    def test_show(self, capsys):
        code, out, _ = run(capsys, "rules", "show", "modus-ponens")
        assert code == 0
        assert out.splitlines() == [
            "modus-ponens",
            "patrón: (P ⇒ Q) y P ⇒ Q",
            "metavariables: P Q",
        ]

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "rules", "verify", "dilema-destructivo")
        assert code == 0
        assert out == "tautología\n"

    def test_unknown_rule_is_a_usage_error(self, capsys):
        code, out, err = run(capsys, "rules", "verify", "no-such-rule")
        assert code == 2
        assert out == ""
        assert "no-such-rule" in err


class TestEntail:
    def test_valid_chain(self, capsys):
        code, out, _ = run(
            capsys,
            "entail",
            "--premise",
            "Llueve => Mojado",
            "--premise",
            "Llueve",
            "--conclusion",
            "Mojado",
        )
        assert code == 0
        assert out == "válido\n"

    def test_invalid_with_countervaluation(self, capsys):
        code, envelope, _ = run_json(
            capsys,
            "entail",
            "--premise",
            "Llueve => Mojado",
            "--premise",
            "Mojado",
            "--conclusion",
            "Llueve",
        )
        assert code == 1
        assert envelope["counterexample"] == {"Llueve": False, "Mojado": True}

    def test_no_premises_checks_tautology(self, capsys):
        code, _, _ = run(capsys, "entail", "--conclusion", "P ó ¬P")
        assert code == 0


class TestSyllogism:
    def test_list_has_ten_moods(self, capsys):
        code, out, _ = run(capsys, "syllogism", "list")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 10
        assert lines[0] == "barbara: si todo M es B y todo A es M entonces todo A es B"

    def test_barbara_is_valid(self, capsys):
        code, out, _ = run(capsys, "syllogism", "check", "barbara")
        assert code == 0
        assert out == "válido\n"

    def test_darapti_without_import(self, capsys):
        code, out, _ = run(capsys, "syllogism", "check", "darapti")
        assert code == 1
        lines = out.splitlines()
        assert lines[0] == "inválido"
        assert lines[1].startswith("contramodelo: ")
        assert "M={}" in lines[1]
        assert lines[2] == "nota: válido con import existencial (--existential-import)"

    def test_darapti_with_import(self, capsys):
        code, out, _ = run(
            capsys, "syllogism", "check", "darapti", "--existential-import"
        )
        assert code == 0
        assert out == "válido\n"

    def test_counter_model_is_machine_readable(self, capsys):
        code, envelope, _ = run_json(capsys, "syllogism", "check", "felapton")
        assert code == 1
        counter = envelope["counterexample"]
        assert counter["extensions"]["M"] == []
        assert envelope["result"]["valid_with_existential_import"] is True

    def test_custom_mood(self, capsys):
        code, out, _ = run(
            capsys, "syllogism", "custom", "all:M:B", "all:A:M", "all:A:B"
        )
        assert code == 0
        assert out == "válido\n"

    def test_custom_invalid_mood(self, capsys):
        code, out, _ = run(
            capsys, "syllogism", "custom", "all:M:B", "all:A:M", "some:A:B"
        )
        assert code == 1

    def test_malformed_custom_form_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "syllogism", "custom", "every:M:B", "all:A:M", "all:A:B")
        assert code == 2
        assert "every:M:B" in err


class TestQuant:
    def test_negate_universal_conditional(self, capsys):
        code, out, _ = run(capsys, "quant", "negate", "forall x. P(x) -> Q(x)")
        assert code == 0
        assert out == "exists x. P(x) & ~Q(x)\n"

    def test_json_includes_both_formulas(self, capsys):
        code, envelope, _ = run_json(capsys, "quant", "negate", "exists x. P(x)")
        assert code == 0
        assert envelope["result"] == {
            "formula": "exists x. P(x)",
            "negation_nnf": "forall x. ~P(x)",
        }

    def test_open_formula_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "quant", "negate", "P(x)")
        assert code == 2
        assert "closed" in err


class TestJugs:
    def test_gcd(self, capsys):
        code, out, _ = run(capsys, "jugs", "gcd", "--n", "3", "--m", "6")
        assert code == 0
        assert out == "3\n"

    def test_bezout(self, capsys):
        code, out, _ = run(capsys, "jugs", "bezout", "--n", "3", "--m", "11")
        assert code == 0
        assert out == "g=1 a=4 b=-1\n"

    def test_amounts(self, capsys):
        code, out, _ = run(
            capsys, "jugs", "amounts", "--n", "3", "--m", "6", "--limit", "12"
        )
        assert code == 0
        assert out == "3 6 9 12\n"

    def test_plan_groups_repeated_actions(self, capsys):
        code, out, _ = run(
            capsys, "jugs", "plan", "--n", "3", "--m", "11", "--target", "1"
        )
        assert code == 0
        assert out == "add 3 ×4; remove 11\n"

    def test_plan_shortest_strategy(self, capsys):
        code, out, _ = run(
            capsys,
            "jugs",
            "plan",
            "--n",
            "3",
            "--m",
            "6",
            "--target",
            "6",
            "--strategy",
            "shortest",
        )
        assert code == 0
        assert out == "add 6\n"

    def test_unachievable_plan_exits_one(self, capsys):
        code, envelope, _ = run_json(
            capsys, "jugs", "plan", "--n", "3", "--m", "6", "--target", "5"
        )
        assert code == 1
        assert envelope["status"] == "invalid"
        assert envelope["counterexample"] == {"gcd": 3}
        assert envelope["result"]["achievable"] is False

    def test_plan_json_lists_actions(self, capsys):
        code, envelope, _ = run_json(
            capsys, "jugs", "plan", "--n", "3", "--m", "11", "--target", "1"
        )
        assert code == 0
        actions = envelope["result"]["actions"]
        assert actions[:1] == [{"action": "add", "capacity": 3}]
        assert actions[-1] == {"action": "remove", "capacity": 11}
        assert envelope["result"]["length"] == 5

    def test_rejects_nonpositive_capacity(self, capsys):
        code, _, err = run(capsys, "jugs", "gcd", "--n", "0", "--m", "6")
        assert code == 2
        assert err != ""


class TestErrorsAndDeterminism:
    def test_parse_error_reports_span_on_stderr(self, capsys):
        code, out, err = run(capsys, "classify", "P y ó Q")
        assert code == 2
        assert out == ""
        assert "UnknownToken" in err
        assert "4..5" in err

    def test_missing_subcommand_is_a_usage_error(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_format_flag_works_on_both_sides(self, capsys):
        code_before, out_before, _ = run(capsys, "--format", "json", "classify", "P")
        code_after, out_after, _ = run(capsys, "classify", "P", "--format", "json")
        assert code_before == code_after
        assert out_before == out_after

    @pytest.mark.parametrize(
        "argv",
        [
            ["table", "P ó Q"],
            ["classify", "P -> Q", "--format", "json"],
            ["syllogism", "check", "darapti", "--format", "json"],
            ["jugs", "plan", "--n", "7", "--m", "5", "--target", "4"],
            ["rules", "list", "--format", "json"],
        ],
    )
    def test_identical_argv_gives_identical_bytes(self, capsys, argv):
        first_code, first_out, _ = run(capsys, *argv)
        second_code, second_out, _ = run(capsys, *argv)
        assert first_code == second_code
        assert first_out == second_out

    def test_json_is_a_single_line_object(self, capsys):
        _, out, _ = run(capsys, "classify", "P", "--format", "json")
        assert out.count("\n") == 1
        json.loads(out)

    def test_too_many_atoms_is_a_usage_error(self, capsys):
        wide = " ó ".join(f"A{i}" for i in range(1, 27))
        code, _, err = run(capsys, "classify", wide)
        assert code == 2
        assert "limit" in err
