import io
import sys

import pytest

from knotconc.cli import (
    CliError,
    load_facts,
    main,
    parse_expression,
    parse_range,
    resolve_base,
)
from knotconc.concordance import Cable, Infect, Sum, Twist, Unknot


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpressionGrammar:
    def test_atoms(self):
        assert parse_expression("unknot") == Unknot()
        assert parse_expression("twist(3)") == Twist(3)

    def test_nested(self):
        e = parse_expression('cable(infect(Q(3), twist(2)), 2)')
        assert isinstance(e, Cable) and e.p == 2
        assert isinstance(e.inner, Infect)
        assert e.inner.op.op_name == "Q^3"

    def test_sum_and_neg(self):
        e = parse_expression("sum(twist(1), neg(twist(1)))")
        assert isinstance(e, Sum) and len(e.parts) == 2

    def test_infect_r(self):
        e = parse_expression('infect(R(2, J="neg-trefoils-3"), twist(4))')
        assert isinstance(e, Infect)
        assert e.op.op_name == "R^2,neg-trefoils-3"

    def test_base_names(self):
        assert parse_expression('base("wh-double")').label.startswith("Wh+")
        with pytest.raises(CliError):
            resolve_base("mystery")

    def test_errors(self):
        with pytest.raises(CliError):
            parse_expression("twist(")
        with pytest.raises(CliError):
            parse_expression("twist(2) unknot")
        with pytest.raises(CliError):
            parse_expression("cable(unknot, )")

    def test_range(self):
        assert parse_range("1..4") == [1, 2, 3, 4]
        assert parse_range("2,5,7") == [2, 5, 7]
        with pytest.raises(CliError):
            parse_range("4..1")


class TestFactsFile:
    def test_load(self, tmp_path):
        f = tmp_path / "facts.txt"
        f.write_text('# comment\nFACT "rho(M(Q^3), phi_<0>) != 0" CITE "thesis"\n')
        facts = load_facts(str(f))
        assert "rho(M(Q^3), phi_<0>) != 0" in facts

    def test_bad_line(self, tmp_path):
        f = tmp_path / "facts.txt"
        f.write_text("FACT missing quotes\n")
        with pytest.raises(CliError):
            load_facts(str(f))


class TestCommands:
    def test_invariants_twist(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "twist(2)")
        assert code == 0
        assert "arf: 0" in out
        assert "rho0-interval: [" in out
        assert "2*t^2 - 3*t + 2" in out

    def test_invariants_cable_infect(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "cable(infect(Q(3), twist(2)), 2)")
        assert code == 0
        # Delta = Delta_{Q^3}(t^2) = 12t^4 - 25t^2 + 12
        assert "12*t^4 - 25*t^2 + 12" in out

    def test_invariants_unknot(self, capsys):
        code, out, _ = run_cli(capsys, "invariants", "unknot")
        assert code == 0
        assert "alexander: 1" in out
        assert "tau: exact 0" in out

    def test_invariants_matrix_file(self, capsys, tmp_path):
        mf = tmp_path / "trefoil.mat"
        mf.write_text("g=1\n-1 1\n0 -1\n")
        code, out, _ = run_cli(capsys, "invariants", str(mf))
        assert code == 0
        assert "t^2 - t + 1" in out

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "invariants", "twist(nope)")
        assert code == 2
        assert "error" in err

    def test_prime(self, capsys):
        code, out, _ = run_cli(capsys, "prime", "8*t^3 - 9")
        assert code == 0 and "status: irreducible" in out
        code, out, _ = run_cli(capsys, "prime", "2*t^2 - 5*t + 2")
        assert "status: reducible" in out and "witness-factor: t - 2" in out

    def test_strongly_prime(self, capsys):
        code, out, _ = run_cli(capsys, "strongly-prime", "8*t - 9")
        assert code == 0 and "strongly-prime" in out
        code, out, _ = run_cli(capsys, "strongly-prime", "t^2 + t + 1")
        assert code == 0 and "not-strongly-prime" in out

    def test_strongly_coprime(self, capsys):
        code, out, _ = run_cli(capsys, "strongly-coprime", "t - 2", "2*t - 3")
        assert code == 0 and "status: strongly-coprime" in out
        code, out, _ = run_cli(capsys, "strongly-coprime", "t - 2", "t - 4")
        assert code == 0 and "witness-exponents: k=1 l=2" in out

    def test_catalan(self, capsys):
        code, out, _ = run_cli(capsys, "catalan", "--x-max", "50", "--y-max", "50",
                               "--a-max", "6", "--b-max", "6")
        assert code == 0
        assert "x=3 a=2 y=2 b=3" in out

    def test_legendrian_builtin(self, capsys):
        code, out, _ = run_cli(capsys, "legendrian", "--builtin", "twist-front", "--j", "5")
        assert code == 0
        assert "tb: 1" in out and "rot: 0" in out

    def test_legendrian_pipeline(self, capsys):
        code, out, _ = run_cli(capsys, "legendrian", "--builtin", "q-front", "--k", "3",
                               "--companion-tb", "0", "--iterate", "2", "--genus", "1")
        assert code == 0
        assert "tau: exact 1" in out

    def test_legendrian_file(self, capsys, tmp_path):
        ff = tmp_path / "unknot.front"
        ff.write_text("L1 R1  # max tb unknot\n")
        code, out, _ = run_cli(capsys, "legendrian", str(ff))
        assert code == 0
        assert "tb: -1" in out and "rot: 0" in out

    def test_robust_q_with_facts(self, capsys, tmp_path):
        facts = tmp_path / "facts.txt"
        facts.write_text('FACT "rho(M(Q^3), phi_<0>) != 0" CITE "first-order signature estimate"\n')
        code, out, _ = run_cli(capsys, "robust", "--op", "Q", "--k", "3",
                               "--p", "1..5", "--facts", str(facts))
        assert code == 0
        assert out.count("robust doubling operator") == 5

    def test_robust_without_facts_refuses(self, capsys):
        code, out, _ = run_cli(capsys, "robust", "--op", "Q", "--k", "3", "--p", "1")
        assert code == 1
        assert "withheld" in out

    def test_independence(self, capsys, tmp_path):
        facts = tmp_path / "facts.txt"
        facts.write_text(
            'FACT "-rho0(3-left-trefoils) notin FOS(R^1,U)" CITE "avoidance"\n'
            'FACT "no nontrivial rational combination of rho0(T_2, T_4) '
            'lies in span FOS(R^1,U)" CITE "twist-knot independence"\n')
        code, out, _ = run_cli(capsys, "independence", "--family", "thmA",
                               "--k", "1", "--n", "2", "--p", "1..3", "--m", "2",
                               "--facts", str(facts))
        assert code == 0
        assert "strongly coprime" in out
        assert "resultant witness" in out

    def test_filtration(self, capsys):
        code, out, _ = run_cli(
            capsys, "filtration", 'infect(R(1, J="neg-trefoils-3"), twist(4))')
        assert code == 0
        assert "F:1" in out and "B:0" in out

    def test_kauffman(self, capsys):
        code, out, _ = run_cli(capsys, "kauffman")
        assert code == 0
        assert "Arf(d') = 1" in out
        assert "tau(d) = -1" in out
        assert "topologically-slice(d): yes" in out

    def test_profile_dump(self, capsys):
        code, out, _ = run_cli(capsys, "profile-dump", "twist(2)")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "arc-start\tarc-end\tlevel"
        assert len(lines) == 3
        assert lines[-1].endswith("-2")

    def test_determinism(self, capsys):
        _, out1, _ = run_cli(capsys, "invariants", "sum(twist(1), twist(2))")
        _, out2, _ = run_cli(capsys, "invariants", "sum(twist(1), twist(2))")
        assert out1 == out2
