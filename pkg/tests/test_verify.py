"""Verifier reports, mutation behaviour, and the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from qident import appell, partitions, verify
from qident.cli import main
from qident.series import BivariateSeries


class TestReports:
    def test_pass_reports(self):
        assert verify.verify_overpartition(2, 10).status == "pass"
        assert verify.verify_overpartition(5, 0).status == "pass"
        assert verify.verify_schur(12).status == "pass"
        assert verify.verify_corollary(2, 1, 40, 15).status == "pass"

    def test_andrews_and_dual_aliases(self):
        rep = verify.verify_andrews(2, 30, 12)
        assert rep.identity == "andrews" and rep.status == "pass"
        assert any("thm12" in note for note in rep.notes)
        rep = verify.verify_dual(2, 30, 12)
        assert rep.identity == "dual" and rep.status == "pass"
        assert any("thm13" in note for note in rep.notes)

    def test_middle_i_has_no_theorem_phrasing(self):
        rep = verify.verify_corollary(4, 2, 30, 12)
        assert rep.status == "pass"
        assert not any("thm1" in note for note in rep.notes)

    def test_machinery_report(self):
        rep = verify.verify_machinery(2, 24, 28, closed_product_j=6, enum_j=5, enum_n=10)
        assert rep.status == "pass"
        assert {s.identity for s in rep.subreports} == {
            "machinery/functional-equation",
            "machinery/closed-product",
            "machinery/appell-limit",
            "machinery/bounded-enumeration",
        }

    def test_machinery_aborts_without_stabilization(self):
        rep = verify.verify_machinery(3, 24, 20, closed_product_j=4, enum_j=3, enum_n=8)
        sub = {s.identity: s for s in rep.subreports}
        assert sub["machinery/appell-limit"].status == "aborted"
        assert any("not stabilized" in n for n in sub["machinery/appell-limit"].notes)
        assert rep.status == "aborted"
        assert not rep.passed

    def test_enumeration_range_refused(self):
        rep = verify.verify_overpartition(2, verify.ENUM_HARD_LIMIT + 1)
        assert rep.status == "aborted"
        rep = verify.verify_schur(verify.ENUM_HARD_LIMIT + 1)
        assert rep.status == "aborted"

    def test_golden_example(self):
        rep = verify.golden_example_n10()
        assert rep.status == "pass"
        assert any("C_{0,1}" in note for note in rep.notes)

    def test_deterministic_apart_from_timing(self):
        a = verify.verify_corollary(3, 1, 30, 12).to_dict()
        b = verify.verify_corollary(3, 1, 30, 12).to_dict()
        a["timing"] = b["timing"] = 0.0
        assert a == b

    def test_json_roundtrip(self):
        rep = verify.verify_machinery(2, 16, 20, closed_product_j=4, enum_j=3, enum_n=8)
        payload = json.loads(json.dumps(rep.to_dict()))
        assert payload["schema_version"] == verify.SCHEMA_VERSION
        assert payload["status"] == "pass"
        assert len(payload["subreports"]) == 4

    def test_verify_all_smoke(self):
        reports = verify.verify_all(k_max=2)
        assert all(r.passed for r in reports)
        assert {r.identity for r in reports} == {
            "golden-n10",
            "schur",
            "overpartition",
            "corollary",
            "machinery",
        }


class TestMutations:
    def test_overpartition_off_by_one_product(self, monkeypatch):
        real = appell.theorem_product

        def shifted(k, q_order, a_order=None):
            good = real(k, q_order, a_order)
            # push every marked term up one power of q
            rows = [list(good.coeffs[0])]
            for m in range(1, good.a_order + 1):
                rows.append([0] + list(good.coeffs[m][:-1]))
            return BivariateSeries(tuple(tuple(r) for r in rows))

        monkeypatch.setattr(appell, "theorem_product", shifted)
        rep = verify.verify_overpartition(2, 10)
        assert rep.status == "fail"
        assert (rep.witness["n"], rep.witness["m"]) == (1, 1)
        assert rep.witness["enumeration_count"] == 1
        assert rep.witness["overpartitions"] == ["1~"]

    def test_corollary_perturbed_series(self, monkeypatch):
        real = appell.congruence_product_series

        def perturbed(k, i, q_order):
            s = real(k, i, q_order)
            c = list(s.coeffs)
            if len(c) > 7:
                c[7] += 1
            return type(s)(tuple(c))

        monkeypatch.setattr(appell, "congruence_product_series", perturbed)
        rep = verify.verify_corollary(2, 0, 30, 12)
        assert rep.status == "fail"
        assert rep.witness["n"] == 7

    def test_schur_perturbed_table(self, monkeypatch):
        real = partitions.count_schur_product_table

        def perturbed(n_max):
            t = real(n_max)
            if n_max >= 5:
                t[5] += 1
            return t

        monkeypatch.setattr(partitions, "count_schur_product_table", perturbed)
        rep = verify.verify_schur(12)
        assert rep.status == "fail"
        assert rep.witness["n"] == 5
        assert rep.witness["product_count"] == rep.witness["gap_count"] + 1


class TestCli:
    def run(self, *args):
        return CliRunner().invoke(main, list(args))

    def test_golden(self):
        result = self.run("golden-n10")
        assert result.exit_code == 0
        assert "PASS" in result.output

    def test_verify_schur(self):
        result = self.run("verify", "schur", "--n-max", "12")
        assert result.exit_code == 0

    def test_verify_overpartition_json(self):
        result = self.run("--format", "json", "verify", "overpartition", "--k", "2", "--n-max", "8")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["status"] == "pass"

    def test_verify_andrews_dual(self):
        assert self.run("verify", "andrews", "--k", "2", "--n-max", "30", "--enum-limit", "10").exit_code == 0
        assert self.run("verify", "dual", "--k", "2", "--n-max", "30", "--enum-limit", "10").exit_code == 0

    def test_verify_machinery(self):
        result = self.run("verify", "machinery", "--k", "2", "--q-order", "16", "--j-max", "20")
        assert result.exit_code == 0

    def test_nonzero_exit_on_abort(self):
        result = self.run("verify", "schur", "--n-max", str(verify.ENUM_HARD_LIMIT + 1))
        assert result.exit_code == 1

    def test_coeffs_product_csv(self):
        result = self.run("coeffs", "--side", "product", "--k", "2", "--i", "0",
                          "--n-max", "10", "--format", "csv")
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0] == "n,coefficient"
        assert lines[-1] == "10,10"

    def test_coeffs_overpartition_product_json(self):
        result = self.run("coeffs", "--side", "overpartition-product", "--k", "2",
                          "--n-max", "5", "--format", "json")
        assert result.exit_code == 0
        rows = {(r["m"], r["n"]): r["coefficient"] for r in json.loads(result.output)}
        assert rows[(1, 1)] == 1

    def test_coeffs_sum_matches_product(self):
        out_sum = self.run("coeffs", "--side", "sum", "--k", "2", "--i", "0", "--n-max", "12")
        out_prod = self.run("coeffs", "--side", "product", "--k", "2", "--i", "0", "--n-max", "12")
        assert out_sum.output == out_prod.output

    def test_list_sides(self):
        result = self.run("list", "--side", "B", "--k", "2", "--i", "0", "--n", "10")
        assert result.exit_code == 0
        assert "total: 10" in result.output
        assert "9+1" in result.output
        result = self.run("list", "--side", "C", "--k", "2", "--i", "0", "--n", "10")
        assert "total: 10" in result.output
        result = self.run("list", "--side", "D", "--k", "2", "--i", "0", "--n", "2")
        assert "total: 3" in result.output

    def test_backend_command(self):
        result = self.run("backend")
        assert result.output.strip() in ("cython", "python")
