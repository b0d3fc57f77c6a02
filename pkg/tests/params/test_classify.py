"""Tests for parameter reports and family verdicts."""

import pytest

from degencount.config import EngineConfig
from degencount.core.generators import (
    all_graphs,
    all_graphs_up_to,
    biclique,
    clique,
    cycle,
    matching,
    path,
)
from degencount.params.classify import HOM_HARDNESS, FamilyDeclaration, ParamReport, classify


class TestClassify:
    def test_clique(self):
        report = classify(clique(4))
        assert report.imn == 1
        assert report.alpha == 1
        assert report.verdicts["sub_exponent"] == "n^1"
        assert report.verdicts["indsub_exponent"] == "n^1"

    def test_matching(self):
        report = classify(matching(3))
        assert report.imn == 3
        assert report.verdicts["sub_exponent"] == "n^3"

    def test_biclique(self):
        """Exact induced counting needs n^alpha but the approximate route only sees imn = 1."""
        report = classify(biclique(3, 3))
        assert report.verdicts["indsub_exponent"] == "n^3"
        assert report.imn == 1
        assert report.verdicts["approx_indsub_exponent"] == "n^2"
        family = FamilyDeclaration("bicliques", frozenset({"imn"}))
        verdicts = classify(biclique(3, 3), family=family).verdicts
        assert verdicts["family_indsub"] == "#W[1]-hard"
        assert verdicts["family_approx_indsub"] == "FPTRAS"

    def test_hom_hardness_is_open(self):
        assert classify(cycle(4)).verdicts["hom_hardness"] == HOM_HARDNESS

    def test_taus_beyond_bound(self):
        report = classify(path(6), EngineConfig(dtw_vertex_bound=5))
        assert report.tau1 is None
        assert report.tau3 is None
        assert report.verdicts["approx_sub_exponent"] == "unknown"
        assert report.check().ok

    def test_no_family_verdicts_without_declaration(self):
        assert not any(key.startswith("family") for key in classify(path(3)).verdicts)

    def test_no_tractability_verdict_without_declaration(self):
        verdicts = classify(matching(3), with_taus=False).verdicts
        assert not any("tractable" in key or key.endswith("_indsub") for key in verdicts)
        assert verdicts["approx_indsub_exponent"] == "n^4"

    def test_rows(self):
        rows = dict(classify(path(3), with_taus=False).as_rows())
        assert rows["vertices"] == 3
        assert rows["tau1"] == "not computed"

    def test_reports_are_consistent(self):
        for g in all_graphs_up_to(4):
            result = classify(g).check()
            assert result.ok, result.message


@pytest.mark.slow
class TestTauBound:
    def test_tau2_below_induced_matching(self):
        for k in range(1, 7):
            for g in all_graphs(k):
                report = classify(g)
                assert report.check().ok


class TestParamReportCheck:
    def test_imn_too_large(self):
        report = ParamReport(n=4, edges=2, imn=3, alpha=2, vc=2)
        assert report.check().condition == "imn"

    def test_gallai(self):
        report = ParamReport(n=4, edges=2, imn=1, alpha=2, vc=1)
        assert report.check().condition == "gallai"

    def test_tau_order(self):
        report = ParamReport(n=4, edges=2, imn=1, alpha=2, vc=2, tau1=2, tau2=1)
        assert report.check().condition == "tau"

    def test_tau2_bound(self):
        report = ParamReport(n=6, edges=3, imn=1, alpha=3, vc=3, tau1=1, tau2=2, tau3=2)
        assert report.check().condition == "tau2"


class TestFamilyDeclaration:
    def test_cliques(self):
        verdicts = FamilyDeclaration("cliques", frozenset({"imn", "alpha"})).verdicts()
        assert verdicts["sub"] == "FPT"
        assert verdicts["indsub"] == "FPT"
        assert verdicts["hom"] == "FPT"

    def test_bicliques(self):
        verdicts = FamilyDeclaration("bicliques", frozenset({"imn"})).verdicts()
        assert verdicts["sub"] == "FPT"
        assert verdicts["indsub"] == "#W[1]-hard"
        assert verdicts["approx_indsub"] == "FPTRAS"

    def test_bounded_tau_only(self):
        verdicts = FamilyDeclaration("low tau", frozenset({"tau1"})).verdicts()
        assert verdicts["sub"] == "#W[1]-hard"
        assert verdicts["approx_sub"] == "FPTRAS"
        assert verdicts["approx_indsub"] == "no FPTRAS known"

    def test_nothing_bounded(self):
        verdicts = FamilyDeclaration("all graphs").verdicts()
        assert verdicts["hom"] == HOM_HARDNESS

    def test_unknown_parameter(self):
        with pytest.raises(ValueError):
            FamilyDeclaration("bad", frozenset({"treewidth"}))

    def test_verdicts_in_report(self):
        family = FamilyDeclaration("matchings", frozenset({"alpha"}))
        report = classify(matching(2), family=family)
        assert report.verdicts["family"] == "matchings"
        assert report.verdicts["family_indsub"] == "FPT"
        assert report.verdicts["family_approx_indsub"] == "FPTRAS"
