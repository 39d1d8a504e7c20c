import json

import pytest

from slopecert.braid import BraidWord
from slopecert.certify import (
    REASON_DIRECT,
    REASON_GENUS,
    batch,
    certify_slope,
    parse_slope,
)
from slopecert.cli import main
from slopecert.poly import LaurentPoly


class TestCertifySlope:
    def test_slope_2_1(self):
        cert = certify_slope(2, 1)
        assert (cert.params.r, cert.params.s, cert.params.t) == (3, 2, 4)
        assert cert.braid == BraidWord.parse("2: 1 1 1")
        assert cert.genus == 1
        assert cert.gamma_cr == LaurentPoly({1: -2, 2: -1})
        assert cert.gamma_cr_is_unit is False
        assert cert.diff_nonzero_reason == REASON_DIRECT

    def test_slope_3_2(self):
        cert = certify_slope(3, 2)
        assert (cert.params.r, cert.params.s, cert.params.t) == (4, 3, 21)
        assert cert.braid.strands == 6
        assert len(cert.braid.letters) == 37
        assert cert.genus == 16
        assert cert.diff_nonzero_reason == REASON_GENUS
        assert cert.gamma_cr is None
        assert cert.to_obj()["gamma_cr_is_unit"] == "not-computed"

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="other constructions"):
            certify_slope(1, 5)
        with pytest.raises(ValueError, match="other constructions"):
            certify_slope(0, 1)
        with pytest.raises(ValueError, match="lowest terms"):
            certify_slope(4, 2)
        with pytest.raises(ValueError):
            certify_slope(3, -2)

    def test_internal_identities_stored(self):
        cert = certify_slope(5, 2)
        assert cert.kb - cert.kg == cert.diff
        if cert.diff_nonzero_reason == REASON_GENUS:
            assert cert.genus >= 1
        else:
            assert cert.gamma_cr_is_unit is False

    def test_verify_oracle_route(self):
        cert = certify_slope(2, 1, verify_oracle=True)
        assert cert.diff_nonzero_reason == REASON_DIRECT

    def test_gamma_budget_gates_direct_route(self):
        cert = certify_slope(2, 1, gamma_budget=0)
        assert cert.gamma_cr is None
        assert cert.diff_nonzero_reason == REASON_GENUS
        assert cert.genus >= 1

    def test_s_start_gives_alternate_certificate(self):
        cert = certify_slope(2, 1, s_start=3, verify_oracle=True)
        assert (cert.params.r, cert.params.s, cert.params.t) == (5, 3, 12)
        assert cert.genus == 4
        assert cert.gamma_cr == LaurentPoly({4: 7, 5: 8, 6: 2})

    def test_larger_slopes_use_genus_route(self):
        for p, q in ((7, 5), (11, 4)):
            cert = certify_slope(p, q)
            assert cert.diff_nonzero_reason == REASON_GENUS
            assert cert.genus >= 1
            assert len(cert.braid.letters) > 100

    def test_determinism(self):
        a = certify_slope(3, 1).to_json()
        b = certify_slope(3, 1).to_json()
        assert a == b
        obj = json.loads(a)
        assert obj["schema_version"] == 1
        assert obj["slope"] == {"p": 3, "q": 1}

    def test_json_fields(self):
        obj = certify_slope(2, 1).to_obj()
        assert obj["braid"] == "2: 1 1 1"
        assert obj["params"] == {"p": 2, "q": 1, "r": 3, "s": 2, "t": 4}
        assert obj["induced_slopes"] == [[2, 1], [4, 1], [20, 1]]
        assert obj["gamma_cr"] == [[1, -2], [2, -1]]
        assert obj["diff_nonzero_reason"] == REASON_DIRECT
        assert obj["genus"] == 1
        # every polynomial row is [h, c, pairs]
        for row in obj["kb"]:
            assert len(row) == 3


class TestParseSlope:
    def test_forms(self):
        assert parse_slope("3/2") == (3, 2)
        assert parse_slope("7") == (7, 1)
        assert parse_slope("-3/2") == (-3, 2)
        assert parse_slope("3/-2") == (-3, 2)

    def test_rejects(self):
        with pytest.raises(ValueError):
            parse_slope("3/0")
        with pytest.raises(ValueError):
            parse_slope("")


class TestBatch:
    def test_three_good_slopes(self):
        report = batch(["2/1", "3/1", "5/1"])
        assert report.all_ok
        assert len(report.entries) == 3
        assert report.summary_lines()[-1] == "3/3 slopes certified"

    def test_empty(self):
        report = batch([])
        assert report.all_ok
        assert report.summary_lines() == ["0/0 slopes certified"]

    def test_rejection_recorded_not_fatal(self):
        report = batch(["1/1", "2/1"])
        assert not report.all_ok
        assert report.entries[0].error is not None
        assert report.entries[1].ok

    def test_tuple_input(self):
        report = batch([(2, 1)])
        assert report.all_ok


class TestCli:
    def test_certify_json(self, tmp_path, capsys):
        out = tmp_path / "cert.json"
        code = main(["certify", "--slope", "2/1", "--json", str(out), "--verify-oracle"])
        assert code == 0
        obj = json.loads(out.read_text())
        assert obj["slope"] == {"p": 2, "q": 1}
        assert obj["mirror_of"] is None
        assert "genus 1" in capsys.readouterr().out

    def test_negative_slope_mirrors(self, tmp_path, capsys):
        out = tmp_path / "cert.json"
        code = main(["certify", "--slope=-2/1", "--json", str(out)])
        assert code == 0
        assert json.loads(out.read_text())["mirror_of"] == "-2/1"
        assert "mirror" in capsys.readouterr().out

    def test_out_of_range_slope_fails(self, capsys):
        code = main(["certify", "--slope", "1/2"])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_batch_exit_codes(self, tmp_path, capsys):
        slopes = tmp_path / "slopes.txt"
        slopes.write_text("# demo slopes\n2/1\n5/2\n")
        assert main(["batch", "--slopes", str(slopes)]) == 0
        slopes.write_text("2/1\n1/1\n")
        assert main(["batch", "--slopes", str(slopes)]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out

    def test_batch_json_dir(self, tmp_path):
        slopes = tmp_path / "slopes.txt"
        slopes.write_text("2/1\n")
        outdir = tmp_path / "certs"
        assert main(["batch", "--slopes", str(slopes), "--json-dir", str(outdir)]) == 0
        assert (outdir / "certificate_2_1.json").exists()
