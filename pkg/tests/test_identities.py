import csv
import io
import json
import random
from fractions import Fraction

import pytest

from umbra import families as fam
from umbra import identities as idt
from umbra.errors import BadParameter
from umbra.poly import Poly
from umbra.scalar import LAMBDA

L = LAMBDA
x = Poly.x()


def test_registry_contents():
    ids = [s.id for s in idt.registry()]
    for k in (1, 2, 3, 4, 5, 6, 8, 9, 10):
        assert f"T{k}" in ids
    assert "T7" not in ids
    assert len(ids) == len(set(ids))


def test_default_grids_nonempty_and_probe():
    for spec in idt.registry():
        assert spec.grid
        expected = idt.PROBE if spec.id == "E43" else idt.MUST_HOLD
        assert spec.expectation == expected


def test_t4_spot_value():
    # S1(2,1) = -1 = C(1,0) B_1^(2)
    assert fam.stirling1(2, 1) == -1
    assert fam.bernoulli_number(1, 2) == -1
    lhs, rhs = idt.instance_sides("T4", {"n": 2, "l": 0})
    assert lhs == rhs == [Poly.const(-1)]
    report = idt.verify(idt.make_spec("T4", n_max=5))
    assert all(i.status == "pass" for i in report.instances)
    assert len(report.instances) == sum(range(1, 6))


def test_t1_degenerate_case():
    lhs, rhs = idt.instance_sides("T1", {"n": 1, "a": 1})
    assert lhs == rhs == [Poly.const(1)]
    assert idt.run_instance("T1", {"n": 1, "a": 1}).status == "pass"


def test_t2_both_normalisations():
    for form in ("reduced", "unreduced"):
        lhs, rhs = idt.instance_sides("T2", {"n": 3, "a": 2, "form": form})
        assert lhs == rhs


def test_e43_probe_witness():
    result = idt.run_instance("E43", {"n": 1})
    assert result.status == "fail"
    expected = (x * (1 - L) - L) - fam.changhee2(1)
    assert result.witness == expected.render()
    report = idt.verify(idt.make_spec("E43"))
    assert not report.failed
    assert idt.exit_code([report]) == 0


def test_wrong_variant_fails():
    # the same comparison machinery catches a perturbed side
    lhs, rhs = idt.instance_sides("E41", {"n": 3})
    assert idt._witness(lhs, [rhs[0] + 1]) == "1"
    assert idt._witness(lhs, rhs) is None


def test_bad_parameters():
    with pytest.raises(BadParameter):
        idt.instance_sides("T1", {"n": 1, "a": 0})
    with pytest.raises(BadParameter):
        idt.make_spec("T9", b=[0])
    with pytest.raises(BadParameter):
        idt.make_spec("T7")
    with pytest.raises(BadParameter):
        idt.instance_sides("E47", {"n": 2, "mu": 0})
    with pytest.raises(BadParameter):
        idt.IdentitySpec("T4", idt.MUST_HOLD, ())


def test_range_too_large_is_skipped():
    spec = idt.make_spec("T10", n_max=4)
    report = idt.verify(spec)
    skipped = [i for i in report.instances if i.status == "skipped"]
    assert skipped and all(i.params["n"] == 4 for i in skipped)
    assert all(i.witness.startswith("RangeTooLarge") for i in skipped)
    assert not report.failed
    # raising the cap lets them run
    report = idt.verify(spec, caps={"T10": 4})
    assert all(i.status == "pass" for i in report.instances)


def test_trunc_guard_env(monkeypatch):
    monkeypatch.setenv("UMBRA_TRUNC_GUARD", "7")
    assert idt.trunc_guard() == 7
    lhs, rhs = idt.instance_sides("T8", {"n": 2})
    assert lhs == rhs
    monkeypatch.delenv("UMBRA_TRUNC_GUARD")
    assert idt.trunc_guard(4) == 4


def _strip_ms(reports):
    return [idt.report_dict(r, timing=False) for r in reports]


def test_parallel_matches_serial():
    specs = [idt.make_spec(i) for i in ("T3", "T4", "E41", "E43", "T9")]
    serial = idt.verify_many(specs, jobs=1)
    parallel = idt.verify_many(specs, jobs=2)
    assert _strip_ms(serial) == _strip_ms(parallel)
    single = idt.verify(specs[0], jobs=2)
    assert _strip_ms([single]) == _strip_ms(serial[:1])


def test_order_independence():
    spec = idt.make_spec("T3")
    points = list(spec.grid)
    random.Random(7).shuffle(points)
    by_params = {json.dumps(p, sort_keys=True): idt.run_instance("T3", p) for p in points}
    report = idt.verify(spec)
    for inst in report.instances:
        other = by_params[json.dumps(inst.params, sort_keys=True)]
        assert (other.status, other.witness) == (inst.status, inst.witness)


def test_render_formats():
    passing = idt.verify(idt.make_spec("E41", n_max=3))
    probe = idt.verify(idt.make_spec("E43", n_max=2))

    doc = json.loads(idt.report_render(passing))
    assert doc["id"] == "E41" and doc["expectation"] == "must_hold"
    assert {i["status"] for i in doc["instances"]} == {"pass"}
    assert all("ms" in i for i in doc["instances"])

    doc = json.loads(idt.report_render(probe))
    assert doc["instances"][0]["witness"]

    rows = list(csv.DictReader(io.StringIO(idt.render_reports([passing, probe], "csv"))))
    assert len(rows) == len(passing.instances) + len(probe.instances)
    assert rows[-1]["status"] == "fail"

    text = idt.render_reports([passing, probe], "text")
    assert text.startswith("E41 [must_hold] PASS")
    assert "E43 [probe] PROBE" in text
    with pytest.raises(BadParameter):
        idt.render_reports([passing], "xml")


def test_t9_rational_b():
    spec = idt.make_spec("T9", n_max=3, a_max=1, b=[Fraction(-2, 3)])
    report = idt.verify(spec)
    assert all(i.status == "pass" for i in report.instances)


def test_full_registry_passes():
    reports = idt.verify_many(idt.registry())
    assert idt.exit_code(reports) == 0
    for r in reports:
        if r.expectation == idt.MUST_HOLD:
            assert r.counts()["fail"] == 0
