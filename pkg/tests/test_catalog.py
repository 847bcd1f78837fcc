"""The example catalog: entries, checklists and report shape."""

import pytest
from gmpy2 import mpq

from mopdarboux.catalog import (
    FAIL,
    PASS,
    RECORDED,
    UnknownEntry,
    catalog_list,
    get_entry,
    run_verification,
)

from catalog_runs import first, samples
from schema_check import validate

ENTRY_IDS = [
    "laguerre-4",
    "hermite-I",
    "hermite-II",
    "threebythree",
    "lag-directsum-nonstrong",
    "beyond-1",
    "beyond-2",
    "hermite-III",
]

# checks whose computed result disagrees with the printed closed form; each
# one is checked for internal consistency before it is recorded
RECORDED_CHECKS = {
    "laguerre-4": {"adjoint of V T"},
    "hermite-I": {"relation Lambda(D5)", "Z3 printed form"},
    "threebythree": {"factorization", "odd-order member", "orthogonal sequence"},
    "hermite-III": {"not verified"},
}


def test_entry_ids():
    assert [e.id for e in catalog_list()] == ENTRY_IDS


def test_only_the_mixed_kernel_entry_is_a_stub():
    assert [e.id for e in catalog_list() if e.stub] == ["hermite-III"]


def test_every_entry_has_three_samples():
    for e in catalog_list():
        if not e.stub:
            assert len(e.samples) == 3
            assert all(set(dict(s)) == set(e.parameters) for s in e.samples)


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        get_entry("nosuch")
    with pytest.raises(UnknownEntry):
        run_verification("nosuch")


@pytest.mark.parametrize("entry,params", [
    ("hermite-I", {"a": 0}),
    ("threebythree", {"b": "0"}),
    ("laguerre-4", {"alpha": -1}),
    ("laguerre-4", {"alpha": "-3/2"}),
    ("hermite-II", {"alpha": 1}),
])
def test_invalid_parameters(entry, params):
    with pytest.raises(ValueError):
        run_verification(entry, params, cap=4)


def test_string_parameters_are_parsed():
    r = run_verification("beyond-1", {"a": "3/2"}, cap=6)
    assert r.params["a"] == mpq(3, 2) and r.passed


@pytest.mark.parametrize("entry", ENTRY_IDS)
def test_all_samples_pass(entry):
    for report in samples(entry):
        assert report.status == PASS, [c.name for c in report.checks if c.status == FAIL]


@pytest.mark.parametrize("entry", ENTRY_IDS)
def test_recorded_discrepancies_are_exactly_the_known_ones(entry):
    for report in samples(entry):
        got = {c.name for c in report.checks if c.status == RECORDED}
        assert got == RECORDED_CHECKS.get(entry, set())


@pytest.mark.parametrize("entry", ENTRY_IDS)
def test_report_validates(entry):
    reports = samples(entry)
    wrapped = {"entry": entry, "status": PASS, "samples": [r.to_json() for r in reports]}
    validate("report", wrapped)
    wrapped["samples"] = [r.to_json(timings=False) for r in reports]
    validate("report", wrapped)


def test_report_json_is_deterministic():
    a = run_verification("hermite-II", {"a": 2}, cap=8).to_json(timings=False)
    b = run_verification("hermite-II", {"a": 2}, cap=8).to_json(timings=False)
    assert a == b and "timings" not in a


def test_laguerre_relations_pass():
    r = first("laguerre-4")
    assert r.check("relation D4 = -D1 - D2").status == PASS
    assert r.check("relation D5 = i(D3 D1 - D1 D3)").status == PASS


def test_laguerre_adjoint_record_keeps_the_moment_test():
    # the computed adjoint passes the moment test, the printed one does not
    d = first("laguerre-4").check("adjoint of V T").detail
    assert d["printed_passes_moment_test"] is False


def test_hermite_one_D5_coefficient_recorded():
    d = first("hermite-I").check("relation Lambda(D5)").detail
    assert d == {"holds_with_coefficient": "+i/4", "printed_coefficient": "-i/4"}


def test_hermite_one_printed_Z3_fails_to_commute_with_D2():
    d = first("hermite-I").check("Z3 printed form").detail
    assert d["printed_commutes_with_D2"] is False


def test_hermite_two_relation_D3():
    assert first("hermite-II").check("relation D3").status == PASS


def test_three_by_three_odd_witness():
    d = first("threebythree").check("odd-order member").detail
    assert d["E21_order"] % 2 == 1 and d["E22_order"] == 4


def test_three_by_three_is_plain_only():
    c = first("threebythree").check("plain certificate")
    assert c.status == PASS
    assert c.detail["flags"]["V_leading_nonsingular"] is False


def test_beyond_two_has_no_low_order_operators():
    r = first("beyond-2")
    for name in ("order-6 operator member", "order-6 operator symmetric",
                 "no second-order operator", "no fourth-order operator"):
        assert r.check(name).status == PASS


def test_stub_is_reported_as_not_verified():
    r = first("hermite-III")
    assert [c.name for c in r.checks] == ["not verified"]
    assert r.checks[0].detail["reason"]


def test_lower_cap_is_recorded():
    r = run_verification("beyond-1", None, cap=5)
    assert r.cap == 5 and r.to_json()["cap"] == 5


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("MOPDARBOUX_CAP", "7")
    assert run_verification("beyond-1").cap == 7
