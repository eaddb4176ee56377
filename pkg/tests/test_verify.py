#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./tests/test_verify.py

import random

import pytest

from prolim.src.algebra.fpmod import FPModule, is_surjective, unflatten_vector
from prolim.src.algebra.groupring import (
    FiniteAbelianGroup,
    GroupRingElement,
    augmentation,
    is_non_zero_divisor,
)
from prolim.src.algebra.tower import (
    ChainTower,
    TowerSpec,
    build_tower,
    free_tower,
    mod_p_tower,
    trivial_tower,
    varpi_ideal_tower,
)
from prolim.src.algebra.zlinalg import AbelianInvariants
from prolim.src.errors import DigitError, IllDefinedMapError, TowerError
from prolim.src.suites.builtin import NakayamaSuite
from prolim.src.suites.config import SuiteConfig
from prolim.src.verify.fsscan import fs_scan
from prolim.src.verify.kappa import check_kappa, check_tor_ppower, kernel_of_kappa
from prolim.src.verify.nakayama import complement_generators, nakayama_lift
from prolim.src.verify.prop_ses import verify_prop_ses
from prolim.src.verify.random_cases import case_rng, random_digits, random_module
from prolim.src.verify.report import EXPECT_FAIL, CheckReport, canonical, check
from prolim.src.verify.xa import DigitSequence, build_xa, y_element


# ---------------------------------------------------------------------------
# reports

def test_check_keeps_witness_only_on_failure():
    assert check("ok", True, detail=1).witness == {}
    assert check("bad", False, detail=1).witness == {"detail": 1}


def test_aggregate_and_expectation():
    report = CheckReport.aggregate("parent", [check("a", True), check("b", False)])
    assert not report.passed
    assert [c.name for c in report.failed_children()] == ["b"]
    assert not report.as_expected
    report.expected = EXPECT_FAIL
    assert report.as_expected
    assert [c.name for c in report.walk()] == ["parent", "a", "b"]


def test_canonical_form():
    assert canonical({"n": 3, "inv": AbelianInvariants(1, (2,)), "ok": True}) == {
        "n": "3", "inv": ["2", "0"], "ok": True,
    }
    with pytest.raises(TypeError):
        canonical(0.5)


def test_error_report():
    report = CheckReport.error("xa.error", DigitError("boom"))
    assert not report.passed
    assert report.witness == {"error": "DigitError", "message": "boom"}


# ---------------------------------------------------------------------------
# exact sequences

@pytest.mark.parametrize("fixture", ["tower_2_1_3", "tower_3_1_2", "tower_2_2_2"])
def test_prop_ses_passes_at_every_level(request, fixture):
    tower = request.getfixturevalue(fixture)
    for m in tower.levels():
        report = verify_prop_ses(tower, m)
        assert report.passed, [c.name for c in report.failed_children()]


def test_prop_ses_rejects_bad_level(tower_3_1_2):
    with pytest.raises(TowerError):
        verify_prop_ses(tower_3_1_2, 3)


# ---------------------------------------------------------------------------
# x_a

def test_digit_sequence_validation():
    with pytest.raises(DigitError):
        DigitSequence(3, (3,), (0, 1))
    with pytest.raises(DigitError):
        DigitSequence(3, (0, 0), (0, 1, 2))
    with pytest.raises(DigitError):
        DigitSequence(3, (1, 1), (0, 1))
    seq = DigitSequence(2, (1, 3), (0, 1, 3))
    assert seq.radix(1) == 4
    assert seq.value == 7


def test_digits_from_padic():
    seq = DigitSequence.from_padic(3, -1, (0, 1, 2), 2)
    assert seq.digits == (2, 2)
    assert seq.value == 8


def test_xa_unit_digit_passes(tower_2_1_3):
    a = DigitSequence.for_tower(tower_2_1_3, [1])
    assert a.digits == (1, 0, 0)
    x, report = build_xa(tower_2_1_3, a)
    assert report.passed
    assert x.levels[3] == tower_2_1_3.varpi(3)


def test_xa_augmentation(tower_3_1_2):
    a = DigitSequence.for_tower(tower_3_1_2, [1, 2])
    _, report = build_xa(tower_3_1_2, a)
    assert report.passed
    assert augmentation(y_element(tower_3_1_2, a, 2)) == 7


def test_xa_zero_leading_digit_fails_as_expected(tower_3_1_2):
    a = DigitSequence.for_tower(tower_3_1_2, [0, 1])
    _, report = build_xa(tower_3_1_2, a)
    assert not report.passed
    assert report.expected == EXPECT_FAIL
    assert report.as_expected
    by_name = {c.name: c for c in report.children}
    assert by_name["compatible"].passed
    assert by_name["connecting_identity"].passed
    assert by_name["augmentation"].passed
    assert not by_name["non_zero_divisor"].passed
    assert by_name["non_zero_divisor"].witness["levels"] == [1, 2]
    assert not by_name["annihilator"].passed


def test_xa_rejects_foreign_digits(tower_3_1_2):
    with pytest.raises(DigitError):
        build_xa(tower_3_1_2, DigitSequence(2, (1,), (0, 1)))


def test_random_digits_give_non_zero_divisors(tower_3_1_2):
    for case in range(5):
        a = random_digits(case_rng(0, "xa", 0, case), tower_3_1_2)
        assert a.digits[0] >= 1
        assert is_non_zero_divisor(y_element(tower_3_1_2, a, 2))
        _, report = build_xa(tower_3_1_2, a)
        assert report.passed


# ---------------------------------------------------------------------------
# generator lifting

@pytest.mark.parametrize("build", [free_tower, trivial_tower, mod_p_tower])
@pytest.mark.parametrize("fixture", ["tower_2_1_3", "tower_3_1_2", "tower_2_2_2"])
def test_nakayama_lift_succeeds(request, fixture, build):
    tower = request.getfixturevalue(fixture)
    tm = build(tower)
    generators, report = nakayama_lift(tm)
    assert report.passed, [c.name for c in report.walk() if not c.passed]
    kappa = int(report.params["kappa"])
    assert len(generators) <= kappa + report.params["d"]
    for n in tower.levels():
        M = tm.levels[n]
        assert M.generates([unflatten_vector(M.group, g.levels[n]) for g in generators])


def test_nakayama_lift_fails_on_varpi_ideal_at_p_2(tower_2_1_3):
    generators, report = nakayama_lift(varpi_ideal_tower(tower_2_1_3))
    assert generators == []
    assert not report.passed
    assert report.witness["level"] == 1
    assert report.witness["stage"] == "base_change"
    assert canonical(report.witness)["kernel"] == ["2"]


@pytest.mark.parametrize("spec", [
    TowerSpec(p=2, d=1, max_level=5),
    TowerSpec(p=5, d=1, max_level=2),
    TowerSpec(p=3, d=2, max_level=2),
])
def test_nakayama_suite_on_default_towers(spec):
    tower = build_tower(spec)
    reports = NakayamaSuite(SuiteConfig.default()).run(tower, 0)
    assert [r.name for r in reports] == [
        "nakayama.free1", "nakayama.trivial", "nakayama.mod_p", "nakayama.varpi_ideal",
    ]
    assert all(r.as_expected for r in reports), [r.name for r in reports if not r.as_expected]


@pytest.mark.parametrize("modulus", [3, 15])
def test_complement_generators_generate(modulus):
    c2 = FiniteAbelianGroup((2,))
    one = GroupRingElement.one(c2)
    sign = FPModule.cyclic(c2, [one.scale(modulus), GroupRingElement.basis(c2, (1,)) + one])
    ws = complement_generators(sign)
    assert len(ws) == 1
    assert sign.generates([unflatten_vector(c2, w) for w in ws])


# ---------------------------------------------------------------------------
# kappa and Tor

@pytest.mark.parametrize("kind", ["identity", "zero", "varpi", "p"])
def test_kappa_on_scalar_chains(tower_3_1_2, kind):
    chain = ChainTower.scalar(tower_3_1_2, kind)
    for a in range(tower_3_1_2.max_level):
        report = check_kappa(chain, a)
        assert report.passed, [c.name for c in report.failed_children()]


def test_kappa_varpi_is_not_onto(tower_3_1_2):
    report = check_kappa(ChainTower.scalar(tower_3_1_2, "varpi"), 0)
    assert report.params["onto"] is False
    assert report.params["kernel"].is_zero


def test_kappa_on_random_chains(tower_2_1_3):
    for case in range(3):
        chain = ChainTower.random(tower_2_1_3, case_rng(1, "kappa", 0, case))
        for a in range(tower_2_1_3.max_level):
            assert check_kappa(chain, a).passed


def test_flat_kappa_kernel_matches_the_kernel_tower(tower_2_1_3):
    for case in range(3):
        chain = ChainTower.random(tower_2_1_3, case_rng(2, "kappa", 0, case))
        tm = chain.kernel_tower()
        for a in range(tower_2_1_3.max_level):
            kernel, onto = kernel_of_kappa(chain, a)
            _, expected = tm.base_change_defect(a)
            assert kernel == expected
            assert onto == is_surjective(tm.base_change_map(a))


def test_kappa_level_bounds(tower_3_1_2):
    with pytest.raises(TowerError):
        check_kappa(ChainTower.scalar(tower_3_1_2, "varpi"), 2)


def test_tor_ppower_on_mod_p(tower_3_1_2):
    M = mod_p_tower(tower_3_1_2).levels[2]
    assert check_tor_ppower(M, 3, 1).passed
    assert check_tor_ppower(M, 3, 2).passed


def test_tor_ppower_on_random_modules(tower_2_1_3):
    rng = random.Random(11)
    for _ in range(5):
        M = random_module(rng, tower_2_1_3.group(2))
        assert isinstance(M, FPModule)
        assert check_tor_ppower(M, 2, rng.randint(1, 2)).passed


# ---------------------------------------------------------------------------
# Forster-Swan scan

def test_fs_scan_varpi_chain(tower_3_1_3):
    report = fs_scan(tower_3_1_3, ChainTower.scalar(tower_3_1_3, "varpi"))
    assert report.passed
    params = canonical(report.params)
    assert params["c"] == "2"
    assert params["c_stable"] == "2"
    assert params["c_prime"] == "1"
    assert params["diverging_levels"] == ["1", "2"]
    assert [c.name for c in report.children] == ["level1", "level2", "level3"]


@pytest.mark.parametrize("kind", ["identity", "p"])
def test_fs_scan_injective_chains(tower_3_1_2, kind):
    report = fs_scan(tower_3_1_2, ChainTower.scalar(tower_3_1_2, kind))
    assert report.passed
    assert report.params["c"] == 0
    assert report.params["c_prime"] == 1


def test_fs_scan_rejects_foreign_chain(tower_3_1_2, tower_2_1_3):
    with pytest.raises(IllDefinedMapError):
        fs_scan(tower_3_1_2, ChainTower.scalar(tower_2_1_3, "varpi"))
