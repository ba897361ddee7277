import pytest

import urybench as u
from urybench.harness import CONSTANT_TRUE, mix_seed

NAT = u.NatStar()


def test_axiom_ids():
    assert u.AXIOM_IDS == ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")


def test_mix_seed_deterministic_and_distinct():
    assert mix_seed(7, 0) == mix_seed(7, 0)
    seen = {mix_seed(7, k) for k in range(1000)}
    assert len(seen) == 1000
    assert mix_seed(7, 0) != mix_seed(8, 0)
    assert all(0 <= s < 2 ** 64 for s in seen)


def test_check_axiom_validation():
    with pytest.raises(u.DomainError):
        u.check_axiom("alg", "x", NAT, trials=5, size=4, seed=1)
    with pytest.raises(u.DomainError):
        u.check_axiom("alg", "i", NAT, trials=0, size=4, seed=1)
    with pytest.raises(u.DomainError):
        u.check_axiom("alg", "i", NAT, trials=5, size=2, seed=1)
    with pytest.raises(u.UnsupportedOperationError):
        u.check_axiom("infty", "i", u.TruncatedNat(3), trials=5, size=4, seed=1)


@pytest.mark.parametrize("rel", ["alg", "infty"])
@pytest.mark.parametrize("axiom", u.AXIOM_IDS)
def test_axioms_hold_nat_star(rel, axiom):
    report = u.check_axiom(rel, axiom, NAT, trials=60, size=6, seed=11)
    assert report.violations == []
    assert report.trials == 60


@pytest.mark.parametrize("rel", ["alg", "infty"])
def test_axioms_hold_q_star(rel):
    for axiom in u.AXIOM_IDS:
        report = u.check_axiom(rel, axiom, u.QStar(), trials=25, size=5, seed=3)
        assert report.violations == []


@pytest.mark.parametrize("designator", ["trunc:3", "set:0,1,2"])
def test_alg_axioms_hold_without_infinity(designator):
    # exercises the standalone-copy branch of the invariance trial
    m = u.monoid_from_designator(designator)
    for axiom in u.AXIOM_IDS:
        report = u.check_axiom("alg", axiom, m, trials=40, size=5, seed=19)
        assert report.violations == []


def test_constant_true_fails_anti_reflexivity():
    report = u.check_axiom(CONSTANT_TRUE, "ix", NAT, trials=100, size=5, seed=5)
    assert len(report.violations) > 0
    v = report.violations[0]
    assert "independent from itself" in v.detail
    cfg = u.parse_config(v.config_text)
    assert cfg.a == cfg.b and len(cfg.a) == 1
    assert cfg.a[0] not in cfg.c


def test_violations_replayable():
    report = u.check_axiom(CONSTANT_TRUE, "ix", NAT, trials=50, size=5, seed=21)
    assert report.violations
    for v in report.violations[:5]:
        again = u.replay_trial(CONSTANT_TRUE, "ix", NAT, 5, v.seed)
        assert again is not None
        cfg, detail = again
        assert cfg.serialize() == v.config_text
        assert detail == v.detail


def test_replay_of_clean_trial_returns_none():
    report = u.check_axiom("alg", "ii", NAT, trials=10, size=5, seed=33)
    assert report.violations == []
    seed0 = mix_seed(33, 0)
    assert u.replay_trial("alg", "ii", NAT, 5, seed0) is None


def test_report_line_format():
    report = u.check_axiom("alg", "iii", NAT, trials=12, size=5, seed=9)
    assert report.line() == "AXIOM alg iii trials=12 violations=0 seed=9"


def test_report_render_includes_violation_blocks():
    report = u.check_axiom(CONSTANT_TRUE, "ix", NAT, trials=30, size=5, seed=13)
    text = report.render()
    assert text.startswith("AXIOM const-true ix trials=30 violations=")
    assert "violation trial=" in text
    assert text.rstrip().endswith("end")
    assert "monoid nat-star" in text


def test_kappa_only_for_local_character():
    vii = u.check_axiom("infty", "vii", NAT, trials=30, size=6, seed=2)
    assert vii.kappa_bound_observed is not None
    assert vii.kappa_bound_observed <= 3
    other = u.check_axiom("infty", "ii", NAT, trials=30, size=6, seed=2)
    assert other.kappa_bound_observed is None


def test_run_all_axioms():
    reports = u.run_all_axioms("alg", NAT, trials=15, size=5, seed=4)
    assert tuple(r.axiom for r in reports) == u.AXIOM_IDS
    assert all(not r.violations for r in reports)
    assert all(r.relation == "alg" for r in reports)


def test_seed_changes_trials():
    a = u.check_axiom(CONSTANT_TRUE, "ix", NAT, trials=20, size=5, seed=1)
    b = u.check_axiom(CONSTANT_TRUE, "ix", NAT, trials=20, size=5, seed=2)
    assert a.violations and b.violations
    assert a.violations[0].config_text != b.violations[0].config_text
