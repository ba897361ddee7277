import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import urybench as u

NAT = u.NatStar()
Q = u.QStar()

nat_values = st.one_of(st.integers(min_value=0, max_value=10**6),
                       st.just(math.inf))
q_values = st.one_of(
    st.just((math.inf, 0)),
    st.tuples(st.fractions(min_value=0, max_value=1000), st.integers(0, 1)))
trunc_values = st.integers(min_value=0, max_value=7)
TRUNC = u.TruncatedNat(7)


# -- carrier and text forms ----------------------------------------------------

def test_nat_star_parse_format():
    assert NAT.parse("17") == 17
    assert NAT.parse("inf") == math.inf
    assert NAT.format(0) == "0"
    assert NAT.format(math.inf) == "inf"
    with pytest.raises(u.DomainError):
        NAT.parse("3/2")
    with pytest.raises(u.DomainError):
        NAT.parse("-1")
    with pytest.raises(u.DomainError):
        NAT.parse("x")


def test_q_star_parse_format():
    assert Q.parse("3/2") == (Fraction(3, 2), 0)
    assert Q.parse("3/2+") == (Fraction(3, 2), 1)
    assert Q.parse("0+") == Q.least_positive
    assert Q.parse("inf") == Q.infinity
    assert Q.format((Fraction(7), 0)) == "7"
    assert Q.format((Fraction(1, 3), 1)) == "1/3+"
    with pytest.raises(u.DomainError):
        Q.parse("-2")
    with pytest.raises(u.DomainError):
        Q.parse("1/0")


def test_q_star_successor_order():
    # q < q+ < q' for every q' > q
    assert Q.parse("3/2") < Q.parse("3/2+") < Q.parse("2")
    assert Q.parse("0") < Q.parse("0+") < Q.parse("1/1000000")
    assert Q.parse("5+") < Q.infinity


def test_q_star_successor_addition():
    assert u.ext_add(Q, Q.parse("1/2"), Q.parse("1/2+")) == Q.parse("1+")
    assert u.ext_add(Q, Q.parse("1+"), Q.parse("2+")) == Q.parse("3+")
    assert u.ext_add(Q, Q.parse("1"), Q.parse("2")) == Q.parse("3")


def test_trunc_parse_bounds():
    t = u.TruncatedNat(4)
    assert t.parse("4") == 4
    with pytest.raises(u.DomainError):
        t.parse("5")
    with pytest.raises(u.DomainError):
        t.parse("inf")
    with pytest.raises(u.DomainError):
        u.TruncatedNat(0)


@given(q_values)
def test_q_star_text_round_trip(v):
    assert Q.parse(Q.format(v)) == v


@given(nat_values)
def test_nat_star_text_round_trip(v):
    assert NAT.parse(NAT.format(v)) == v


# -- algebraic laws ------------------------------------------------------------

@given(nat_values, nat_values)
def test_nat_star_commutative(r, s):
    assert NAT.add(r, s) == NAT.add(s, r)


@given(nat_values, nat_values, nat_values)
def test_nat_star_associative_and_invariant(r, s, t):
    assert NAT.add(NAT.add(r, s), t) == NAT.add(r, NAT.add(s, t))
    if r <= s:
        assert NAT.add(r, t) <= NAT.add(s, t)


@given(nat_values, nat_values)
def test_nat_star_absorption(r, s):
    assert (NAT.add(r, s) == math.inf) == (r == math.inf or s == math.inf)


@given(q_values, q_values)
def test_q_star_commutative_and_absorbing(r, s):
    assert Q.add(r, s) == Q.add(s, r)
    assert (Q.add(r, s) == Q.infinity) == (r == Q.infinity or s == Q.infinity)


@given(q_values, q_values, q_values)
def test_q_star_associative_and_invariant(r, s, t):
    assert Q.add(Q.add(r, s), t) == Q.add(r, Q.add(s, t))
    if r <= s:
        assert Q.add(r, t) <= Q.add(s, t)


@given(trunc_values, trunc_values, trunc_values)
def test_trunc_laws(r, s, t):
    assert TRUNC.add(r, s) == TRUNC.add(s, r)
    assert TRUNC.add(TRUNC.add(r, s), t) == TRUNC.add(r, TRUNC.add(s, t))
    if r <= s:
        assert TRUNC.add(r, t) <= TRUNC.add(s, t)
    assert TRUNC.add(r, 0) == r


@given(nat_values, nat_values)
def test_nat_star_least_factor(v, w):
    f = NAT.least_factor(v, w)
    assert v <= NAT.add(f, w)
    # minimality on the integer grid
    if f != 0 and f != math.inf:
        assert not v <= NAT.add(f - 1, w)


@given(q_values, q_values)
def test_q_star_least_factor(v, w):
    f = Q.least_factor(v, w)
    assert v <= Q.add(f, w)


# -- validate_monoid -----------------------------------------------------------

@pytest.mark.parametrize("designator", ["nat-star", "q-star", "trunc:5", "set:0,1,2"])
def test_validate_monoid_passes(designator):
    report = u.validate_monoid(u.monoid_from_designator(designator))
    assert report.passed, report.describe()
    names = [c.name for c in report.checks]
    assert "commutativity" in names and "associativity" in names
    assert ("infinity-absorption" in names) == (designator in ("nat-star", "q-star"))


def test_validate_monoid_broken_table():
    # 1+2 and 2+1 disagree; the first invariance failure is at (1,2,1)
    broken = u.TableMonoid(["0", "1", "2"], [[0, 1, 2], [1, 2, 2], [2, 1, 2]])
    report = u.validate_monoid(broken)
    assert not report.passed
    failures = {c.name: c.witness for c in report.failures()}
    assert failures["commutativity"] == ("1", "2")
    assert failures["add-invariance"] == ("1", "2", "1")


def test_table_monoid_structural_errors():
    with pytest.raises(u.StructuralError):
        u.TableMonoid(["0", "1"], [[0, 1]])
    with pytest.raises(u.StructuralError):
        u.TableMonoid(["0", "1"], [[0, 1], [1, 7]])
    with pytest.raises(u.StructuralError):
        u.TableMonoid(["0", "0"], [[0, 0], [0, 0]])


# -- distance sets and the closure criterion ------------------------------------

def test_truncated_sum_frozen():
    s = u.DistanceSet.from_text("0,1,2")
    assert u.truncated_sum(s, Fraction(1), Fraction(2)) == 2
    s2 = u.DistanceSet.from_text("0,1,2,3,5")
    assert u.truncated_sum(s2, Fraction(2), Fraction(2)) == 3
    assert u.truncated_sum(s2, Fraction(0), Fraction(0)) == 0
    with pytest.raises(u.DomainError):
        u.truncated_sum(s, Fraction(7), Fraction(1))


def test_truncated_sum_is_sup_below():
    s = u.DistanceSet.from_text("0,1/2,1,3,5")
    for a in s.values:
        for b in s.values:
            t = u.truncated_sum(s, a, b)
            assert t <= a + b
            assert all(v <= t for v in s.values if v <= a + b)


def test_fraisse_criterion_frozen():
    for n in range(0, 9):
        ok, witness = u.is_fraisse_distance_set(u.DistanceSet.from_values(range(n + 1)))
        assert ok and witness is None
    ok, witness = u.is_fraisse_distance_set(u.DistanceSet.from_text("0,1,2,3,5"))
    assert not ok
    assert witness == (1, 2, 2)


def test_distance_set_validation():
    with pytest.raises(u.DomainError):
        u.DistanceSet.from_text("1,2")       # no zero
    with pytest.raises(u.StructuralError):
        u.DistanceSet.from_text("")
    with pytest.raises(u.DomainError):
        u.DistanceSet.from_text("0,-1")
    assert len(u.DistanceSet.from_text("0 1 2")) == 3


def test_induced_monoid_from_set():
    m = u.monoid_from_designator("set:0,1,2")
    assert m.infinity is None
    assert m.top == 2
    assert m.add(m.parse("1"), m.parse("2")) == m.parse("2")
    assert u.validate_monoid(m).passed
    with pytest.raises(u.DomainError) as exc:
        u.monoid_from_designator("set:0,1,2,3,5")
    assert exc.value.witness == (1, 2, 2)


def test_extend_monoid_factory():
    assert u.extend_monoid("nat-star") == NAT
    assert u.extend_monoid(NAT) is NAT
    induced = u.extend_monoid(u.DistanceSet.from_text("0,1,2"))
    assert isinstance(induced, u.TableMonoid)
    with pytest.raises(u.DomainError):
        u.extend_monoid(42)
    with pytest.raises(u.DomainError):
        u.monoid_from_designator("weird")
    with pytest.raises(u.DomainError):
        u.monoid_from_designator("trunc:x")


# -- thresholds and chain separation --------------------------------------------

def test_threshold_frozen():
    t2 = u.TruncatedNat(2)
    assert u.threshold_is_equivalence(t2, 1, 3) is True
    assert u.threshold_is_equivalence(NAT, 1, 3) is False
    assert u.threshold_is_equivalence(NAT, NAT.infinity, 2) is True
    with pytest.raises(u.DomainError):
        u.threshold_is_equivalence(NAT, 0, 3)
    with pytest.raises(u.DomainError):
        u.threshold_is_equivalence(NAT, 1, 1)


def test_sop_scalar_witness_frozen():
    assert u.sop_scalar_witness(NAT, 4) == 1
    assert u.sop_scalar_witness(Q, 4) == Q.parse("1")
    assert u.sop_scalar_witness(u.TruncatedNat(2), 3) is None
    assert u.sop_scalar_witness(u.TruncatedNat(100), 3) == 1
    with pytest.raises(u.DomainError):
        u.sop_scalar_witness(NAT, 2)


def test_sop_witness_property():
    # any returned witness separates the fold lengths strictly
    for designator in ("nat-star", "q-star", "trunc:9", "set:0,1,2"):
        m = u.monoid_from_designator(designator)
        for n in (3, 4, 5):
            w = u.sop_scalar_witness(m, n)
            if w is not None:
                assert m.fold(w, n - 1) < m.fold(w, n)


def test_ext_ops_check_carrier():
    with pytest.raises(u.DomainError):
        u.ext_add(NAT, 1, Fraction(1, 2))
    with pytest.raises(u.DomainError):
        u.ext_leq(Q, (Fraction(1), 0), 1)
    assert u.ext_leq(NAT, 3, math.inf)
