import random
import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_pentagon
from tckit import linalg
from tckit.category import FSymbolTable, admissible_hexatuples, gauge_transform, pentagon_check
from tckit.duality import global_dimension
from tckit.errors import CategoryValidationError
from tckit.library import BUILTIN_NAMES, builtin


def random_gauge(F, rng):
    ring = F.ring
    vals = [F.field(v) for v in (1, -1, 2, -2, 3)]
    if F.field.kind == "cyclotomic":
        vals += [F.field.zeta(), F.field.zeta() + F.field(2)]
    u = {}
    for t in sorted(ring.triples):
        if ring.unit in t[:2]:
            continue
        u[t] = rng.choice(vals)
    return u


def inverse_gauge(u):
    return {k: v.inverse() for k, v in u.items()}


# pentagon ----------------------------------------------------------------------


def test_vec_z2_passes():
    rep = pentagon_check(builtin("vec_z2"))
    assert rep.passed and rep.checked > 0


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_pass_and_agree_with_brute_force(name):
    F = builtin(name)
    assert pentagon_check(F).passed
    assert brute_pentagon(F) is None


def test_fibonacci_negated_entry_fails_with_witness():
    F = builtin("fibonacci")
    t = F.ring.index("t")
    key = (t, t, t, t, 0, 0)
    G = F.with_entries({key: -F[key]})
    rep = pentagon_check(G)
    assert not rep.passed
    assert rep.witness is not None and len(rep.witness) == 9
    assert rep.lhs != rep.rhs
    assert brute_pentagon(G) is not None
    assert "FAIL" in str(rep)


def test_violation_report_is_deterministic():
    F = builtin("ising")
    key = sorted(F.F)[-1]
    G = F.with_entries({key: F[key] * F.field(2)})
    assert pentagon_check(G).witness == pentagon_check(G).witness


@pytest.mark.parametrize("name", ["fibonacci", "ising"])
def test_every_single_entry_perturbation_fails(name):
    F = builtin(name)
    one = F.field.one()
    for key, value in F.F.items():
        for new in (value * F.field(2), value + one):
            try:
                G = F.with_entries({key: new})
            except CategoryValidationError as err:
                assert err.witness is not None
                continue
            assert not pentagon_check(G).passed, key


def test_rank6_pentagon_under_five_seconds():
    F = builtin("vec_z6")
    start = time.perf_counter()
    assert pentagon_check(F).passed
    assert time.perf_counter() - start < 5


# table construction -------------------------------------------------------------


def test_missing_entry_rejected():
    F = builtin("fibonacci")
    entries = dict(F.F)
    key = sorted(entries)[-1]
    del entries[key]
    with pytest.raises(CategoryValidationError) as err:
        FSymbolTable.build(F.ring, F.field, entries)
    assert err.value.reason == "missing entry"
    assert err.value.witness == F.ring.names(key)


def test_inadmissible_entry_rejected():
    F = builtin("vec_z2")
    entries = dict(F.F)
    entries[(1, 1, 1, 0, 1, 1)] = 1
    with pytest.raises(CategoryValidationError) as err:
        FSymbolTable.build(F.ring, F.field, entries)
    assert err.value.reason == "inadmissible entry"


def test_unit_entry_must_be_one():
    F = builtin("vec_z2")
    with pytest.raises(CategoryValidationError) as err:
        F.with_entries({(0, 1, 1, 0, 1, 0): -1})
    assert err.value.reason == "unit entry not 1"


def test_singular_block_rejected():
    F = builtin("fibonacci")
    t = F.ring.index("t")
    es, fs, m = F.block(t, t, t, t)
    # make the 2x2 block rank one: second row = first row
    changes = {(t, t, t, t, es[1], fs[j]): m[0][j] for j in range(len(fs))}
    with pytest.raises(CategoryValidationError) as err:
        F.with_entries(changes)
    assert err.value.reason == "singular F-matrix"


@pytest.mark.parametrize("name", ["fibonacci", "ising", "rep_s3"])
def test_admissible_hexatuples_match_brute_count(name):
    ring = builtin(name).ring
    r = range(ring.rank)
    count = sum(
        ring.N(a, b, e) * ring.N(e, c, d) * ring.N(b, c, f) * ring.N(a, f, d)
        for a in r for b in r for c in r for d in r for e in r for f in r
    )
    assert len(admissible_hexatuples(ring)) == count


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_blocks_invertible(name):
    F = builtin(name)
    for a, b, c, d in {h[:4] for h in F.F}:
        _, _, m = F.block(a, b, c, d)
        assert not linalg.determinant(m).is_zero()


# gauge ---------------------------------------------------------------------------


def test_identity_gauge_is_identity():
    F = builtin("fibonacci")
    assert gauge_transform(F, {}) == F


def test_z2_sign_gauge_keeps_pentagon():
    F = builtin("vec_z2")
    G = gauge_transform(F, {(1, 1, 0): -1})
    assert pentagon_check(G).passed
    assert brute_pentagon(G) is None


def test_zero_gauge_rejected():
    F = builtin("vec_z2")
    with pytest.raises(CategoryValidationError) as err:
        gauge_transform(F, {(1, 1, 0): 0})
    assert err.value.reason == "zero gauge entry"


def test_unit_gauge_rejected():
    F = builtin("vec_z2")
    with pytest.raises(CategoryValidationError):
        gauge_transform(F, {(0, 1, 1): 2})


def test_fibonacci_gdim_gauge_invariant_20_gauges():
    F = builtin("fibonacci")
    rng = random.Random(5)
    d = global_dimension(F)
    for _ in range(20):
        assert global_dimension(gauge_transform(F, random_gauge(F, rng))) == d


@given(st.sampled_from(BUILTIN_NAMES), st.integers(0, 10**6))
def test_gauge_round_trip(name, seed):
    F = builtin(name)
    u = random_gauge(F, random.Random(seed))
    G = gauge_transform(F, u)
    assert gauge_transform(G, inverse_gauge(u)) == F
    assert pentagon_check(G).passed


@given(st.integers(0, 10**6))
def test_pentagon_failure_gauge_invariant(seed):
    rng = random.Random(seed)
    F = builtin("ising")
    key = rng.choice([k for k in sorted(F.F) if F.ring.unit not in k[:3]])
    bad = F.with_entries({key: F[key] * F.field(3)})
    u = random_gauge(F, rng)
    assert not pentagon_check(gauge_transform(bad, u)).passed
