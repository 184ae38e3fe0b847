import dataclasses
import itertools

import pytest

from cellembed.config import Config
from cellembed.embed import (
    EmbeddingTrace,
    agreement_level,
    embed,
    length_increment,
    prime_step,
    trace_from_json,
    trace_to_json,
    verify_trace,
)
from cellembed.errors import EmbeddingError, SizeMismatchError, TableauError
from cellembed.perm import Base, Permutation, bruhat_leq, format_permutation, parse, random_permutation, symmetric_group
from cellembed.tableau import StandardTableau, p_symbol

S12 = ("[21654387]", "[62845173]", "[895621a743cb]", "[8956a2c471b3]")
S29 = ("[4321098765]", "[9467182350]", "[nopqrhijklcdef7845296310smgba]", "[nopqrhijklcdef78452s9bg1m36a0]")


def _agreement_oracle(px, py):
    n = px.size
    for k in range(n, -1, -1):
        if all(px.positions[e] == py.positions[e] for e in range(1, k + 1)):
            return k


def test_golden_s12():
    x, y, v, w = S12
    trace = embed(parse(x), parse(y))
    assert format_permutation(trace.v) == v
    assert format_permutation(trace.w) == w
    assert [(step.k, step.t) for step in trace.steps] == [(4, 2), (7, 2)]
    assert trace.N == 12
    assert verify_trace(trace, full=True).passed


def test_golden_s29_zero_based():
    x, y, v, w = S29
    trace = embed(parse(x, Base.ZERO), parse(y, Base.ZERO))
    assert trace.N == 29
    assert format_permutation(trace.v, Base.ZERO) == v
    assert format_permutation(trace.w, Base.ZERO) == w
    report = verify_trace(trace)
    assert report.passed, report.failures


def test_equal_inputs_take_no_steps():
    x = parse("[123]")
    trace = embed(x, x)
    assert trace.steps == ()
    assert trace.v == trace.w == x
    assert verify_trace(trace).passed


def test_agreement_level():
    px = p_symbol(Permutation((2, 1, 6, 5, 4, 3, 8, 7)))
    py = p_symbol(Permutation((6, 2, 8, 4, 5, 1, 7, 3)))
    assert agreement_level(px, py) == _agreement_oracle(px, py) == 4
    assert agreement_level(px, px) == 8
    assert agreement_level(p_symbol(Permutation((1, 2))), p_symbol(Permutation((2, 1)))) == 1


def test_agreement_level_needs_same_entries():
    with pytest.raises(TableauError):
        agreement_level(StandardTableau(((1, 2),)), StandardTableau(((1, 3),)))


def test_agreement_level_matches_oracle(s4):
    for x, y in itertools.product(s4, repeat=2):
        px, py = p_symbol(x), p_symbol(y)
        assert agreement_level(px, py) == _agreement_oracle(px, py)


def test_prime_step():
    x, y = parse("[21654387]"), parse("[62845173]")
    step = prime_step(x, y)
    assert (step.k, step.t, step.n_out) == (4, 2, 10)
    assert step.x_out.word[:2] == (5, 6)
    assert list(step.positions) == list(range(3, 11))
    assert step.y_out.length - step.x_out.length == y.length - x.length
    assert agreement_level(p_symbol(step.x_out), p_symbol(step.y_out)) >= step.k + step.t + 1


def test_prime_step_errors():
    x = parse("[2143]")
    with pytest.raises(EmbeddingError):
        prime_step(x, x)
    with pytest.raises(SizeMismatchError):
        prime_step(x, parse("[123]"))
    with pytest.raises(SizeMismatchError):
        embed(x, parse("[123]"))


def test_length_grows_by_k_times_t(s4, s5):
    # each of the t prefix letters exceeds exactly the k small letters behind it
    for group in (s4, s5):
        for x, y in itertools.product(group, repeat=2):
            if p_symbol(x) == p_symbol(y):
                continue
            step = prime_step(x, y)
            assert step.x_out.length - x.length == length_increment(step.k, step.t)
            assert step.y_out.length - y.length == length_increment(step.k, step.t)


def test_tampered_trace_is_caught():
    x, y, _, _ = S12
    trace = embed(parse(x), parse(y))
    w = trace.w
    tampered = dataclasses.replace(trace, w=Permutation((w(2), w(1)) + w.word[2:]))
    report = verify_trace(tampered)
    assert not report.passed
    assert not report.checks["prefix_agreement"]
    assert "chain" in report.failures


def test_interval_sizes_checked_without_full():
    report = verify_trace(embed(parse("[1324]"), parse("[3412]")))
    assert report.passed, report.failures
    assert report.checks["interval_size"]
    assert "interval_isomorphism" not in report.checks


def test_incomparable_pair_skips_interval_checks():
    report = verify_trace(embed(parse("[2413]"), parse("[3142]")))
    assert report.passed, report.failures
    assert report.checks["comparability"]
    assert "interval_size" not in report.checks


def test_interval_size_guard_is_a_skip():
    x, y, _, _ = S12
    report = verify_trace(embed(parse(x), parse(y)), Config(interval_max=3))
    assert "interval_size" in report.skipped
    assert "interval_max" in report.skipped["interval_size"]


def test_mismatched_sizes_are_reported():
    x, y = parse("[21]"), parse("[132]")
    report = verify_trace(EmbeddingTrace(x, y, (), x, y))
    assert not report.passed
    assert not report.checks["comparability"]
    assert report.failures["comparability"].startswith("SizeMismatchError")


@pytest.mark.slow
def test_exhaustive_s4_with_posets(s4):
    for x, y in itertools.product(s4, repeat=2):
        if bruhat_leq(x, y):
            report = verify_trace(embed(x, y), Config(), full=True)
            assert report.passed, (x, y, report.failures)
            assert {"interval_size", "interval_isomorphism"} <= set(report.checks)


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5])
def test_size_bound_on_every_pair(n):
    group = list(symmetric_group(n))
    for x, y in itertools.product(group, repeat=2):
        trace = embed(x, y)
        assert trace.N <= n * (n + 1) // 2
        assert len(trace.steps) <= n - 1
        assert p_symbol(trace.v) == p_symbol(trace.w)


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_random_pairs(n, rng):
    for _ in range(10_000):
        x, y = random_permutation(n, rng), random_permutation(n, rng)
        report = verify_trace(embed(x, y))
        assert report.passed, (x, y, report.failures)
        if bruhat_leq(x, y):
            assert "interval_size" in report.checks


@pytest.mark.slow
def test_size_bound_on_random_s7(rng):
    for _ in range(10_000):
        trace = embed(random_permutation(7, rng), random_permutation(7, rng))
        assert trace.N <= 28


def test_trace_json_round_trip():
    x, y, _, _ = S12
    trace = embed(parse(x), parse(y))
    report = verify_trace(trace)
    data = trace_to_json(trace, Base.ONE, report.checks)
    assert data["version"] == 1
    assert (data["v"], data["w"], data["N"]) == ("[895621a743cb]", "[8956a2c471b3]", 12)
    assert data["steps"][0]["P_x"] == p_symbol(trace.x).to_json()
    again, base = trace_from_json(data)
    assert again == trace and base is Base.ONE
    assert verify_trace(again).checks == data["checks"]


def test_trace_json_zero_based():
    x, y, v, _ = S29
    trace = embed(parse(x, Base.ZERO), parse(y, Base.ZERO))
    data = trace_to_json(trace, "zero")
    assert data["base"] == "zero" and data["v"] == v
    assert trace_from_json(data) == (trace, Base.ZERO)


def test_trace_json_rejects_bad_input():
    with pytest.raises(EmbeddingError):
        trace_from_json({"version": 99})
    with pytest.raises(EmbeddingError):
        trace_from_json({"version": 1, "base": "one", "x": "[12]"})


def test_trace_dimensions():
    trace = EmbeddingTrace(parse("[12]"), parse("[12]"), (), parse("[12]"), parse("[12]"))
    assert (trace.n, trace.N) == (2, 2)
