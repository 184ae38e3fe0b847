"""
Embedding a pair of permutations into a pair with equal P symbols.

Each step finds the agreement level k of P(x) and P(y), sets
t = max(c_{P(x)}(k+1), c_{P(y)}(k+1)) - 1 and replaces x by

    x'(i) = k + i        for i <= t
    x'(i) = x(i-t)       for i > t and x(i-t) <= k
    x'(i) = x(i-t) + t   for i > t and x(i-t) > k

and y likewise. The pair (x, y) sits in the last n positions of (x', y'),
P(x') and P(y') agree up to k+t+1, and the deficiency n-k strictly drops, so
the loop ends after at most n-1 steps with N <= n(n+1)/2.

>>> trace = embed(parse("[21654387]"), parse("[62845173]"))
>>> str(trace.v), str(trace.w), len(trace.steps)
('[895621a743cb]', '[8956a2c471b3]', 2)
"""
from __future__ import annotations

import dataclasses
import logging
from collections.abc import Callable
from typing import Any

from .config import Config
from .errors import CellEmbedError, EmbeddingError, GuardExceededError, SizeMismatchError, TableauError
from .interval import enumerate_interval, is_interval_pattern_embedding, posets_isomorphic
from .perm import (
    Base,
    Permutation,
    bruhat_leq,
    format_permutation,
    is_common_embedding,
    last_positions,
    parse,
    pattern_at,
)
from .tableau import StandardTableau, column_index, p_symbol

logger = logging.getLogger(__name__)

TRACE_VERSION = 1


@dataclasses.dataclass(frozen=True)
class EmbeddingStep:
    index: int
    k: int
    t: int
    x_in: Permutation
    y_in: Permutation
    x_out: Permutation
    y_out: Permutation
    p_x: StandardTableau
    p_y: StandardTableau

    @property
    def n_in(self) -> int:
        return self.x_in.n

    @property
    def n_out(self) -> int:
        return self.x_out.n

    @property
    def positions(self) -> range:
        """Where (x_in, y_in) sit inside (x_out, y_out)."""
        return range(self.t + 1, self.t + self.n_in + 1)


@dataclasses.dataclass(frozen=True)
class EmbeddingTrace:
    x: Permutation
    y: Permutation
    steps: tuple[EmbeddingStep, ...]
    v: Permutation
    w: Permutation

    @property
    def n(self) -> int:
        return self.x.n

    @property
    def N(self) -> int:
        return self.v.n


def agreement_level(px: StandardTableau, py: StandardTableau) -> int:
    """The largest k such that every entry <= k sits in the same cell of both tableaux."""
    n = px.size
    if px.entries != frozenset(range(1, n + 1)) or py.entries != px.entries:
        raise TableauError("both tableaux must hold exactly 1..n")
    k = 0
    for entry in range(1, n + 1):
        if px.positions[entry] != py.positions[entry]:
            break
        k = entry
    return k


def length_increment(k: int, t: int) -> int:
    """
    Inversions added by one step: each of the t prefix letters k+1..k+t sits in
    front of the k small letters, and nothing else changes.
    """
    return k * t


def _prime(w: Permutation, k: int, t: int) -> Permutation:
    prefix = tuple(range(k + 1, k + t + 1))
    return Permutation(prefix + tuple(value if value <= k else value + t for value in w.word))


def prime_step(x: Permutation, y: Permutation, index: int = 0) -> EmbeddingStep:
    if x.n != y.n:
        raise SizeMismatchError(f"x in S_{x.n} but y in S_{y.n}")
    px, py = p_symbol(x), p_symbol(y)
    if px == py:
        raise EmbeddingError("P symbols already agree, nothing to do")
    k = agreement_level(px, py)
    t = max(column_index(px, k + 1), column_index(py, k + 1)) - 1
    if t < 1:
        raise EmbeddingError(f"entry {k + 1} lies in column 1 of both P symbols")
    return EmbeddingStep(
        index=index, k=k, t=t,
        x_in=x, y_in=y, x_out=_prime(x, k, t), y_out=_prime(y, k, t),
        p_x=px, p_y=py,
    )


def embed(x: Permutation, y: Permutation) -> EmbeddingTrace:
    """Iterate ``prime_step`` until the P symbols agree."""
    if x.n != y.n:
        raise SizeMismatchError(f"x in S_{x.n} but y in S_{y.n}")
    limit = max(x.n - 1, 0)
    steps: list[EmbeddingStep] = []
    current_x, current_y = x, y
    while p_symbol(current_x) != p_symbol(current_y):
        if len(steps) >= limit:
            raise EmbeddingError(f"P symbols still differ after {limit} steps")
        step = prime_step(current_x, current_y, index=len(steps))
        logger.debug("step %d: k=%d t=%d n=%d->%d", step.index, step.k, step.t, step.n_in, step.n_out)
        steps.append(step)
        current_x, current_y = step.x_out, step.y_out
    return EmbeddingTrace(x, y, tuple(steps), current_x, current_y)


# --- verification ---------------------------------------------------------------

@dataclasses.dataclass
class VerificationReport:
    checks: dict[str, bool] = dataclasses.field(default_factory=dict)
    failures: dict[str, str] = dataclasses.field(default_factory=dict)
    skipped: dict[str, str] = dataclasses.field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, check: Callable[[], bool | str]):
        """Run one check; a string result is a failure message."""
        try:
            outcome = check()
        except GuardExceededError as exc:
            self.skipped[name] = str(exc)
            return
        except CellEmbedError as exc:
            outcome = f"{type(exc).__name__}: {exc}"
        self.checks[name] = outcome is True
        if outcome is not True:
            self.failures[name] = outcome if isinstance(outcome, str) else "check returned false"


def _first_failing_step(trace: EmbeddingTrace, predicate: Callable[[EmbeddingStep], bool]) -> bool | str:
    for step in trace.steps:
        if not predicate(step):
            return f"fails at step {step.index}"
    return True


def _chain_is_linked(trace: EmbeddingTrace) -> bool | str:
    current_x, current_y = trace.x, trace.y
    for step in trace.steps:
        if (step.x_in, step.y_in) != (current_x, current_y):
            return f"step {step.index} does not start where the previous one ended"
        current_x, current_y = step.x_out, step.y_out
    if (trace.v, trace.w) != (current_x, current_y):
        return "result differs from the output of the last step"
    return True


def _step_replays(step: EmbeddingStep) -> bool:
    redo = prime_step(step.x_in, step.y_in, step.index)
    return redo == step


def _deficiency_drops(step: EmbeddingStep) -> bool:
    k_next = agreement_level(p_symbol(step.x_out), p_symbol(step.y_out))
    return 0 < step.n_in - step.k and step.n_out - k_next < step.n_in - step.k


def _column_bound(trace: EmbeddingTrace, step: EmbeddingStep) -> bool:
    bound = step.k + 1 - step.n_in + trace.n
    return column_index(step.p_x, step.k + 1) <= bound and column_index(step.p_y, step.k + 1) <= bound


def _length_difference_kept(step: EmbeddingStep) -> bool:
    return step.y_out.length - step.x_out.length == step.y_in.length - step.x_in.length


def verify_trace(trace: EmbeddingTrace, config: Config | None = None, *, full: bool = False) -> VerificationReport:
    """
    Re-check every property the construction promises.

    When x <= y the intervals [x, y] and [v, w] are enumerated and their sizes
    and rank vectors compared; ``full`` adds the poset isomorphism search.
    Guard overruns are reported as skipped, not failed.
    """
    config = config or Config()
    report = VerificationReport()
    x, y, v, w, n = trace.x, trace.y, trace.v, trace.w, trace.n

    report.record("chain", lambda: _chain_is_linked(trace))
    report.record("step_replay", lambda: _first_failing_step(trace, _step_replays))
    report.record("same_p_symbol", lambda: p_symbol(v) == p_symbol(w))
    report.record("prefix_agreement", lambda: v.n == w.n and all(v(i) == w(i) for i in range(1, trace.N - n + 1)))
    report.record(
        "last_n_patterns",
        lambda: pattern_at(v, last_positions(v.n, n)) == x and pattern_at(w, last_positions(w.n, n)) == y,
    )
    report.record("size_bound", lambda: trace.N <= n * (n + 1) // 2)
    report.record("step_count", lambda: len(trace.steps) <= max(n - 1, 0))
    report.record(
        "length_difference",
        lambda: _first_failing_step(trace, _length_difference_kept)
        if w.length - v.length == y.length - x.length else "end-to-end difference changed",
    )
    report.record("deficiency_decrease", lambda: _first_failing_step(trace, _deficiency_drops))
    report.record("column_bound", lambda: _first_failing_step(trace, lambda step: _column_bound(trace, step)))
    report.record(
        "step_embeddings",
        lambda: _first_failing_step(
            trace, lambda s: is_common_embedding(s.x_in, s.y_in, s.x_out, s.y_out, s.positions)
        ),
    )
    report.record("common_embedding", lambda: is_common_embedding(x, y, v, w, last_positions(w.n, n)))

    comparable = {}

    def compare() -> bool:
        comparable["xy"] = bruhat_leq(x, y)
        return True

    report.record("comparability", compare)
    if comparable.get("xy"):
        report.record("bruhat_preserved", lambda: bruhat_leq(v, w))
        report.record(
            "interval_embedding",
            lambda: bruhat_leq(v, w) and is_interval_pattern_embedding(x, y, v, w, last_positions(w.n, n)),
        )
        _interval_checks(report, trace, config, full)
    return report


def _interval_checks(report: VerificationReport, trace: EmbeddingTrace, config: Config, full: bool):
    intervals = {}

    def sizes_match() -> bool:
        intervals["small"] = enumerate_interval(trace.x, trace.y, config.interval_max)
        intervals["big"] = enumerate_interval(trace.v, trace.w, config.interval_max)
        small, big = intervals["small"], intervals["big"]
        return small.size == big.size and small.rank_sizes() == big.rank_sizes()

    report.record("interval_size", sizes_match)
    if full and "big" in intervals:
        report.record(
            "interval_isomorphism",
            lambda: posets_isomorphic(intervals["small"], intervals["big"], config.iso_max),
        )


# --- JSON ---------------------------------------------------------------------------

def trace_to_json(trace: EmbeddingTrace, base: Base | str = Base.ONE, checks: dict[str, bool] | None = None) -> dict[str, Any]:
    base = Base.coerce(base)
    compact = trace.N <= 35

    def fmt(perm: Permutation) -> str:
        return format_permutation(perm, base, compact)

    return {
        "version": TRACE_VERSION,
        "x": fmt(trace.x),
        "y": fmt(trace.y),
        "base": base.value,
        "steps": [
            {
                "i": step.index,
                "k": step.k,
                "t": step.t,
                "n_in": step.n_in,
                "x_in": fmt(step.x_in),
                "y_in": fmt(step.y_in),
                "x_out": fmt(step.x_out),
                "y_out": fmt(step.y_out),
                "P_x": step.p_x.to_json(),
                "P_y": step.p_y.to_json(),
            }
            for step in trace.steps
        ],
        "v": fmt(trace.v),
        "w": fmt(trace.w),
        "N": trace.N,
        "checks": dict(checks or {}),
    }


def trace_from_json(data: dict[str, Any]) -> tuple[EmbeddingTrace, Base]:
    """Rebuild a trace exactly as stored, without recomputing anything."""
    if data.get("version") != TRACE_VERSION:
        raise EmbeddingError(f"unsupported trace version {data.get('version')!r}")
    try:
        base = Base.coerce(data["base"])
        steps = tuple(
            EmbeddingStep(
                index=item["i"],
                k=item["k"],
                t=item["t"],
                x_in=parse(item["x_in"], base),
                y_in=parse(item["y_in"], base),
                x_out=parse(item["x_out"], base),
                y_out=parse(item["y_out"], base),
                p_x=StandardTableau(tuple(map(tuple, item["P_x"]))),
                p_y=StandardTableau(tuple(map(tuple, item["P_y"]))),
            )
            for item in data["steps"]
        )
        trace = EmbeddingTrace(
            x=parse(data["x"], base),
            y=parse(data["y"], base),
            steps=steps,
            v=parse(data["v"], base),
            w=parse(data["w"], base),
        )
    except (KeyError, TypeError) as exc:
        raise EmbeddingError(f"malformed trace: {exc}") from None
    return trace, base
