"""
Golden cases and small exhaustive sweeps, runnable from the command line.

Every check returns a ``CheckResult``; nothing here raises for a failed
check, so a single broken case never hides the others.
"""
from __future__ import annotations

import dataclasses
import logging
import time
from collections.abc import Callable
from itertools import product

from .cells import CellKind, cell_partition
from .config import Config
from .embed import embed, verify_trace
from .errors import CellEmbedError
from .klpoly import KazhdanLusztigTable, kl_cells, kl_polynomial, mu
from .perm import (
    Base,
    Permutation,
    bruhat_leq,
    format_permutation,
    identity,
    last_positions,
    longest_element,
    parse,
    pattern_at,
    symmetric_group,
)
from .tableau import count_standard_tableaux, p_symbol, rsk

logger = logging.getLogger(__name__)

S12_X, S12_Y = "[21654387]", "[62845173]"
S12_V, S12_W = "[895621a743cb]", "[8956a2c471b3]"
S29_X, S29_Y = "[4321098765]", "[9467182350]"
S29_V, S29_W = "[nopqrhijklcdef7845296310smgba]", "[nopqrhijklcdef78452s9bg1m36a0]"
S10_MU = 4


@dataclasses.dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def _expect(actual, expected, what: str) -> str:
    return "" if actual == expected else f"{what}: expected {expected}, got {actual}"


def _golden_rsk(config: Config) -> str:
    pair = rsk(Permutation((3, 1, 4, 2)))
    problems = [
        _expect(pair.P.slash(), "(12/34)", "P(3142)"),
        _expect(pair.Q.slash(), "(13/24)", "Q(3142)"),
        _expect(rsk(identity(5)).P.rows, ((1, 2, 3, 4, 5),), "P(identity)"),
        _expect(rsk(longest_element(5)).Q.rows, ((1,), (2,), (3,), (4,), (5,)), "Q(reversal)"),
    ]
    return "; ".join(p for p in problems if p)


def _golden_embed(x: str, y: str, v: str, w: str, base: Base, steps: int | None) -> Callable[[Config], str]:
    def check(config: Config) -> str:
        trace = embed(parse(x, base), parse(y, base))
        problems = [
            _expect(format_permutation(trace.v, base), v, "v"),
            _expect(format_permutation(trace.w, base), w, "w"),
        ]
        if steps is not None:
            problems.append(_expect(len(trace.steps), steps, "steps"))
        report = verify_trace(trace, config)
        if not report.passed:
            problems.append(f"verification failed: {sorted(report.failures)}")
        return "; ".join(p for p in problems if p)
    return check


def _golden_pattern(config: Config) -> str:
    v = parse(S12_V)
    return _expect(pattern_at(v, last_positions(v.n, 8)), Permutation((2, 1, 6, 5, 4, 3, 8, 7)), "last 8 of v")


def _cells_s4(config: Config) -> str:
    cells = cell_partition(4, CellKind.RIGHT)
    if len(cells) != 10:
        return f"expected 10 right cells, got {len(cells)}"
    for cell in cells:
        shape = p_symbol(cell[0]).shape
        if len(cell) != count_standard_tableaux(shape):
            return f"cell of shape {shape} has {len(cell)} members"
    return ""


def _kl_singular_s4(config: Config) -> str:
    polynomial = kl_polynomial(Permutation((1, 3, 2, 4)), Permutation((3, 4, 1, 2)), max_ideal=config.ideal_max)
    return _expect(str(polynomial), "1 + q", "P_{1324,3412}")


def _kl_corollary_s3(config: Config) -> str:
    elements = list(symmetric_group(3))
    table = KazhdanLusztigTable(longest_element(3), config.ideal_max)
    for x, y in product(elements, repeat=2):
        if x == y or not bruhat_leq(x, y):
            continue
        trace = embed(x, y)
        small = table.polynomial(x, y)
        big = kl_polynomial(trace.v, trace.w, max_ideal=config.ideal_max)
        if small != big:
            return f"P_{{{x},{y}}} = {small} but P_{{{trace.v},{trace.w}}} = {big}"
    return ""


def _kl_cells_s4(config: Config) -> str:
    return _expect(kl_cells(4, max_ideal=config.ideal_max), cell_partition(4, CellKind.RIGHT), "right cells of S_4")


def _exhaustive_s4(config: Config) -> str:
    elements = list(symmetric_group(4))
    checked = 0
    for x, y in product(elements, repeat=2):
        if not bruhat_leq(x, y):
            continue
        report = verify_trace(embed(x, y), config, full=True)
        checked += 1
        if not report.passed:
            return f"{x} <= {y}: {report.failures}"
    logger.info("exhaustive S_4 sweep verified %d comparable pairs", checked)
    return ""


def _mu_s10(config: Config) -> str:
    x, y = parse(S29_X, Base.ZERO), parse(S29_Y, Base.ZERO)
    return _expect(int(mu(x, y, max_ideal=config.ideal_max)), S10_MU, "mu")


def _checks(config: Config, tamper: bool) -> dict[str, Callable[[Config], str]]:
    checks = {
        "golden_rsk": _golden_rsk,
        "golden_embed_s12": _golden_embed(S12_X, S12_Y, S12_V, S12_V if tamper else S12_W, Base.ONE, 2),
        "golden_embed_s29": _golden_embed(S29_X, S29_Y, S29_V, S29_W, Base.ZERO, None),
        "golden_pattern_last8": _golden_pattern,
        "cells_s4": _cells_s4,
        "kl_singular_s4": _kl_singular_s4,
        "kl_corollary_s3": _kl_corollary_s3,
        "kl_cells_s4": _kl_cells_s4,
        "exhaustive_s4": _exhaustive_s4,
    }
    if config.stretch:
        checks["mu_s10"] = _mu_s10
    return checks


def run_selftest(config: Config | None = None, *, tamper: bool = False) -> list[CheckResult]:
    """
    Run every check and return the results sorted by name.

    ``tamper`` swaps one expected value for a wrong one, to prove the harness
    can fail. Guard overruns count as failures with the guard in the detail.
    """
    config = config or Config()
    results = []
    for name, check in sorted(_checks(config, tamper).items()):
        started = time.perf_counter()
        try:
            detail = check(config)
        except CellEmbedError as exc:
            detail = f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - started
        results.append(CheckResult(name, not detail, detail, round(elapsed, 3)))
        logger.info("%s %s (%.2fs)", name, "ok" if not detail else "FAILED", elapsed)
    return results
