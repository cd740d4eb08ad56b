"""
reconstruct.py

Recover a generic parameter from twisted gamma-factor data.

All reading is done on 1/γ, whose poles come from the Γ(s + t)-type
denominators and whose zeros come from the numerators. Points are grouped by
their class in C / Z; within a class every point is r + k for an integer k
and the multiplicity is probed with ``order_at``.

Over C the data is the trivial twist and a twist by chi_{-M,0} with M large.
After that twist every numerator pole sits to the right of every denominator
pole of the same class, so the pole starts give the t's and the zero starts
give the multiset {t - N}. Genericity orders both multisets consistently,
which pairs them.

Over R the data is the twists by lambda_{0,0} and lambda_{1,0}. Within a class
the lambda's live on one parity, so the deep pole orders on the two parities
give p (number of lambda's) and q (number of phi's). Peeling the top poles on
that parity yields the t's, and under lambda_{1,0} it yields {t - 2 eps}. The
phi's are read the same way as the characters over C after dividing out the
lambda part.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Dict, List, Sequence, Tuple

from archimedean_converse.arithmetic.scalars import GaussQ, residue_mod
from archimedean_converse.auto_config.logging_config import logger
from archimedean_converse.constants import MAX_M_DOUBLINGS, PROBE_MARGIN
from archimedean_converse.converse.oracle import GammaOracle, SearchBounds, t_span
from archimedean_converse.errors import MissingQueryError, ReconstructionError
from archimedean_converse.factors.local_factors import gamma_param_direct, gamma_twisted
from archimedean_converse.gamma.divisor import ge_divisor, order_at
from archimedean_converse.gamma.expr import GammaExpr, ge_div
from archimedean_converse.gamma.numeric import ge_eq
from archimedean_converse.parameters.constituents import (
    CharC,
    CharR,
    Character,
    Constituent,
    Disc2R,
    Field,
)
from archimedean_converse.parameters.parameter import Parameter, normalize


class _Inconsistent(Exception):
    """Internal: the probed multiplicities do not have the expected shape."""


def class_windows(x: GammaExpr) -> Dict[GaussQ, Tuple[int, int]]:
    """For each class r in C / Z met by the divisor of x, the probe window of k's."""
    starts: Dict[GaussQ, List[int]] = {}
    for prog in ge_divisor(x).progressions:
        r, k = residue_mod(prog.start, 1)
        starts.setdefault(r, []).append(k)
    return {
        r: (min(ks) - PROBE_MARGIN, max(ks) + PROBE_MARGIN)
        for r, ks in sorted(starts.items(), key=lambda kv: kv[0].sort_key())
    }


def _probe(x: GammaExpr, r: GaussQ, window: Tuple[int, int]) -> Dict[int, int]:
    """Order of 1/x at r + k for k in the window."""
    lo, hi = window
    return {k: -order_at(x, r + k) for k in range(lo, hi + 1)}


def _peel(orders: Dict[int, int], count: int, step: int, parity: int = 0) -> List[int]:
    """
    Remove ``count`` downward progressions (of the given step) from the top.

    Each round takes the largest probed k (of the right parity when step is 2)
    with positive order and subtracts a progression starting there.
    """
    tops = []
    for _ in range(count):
        candidates = [k for k, m in orders.items() if m > 0 and (step == 1 or k % 2 == parity)]
        if not candidates:
            raise _Inconsistent(f"expected {count} pole progressions, found {len(tops)}")
        top = max(candidates)
        tops.append(top)
        for k in orders:
            if k <= top and (top - k) % step == 0:
                orders[k] -= 1
    return tops


def _zero_starts(orders: Dict[int, int]) -> List[int]:
    """Starts of the upward zero progressions left after peeling (multiset)."""
    ks = sorted(orders)
    if any(orders[k] > 0 for k in ks):
        raise _Inconsistent("poles remain after peeling")
    starts: List[int] = []
    for prev, k in zip(ks, ks[1:]):
        jump = orders[prev] - orders[k]
        if jump < 0:
            raise _Inconsistent(f"zero multiplicity decreases at k={k}")
        starts.extend([k] * jump)
    if orders[ks[0]] != 0:
        raise _Inconsistent("zeros extend below the probe window")
    return starts


def _pair_monotone(
    ts: Sequence[GaussQ],
    diffs: Sequence[GaussQ],
    signed_n: bool = False,
) -> List[Tuple[GaussQ, int]]:
    """
    Pair t's ascending with (t - N)'s descending and return (t, N).

    For a generic block ordered by N, t increases and t - N decreases.
    """
    if len(ts) != len(diffs):
        raise _Inconsistent(f"{len(ts)} pole starts against {len(diffs)} zero starts")
    pairs = []
    for t, a in zip(sorted(ts, key=GaussQ.sort_key), sorted(diffs, key=GaussQ.sort_key, reverse=True)):
        n = t - a
        if not n.is_integer() or (n.as_int() < 0 and not signed_n):
            raise _Inconsistent(f"t={t} and t-N={a} do not give an admissible N")
        pairs.append((t, n.as_int()))
    return pairs


def _verify(oracle: GammaOracle, candidate: Parameter, queries: Sequence[Character]) -> None:
    for chi in queries:
        expected = oracle.query(chi)
        if not ge_eq(gamma_twisted(candidate, chi), expected):
            raise ReconstructionError(
                f"reconstructed {candidate} does not reproduce the data",
                character=chi,
                expression=expected,
            )


# ---------------------------------------------------------------- over C

def _complex_block(x: GammaExpr, r: GaussQ, window: Tuple[int, int], M: int) -> List[CharC]:
    orders = _probe(x, r, window)
    n = orders[window[0]]
    tops = _peel(orders, n, step=1)
    ts = [-(r + k) for k in tops]
    # numerator poles of γ at 1 - t + N + M, so t - N = 1 + M - z
    diffs = [1 + M - (r + k) for k in _zero_starts(orders)]
    return [CharC(N, t) for t, N in _pair_monotone(ts, diffs, signed_n=True)]


def _initial_offset(untwisted: GammaExpr, bounds: SearchBounds) -> int:
    starts = [p.start for p in ge_divisor(untwisted).progressions]
    # |Re t| is at most |Re start| + maxN + 1 for every Gamma argument of the untwisted data
    span = t_span(starts) + bounds.max_n + 1
    return 1 + 2 * span + 2 * bounds.max_n


def _reconstruct_complex(oracle: GammaOracle, bounds: SearchBounds) -> Parameter:
    trivial = CharC(0, GaussQ())
    untwisted = oracle.query(trivial)
    M = _initial_offset(untwisted, bounds)
    last_error: ReconstructionError = ReconstructionError("no attempt made")
    for attempt in range(MAX_M_DOUBLINGS + 1):
        chi = CharC(M, GaussQ())
        try:
            twisted = oracle.query(chi)
        except MissingQueryError:
            # a transcript only holds the first offset; report what went wrong there
            if attempt == 0:
                raise
            raise last_error from None
        logger.debug(f"Complex reconstruction: twist offset M={M} (attempt {attempt + 1})")
        try:
            found: List[Constituent] = []
            for r, window in class_windows(twisted).items():
                block = _complex_block(twisted, r, window, M)
                logger.debug(f"  class {r}: {[str(c) for c in block]}")
                found.extend(block)
            candidate = normalize(Field.COMPLEX, found)
            _verify(oracle, candidate, [trivial, chi])
            return candidate
        except _Inconsistent as e:
            last_error = ReconstructionError(str(e), character=chi, expression=twisted)
        except ReconstructionError as e:
            last_error = e
        M *= 2
    raise last_error


# ---------------------------------------------------------------- over R

def _match_signs(ts: List[GaussQ], shifted: List[GaussQ]) -> List[Tuple[int, GaussQ]]:
    """Recover {(eps, t)} from the multisets {t} and {t - 2 eps}."""
    ts = sorted(ts, key=GaussQ.sort_key)
    pool = Counter(shifted)
    out = []
    for t in ts:
        if pool[t - 2] > 0:
            eps = 1
        elif pool[t] > 0:
            eps = 0
        else:
            raise _Inconsistent(f"no partner for t={t} under the sign twist")
        pool[t - 2 * eps] -= 1
        out.append((eps, t))
    return out


def _deep_orders(orders: Dict[int, int], lo: int) -> Tuple[int, int]:
    """Orders at the two lowest probe points, indexed by parity."""
    by_parity = {lo % 2: orders[lo], (lo + 1) % 2: orders[lo + 1]}
    return by_parity[0], by_parity[1]


def _lambda_tops(x: GammaExpr, r: GaussQ, window: Tuple[int, int]) -> Tuple[int, int, int, List[int]]:
    orders = _probe(x, r, window)
    e0, e1 = _deep_orders(orders, window[0])
    q, p = min(e0, e1), abs(e0 - e1)
    parity = 0 if e0 >= e1 else 1
    tops = _peel(orders, p, step=2, parity=parity)
    return p, q, parity, tops


def _real_block(
    plain: GammaExpr,
    signed: GammaExpr,
    r: GaussQ,
    window: Tuple[int, int],
) -> List[Constituent]:
    p, q, _, tops = _lambda_tops(plain, r, window)
    p_signed, q_signed, _, tops_signed = _lambda_tops(signed, r, window)
    if (p_signed, q_signed) != (p, q):
        raise _Inconsistent(f"sign twist changes (p, q) from {(p, q)} to {(p_signed, q_signed)}")
    ts = [-(r + k) for k in tops]
    shifted = [-(r + k) for k in tops_signed]
    lams = [CharR(eps, t) for eps, t in _match_signs(ts, shifted)]

    # what is left of this class is the phi part
    rest = ge_div(plain, gamma_param_direct(Parameter(Field.REAL, tuple(lams))))
    orders = _probe(rest, r, window)
    us = [-(r + k) for k in _peel(orders, q, step=1)]
    # numerator poles of γ(phi_{-N,u}) at 1 - u + N, so u - N = 1 - z
    diffs = [1 - (r + k) for k in _zero_starts(orders)]
    phis = [Disc2R(N, u) for u, N in _pair_monotone(us, diffs)]
    return [*lams, *phis]


def _reconstruct_real(oracle: GammaOracle, bounds: SearchBounds) -> Parameter:
    trivial, sign = CharR(0, GaussQ()), CharR(1, GaussQ())
    plain, signed = oracle.query(trivial), oracle.query(sign)
    windows = class_windows(plain)
    for r, (lo, hi) in class_windows(signed).items():
        old = windows.get(r, (lo, hi))
        windows[r] = (min(lo, old[0]), max(hi, old[1]))
    found: List[Constituent] = []
    try:
        for r, window in sorted(windows.items(), key=lambda kv: kv[0].sort_key()):
            block = _real_block(plain, signed, r, window)
            logger.debug(f"Real reconstruction, class {r}: {[str(c) for c in block]}")
            found.extend(block)
    except _Inconsistent as e:
        raise ReconstructionError(str(e), character=trivial, expression=plain) from None
    candidate = normalize(Field.REAL, found)
    _verify(oracle, candidate, [trivial, sign])
    return candidate


_RECONSTRUCTORS: Dict[Field, Callable[[GammaOracle, SearchBounds], Parameter]] = {
    Field.COMPLEX: _reconstruct_complex,
    Field.REAL: _reconstruct_real,
}


def reconstruct(oracle: GammaOracle, bounds: SearchBounds) -> Parameter:
    """The generic parameter whose twisted gamma factors the oracle reports."""
    result = _RECONSTRUCTORS[oracle.field](oracle, bounds)
    logger.debug(f"Reconstructed {result}")
    return result
