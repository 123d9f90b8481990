"""Mahler measure engines and the convergence experiment.

Three independent routes to m(P):

* `mahler_d1` (univariate): Jensen's formula, log|lead| plus log-moduli of
  the certified roots outside the unit circle, cyclotomic factors removed
  exactly first.  Certified absolute error.
* `mahler_quadrature` (any d): tensor midpoint rule over offset grids
  {(k + delta)/R}; the log singularity is integrable, and averaging several
  fixed offsets gives an empirical spread in place of a certified bound.
* `torsion_average` (the dynamical statistic A_N): the average of log|P|
  over nonvanishing N-torsion points.  For d = 1 this is computed exactly,
  as log of the exact integer product of |P| over the contributing points
  divided by N; for d >= 2 it comes from the certified sweep.

`truncated_average` realizes the bulk/tail decomposition of A_N at a cutoff
T: bulk averages max(-T, log|P|), the tail census lists the points below -T,
and the recombination identity bulk - tail_mass/N^d = A_N is checked in
exact integer arithmetic, not approximately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .laurent import LaurentPoly
from .resultants import torsion_product
from .roots import mahler_d1  # re-exported: the univariate engine lives with the roots
from .sweep import (
    DyadicSum,
    _BLOCK_TARGET,
    _ESCALATED_BUDGET,
    _SCALE_BITS,
    _block_values,
    _blocks,
    _eval_error_bound,
    _index_to_exps,
    sweep,
)
from .torsion import TorsionPoint

__all__ = [
    "ConvergenceRecord",
    "TruncationReport",
    "mahler_d1",
    "mahler_quadrature",
    "torsion_average",
    "truncated_average",
    "convergence_table",
]

# fixed offset family for the quadrature grids; deterministic by design
_DEFAULT_OFFSETS_1D = (0.5, 0.25, 0.75, 0.381966011250105)  # last: 1 - 1/golden


def default_offsets(dim, count=4):
    out = []
    for k in range(count):
        base = _DEFAULT_OFFSETS_1D[k % len(_DEFAULT_OFFSETS_1D)]
        vec = tuple((base + 0.11 * i) % 1.0 for i in range(dim))
        out.append(vec)
    return out


@dataclass(frozen=True)
class ConvergenceRecord:
    """One row of a convergence table: statistic vs target at level N."""

    n: int
    statistic: float
    target: float
    gap: float
    aux: dict = field(default_factory=dict)

    def csv_row(self):
        row = {
            "N": self.n,
            "statistic": repr(self.statistic),
            "target": repr(self.target),
            "gap": repr(self.gap),
        }
        for k in sorted(self.aux):
            row[k] = self.aux[k]
        return row


def make_record(n, statistic, target, aux=None):
    return ConvergenceRecord(
        n=n, statistic=statistic, target=target, gap=statistic - target, aux=aux or {}
    )


# ---------------------------------------------------------------------------
# quadrature engine


def mahler_quadrature(
    p: LaurentPoly,
    resolution=1024,
    offsets=None,
    max_points=2**24,
    retry_shift=0.0112358,
):
    """(estimate, spread) for m(P) by averaging log|P| over offset midpoint
    grids {(k + delta)/R}^d.

    Each offset vector delta yields one estimate; the returned value is
    their mean and the spread is max - min, an empirical error proxy (the
    certified engines are elsewhere).  A grid that hits the zero locus
    exactly is retried with a perturbed offset; the hit is recorded in the
    report rather than averaged as -inf.
    """
    if p.is_zero:
        raise ValueError("Mahler measure of the zero polynomial is undefined")
    d = p.dim
    r = int(resolution)
    if r < 2:
        raise ValueError("resolution must be >= 2")
    if r**d > max_points:
        raise ValueError(f"grid of size {r}^{d} exceeds max_points={max_points}")
    offsets = list(offsets) if offsets is not None else default_offsets(d)
    estimates = []
    retries = []
    for delta in offsets:
        delta = tuple(float(x) % 1.0 for x in delta)
        for attempt in range(8):
            est = _quadrature_single(p, r, delta)
            if est is not None:
                estimates.append(est)
                break
            retries.append(delta)
            delta = tuple((x + retry_shift) % 1.0 for x in delta)
        else:
            raise ArithmeticError("quadrature kept hitting the zero locus; polynomial may vanish identically on the torus grid family")
    mean = float(np.mean(estimates))
    spread = float(max(estimates) - min(estimates)) if len(estimates) > 1 else 0.0
    return mean, spread


def _quadrature_single(p, r, delta):
    d = p.dim
    axes = [np.exp(2j * np.pi * (np.arange(r) + delta[i]) / r) for i in range(d)]
    vals = np.zeros((r,) * d, dtype=np.complex128)
    for exps, c in sorted(p.terms.items()):
        term = np.array(float(c), dtype=np.complex128)
        for i, e in enumerate(exps):
            shape = [1] * d
            shape[i] = r
            term = term * (axes[i] ** e).reshape(shape)
        vals = vals + term
    absv = np.abs(vals)
    if np.any(absv == 0.0):
        return None
    return float(np.mean(np.log(absv)))


# ---------------------------------------------------------------------------
# torsion average A_N


def torsion_average(p: LaurentPoly, n: int, workers=1):
    """A_N = (1/N^d) sum of log|P(zeta)| over N-torsion points with
    P(zeta) != 0 (normalization by all N^d points, zeros contributing 0).

    d = 1 uses the exact integer product (certified to float rounding,
    well below 1e-12); d >= 2 uses the certified sweep (per-point budget
    2^-20, so the average is at least that accurate).
    """
    if p.is_zero:
        raise ValueError("A_N of the zero polynomial is undefined")
    if p.dim == 1:
        tp = torsion_product(p.to_unipoly(), n)
        return math.log(tp.value) / n
    s = sweep(p, n, workers=workers)
    return s.log_sum / s.n_points


def torsion_average_exact_d1(p: LaurentPoly, n: int):
    """The exact integer product behind A_N for d = 1, for callers that
    want the integer itself."""
    return torsion_product(p.to_unipoly(), n)


# ---------------------------------------------------------------------------
# truncation decomposition


@dataclass(frozen=True)
class TruncationReport:
    """Bulk/tail decomposition of A_N at cutoff T.

    bulk averages f_T = max(-T, log|P|) over nonvanishing points;
    tail_points lists the census below -T; tail_mass is the total excess
    sum(-T - log|P|) over the tail.  identity_exact records the exact
    integer-arithmetic check bulk*N^d - tail_mass*N^d = log_sum.
    """

    n: int
    t: float
    bulk: float
    tail_points: tuple
    tail_mass: float
    a_n: float
    zero_count: int
    identity_exact: bool
    bulk_scaled: int = field(repr=False)
    excess_scaled: int = field(repr=False)
    total_scaled: int = field(repr=False)


def truncated_average(p: LaurentPoly, n: int, t, workers=1, precision_cap=8192):
    """Decompose A_N into bulk and tail at cutoff T > 0 (see
    TruncationReport).  All three accumulators are exact dyadic integers,
    and the recombination identity is asserted exactly."""
    from .evaluate import log_abs_certified

    if t <= 0:
        raise ValueError("truncation level T must be positive")
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    dim = p.dim
    n_points = n**dim
    minus_t = -float(t)
    eval_err = _eval_error_bound(p)
    thresh = eval_err * 2.0**22
    lut = np.exp((2j * np.pi / n) * np.arange(n))

    total = DyadicSum()
    bulk = DyadicSum()
    tail_v = DyadicSum()
    tail_points = []
    zero_count = 0

    for lo, hi in _blocks(n, dim):
        vals = _block_values(p, n, lo, hi, lut)
        absv = np.abs(vals)
        flagged = np.nonzero(absv < thresh)[0]
        logs = np.log(np.maximum(absv, 1e-300))
        ok = np.ones(len(vals), dtype=bool)
        ok[flagged] = False
        ok_logs = logs[np.nonzero(ok)[0]]
        total.add_many(ok_logs.tolist())
        bulk.add_many(np.maximum(ok_logs, minus_t).tolist())
        tail_sel = np.nonzero(ok & (logs < minus_t))[0]
        tail_v.add_many(logs[tail_sel].tolist())
        for i in tail_sel:
            pt = TorsionPoint(n, _index_to_exps(int(i), n, dim, lo))
            tail_points.append((pt, float(logs[i])))
        for i in flagged:
            pt = TorsionPoint(n, _index_to_exps(int(i), n, dim, lo))
            val, _ = log_abs_certified(
                p, pt, _ESCALATED_BUDGET, precision_cap=precision_cap
            )
            if val is None:
                zero_count += 1
                continue
            total.add(val)
            bulk.add(max(val, minus_t))
            if val < minus_t:
                tail_v.add(val)
                tail_points.append((pt, val))

    tail_points.sort(key=lambda item: item[0].exps)
    scale = 2**_SCALE_BITS
    minus_t_scaled = DyadicSum()
    minus_t_scaled.add(minus_t)
    excess_scaled = len(tail_points) * minus_t_scaled.scaled - tail_v.scaled
    identity = total.scaled == bulk.scaled - excess_scaled

    denom = scale * n_points
    return TruncationReport(
        n=n,
        t=float(t),
        bulk=float(Fraction(bulk.scaled, denom)),
        tail_points=tuple(tail_points),
        tail_mass=float(Fraction(excess_scaled, scale)),
        a_n=float(Fraction(total.scaled, denom)),
        zero_count=zero_count,
        identity_exact=identity,
        bulk_scaled=bulk.scaled,
        excess_scaled=excess_scaled,
        total_scaled=total.scaled,
    )


# ---------------------------------------------------------------------------
# convergence tables


def convergence_table(
    p: LaurentPoly,
    n_list,
    workers=1,
    target=None,
    quadrature_resolution=1024,
    d1_tol=1e-12,
):
    """One ConvergenceRecord per N: statistic A_N against the Mahler
    measure target (Jensen for d = 1, offset quadrature for d >= 2, or a
    caller-supplied value)."""
    if target is None:
        if p.dim == 1:
            target = mahler_d1(p.to_unipoly(), tol=d1_tol)
            target_aux = {"target_engine": "jensen"}
        else:
            target, spread = mahler_quadrature(p, resolution=quadrature_resolution)
            target_aux = {"target_engine": "quadrature", "target_spread": spread}
    else:
        target_aux = {"target_engine": "caller"}
    records = []
    for n in n_list:
        if p.dim == 1:
            tp = torsion_product(p.to_unipoly(), n)
            stat = math.log(tp.value) / n
            zero_count = tp.zero_count
        else:
            s = sweep(p, n, workers=workers)
            stat = s.log_sum / s.n_points
            zero_count = s.zero_count
        aux = {"zero_count": zero_count}
        aux.update(target_aux)
        records.append(make_record(n, stat, target, aux))
    return records
