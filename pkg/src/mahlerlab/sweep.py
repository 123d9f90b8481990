"""Full sweeps of a Laurent polynomial over mu_N^d with certified values.

Strategy per point: a vectorized double-precision evaluation with an a
priori rounding bound EVAL_ERR decides cheaply whether log|P| is already
certified to the 2^-20 budget; only points whose enclosure cannot exclude
zero at that resolution are escalated through arbitrary-precision ball
arithmetic, and only balls that still straddle zero trigger the exact
cyclotomic vanishing test.  Zeros are therefore detected exactly, never
numerically.

Accumulation is exact: every per-point log (a float64) is added into an
integer accumulator scaled by 2^1074, so block sums combine associatively
and the reported totals are independent of worker count down to the last
bit.  The index space [0,N)^d is cut into fixed slabs along the first
coordinate; inside a slab the grid is enumerated in odometer order (last
coordinate fastest).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import PrecisionExhausted
from .evaluate import log_abs_certified
from .laurent import LaurentPoly
from .torsion import TorsionPoint

# per-point absolute error budget for log|P| (the certification contract)
LOG_ERROR_BUDGET = 2.0**-20
# escalated points are resolved a bit tighter, leaving slack for float log
_ESCALATED_BUDGET = 2.0**-21
_SCALE_BITS = 1074  # every finite float64 times 2^1074 is an integer
_BLOCK_TARGET = 8192  # points per slab; fixed, so block layout never depends on workers


class DyadicSum:
    """Exact sum of float64 values as an integer scaled by 2^1074."""

    __slots__ = ("scaled",)

    def __init__(self, scaled=0):
        self.scaled = scaled

    def add(self, x):
        num, den = float(x).as_integer_ratio()
        self.scaled += num * (2**_SCALE_BITS // den)

    def add_many(self, values):
        s = self.scaled
        shift = 2**_SCALE_BITS
        for x in values:
            num, den = x.as_integer_ratio()
            s += num * (shift // den)
        self.scaled = s

    def merge(self, other):
        self.scaled += other.scaled

    def to_float(self):
        if self.scaled == 0:
            return 0.0
        from fractions import Fraction

        return float(Fraction(self.scaled, 2**_SCALE_BITS))

    def __eq__(self, other):
        return isinstance(other, DyadicSum) and self.scaled == other.scaled


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate of one full pass over mu_N^d.

    log_sum is the exact-accumulated sum of log|P(zeta)| over the points
    where P does not vanish; zero_count + contributing points = N^d.
    near_min lists the certified-nonzero points with log|P| at or below the
    census threshold, in odometer order.
    """

    n: int
    dim: int
    zero_count: int
    log_sum: float
    min_log: float
    argmin: TorsionPoint | None
    near_min: tuple
    threshold: float | None
    zero_points: tuple
    max_precision_bits: int
    n_points: int
    log_sum_scaled: int = field(repr=False)

    def contributing(self):
        return self.n_points - self.zero_count

    def csv_row(self):
        argmin = ";".join(map(str, self.argmin.exps)) if self.argmin else ""
        return {
            "N": self.n,
            "d": self.dim,
            "zero_count": self.zero_count,
            "log_sum": repr(self.log_sum),
            "min_log": repr(self.min_log),
            "argmin_exps": argmin,
            "threshold": "" if self.threshold is None else repr(self.threshold),
            "census_size": len(self.near_min),
        }


def _blocks(n, dim):
    """Fixed slab partition of the first coordinate; independent of workers."""
    per_row = n ** (dim - 1)
    width = max(1, _BLOCK_TARGET // max(1, per_row))
    width = min(width, n)
    return [(lo, min(lo + width, n)) for lo in range(0, n, width)]


def _eval_error_bound(p: LaurentPoly):
    """Rigorous per-point bound for the double-precision grid evaluation:
    unit-circle table entries are wrong by at most eta = 2^-48 (angle
    rounding plus exp), coefficient scaling and the term-by-term sum add a
    few eps each. The 1.25 factor absorbs the bound's own float rounding."""
    s = float(p.coeff_abs_sum())
    t = p.num_terms()
    eta = 2.0**-48
    eps = 2.0**-52
    return 1.25 * s * (eta + (t + 2) * eps)


def _block_values(p, n, lo, hi, lut):
    """Complex values of P on the slab [lo,hi) x [0,N)^(d-1), C-ordered."""
    dim = p.dim
    ranges = [np.arange(lo, hi, dtype=np.int64)] + [
        np.arange(n, dtype=np.int64) for _ in range(dim - 1)
    ]
    grids = np.meshgrid(*ranges, indexing="ij") if dim > 1 else [ranges[0]]
    shape = grids[0].shape
    vals = np.zeros(shape, dtype=np.complex128)
    for exps, c in sorted(p.terms.items()):
        idx = np.zeros(shape, dtype=np.int64)
        for e, g in zip(exps, grids):
            if e:
                idx += e * g
        np.remainder(idx, n, out=idx)
        vals += float(c) * lut[idx]
    return vals.reshape(-1)


def _index_to_exps(flat_index, n, dim, lo):
    """Invert C-order flattening of the slab grid."""
    exps = []
    for _ in range(dim - 1):
        exps.append(flat_index % n)
        flat_index //= n
    exps.append(lo + flat_index)
    return tuple(reversed(exps))


def sweep(
    p: LaurentPoly,
    n: int,
    census_threshold=None,
    workers=1,
    start_precision=64,
    precision_cap=8192,
) -> SweepSummary:
    """Iterate all N^d torsion points; certify every log-modulus to within
    2^-20 before accumulation; detect zeros exactly.

    The result is bit-identical for any worker count: block layout is a
    function of (N, d) alone, per-block values come from the same vectorized
    code path, and sums are accumulated exactly.
    """
    if p.is_zero:
        raise ValueError("cannot sweep the zero polynomial")
    if n < 1:
        raise ValueError("N must be >= 1")
    if census_threshold is not None and census_threshold > 0:
        raise ValueError("census threshold must be <= 0")
    dim = p.dim
    n_points = n**dim
    eval_err = _eval_error_bound(p)
    thresh = eval_err * 2.0**22  # below this, the fast enclosure may not exclude 0
    lut = np.exp((2j * np.pi / n) * np.arange(n))
    blocks = _blocks(n, dim)

    def do_block(block):
        lo, hi = block
        vals = _block_values(p, n, lo, hi, lut)
        absv = np.abs(vals)
        flagged = np.nonzero(absv < thresh)[0]
        logs = np.log(np.maximum(absv, 1e-300))
        ok = np.ones(len(vals), dtype=bool)
        ok[flagged] = False
        acc = DyadicSum()
        acc.add_many(logs[ok].tolist())
        if np.any(ok):
            ok_idx = np.nonzero(ok)[0]
            sub = logs[ok_idx]
            pos = int(np.argmin(sub))
            blk_min = float(sub[pos])
            blk_arg = int(ok_idx[pos])
        else:
            blk_min, blk_arg = math.inf, -1
        census_idx = ()
        if census_threshold is not None:
            census_idx = tuple(
                int(i) for i in np.nonzero(ok & (logs <= census_threshold))[0]
            )
        return {
            "block": block,
            "acc": acc,
            "count_ok": int(np.count_nonzero(ok)),
            "min": blk_min,
            "argmin": blk_arg,
            "flagged": tuple(int(i) for i in flagged),
            "census_idx": census_idx,
            "logs": logs,
        }

    if workers > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(do_block, blocks))
    else:
        results = [do_block(b) for b in blocks]

    total = DyadicSum()
    zero_points = []
    near_min = []
    min_log = math.inf
    argmin = None
    max_prec = start_precision
    contributing = 0

    for res in results:  # fixed block order
        lo, _ = res["block"]
        total.merge(res["acc"])
        contributing += res["count_ok"]
        if res["min"] < min_log:
            min_log = res["min"]
            argmin = TorsionPoint(n, _index_to_exps(res["argmin"], n, dim, lo))
        for i in res["census_idx"]:
            pt = TorsionPoint(n, _index_to_exps(i, n, dim, lo))
            near_min.append((pt, float(res["logs"][i])))
        # escalated points, in odometer order inside the block
        for i in res["flagged"]:
            pt = TorsionPoint(n, _index_to_exps(i, n, dim, lo))
            val, prec = log_abs_certified(
                p,
                pt,
                _ESCALATED_BUDGET,
                start_precision=start_precision,
                precision_cap=precision_cap,
            )
            max_prec = max(max_prec, prec)
            if val is None:
                zero_points.append(pt)
                continue
            contributing += 1
            total.add(val)
            if val < min_log:
                min_log = val
                argmin = pt
            if census_threshold is not None and val <= census_threshold:
                near_min.append((pt, val))

    near_min.sort(key=lambda item: item[0].exps)
    zero_points.sort(key=lambda z: z.exps)
    zero_count = len(zero_points)
    assert zero_count + contributing == n_points, "partition invariant violated"
    return SweepSummary(
        n=n,
        dim=dim,
        zero_count=zero_count,
        log_sum=total.to_float(),
        min_log=min_log,
        argmin=argmin,
        near_min=tuple(near_min),
        threshold=census_threshold,
        zero_points=tuple(zero_points),
        max_precision_bits=max_prec,
        n_points=n_points,
        log_sum_scaled=total.scaled,
    )


def log_value_grid(p: LaurentPoly, n: int, precision_cap=8192):
    """The full grid of certified log|P| values as an (N,)*d float array,
    with exact zeros marked +inf in a parallel boolean mask.

    Used by probes that need conjugate lookups (the log at zeta^sigma is
    another grid entry).  Memory is N^d floats; callers keep N desk-scale.
    """
    if p.is_zero:
        raise ValueError("cannot sweep the zero polynomial")
    dim = p.dim
    eval_err = _eval_error_bound(p)
    thresh = eval_err * 2.0**22
    lut = np.exp((2j * np.pi / n) * np.arange(n))
    vals = _block_values(p, n, 0, n, lut)
    absv = np.abs(vals)
    logs = np.log(np.maximum(absv, 1e-300))
    zero_mask = np.zeros(len(vals), dtype=bool)
    for i in np.nonzero(absv < thresh)[0]:
        exps = _index_to_exps(int(i), n, dim, 0)
        val, _ = log_abs_certified(
            p, TorsionPoint(n, exps), _ESCALATED_BUDGET, precision_cap=precision_cap
        )
        if val is None:
            zero_mask[i] = True
            logs[i] = math.inf
        else:
            logs[i] = val
    shape = (n,) * dim
    return logs.reshape(shape), zero_mask.reshape(shape)


def min_profile(p: LaurentPoly, n_list, workers=1):
    """Per-N minima of log|P| over nonvanishing points, with the
    phi(N)-normalized Diophantine exponent -min_log / phi(N)."""
    from .cyclo import totient

    rows = []
    for n in n_list:
        s = sweep(p, n, workers=workers)
        phi = totient(n)
        rows.append((n, s.min_log, s.min_log / phi))
    return rows


def summaries_to_csv(summaries, path):
    from .io import write_csv

    rows = [s.csv_row() for s in summaries]
    write_csv(path, rows, fieldnames=list(rows[0].keys()))
