"""Torsion-homology growth of abelian covers, driven by Alexander
polynomials supplied as data.

The interface deliberately stops at the polynomial: computing Alexander
polynomials from diagrams or chain complexes is out of scope, because the
known reduction makes the first nonzero Alexander polynomial the complete
input for torsion growth.  For a knot (d = 1) the torsion order of the
N-fold cyclic branched cover is the classical product
|prod_{k=1}^{N-1} Delta(zeta_N^k)|, an exact integer here via resultants
with zero factors (Betti-number jumps) skipped exactly and flagged.  For
d-component links the product runs over mu_N^d through the dynamics count.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

from .dynamics import CyclicAction, component_count
from .errors import DegenerateInputError
from .laurent import LaurentPoly
from .mahler import make_record, mahler_quadrature
from .resultants import torsion_product
from .roots import mahler_d1


@dataclass(frozen=True)
class AlexanderData:
    """Ordered Alexander polynomials (Delta_0, Delta_1, ...) of a link or of
    the relevant homology module, in d variables."""

    polys: tuple
    d: int

    def __init__(self, polys, d=None):
        polys = tuple(polys)
        if not polys:
            raise ValueError("need at least one Alexander polynomial slot")
        dims = {p.dim for p in polys if not p.is_zero}
        if d is None:
            if not dims:
                raise ValueError("cannot infer rank from all-zero data")
            d = dims.pop() if len(dims) == 1 else None
        if d is None or (dims and dims != {d}):
            raise ValueError("inconsistent variable counts across the polynomials")
        object.__setattr__(self, "polys", polys)
        object.__setattr__(self, "d", int(d))


def first_nonzero(data: AlexanderData) -> LaurentPoly:
    """The first nonzero entry; all-zero input is declared degenerate."""
    for p in data.polys:
        if not p.is_zero:
            return p
    raise DegenerateInputError("all Alexander polynomials are zero")


@dataclass(frozen=True)
class TorsionOrder:
    order: int
    betti_jump: bool
    skipped_orders: tuple  # exact orders M | N at which Delta vanished


def torsion_order(delta: LaurentPoly, n: int) -> TorsionOrder:
    """|H_1|_tors of the N-fold cyclic branched cover from the Alexander
    polynomial: the exact integer |prod_{k=1}^{N-1} Delta(zeta_N^k)| with
    vanishing factors skipped (each skip is a Betti jump, reported, never
    interpolated)."""
    if delta.dim != 1:
        raise ValueError("torsion_order is the d = 1 (knot) route; use torsion_growth for links")
    if delta.is_zero:
        raise ValueError("zero Alexander polynomial; take the first nonzero one")
    tp = torsion_product(delta.to_unipoly(), n, skip_order_one=True)
    skipped = tuple(sorted(m for m in tp.zero_orders if m != 1))
    return TorsionOrder(order=tp.value, betti_jump=bool(skipped), skipped_orders=skipped)


def torsion_growth(data: AlexanderData, n_list, workers=1, quadrature_resolution=1024):
    """ConvergenceRecords of N^{-d} log |H_1|_tors against m(Delta) for the
    first nonzero Alexander polynomial Delta."""
    delta = first_nonzero(data)
    if delta.dim == 1:
        target = mahler_d1(delta.to_unipoly())
    else:
        target, _ = mahler_quadrature(delta, resolution=quadrature_resolution)
    records = []
    for n in n_list:
        if delta.dim == 1:
            t = torsion_order(delta, n)
            stat = math.log(t.order) / n
            aux = {"betti_jump": t.betti_jump, "order_digits": len(str(t.order))}
        else:
            count = component_count(CyclicAction(delta), n)
            stat = math.log(count) / n**delta.dim
            aux = {"order_digits": len(str(count))}
        records.append(make_record(n, stat, target, aux))
    return records


# ---------------------------------------------------------------------------
# built-in catalog


def load_catalog():
    """Built-in named links with their Alexander polynomials (JSON package
    data; users can ship the same format in their own files)."""
    text = resources.files("mahlerlab").joinpath("data/knots.json").read_text()
    raw = json.loads(text)
    catalog = {}
    for entry in raw["links"]:
        polys = [LaurentPoly.from_json(p) for p in entry["alexander"]]
        catalog[entry["name"]] = AlexanderData(polys, d=entry["components"])
    return catalog


def catalog_entry(name):
    cat = load_catalog()
    if name not in cat:
        raise KeyError(f"unknown catalog entry {name!r}; have {sorted(cat)}")
    return cat[name]
