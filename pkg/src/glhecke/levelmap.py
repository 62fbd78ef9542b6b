"""The level-k parameter map from real parameters to multisegments.

A factor of level zero (a sign GL(1) character) is dropped; a trivial GL(1)
character with twist ``nu`` becomes the singleton segment {nu}; a GL(2)
factor with lowest O(2)-type ``l`` and twist ``nu`` becomes the length-l
segment centered at ``nu``.  The map is defined on parameters of level >= k:
level > k maps to zero, level = k maps to the multisegment class above.

On the level = k locus the induced module has dimension k!/prod(level_i!),
its restriction to the symmetric group is induced-from-sign over the Young
subgroup of the nonzero levels, and the weight of the generating vector is
given position by position by a closed form reproduced here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .multisegments import (
    Multisegment,
    Segment,
    central_character,
    dominant_representative,
    enumerate_multisegments,
    multisegment_to_json,
)
from .realparams import (
    GL1Factor,
    RealParam,
    enumerate_real_params,
    real_param_to_json,
)
from .scalars import Scalar

__all__ = [
    "gamma",
    "factor_order_image",
    "dimension_std",
    "w_structure",
    "position_eigenvalues",
    "eigenvalue_identity",
    "BijectionReport",
    "verify_bijection_level_n",
]


def _require_level_at_least(param: RealParam, k: int) -> int:
    lev = param.level
    if lev < k:
        raise ValueError(
            f"parameter has level {lev} < k={k}; the map is only defined for level >= k"
        )
    return lev


def factor_order_image(param: RealParam) -> Multisegment:
    """Image multisegment in factor order (no dominance reordering).

    Defined for any parameter; sign factors are dropped.  The result need
    not have weakly decreasing centers even when the input is dominant.
    """
    segs = []
    for f in param.factors:
        if isinstance(f, GL1Factor):
            if f.eps == "sgn":
                continue
            segs.append(Segment(f.nu, 1))
        else:
            segs.append(Segment(f.nu - Scalar(Fraction(f.l - 1, 2)), f.l))
    return Multisegment(tuple(segs))


def gamma(param: RealParam, k: int) -> Optional[Multisegment]:
    """Level-k image of ``param``: ``None`` encodes the zero module.

    Raises if level < k (outside the domain of the correspondence).
    """
    lev = _require_level_at_least(param, k)
    if lev > k:
        return None
    return dominant_representative(factor_order_image(param))


def dimension_std(param: RealParam, k: int) -> int:
    """k!/prod(level_i!) on the level-k locus, 0 above it."""
    lev = _require_level_at_least(param, k)
    if lev > k:
        return 0
    denom = 1
    for f in param.factors:
        denom *= math.factorial(f.level)
    return math.factorial(k) // denom


def w_structure(param: RealParam, k: int) -> tuple[int, ...]:
    """Composition of the nonzero factor levels, in factor order.

    The symmetric-group restriction of the induced module is induced from
    the sign character of the corresponding Young subgroup.
    """
    lev = param.level
    if lev != k:
        raise ValueError(f"w_structure needs level == k, got level {lev} and k={k}")
    comp = tuple(f.level for f in param.factors if f.level > 0)
    assert sum(comp) == k
    return comp


def position_eigenvalues(param: RealParam, k: int) -> tuple[Scalar, ...]:
    """Closed-form weight of the generating vector, one entry per position.

    Position ``ell`` (1-based) inside the block of the p-th nonzero-level
    factor carries nu'_p - (level_p - 1)/2 + (ell - prec(ell) - 1), where
    prec(ell) is the number of positions in earlier blocks.
    """
    lev = param.level
    if lev != k:
        raise ValueError(f"eigenvalues need level == k, got level {lev} and k={k}")
    out: list[Scalar] = []
    prec = 0
    for f in param.factors:
        if f.level == 0:
            continue
        half = Scalar(Fraction(f.level - 1, 2))
        for j in range(f.level):
            # ell = prec + j + 1, so ell - prec - 1 = j
            out.append(f.nu - half + j)
        prec += f.level
    assert len(out) == k
    return tuple(out)


def eigenvalue_identity(param: RealParam, k: int) -> bool:
    """Check the closed-form weight against the central character of the
    factor-order image, coordinate by coordinate."""
    eig = position_eigenvalues(param, k)
    cc = central_character(factor_order_image(param))
    return eig == cc


@dataclass
class BijectionReport:
    """Outcome of matching level-n classes against multisegment classes.

    ``bijection`` is the literal verdict for the full level-n locus.  A
    parameter whose image has support different from ``lam`` (possible when
    a GL(2) factor's interior points are not matched by sign factors; such
    images carry a different central character) is listed in
    ``off_support``; ``bijection_on_support_matching`` is the verdict with
    those parameters excluded, which is the statement the functor actually
    supports block by block.
    """

    lam: tuple[int, ...]
    pairs: list[tuple[RealParam, Multisegment]]
    missing: list[Multisegment] = field(default_factory=list)
    collisions: list[tuple[Multisegment, list[RealParam]]] = field(default_factory=list)
    off_support: list[tuple[RealParam, Multisegment]] = field(default_factory=list)

    @property
    def bijection(self) -> bool:
        return not self.missing and not self.collisions and not self.off_support

    @property
    def bijection_on_support_matching(self) -> bool:
        return not self.missing and not self.collisions

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "pairs": [
                {"real": real_param_to_json(p), "hecke": multisegment_to_json(ms)}
                for p, ms in self.pairs
            ],
            "bijection": self.bijection,
            "bijection_on_support_matching": self.bijection_on_support_matching,
            "missing": [multisegment_to_json(ms) for ms in self.missing],
            "collisions": [
                {
                    "hecke": multisegment_to_json(ms),
                    "reals": [real_param_to_json(p) for p in ps],
                }
                for ms, ps in self.collisions
            ],
            "off_support": [
                {"real": real_param_to_json(p), "hecke": multisegment_to_json(ms)}
                for p, ms in self.off_support
            ],
        }


def verify_bijection_level_n(lam: Sequence[int]) -> BijectionReport:
    """Match the level-n classes at ``lam`` against the multisegment classes
    with support ``lam`` through the level map; failures are reported, not
    raised."""
    lam = tuple(lam)
    n = len(lam)
    params = [p for p in enumerate_real_params(lam, n) if p.level == n]
    targets = set(enumerate_multisegments(lam))
    hit: dict[Multisegment, list[RealParam]] = {}
    pairs = []
    off_support = []
    for p in params:
        ms = gamma(p, n)
        assert ms is not None
        pairs.append((p, ms))
        if ms in targets:
            hit.setdefault(ms, []).append(p)
        else:
            off_support.append((p, ms))
    missing = [ms for ms in enumerate_multisegments(lam) if ms not in hit]
    collisions = [(ms, ps) for ms, ps in hit.items() if len(ps) > 1]
    return BijectionReport(
        lam=lam, pairs=pairs, missing=missing, collisions=collisions, off_support=off_support
    )
