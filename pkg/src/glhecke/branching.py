"""Brute-force branching oracle over products of O(2) and O(1) factors.

The irreducible O(2) representations are the trivial and determinant
characters plus the two-dimensional V(j), j >= 1; V(0) is shorthand for
triv + sgn and is never stored.  Tensor rule:

    V(j) (x) V(j') = V(|j - j'|) + V(j + j'),   sgn (x) V(j) = V(j),
    sgn (x) sgn = triv,                          triv is the identity.

:func:`tensor_power_standard` decomposes the k-th tensor power of the
n-dimensional standard representation as a module over O(2)^s x O(1)^m
(n = 2s + m) by k-fold tensoring, with exact integer multiplicities and no
character-theoretic shortcuts.  :func:`hom_multiplicity` reads off one
multiplicity from that table; it never consults the closed dimension
formula it is used to cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .realparams import GL2Factor, RealParam

__all__ = [
    "O2Label",
    "TRIV",
    "SGN",
    "V",
    "tensor_o2",
    "tensor_power",
    "tensor_power_standard",
    "total_dimension",
    "hom_multiplicity",
]


@dataclass(frozen=True, order=True)
class O2Label:
    kind: str  # '1', 'sgn', or 'V'
    j: int = 0

    def __post_init__(self):
        if self.kind == "V":
            if self.j < 1:
                raise ValueError("V(j) requires j >= 1; V(0) is triv + sgn")
        elif self.kind in ("1", "sgn"):
            if self.j != 0:
                raise ValueError(f"{self.kind} carries no index")
        else:
            raise ValueError(f"unknown O(2) label kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return 2 if self.kind == "V" else 1

    def __str__(self):
        return f"V({self.j})" if self.kind == "V" else self.kind


TRIV = O2Label("1")
SGN = O2Label("sgn")


def V(j: int) -> O2Label:
    return O2Label("V", j)


def _expand_v(j: int) -> tuple[O2Label, ...]:
    if j == 0:
        return (TRIV, SGN)
    return (V(j),)


def tensor_o2(a: O2Label, b: O2Label) -> tuple[O2Label, ...]:
    """Multiset of irreducible summands of a (x) b, as a sorted tuple.

    >>> [str(x) for x in tensor_o2(V(1), V(1))]
    ['1', 'V(2)', 'sgn']
    """
    if a.kind == "1":
        return (b,)
    if b.kind == "1":
        return (a,)
    if a.kind == "sgn" and b.kind == "sgn":
        return (TRIV,)
    if a.kind == "sgn":
        return (b,)
    if b.kind == "sgn":
        return (a,)
    return tuple(sorted(_expand_v(abs(a.j - b.j)) + _expand_v(a.j + b.j)))


Decomposition = Mapping[tuple[O2Label, ...], int]

_power_cache: dict[tuple[tuple[str, ...], int], dict] = {}


def tensor_power(slot_kinds: tuple[str, ...], k: int) -> Decomposition:
    """Decomposition of the k-th tensor power of the standard representation
    over the product of compact factors named by ``slot_kinds``.

    Each slot is ``'o2'`` or ``'o1'``.  The standard representation itself is
    the sum of one V(1) per o2 slot and one sgn per o1 slot, all other slots
    acting trivially; its k-th power is expanded by repeated tensoring.
    """
    for kind in slot_kinds:
        if kind not in ("o2", "o1"):
            raise ValueError(f"slot kind must be 'o2' or 'o1', got {kind!r}")
    if k < 0:
        raise ValueError("k must be >= 0")
    key = (tuple(slot_kinds), k)
    if key in _power_cache:
        return _power_cache[key]
    state: dict[tuple[O2Label, ...], int] = {tuple(TRIV for _ in slot_kinds): 1}
    for _ in range(k):
        nxt: dict[tuple[O2Label, ...], int] = {}
        for labels, mult in state.items():
            for i, kind in enumerate(slot_kinds):
                if kind == "o2":
                    summands = tensor_o2(labels[i], V(1))
                else:
                    summands = tensor_o2(labels[i], SGN)
                for lab in summands:
                    key2 = labels[:i] + (lab,) + labels[i + 1 :]
                    nxt[key2] = nxt.get(key2, 0) + mult
        state = nxt
    _power_cache[key] = state
    return state


def tensor_power_standard(s: int, m: int, k: int) -> Decomposition:
    """Same as :func:`tensor_power` with the s o2 slots listed first."""
    return tensor_power(("o2",) * s + ("o1",) * m, k)


def total_dimension(decomp: Decomposition) -> int:
    total = 0
    for labels, mult in decomp.items():
        d = 1
        for lab in labels:
            d *= lab.dim
        total += mult * d
    return total


def hom_multiplicity(param: RealParam, k: int) -> int:
    """Multiplicity of the lowest dual type of ``param`` (twisted by the
    determinant character) inside the k-th tensor power of the standard
    representation.

    Target per slot: V(l) for a GL(2) factor, sgn for a trivial GL(1)
    factor, triv for a sign GL(1) factor.  Only valid for level >= k, where
    no higher type of the factors can contribute.
    """
    lev = param.level
    if lev < k:
        raise ValueError(
            f"oracle is only valid for level >= k; got level {lev} and k={k}"
        )
    slot_kinds = []
    target = []
    for f in param.factors:
        if isinstance(f, GL2Factor):
            slot_kinds.append("o2")
            target.append(V(f.l))
        else:
            slot_kinds.append("o1")
            target.append(SGN if f.eps == "triv" else TRIV)
    decomp = tensor_power(tuple(slot_kinds), k)
    return decomp.get(tuple(target), 0)
