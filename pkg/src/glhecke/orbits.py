"""Signed involutions, block moves, and the multisegment-to-orbit map.

An involution of {1..n} with signed fixed points of signature (p, q) records
a symmetric-subgroup orbit on a flag variety; p counts arcs plus '+' fixed
points, q counts arcs plus '-' fixed points.  A simple transposition inside
a block of the column structure acts by the three-case rule:

  (1) fixed points with opposite signs become an arc joining them;
  (2) fixed points with equal signs, or the arc joining the two positions,
      are left alone;
  (3) otherwise the transposition conjugates the involution.

Orbit classes are the symmetric-transitive closure of these one-step moves.

The map from a multisegment with integral support ``lam`` builds one column
per distinct value of ``lam`` (decreasing left to right, one cell per copy,
signed by the value's parity: even '+', odd '-'), joins, for each segment of
length >= 2 in weakly decreasing length order, a fresh cell in the column of
its maximum to a fresh cell in the column of its minimum, flips one fresh
cell in every strictly intermediate column when the endpoint parities agree,
and finally flattens the columns left to right.  Cells that were used or
flipped are never fresh again.  The flattening is ambiguous, but all choices
land in one orbit class; :func:`verify_psi_wellposed` checks that
exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .multisegments import Multisegment, enumerate_multisegments, segments_str

__all__ = [
    "SignedInvolution",
    "BlockStructure",
    "OrbitClass",
    "StructuralError",
    "make_involution",
    "column_blocks",
    "s_action",
    "orbit_class",
    "ColumnDiagram",
    "build_diagram",
    "initial_diagram",
    "flatten_diagram",
    "psi_g",
    "verify_psi_wellposed",
    "verify_injectivity",
    "render_diagram",
    "render_involution",
    "involution_to_json",
    "involution_from_json",
]


class StructuralError(RuntimeError):
    """A required fresh cell is missing; cannot happen for valid input."""


@dataclass(frozen=True)
class SignedInvolution:
    """Involution with signed fixed points; positions are 0-based internally.

    ``pairing[i]`` is the partner of position i (itself for fixed points);
    ``signs[i]`` is '+' or '-' for fixed points and None for arc members.
    """

    n: int
    pairing: tuple[int, ...]
    signs: tuple[Optional[str], ...]

    def __post_init__(self):
        if len(self.pairing) != self.n or len(self.signs) != self.n:
            raise ValueError("pairing and signs must have length n")
        for i, j in enumerate(self.pairing):
            if not 0 <= j < self.n or self.pairing[j] != i:
                raise ValueError("pairing is not an involution")
            if (i == j) != (self.signs[i] is not None):
                raise ValueError("signs must mark exactly the fixed points")
            if i == j and self.signs[i] not in ("+", "-"):
                raise ValueError("fixed-point signs must be '+' or '-'")

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            sorted((i, j) for i, j in enumerate(self.pairing) if i < j)
        )

    def signature(self) -> tuple[int, int]:
        n_arcs = len(self.arcs())
        plus = sum(1 for s in self.signs if s == "+")
        minus = sum(1 for s in self.signs if s == "-")
        return (n_arcs + plus, n_arcs + minus)

    def encode(self) -> tuple:
        code = {None: 0, "+": 1, "-": 2}
        return tuple((self.pairing[i], code[self.signs[i]]) for i in range(self.n))

    def __str__(self):
        return render_involution(self)


def make_involution(n: int, arcs: Iterable[tuple[int, int]], signs: dict[int, str]) -> SignedInvolution:
    """Build from 0-based arcs and a fixed-point sign map (exactly one sign
    per fixed point)."""
    pairing = list(range(n))
    sign_list: list[Optional[str]] = [None] * n
    for i, j in arcs:
        pairing[i], pairing[j] = j, i
    fixed = {i for i in range(n) if pairing[i] == i}
    if set(signs) != fixed:
        raise ValueError(f"signs must be given for the fixed points {sorted(fixed)}")
    for i in fixed:
        sign_list[i] = signs[i]
    return SignedInvolution(n, tuple(pairing), tuple(sign_list))


@dataclass(frozen=True)
class BlockStructure:
    """Composition of n into consecutive position blocks."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if any(s < 1 for s in self.sizes):
            raise ValueError("block sizes must be positive")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def block_of(self) -> tuple[int, ...]:
        out = []
        for b, s in enumerate(self.sizes):
            out.extend([b] * s)
        return tuple(out)

    def in_same_block(self, i: int) -> bool:
        """Whether positions i and i+1 lie in one block."""
        blocks = self.block_of()
        return 0 <= i < self.n - 1 and blocks[i] == blocks[i + 1]


def column_blocks(lam: Sequence[int]) -> BlockStructure:
    """Column multiplicities of the distinct values of ``lam``."""
    lam = _validate_lambda(lam)
    sizes = []
    for v in sorted(set(lam), reverse=True):
        sizes.append(sum(1 for x in lam if x == v))
    return BlockStructure(tuple(sizes))


def s_action(sigma: SignedInvolution, i: int, bs: BlockStructure) -> SignedInvolution:
    """Apply the three-case move of the transposition (i, i+1); ``i`` must
    be an in-block index."""
    if not bs.in_same_block(i):
        raise ValueError(f"positions {i},{i+1} are not in the same block")
    a, b = i, i + 1
    fixed_a, fixed_b = sigma.pairing[a] == a, sigma.pairing[b] == b
    if fixed_a and fixed_b:
        if sigma.signs[a] != sigma.signs[b]:
            pairing = list(sigma.pairing)
            signs = list(sigma.signs)
            pairing[a], pairing[b] = b, a
            signs[a] = signs[b] = None
            return SignedInvolution(sigma.n, tuple(pairing), tuple(signs))
        return sigma
    if sigma.pairing[a] == b:
        return sigma
    # conjugate by the transposition
    t = list(range(sigma.n))
    t[a], t[b] = b, a
    pairing = [0] * sigma.n
    signs: list[Optional[str]] = [None] * sigma.n
    for j in range(sigma.n):
        pairing[t[j]] = t[sigma.pairing[j]]
        signs[t[j]] = sigma.signs[j]
    return SignedInvolution(sigma.n, tuple(pairing), tuple(signs))


@dataclass(frozen=True)
class OrbitClass:
    blocks: BlockStructure
    members: frozenset
    canonical: SignedInvolution

    def __contains__(self, sigma: SignedInvolution) -> bool:
        return sigma in self.members

    def __eq__(self, other):
        return (
            isinstance(other, OrbitClass)
            and self.blocks == other.blocks
            and self.canonical == other.canonical
        )

    def __hash__(self):
        return hash((self.blocks, self.canonical.encode()))


def _neighbors(sigma: SignedInvolution, i: int, bs: BlockStructure):
    yield s_action(sigma, i, bs)
    # case-(1) moves lose the two signs, so closure needs their preimages
    if sigma.pairing[i] == i + 1:
        for sa, sb in (("+", "-"), ("-", "+")):
            pairing = list(sigma.pairing)
            signs = list(sigma.signs)
            pairing[i], pairing[i + 1] = i, i + 1
            signs[i], signs[i + 1] = sa, sb
            yield SignedInvolution(sigma.n, tuple(pairing), tuple(signs))


def orbit_class(sigma: SignedInvolution, bs: BlockStructure) -> OrbitClass:
    """Breadth-first closure of the one-step moves, treated as undirected."""
    if bs.n != sigma.n:
        raise ValueError("block structure size does not match the involution")
    in_block = [i for i in range(sigma.n - 1) if bs.in_same_block(i)]
    seen = {sigma}
    frontier = [sigma]
    while frontier:
        nxt = []
        for cur in frontier:
            for i in in_block:
                for other in _neighbors(cur, i, bs):
                    if other not in seen:
                        seen.add(other)
                        nxt.append(other)
        frontier = nxt
    canonical = min(seen, key=SignedInvolution.encode)
    return OrbitClass(blocks=bs, members=frozenset(seen), canonical=canonical)


# -- the column/arc/flip/flatten construction ---------------------------------


def _validate_lambda(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    for x in lam:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"lambda must consist of integers, got {x!r}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("lambda must be weakly decreasing")
    return lam


def _parity_sign(value: int) -> int:
    return 1 if value % 2 == 0 else -1


# a cell is (sign, fresh, arc); sign is +1/-1, arc is an arc id or None
_State = "tuple[tuple[tuple[int, bool, Optional[int]], ...], ...]"


@dataclass(frozen=True)
class ColumnDiagram:
    """Final state of the column construction, ready to flatten or render."""

    values: tuple[int, ...]  # distinct support values, decreasing
    columns: tuple[tuple[tuple[int, bool, Optional[int]], ...], ...]

    @property
    def n(self) -> int:
        return sum(len(col) for col in self.columns)

    def blocks(self) -> BlockStructure:
        return BlockStructure(tuple(len(col) for col in self.columns))


def initial_diagram(lam: Sequence[int]) -> ColumnDiagram:
    """Columns of parity signs before any segment is processed."""
    lam = _validate_lambda(lam)
    values = tuple(sorted(set(lam), reverse=True))
    cols = tuple(
        tuple((_parity_sign(v), True, None) for _ in range(lam.count(v))) for v in values
    )
    return ColumnDiagram(values=values, columns=cols)


def _segments_by_length(ms: Multisegment) -> list[tuple[int, int]]:
    """(min, max) integer endpoints of the length >= 2 segments, longest
    first; ties keep the dominant-order position."""
    segs = []
    for s in ms.segments:
        if s.length >= 2:
            if not (s.start.is_integer and s.end.is_integer):
                raise ValueError("the orbit map needs integral segments")
            segs.append((int(s.start.re), int(s.end.re)))
    segs.sort(key=lambda ab: -(ab[1] - ab[0]))
    return segs


def _check_support(ms: Multisegment, lam: tuple[int, ...]):
    support = []
    for v in ms.support():
        if not v.is_integer:
            raise ValueError("the orbit map needs an integral multisegment")
        support.append(int(v.re))
    if sorted(support) != sorted(lam):
        raise ValueError(
            f"support {sorted(support, reverse=True)} does not match lambda {list(lam)}"
        )


def _fresh_indices(col) -> list[int]:
    return [t for t, (sign, fresh, arc) in enumerate(col) if fresh]


def _apply_segment(columns, values, x: int, y: int, arc_id: int, picks):
    """Join column y to column x with arc ``arc_id``; ``picks`` maps each
    involved column index to the chosen cell index."""
    col_index = {v: c for c, v in enumerate(values)}
    new_cols = [list(col) for col in columns]
    for v_end in (y, x):
        c = col_index[v_end]
        t = picks[c]
        sign, fresh, arc = new_cols[c][t]
        if not fresh:
            raise StructuralError(f"cell {t} in column {v_end} is not fresh")
        new_cols[c][t] = (sign, False, arc_id)
    if _parity_sign(x) == _parity_sign(y):
        for v in range(x + 1, y):
            c = col_index[v]
            t = picks[c]
            sign, fresh, arc = new_cols[c][t]
            if not fresh:
                raise StructuralError(f"cell {t} in column {v} is not fresh")
            new_cols[c][t] = (-sign, False, None)
    return tuple(tuple(col) for col in new_cols)


def _default_picks(columns, values, x: int, y: int) -> dict[int, int]:
    col_index = {v: c for c, v in enumerate(values)}
    picks = {}
    needed = [y, x] + ([v for v in range(x + 1, y)] if _parity_sign(x) == _parity_sign(y) else [])
    for v in needed:
        c = col_index[v]
        fresh = _fresh_indices(columns[c])
        if not fresh:
            raise StructuralError(f"no fresh cell left in column {v}")
        picks[c] = fresh[0]
    return picks


def build_diagram(ms: Multisegment, lam: Sequence[int]) -> ColumnDiagram:
    """Run the construction with the fixed default choices (longest segment
    first, dominant order inside a length tie, topmost fresh cell)."""
    lam = _validate_lambda(lam)
    _check_support(ms, lam)
    diagram = initial_diagram(lam)
    columns = diagram.columns
    for arc_id, (x, y) in enumerate(_segments_by_length(ms), start=1):
        picks = _default_picks(columns, diagram.values, x, y)
        columns = _apply_segment(columns, diagram.values, x, y, arc_id, picks)
    return ColumnDiagram(values=diagram.values, columns=columns)


def flatten_diagram(
    diagram: ColumnDiagram, orders: Optional[Sequence[Sequence[int]]] = None
) -> SignedInvolution:
    """Concatenate columns left to right; ``orders`` optionally permutes the
    cells inside each column (default: stored order)."""
    if orders is None:
        orders = [range(len(col)) for col in diagram.columns]
    arcs_at: dict[int, list[int]] = {}
    signs: dict[int, str] = {}
    pos = 0
    for col, order in zip(diagram.columns, orders):
        if sorted(order) != list(range(len(col))):
            raise ValueError("orders must permute each column's cells")
        for t in order:
            sign, fresh, arc = col[t]
            if arc is None:
                signs[pos] = "+" if sign > 0 else "-"
            else:
                arcs_at.setdefault(arc, []).append(pos)
            pos += 1
    arcs = []
    for arc, ends in arcs_at.items():
        if len(ends) != 2:
            raise ValueError(f"arc {arc} has {len(ends)} endpoints")
        arcs.append((min(ends), max(ends)))
    return make_involution(pos, arcs, signs)


def psi_g(ms: Multisegment, lam: Sequence[int]) -> OrbitClass:
    """Orbit class of the flattened diagram of ``ms`` at support ``lam``."""
    diagram = build_diagram(ms, lam)
    return orbit_class(flatten_diagram(diagram), diagram.blocks())


# -- exhaustive choice sweeps --------------------------------------------------


def _all_final_diagrams(ms: Multisegment, lam: tuple[int, ...]) -> set[ColumnDiagram]:
    """Every final diagram over all segment orders (within weakly decreasing
    length), endpoint choices, and flip choices."""
    base = initial_diagram(lam)
    values = base.values
    col_index = {v: c for c, v in enumerate(values)}
    segs = _segments_by_length(ms)
    # group by length and take all orderings inside each tie group
    groups: dict[int, list[tuple[int, int]]] = {}
    for x, y in segs:
        groups.setdefault(y - x, []).append((x, y))
    orderings = [[]]
    for length in sorted(groups, reverse=True):
        new_orderings = []
        for perm in set(itertools.permutations(groups[length])):
            for head in orderings:
                new_orderings.append(head + list(perm))
        orderings = new_orderings

    finals: set[ColumnDiagram] = set()
    for order in orderings:
        states = {base.columns}
        for arc_id, (x, y) in enumerate(order, start=1):
            nxt = set()
            flip_cols = (
                [col_index[v] for v in range(x + 1, y)]
                if _parity_sign(x) == _parity_sign(y)
                else []
            )
            involved = [col_index[y], col_index[x]] + flip_cols
            for columns in states:
                pools = [_fresh_indices(columns[c]) for c in involved]
                if any(not pool for pool in pools):
                    raise StructuralError("no fresh cell available during sweep")
                for combo in itertools.product(*pools):
                    picks = dict(zip(involved, combo))
                    nxt.add(_apply_segment(columns, values, x, y, arc_id, picks))
            states = nxt
        finals.update(ColumnDiagram(values=values, columns=c) for c in states)
    return finals


@dataclass
class WellPosedReport:
    lam: tuple[int, ...]
    entries: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e["ok"] for e in self.entries)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "ok": self.ok, "entries": self.entries}


def verify_psi_wellposed(lam: Sequence[int]) -> WellPosedReport:
    """For every multisegment class with support ``lam``, recompute the map
    under every choice path and every flattening and check all outputs land
    in a single orbit class."""
    lam = _validate_lambda(lam)
    report = WellPosedReport(lam=lam)
    for ms in enumerate_multisegments(lam):
        target = psi_g(ms, lam)
        ok = True
        outputs = 0
        for diagram in _all_final_diagrams(ms, lam):
            for orders in itertools.product(
                *(itertools.permutations(range(len(col))) for col in diagram.columns)
            ):
                sigma = flatten_diagram(diagram, orders)
                outputs += 1
                if sigma not in target:
                    ok = False
        report.entries.append(
            {"tau": segments_str(ms), "outputs": outputs, "ok": ok}
        )
    return report


@dataclass
class InjectivityReport:
    lam: tuple[int, ...]
    classes: int = 0
    collisions: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.collisions

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "classes": self.classes,
            "ok": self.ok,
            "collisions": self.collisions,
        }


def verify_injectivity(lam: Sequence[int]) -> InjectivityReport:
    """Check the orbit map separates multisegment classes at support ``lam``."""
    lam = _validate_lambda(lam)
    report = InjectivityReport(lam=lam)
    by_class: dict[OrbitClass, list[Multisegment]] = {}
    for ms in enumerate_multisegments(lam):
        by_class.setdefault(psi_g(ms, lam), []).append(ms)
    report.classes = len(by_class)
    for cls, members in by_class.items():
        if len(members) > 1:
            report.collisions.append(
                {
                    "involution": involution_to_json(cls.canonical),
                    "taus": [segments_str(ms) for ms in members],
                }
            )
    return report


# -- rendering and serialization ----------------------------------------------


def render_involution(sigma: SignedInvolution) -> str:
    """One-line form with arcs as paired numeric labels.

    >>> render_involution(make_involution(4, [(0, 3)], {1: '+', 2: '-'}))
    '1 + - 1'
    """
    label: dict[int, int] = {}
    out = []
    for i in range(sigma.n):
        j = sigma.pairing[i]
        if j == i:
            out.append(sigma.signs[i])
        else:
            a = min(i, j)
            if a not in label:
                label[a] = len(label) + 1
            out.append(str(label[a]))
    return " ".join(out)


def render_diagram(diagram: ColumnDiagram) -> str:
    """Fixed-width column picture: headers are the support values, cells show
    the sign or the arc label."""
    width = max(
        [len(str(v)) for v in diagram.values]
        + [len(str(arc)) for col in diagram.columns for (_, _, arc) in col if arc]
        + [1]
    )
    rows = max(len(col) for col in diagram.columns)
    lines = ["  ".join(str(v).rjust(width) for v in diagram.values)]
    for r in range(rows):
        cells = []
        for col in diagram.columns:
            if r < len(col):
                sign, fresh, arc = col[r]
                cells.append((str(arc) if arc else ("+" if sign > 0 else "-")).rjust(width))
            else:
                cells.append(" " * width)
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def involution_to_json(sigma: SignedInvolution) -> dict:
    """1-based positions; arcs sorted, signs keyed by position."""
    return {
        "n": sigma.n,
        "arcs": [[i + 1, j + 1] for i, j in sigma.arcs()],
        "signs": {
            str(i + 1): sigma.signs[i] for i in range(sigma.n) if sigma.signs[i] is not None
        },
    }


def involution_from_json(obj: dict) -> SignedInvolution:
    arcs = [(i - 1, j - 1) for i, j in obj["arcs"]]
    signs = {int(pos) - 1: s for pos, s in obj["signs"].items()}
    return make_involution(int(obj["n"]), arcs, signs)
