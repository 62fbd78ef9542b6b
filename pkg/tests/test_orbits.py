import json

import pytest

from glhecke.multisegments import parse_segments
from glhecke.orbits import (
    BlockStructure,
    StructuralError,
    _apply_segment,
    build_diagram,
    column_blocks,
    flatten_diagram,
    initial_diagram,
    involution_from_json,
    involution_to_json,
    make_involution,
    orbit_class,
    psi_g,
    render_diagram,
    render_involution,
    s_action,
    verify_injectivity,
    verify_psi_wellposed,
)

WORKED_LAMBDA = (4, 4, 3, 3, 3, 3, 2, 2, 2, 1, 1, 0)
WORKED_TAU = "{0,1,2,3,4};{1,2,3};{2};{3};{3};{4}"


def test_signed_involution_validation():
    with pytest.raises(ValueError):
        make_involution(2, [(0, 1)], {0: "+"})  # sign on a paired point
    with pytest.raises(ValueError):
        make_involution(2, [], {0: "+"})  # missing sign
    sigma = make_involution(3, [(0, 2)], {1: "-"})
    assert sigma.arcs() == ((0, 2),)
    assert sigma.signature() == (1, 2)


def test_block_structure():
    bs = BlockStructure((2, 3))
    assert bs.n == 5
    assert bs.in_same_block(0)
    assert not bs.in_same_block(1)
    assert bs.in_same_block(3)
    assert column_blocks(WORKED_LAMBDA).sizes == (2, 4, 3, 2, 1)


def test_s_action_case1_opposite_signs_make_arc():
    bs = BlockStructure((2,))
    sigma = make_involution(2, [], {0: "+", 1: "-"})
    moved = s_action(sigma, 0, bs)
    assert moved.arcs() == ((0, 1),)


def test_s_action_case2_fixed():
    bs = BlockStructure((2,))
    same = make_involution(2, [], {0: "+", 1: "+"})
    assert s_action(same, 0, bs) == same
    arc = make_involution(2, [(0, 1)], {})
    assert s_action(arc, 0, bs) == arc


def test_s_action_case3_conjugation():
    bs = BlockStructure((3,))
    sigma = make_involution(3, [(0, 2)], {1: "-"})
    moved = s_action(sigma, 0, bs)
    assert moved.arcs() == ((1, 2),)
    assert moved.signs[0] == "-"
    # conjugation is an involution
    assert s_action(moved, 0, bs) == sigma


def test_s_action_rejects_cross_block():
    with pytest.raises(ValueError):
        s_action(make_involution(2, [], {0: "+", 1: "-"}), 0, BlockStructure((1, 1)))


def test_orbit_class_singleton_blocks():
    sigma = make_involution(3, [(0, 1)], {2: "+"})
    cls = orbit_class(sigma, BlockStructure((1, 1, 1)))
    assert cls.members == frozenset({sigma})


def test_orbit_class_undirected_closure():
    # starting from the arc, closure recovers both signed preimages
    bs = BlockStructure((2,))
    arc = make_involution(2, [(0, 1)], {})
    cls = orbit_class(arc, bs)
    assert make_involution(2, [], {0: "+", 1: "-"}) in cls
    assert make_involution(2, [], {0: "-", 1: "+"}) in cls
    assert make_involution(2, [], {0: "+", 1: "+"}) not in cls


def test_orbit_class_constant_on_members():
    sigma = make_involution(4, [(0, 3)], {1: "+", 2: "-"})
    cls = orbit_class(sigma, BlockStructure((2, 2)))
    for member in cls.members:
        assert orbit_class(member, cls.blocks) == cls


def test_initial_diagram_parities():
    d = initial_diagram((2, 1, 1, 0))
    assert d.values == (2, 1, 0)
    assert [[c[0] for c in col] for col in d.columns] == [[1], [-1, -1], [1]]


def test_psi_all_singletons_keeps_parity_signs():
    lam = (2, 1, 1, 0)
    cls = psi_g(parse_segments("{2};{1};{1};{0}"), lam)
    expected = make_involution(4, [], {0: "+", 1: "-", 2: "-", 3: "+"})
    assert expected in cls


def test_psi_full_segment_signature():
    for n in (2, 3, 4, 5, 6):
        lam = tuple(range(n - 1, -1, -1))
        text = "{" + ",".join(str(j) for j in range(n)) + "}"
        cls = psi_g(parse_segments(text), lam)
        p, q = cls.canonical.signature()
        assert (p, q) == ((n + 1) // 2, n // 2)
        assert len(cls.canonical.arcs()) == 1


def test_psi_signature_matches_parity_counts():
    lam = (3, 2, 2, 1, 0)
    for ms_text in ["{3};{2};{2};{1};{0}", "{1,2,3};{2};{0}", "{0,1,2,3};{2}", "{2,3};{1,2};{0}"]:
        ms = parse_segments(ms_text)
        cls = psi_g(ms, lam)
        evens = sum(1 for x in lam if x % 2 == 0)
        odds = len(lam) - evens
        assert cls.canonical.signature() == (evens, odds)


def test_psi_arc_count_is_long_segment_count():
    lam = (3, 2, 2, 1, 0)
    for ms_text, arcs in [("{1,2,3};{2};{0}", 1), ("{2,3};{1,2};{0}", 2), ("{0,1,2,3};{2}", 1)]:
        cls = psi_g(parse_segments(ms_text), lam)
        assert len(cls.canonical.arcs()) == arcs


def test_psi_rejects_support_mismatch():
    with pytest.raises(ValueError):
        psi_g(parse_segments("{0,1}"), (1, 1))


def test_structural_error_surfaces():
    d = initial_diagram((2, 1, 0))
    cols = d.columns
    cols = _apply_segment(cols, d.values, 0, 2, 1, {0: 0, 1: 0, 2: 0})
    # every cell is now used or flipped; a second long segment cannot pick
    with pytest.raises(StructuralError):
        _apply_segment(cols, d.values, 0, 2, 2, {0: 0, 1: 0, 2: 0})


def test_worked_example_flattenings_are_equivalent():
    tau = parse_segments(WORKED_TAU)
    cls = psi_g(tau, WORKED_LAMBDA)
    first = make_involution(
        12, [(1, 11), (2, 10)], {0: "+", 3: "-", 4: "+", 5: "-", 6: "-", 7: "-", 8: "+", 9: "+"}
    )
    second = make_involution(
        12, [(0, 11), (5, 9)], {1: "+", 2: "+", 3: "-", 4: "-", 6: "-", 7: "-", 8: "+", 10: "+"}
    )
    assert first in cls
    assert second in cls
    assert render_involution(first) == "+ 1 2 - + - - - + + 2 1"
    assert render_involution(second) == "1 + + - - 2 - - + 2 + 1"
    assert first.signature() == (6, 6)
    # the two flattenings lie in one orbit also when computed from each other
    assert orbit_class(first, cls.blocks) == orbit_class(second, cls.blocks)


def test_worked_example_diagram_render():
    tau = parse_segments(WORKED_TAU)
    diagram = build_diagram(tau, WORKED_LAMBDA)
    assert render_diagram(diagram) == (
        "4  3  2  1  0\n"
        "1  +  -  +  1\n"
        "+  2  -  2\n"
        "   -  +\n"
        "   -"
    )
    sigma = flatten_diagram(diagram)
    assert render_involution(sigma) == "1 + + 2 - - - - + + 2 1"


def test_flatten_orders_change_positions_not_class():
    tau = parse_segments("{0,1,2}")
    lam = (2, 1, 0)
    diagram = build_diagram(tau, lam)
    base = flatten_diagram(diagram)
    cls = orbit_class(base, diagram.blocks())
    assert flatten_diagram(diagram, [(0,), (0,), (0,)]) == base
    # single-cell columns admit only one order here, so use a fatter weight
    lam2 = (1, 1, 0, 0)
    diagram2 = build_diagram(parse_segments("{0,1};{1};{0}"), lam2)
    cls2 = orbit_class(flatten_diagram(diagram2), diagram2.blocks())
    for orders in [[(0, 1), (0, 1)], [(1, 0), (0, 1)], [(0, 1), (1, 0)], [(1, 0), (1, 0)]]:
        assert flatten_diagram(diagram2, orders) in cls2


def test_wellposed_and_injective_small():
    for lam in [(0,), (1, 1, 0), (2, 1, 0), (2, 1, 1, 0), (2, 2, 1, 0)]:
        assert verify_psi_wellposed(lam).ok
        report = verify_injectivity(lam)
        assert report.ok
    assert verify_injectivity((2, 1, 0)).classes == 4


def test_worked_example_wellposed():
    report = verify_psi_wellposed(WORKED_LAMBDA[:0] + (2, 1, 1, 0))
    assert report.ok


def test_involution_json_round_trip():
    sigma = make_involution(4, [(0, 3)], {1: "+", 2: "-"})
    obj = involution_to_json(sigma)
    assert obj == {"n": 4, "arcs": [[1, 4]], "signs": {"2": "+", "3": "-"}}
    assert involution_from_json(json.loads(json.dumps(obj))) == sigma
