import pytest
from hypothesis import given, strategies as st

from colorcomp.bijection import part_to_tile, phi, phi_zero_a, psi, psi_zero_a, tile_to_part, to_colored, to_domino
from colorcomp.core import ColorLaw, ColoredComposition, ColoredPart, DominoComposition, DominoTile, ValidationError
from colorcomp.counting import count_parts_closed
from colorcomp.enumeration import enumerate_colored_law, enumerate_domino

N_PLUS_2 = ColorLaw(1, 2)

# the full (n+2)-color correspondence for parts 1..3
TABLE = [
    ((1, 1), (1, 1, 1)),
    ((1, 2), (1, 0, 1)),
    ((1, 3), (1, 0, 2)),
    ((2, 1), (2, 1, 1)),
    ((2, 2), (1, 2, 1)),
    ((2, 3), (2, 0, 1)),
    ((2, 4), (2, 0, 2)),
    ((3, 1), (3, 1, 1)),
    ((3, 2), (2, 2, 1)),
    ((3, 3), (1, 3, 1)),
    ((3, 4), (3, 0, 1)),
    ((3, 5), (3, 0, 2)),
]


@pytest.mark.parametrize("part, tile", TABLE)
def test_single_part_table(part, tile):
    comp = ColoredComposition.of([part])
    dc = DominoComposition.of(part[0], [tile])
    assert psi(comp, N_PLUS_2) == dc
    assert phi(dc, N_PLUS_2) == comp


def test_worked_example():
    comp = ColoredComposition.of([(3, 5), (1, 2), (3, 2)])
    dc = psi(comp, N_PLUS_2)
    assert dc == DominoComposition.of(7, [(3, 0, 2), (1, 0, 1), (2, 2, 1)])
    assert phi(dc, N_PLUS_2) == comp


def test_phi_large_a_branch():
    law = ColorLaw(2, 1)
    assert phi(DominoComposition.of(2, [(2, 1, 2)]), law) == ColoredComposition.of([(2, 3)])
    assert psi(ColoredComposition.of([(2, 3)]), law) == DominoComposition.of(2, [(2, 1, 2)])


def test_zero_tile_color_beyond_part_size():
    # color l = a*i + d with d > i: the zero tile takes color d, not l mod i
    law = ColorLaw(2, 3)
    comp = ColoredComposition.of([(1, 5)])
    assert psi(comp, law) == DominoComposition.of(1, [(1, 0, 3)])
    assert phi(psi(comp, law), law) == comp


def test_phi_psi_reject_bad_input():
    with pytest.raises(ValidationError):
        phi(DominoComposition.of(4, [(1, 1, 1), (4, 0, 1), (1, 3, 1)]), ColorLaw(1, 1))
    with pytest.raises(ValidationError):
        psi(ColoredComposition.of([(2, 5)]), N_PLUS_2)
    with pytest.raises(ValueError):
        phi(DominoComposition.of(1, [(1, 0, 1)]), ColorLaw(0, 2))
    with pytest.raises(ValueError):
        psi(ColoredComposition.of([(1, 1)]), ColorLaw(0, 2))
    with pytest.raises(ValueError):
        psi(ColoredComposition.of([(1, 1)]), ColorLaw(1, -1))


def test_zero_a_pair():
    law = ColorLaw(0, 2)
    assert phi_zero_a(DominoComposition.of(2, [(2, 0, 1)]), law) == ColoredComposition.of([(2, 1)])
    dc = DominoComposition.of(2, [(1, 0, 2), (1, 0, 2)])
    assert phi_zero_a(dc, law) == ColoredComposition.of([(1, 2), (1, 2)])
    with pytest.raises(ValidationError):
        phi_zero_a(DominoComposition.of(1, [(1, 1, 1)]), law)
    for nu in range(1, 7):
        for k in range(1, nu + 1):
            for d in enumerate_domino(law, nu, k):
                c = to_colored(d, law)
                assert to_domino(c, law) == d
                assert psi_zero_a(c, law) == d


@pytest.mark.parametrize("a, b", [(1, 0), (1, 1), (2, 0), (2, 2), (3, 1)])
def test_round_trips_small(a, b):
    law = ColorLaw(a, b)
    for nu in range(1, 7):
        for k in range(1, nu + 1):
            images = []
            for d in enumerate_domino(law, nu, k):
                c = phi(d, law)
                assert (c.nu, len(c)) == (nu, k)
                assert sum(p.color <= a * p.size for p in c.parts) == d.nonzero_count
                assert psi(c, law) == d
                images.append(c)
            assert len(set(images)) == len(images) == count_parts_closed(law, nu, k)
            assert sorted(images) == list(enumerate_colored_law(law, nu, k))


@given(st.integers(1, 3), st.integers(0, 4), st.integers(1, 12), st.data())
def test_part_tile_inverse(a, b, size, data):
    color = data.draw(st.integers(1, a * size + b))
    part = ColoredPart(size, color)
    tile = part_to_tile(part, a)
    assert 0 < tile.alpha <= size and 0 <= tile.beta <= size
    assert tile.color <= (a if tile.beta else b)
    assert tile_to_part(tile, a) == part
