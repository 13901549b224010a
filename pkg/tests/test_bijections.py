from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from bijections import (
    CLOCKWISE,
    COUNTERCLOCKWISE,
    ORIENTATIONS,
    binary_to_dissection,
    binary_to_ordered,
    black_ears_clockwise,
    dissection_to_binary,
    dissection_to_dyck,
    dyck_to_dissection,
    dyck_to_ordered,
    map_dissection,
    ordered_to_binary,
    ordered_to_dyck,
)
from enumeration import enumerate_dissections
from structures import (
    BinaryTree,
    Dissection,
    DissectionValidationError,
    DyckPath,
    DyckPathValidationError,
    OrderedTree,
    Triangle,
    TreeValidationError,
    binary_to_payload,
    black_ear_count,
    count_ddu,
    iter_dyck_paths,
)

OCTAGON = Dissection(8, [(-1, 4), (-1, 5), (-1, 7), (0, 3), (0, 4), (1, 3), (5, 7)])


@st.composite
def dyck_paths(draw, max_semilength: int = 12) -> DyckPath:
    n = draw(st.integers(min_value=1, max_value=max_semilength))
    steps = []
    ups = downs = 0
    while downs < n:
        can_up = ups < n
        can_down = downs < ups
        if can_up and (not can_down or draw(st.booleans())):
            steps.append("U")
            ups += 1
        else:
            steps.append("D")
            downs += 1
    return DyckPath("".join(steps))


def test_octagon_dissection_maps_to_its_path() -> None:
    path = dissection_to_dyck(OCTAGON)
    assert path.steps == "UUUUDDUDDDUDUUDD"
    assert count_ddu(path) == 2 == black_ear_count(OCTAGON) - 1
    mirrored = dissection_to_dyck(OCTAGON, COUNTERCLOCKWISE)
    assert mirrored.steps == "UUUDUDDDUDUUDDUD"
    assert count_ddu(mirrored) == 2


def test_small_binary_images() -> None:
    assert binary_to_payload(dissection_to_binary(Dissection(1))) == [None, None]
    square = Dissection(2, [(0, 2)])
    assert binary_to_payload(dissection_to_binary(square)) == [None, [None, None]]
    assert binary_to_payload(dissection_to_binary(square, COUNTERCLOCKWISE)) == [[None, None], None]


def test_ordered_and_path_stages() -> None:
    assert binary_to_ordered(BinaryTree()) == OrderedTree()
    assert ordered_to_dyck(OrderedTree()).steps == ""
    assert ordered_to_dyck(OrderedTree((OrderedTree(),))).steps == "UD"
    nested = OrderedTree((OrderedTree((OrderedTree(),)), OrderedTree()))
    assert ordered_to_dyck(nested).steps == "UUDDUD"
    assert dyck_to_ordered("UUDDUD") == nested
    assert ordered_to_binary(binary_to_ordered(dissection_to_binary(OCTAGON))) == dissection_to_binary(OCTAGON)


def test_inverse_chain_on_small_cases() -> None:
    assert dyck_to_dissection("UD") == Dissection(1)
    assert dissection_to_dyck(Dissection(1)).steps == "UD"
    with pytest.raises(DissectionValidationError):
        dyck_to_dissection("")
    with pytest.raises(DyckPathValidationError):
        dyck_to_dissection("UDD")
    with pytest.raises(TreeValidationError):
        binary_to_dissection(BinaryTree())


@pytest.mark.exhaustive
@pytest.mark.parametrize("orientation", ORIENTATIONS)
def test_bijection_round_trip_and_ddu_law(orientation: str) -> None:
    for n in range(1, 11):
        for d in enumerate_dissections(n):
            path = dissection_to_dyck(d, orientation)
            assert path.semilength == n
            assert count_ddu(path) == black_ear_count(d) - 1
            assert dyck_to_dissection(path, orientation) == d


@pytest.mark.exhaustive
def test_image_is_every_dyck_path() -> None:
    for n in range(1, 11):
        image = {dissection_to_dyck(d).steps for d in enumerate_dissections(n)}
        assert image == {path.steps for path in iter_dyck_paths(n)}


def test_stage_sizes() -> None:
    for d in enumerate_dissections(6):
        assert map_dissection(d, "binary").n == 6
        assert map_dissection(d, "ordered").edges == 6
        assert map_dissection(d, "dyck").semilength == 6
    with pytest.raises(ValueError):
        map_dissection(OCTAGON, "polygon")
    with pytest.raises(ValueError):
        dissection_to_dyck(OCTAGON, "sideways")


def test_black_ears_listed_clockwise() -> None:
    assert black_ears_clockwise(OCTAGON) == [
        Triangle((-1, 7, 8)),
        Triangle((5, 6, 7)),
        Triangle((1, 2, 3)),
    ]


@given(dyck_paths())
def test_random_paths_survive_the_inverse_chain(path: DyckPath) -> None:
    for orientation in (CLOCKWISE, COUNTERCLOCKWISE):
        d = dyck_to_dissection(path, orientation)
        assert d.n == path.semilength
        assert black_ear_count(d) == count_ddu(path) + 1
        assert dissection_to_dyck(d, orientation) == path
