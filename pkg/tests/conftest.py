import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sidonkit.forest import CopyFamily
from sidonkit.ordgraph import Copy, OrderedGraph

TRIANGLE = OrderedGraph(3, [(0, 1), (0, 2), (1, 2)])

# Ring of five triangles: inner pentagon 0..4, outer vertices 5..9, triangle i
# gluing pentagon edge (i, i+1) to the outer vertex between its endpoints.
PENTAGON = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
OUTER_RING = [(4, 5), (0, 5), (0, 6), (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9)]
RING_TRIANGLES = [(0, 1, 6), (1, 2, 7), (2, 3, 8), (3, 4, 9), (0, 4, 5)]
# Two chords from vertex 0 triangulate the pentagon into three more triangles.
CHORDS = [(0, 2), (0, 3)]
FAN_TRIANGLES = [(0, 1, 2), (0, 2, 3), (0, 3, 4)]


def _triangles(host, triples):
    return [Copy(TRIANGLE, tuple(sorted(t))) for t in triples]


@pytest.fixture
def triangle_ring_family():
    """Five triangles glued in a ring at single vertices: not a forest of copies."""
    host = OrderedGraph(10, PENTAGON + OUTER_RING)
    return CopyFamily.build(host, _triangles(host, RING_TRIANGLES))


@pytest.fixture
def triangulated_host():
    return OrderedGraph(10, PENTAGON + OUTER_RING + CHORDS)


@pytest.fixture
def eight_triangle_family(triangulated_host):
    """The ring plus the three fan triangles: a forest of eight copies."""
    return CopyFamily.build(
        triangulated_host, _triangles(triangulated_host, RING_TRIANGLES + FAN_TRIANGLES)
    )


@pytest.fixture
def ring_family_on_triangulated_host(triangulated_host):
    return CopyFamily.build(triangulated_host, _triangles(triangulated_host, RING_TRIANGLES))


@pytest.fixture
def fan_pool(triangulated_host):
    return CopyFamily.build(triangulated_host, _triangles(triangulated_host, FAN_TRIANGLES))
