from __future__ import annotations

import pytest

from kndrawings.drawing import GoodDrawing
from kndrawings.geometry import Point, PointConfiguration


@pytest.fixture
def planar_k4() -> GoodDrawing:
    """K_4 drawn without crossings: vertex 4 inside triangle 123."""
    return GoodDrawing(
        n=4,
        rotation={1: (2, 4, 3), 2: (3, 4, 1), 3: (1, 4, 2), 4: (1, 2, 3)},
        crossings_along={},
        crossing_sign={},
    )


@pytest.fixture
def crossed_k4() -> GoodDrawing:
    """K_4 on the unit square: (1,3) and (2,4) cross once, positively."""
    x = ((1, 3), (2, 4))
    return GoodDrawing(
        n=4,
        rotation={1: (2, 3, 4), 2: (3, 4, 1), 3: (4, 1, 2), 4: (1, 2, 3)},
        crossings_along={(1, 3): (x,), (2, 4): (x,)},
        crossing_sign={x: 1},
    )


@pytest.fixture
def unit_square() -> PointConfiguration:
    return PointConfiguration(
        4, (Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1))
    )
