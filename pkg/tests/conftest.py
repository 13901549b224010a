from __future__ import annotations

from typing import Dict, Tuple

import pytest

# printed table of u(n, k), rows n = 2..9
PRINTED_U_TABLE: Dict[Tuple[int, int], int] = {
    (2, 2): 2,
    (3, 2): 5,
    (4, 2): 12, (4, 3): 2,
    (5, 2): 28, (5, 3): 14,
    (6, 2): 64, (6, 3): 64, (6, 4): 4,
    (7, 2): 144, (7, 3): 240, (7, 4): 45,
    (8, 2): 320, (8, 3): 800, (8, 4): 300, (8, 5): 10,
    (9, 2): 704, (9, 3): 2464, (9, 4): 1540, (9, 5): 154,
}


@pytest.fixture
def printed_u_table() -> Dict[Tuple[int, int], int]:
    return dict(PRINTED_U_TABLE)
