import itertools

import numpy as np
import pytest

from pbwpoly import kernels
from pbwpoly.lattice import coordinate_bounds

BACKENDS = kernels.available_backends()


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def box_points(instance, max_volume=2_000_000):
    """Independent oracle: filter the full bounding box through the dense system."""
    bounds = [int(b) + 1 for b in coordinate_bounds(instance)]
    volume = int(np.prod([np.int64(b) for b in bounds], dtype=object))
    assert volume <= max_volume, f"box volume {volume} too large for the oracle"
    grid = np.indices(bounds).reshape(len(bounds), -1).T.astype(np.int64)
    keep = (grid @ instance.matrix.T <= instance.rhs[None, :]).all(axis=1)
    pts = grid[keep]
    order = np.lexsort(pts.T[::-1])
    return pts[order]


def monotone_walks_oracle(n, start, end):
    """Independent walk generator: choose the positions of the p-increments."""
    from pbwpoly.roots import _b_label_valid

    if not (_b_label_valid(n, *start) and _b_label_valid(n, *end)):
        return []
    dp, dq = end[0] - start[0], end[1] - start[1]
    if dp < 0 or dq < 0:
        return []
    walks = []
    for downs in itertools.combinations(range(dp + dq), dp):
        p, q = start
        cells = [(p, q)]
        ok = True
        for step in range(dp + dq):
            if step in downs:
                p += 1
            else:
                q += 1
            if not _b_label_valid(n, p, q):
                ok = False
                break
            cells.append((p, q))
        if ok:
            walks.append(cells)
    return walks
