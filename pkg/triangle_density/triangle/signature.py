import math
from typing import Iterable, List, Sequence

import numpy as np

from triangle_density.density import CheckpointListener, series_from_mask
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import DensitySeries, Geometry, TriangleSignature

# Smooth quotient orders of the two Euclidean signatures with a quadratic-form description:
# coefficient, and whether the cross term bc is present
EUCLIDEAN_FORMS = {
    (2, 3, 6): (6, True),
    (2, 4, 4): (4, False),
}


def classify(sig: TriangleSignature) -> Geometry:
    return sig.geometry


def _form_of(kind: TriangleSignature):
    key = tuple(kind.as_list())
    if key not in EUCLIDEAN_FORMS:
        raise InvalidArgumentException("No smooth-order form for %r; use (2,3,6) or (2,4,4)" % kind)
    return EUCLIDEAN_FORMS[key]


def _smooth_order_values(kind: TriangleSignature, limit: int) -> np.ndarray:
    coefficient, cross = _form_of(kind)
    if limit < 1:
        raise InvalidArgumentException("limit must be positive, got %d" % limit)
    # b^2 + bc + c^2 and b^2 + c^2 both dominate max(b, c)^2
    span = math.isqrt(limit // coefficient) + 1
    b, c = np.meshgrid(np.arange(span + 1, dtype=np.int64), np.arange(span + 1, dtype=np.int64))
    values = coefficient * (b * b + c * c + (b * c if cross else 0))
    values = values[(values > 0) & (values <= limit)]
    return np.unique(values)


def euclidean_smooth_orders(kind: TriangleSignature, limit: int) -> List[int]:
    """
    Values <= limit of 6(b^2 + bc + c^2) for (2,3,6), or 4(b^2 + c^2) for (2,4,4), over b, c >= 0 not both 0
    """
    return _smooth_order_values(kind, limit).tolist()


def euclidean_density_series(kind: TriangleSignature, checkpoints: Sequence[int],
                             listeners: Iterable[CheckpointListener] = ()) -> DensitySeries:
    limit = max(checkpoints)
    mask = np.zeros(limit + 1, dtype=bool)
    mask[_smooth_order_values(kind, limit)] = True
    return series_from_mask(mask, checkpoints, listeners, name=repr(kind))
