from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from autonorm.core.exceptions import DomainError
from autonorm.services.normality.stats_core import as_vector, std_normal_log_cdf


def anderson_darling(z: ArrayLike) -> float:
    """Anderson-Darling distance of `z` to the standard normal, order-statistic form.

    Both tail terms go through the log-CDF so extreme order statistics keep their
    full weight. The statistic is returned raw, without small-sample correction.
    """
    values = as_vector(z)
    n = values.size
    if n == 0:
        raise DomainError("Anderson-Darling statistic needs at least one value.")
    if not np.all(np.isfinite(values)):
        raise DomainError("Anderson-Darling statistic needs finite values.")

    ordered = np.sort(values)
    weights = (2.0 * np.arange(1, n + 1) - 1.0) / n
    lower = std_normal_log_cdf(ordered)
    upper = std_normal_log_cdf(-ordered[::-1])
    return float(-n - np.sum(weights * (lower + upper)))
