import math

LOG_FOUR_PI = math.log(4.0 * math.pi)

# Silverman's rule-of-thumb constants.
SILVERMAN_FACTOR = 0.9
IQR_TO_SIGMA = 1.34

# Hazen plotting position offset: p_i = (i - 0.5) / m.
HAZEN_OFFSET = 0.5

DEGENERATE_AD_SENTINEL = math.inf
