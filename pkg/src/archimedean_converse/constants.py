# Tolerances and fixed numeric choices, in one place

from fractions import Fraction

# ge_eval accuracy target (relative) away from poles
EVAL_RELATIVE_ACCURACY = 1e-10

# ge_eval refuses arguments this close to a Gamma pole
SINGULAR_DISTANCE = 1e-8

# ge_eq accepts |ratio - 1| up to this
EQUALITY_RATIO_TOLERANCE = 1e-8

# sample points for ge_eq; shifted by SAMPLE_SHIFT until off every divisor
EQUALITY_SAMPLE_POINTS = (
    complex(0.317, 0.0),
    complex(1.713, 0.5),
    complex(-0.243, 1.1),
)
SAMPLE_SHIFT = 1 / 7

# a sample point closer than this to a Gamma pole counts as a collision
SAMPLE_CLEARANCE = 1e-6

# reconstruction doubles the twist offset M at most this many times
MAX_M_DOUBLINGS = 4

# probe windows reach this far past the outermost progression start
PROBE_MARGIN = 3

ONE_HALF = Fraction(1, 2)
