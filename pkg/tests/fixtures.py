"""Golden data shared across the test modules.

SQRT13_PREFIX and ONE_SEVENTH_PREFIX are hand-checked listings of the
signatures of sqrt(13) and 1/7.  RAMP4_BLOCKS is the five-block run of
the n=4 construction under the branch choices (one-first, fresh-first),
grouped as each extension step leaves the sequence; RAMP4_RANK_STREAM
is its occurrence-rank translation (the ones-seeded companion).
"""
from fractions import Fraction

from fractalseq import Branch

SQRT13_PREFIX = [1, 2, 3, 4, 1, 5, 2, 6, 3, 7, 4, 8,
                 1, 5, 9, 2, 6, 10, 3, 7, 11, 4, 8]

ONE_SEVENTH_PREFIX = [1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1, 2,
                      1, 2, 1, 2, 1, 2, 1, 2, 1, 3, 2, 1]

# Cumulative contents after each extension step (n=4, branches 0,1).
# The lone values 11 between blocks are merge carries, appended before
# the following block is woven.
RAMP4_STEPS = [
    [1, 2, 3, 4],
    [1, 5, 2, 6, 3, 7, 4],
    [1, 8, 5, 2, 9, 6, 3, 10, 7, 4],
    [11, 1, 8, 5, 12, 2, 9, 6, 13, 3, 10, 7, 14, 4],
    [11, 1, 8, 15, 5, 12, 2, 9, 16, 6, 13, 3, 10, 17, 7, 14, 4],
]

RAMP4_BRANCHES = [Branch.ONE_FIRST, Branch.FRESH_FIRST]

RAMP4_TERMS = [t for step in RAMP4_STEPS for t in step]

assert len(RAMP4_TERMS) == 52

# Occurrence ranks of RAMP4_TERMS, i.e. the ones-seeded companion.
RAMP4_RANK_STREAM = (
    [1, 1, 1, 1]
    + [2, 1, 2, 1, 2, 1, 2]
    + [3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1]
    + [4, 2, 3, 1, 4, 2, 3, 1, 4, 2, 3, 1, 4, 2]
    + [5, 3, 1, 4, 2, 5, 3, 1, 4, 2, 5, 3, 1, 4, 2, 5]
)

assert len(RAMP4_RANK_STREAM) == 52

# Exact interval of parameters consistent with all 52 terms, and the
# divergence point of 7/2 against sqrt(13); both frozen from the
# brute-force enumeration oracle.
RAMP4_INTERVAL = (Fraction(10, 3), Fraction(7, 2))
DIVERGENCE_7_2_VS_SQRT13 = 57
