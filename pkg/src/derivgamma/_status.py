"""Stop codes shared by both kernel backends."""

EXHAUSTED = 0   # hit the term cap
TAIL_OK = 1     # tail estimate dropped below tolerance
TERMINATED = 2  # an exact zero term ended the series
OVERFLOW = 3    # a term left the finite range
