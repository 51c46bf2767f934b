"""Numeric tolerances used across the package.

The ladder: 1e-12 for mass/probability conservation, 1e-10 for identities
that involve cancellation, 1e-9 for file loading and for slack in fuzzed
bound checks (absorbs float accumulation over tree DP).
"""

MASS_ATOL = 1e-12
IDENTITY_ATOL = 1e-10
LOADER_ATOL = 1e-9
FUZZ_SLACK = 1e-9

# probabilities below this are flushed to exact zero during transcript DP
FLUSH_THRESHOLD = 1e-300

MAX_TREE_DEPTH = 64
