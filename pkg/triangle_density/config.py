import os


class Config(object):
    # Odd entries per sieve segment (kept a multiple of 64 so segments pack into whole words)
    segment_size = 1 << 20

    # Exponent offset of the threshold (log x)^(1+delta)
    delta = 0.1

    # Exponent offset of the bad-integer cut B(x)^(1+epsilon)
    epsilon = 0.1

    # Default checkpoint grid (powers of ten)
    checkpoints = (10 ** 4, 10 ** 5, 10 ** 6)

    # Smallest x accepted where log log x must exceed 1
    min_checkpoint = 16

    # Turan-Kubilius instance check: accepted ratio lhs / B(x)^2, and the hard failure ceiling
    tk_margin = 4.0
    tk_ceiling = 8.0

    # Constant c of the smooth-divisor (B3) bound when the caller supplies none
    b3_constant = 2.0

    # First index n of the progression 2m - 1 + 2mn
    progression_start = 2

    # Node cap of one low-index search
    search_budget = 2000000

    # Arbitrary-subgroup tables are harvested up to this index before the regular sweep
    harvest_index = 8

    # Node cap of the harvest; exhausting it only shortens the harvest
    harvest_budget = 200000

    # Cosets probed for a consistent automorphism while a regular table is still partial
    normal_probe_cosets = 8

    # Default search window for quotient orders
    max_index = 60

    # Prime table cache file header
    cache_magic = b"TDPR"
    cache_version = 1

    # Cache directory and its environment override
    cache_env_var = "TRIANGLE_DENSITY_CACHE"
    default_cache_dir = os.path.join(os.path.expanduser("~"), ".cache", "triangle-density")

    # Significant digits of density ratios in CSV output
    ratio_digits = 12
