import os
from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()

# Logging configuration; the only settings read from the environment
LOG_FILE = os.getenv('MINGRP_LOG_FILE') or None
LOG_LEVEL = os.getenv('MINGRP_LOG_LEVEL', 'INFO')

# Group sizes
DEFAULT_ORDER_LIMIT = 2000        # lattice work (subgroup classes, verdicts)
ORACLE_ORDER_LIMIT = 200          # brute-force subgroup oracle in the tests
QUOTIENT_DEGREE_LIMIT = 5000      # largest coset action built by quotient()
IDENTIFY_ORDER_BOUND = 10 ** 6    # simple-order table for identify_simple
MAX_PARAMETER = 2 ** 63 - 1       # field sizes and q in group names

# Constructible families and their parameter limits
CONSTRUCT_LIMITS = {
    "alternating_max_n": 12,
    "symmetric_max_n": 12,
    "l2_max_q": 1024,
    "l3_max_q": 9,
    "suzuki_max_q": 32,
    "unitary_fields": [3, 4, 5],
}

# Report layout
JSON_INDENT = 2
TIMING_PRECISION = 3
