from delannoy_schroder.core.config.env import get_int_env, get_variable_env, load_env_variables

env_file = load_env_variables()

# Worker processes for verification runs
DEFAULT_JOBS = get_int_env("DELANNOY_JOBS", 1)

# Exclusive upper bounds on the primes scanned by default
PRIME_BOUND = get_int_env("DELANNOY_PRIME_BOUND", 100)
EXTENDED_PRIME_BOUND = get_int_env("DELANNOY_EXTENDED_PRIME_BOUND", 500)
EVIDENCE_PRIME_BOUND = get_int_env("DELANNOY_EVIDENCE_PRIME_BOUND", 200)

DEFAULT_REPORT_FORMAT = get_variable_env("DELANNOY_REPORT_FORMAT", default="text")

REPORT_SCHEMA_VERSION = 1
