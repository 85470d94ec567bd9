import os
from time import perf_counter


precision_bits = int(os.environ.get("BETA_PRECISION_BITS", "32"))
verbose = os.environ.get("BETA_VERBOSE", "").lower() in ("1", "true", "yes")
trace_level = int(os.environ.get("BETA_TRACE_LEVEL", "0"))
max_orbit_steps = int(os.environ.get("BETA_MAX_ORBIT_STEPS", str(10**6)))

# refinement depth, in bits, after which boundary cases are settled by exact algebraic tests
exact_check_bits = 128

step = 0
started = perf_counter()
