import sys

# bounds and thresholds are exact integers far beyond the default decimal conversion limit
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
