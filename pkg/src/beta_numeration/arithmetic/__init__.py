from beta_numeration.arithmetic.closure import align, fin_add, fin_mul, fin_sub, fin_times_per, normalize, per_add
from beta_numeration.arithmetic.conversion import (ConversionRule, apply_rule, apply_window, builtin_rule_three_halves,
                                                   convert_32, identity_rule, integer_digits, rule_from_table)
