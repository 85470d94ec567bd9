from beta_numeration.digits.alphabet import Alphabet, FieldAlphabet, eval_field_digits, reduce_alphabet_to_integers
from beta_numeration.digits.greedy import weak_greedy_check
from beta_numeration.digits.lift import eval_in_power_base, lift_rep_from_power_base
from beta_numeration.digits.notation import format_representation, parse_representation
from beta_numeration.digits.representation import (Representation, ZERO, canonicalize, eval_rep, evaluate,
                                                   laurent_from_representation, representation_from_laurent)
