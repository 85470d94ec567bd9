from beta_numeration.field.interval import Box, Interval, sqrt_bounds
from beta_numeration.field.laurent import LaurentIntElement, laurent_to_field
from beta_numeration.field.number_field import (FieldElement, NumberField, abs_squared, compare, conjugate_boxes,
                                                elem_add, elem_inv, elem_mul, elem_sub, embed, floor,
                                                imaginary_unit, make_field, minpoly_of_power, parse_field, sign)
from beta_numeration.field.polynomial import IntPoly
from beta_numeration.field.roots import RootBox, isolate_roots
from beta_numeration.field.algebraic import (edge_sign, element_polynomial, equals_rational, modulus_polynomial,
                                             modulus_squared_equals, same_modulus, same_real_root)
