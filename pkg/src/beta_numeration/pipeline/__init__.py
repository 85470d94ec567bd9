from beta_numeration.pipeline.companion import CompanionMatrix, companion_matrix, find_cycle_mod, find_s
from beta_numeration.pipeline.inversion import invert_integer_thm_finite, thm_finite_criterion
from beta_numeration.pipeline.represent import (PipelineTrace, build_reciprocal, invert_denominator,
                                                represent_field_element, split_denominator)
