from beta_numeration.dynamics.geometry import DiskRegion, IntervalRegion, PolygonRegion
from beta_numeration.dynamics.orbit import (OrbitTrace, exclusion_constant, exclusion_constant_squared,
                                            orbit_periodize, orbit_trace, remainder_bound, scale_into_domain)
from beta_numeration.dynamics.selectors import (DigitSelector, IntervalSelector, SelectorKind, ThurstonSelector,
                                                balanced_selector, figure_hexagon, gaussian_digits, greedy_selector,
                                                ito_sadahiro_selector, thurston_default, thurston_selector)
