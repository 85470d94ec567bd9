from beta_numeration.classify.classification import (Advisory, BaseClassification, BaseLabel, ConjugateVerdict,
                                                     ModulusVerdict, classify_base, collapse_exponents,
                                                     unit_circle_conjugate, weak_greedy_advisory)
from beta_numeration.classify.hypotheses import HypothesisReport, qbeta_hypotheses
