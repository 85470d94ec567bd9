from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from time import perf_counter
from typing import Iterable, List, Optional

from beta_numeration.arithmetic import ConversionRule
from beta_numeration.communication.models import BenchRowDTO
from beta_numeration.dynamics import DigitSelector
from beta_numeration.field import NumberField
from beta_numeration.pipeline import represent_field_element
from beta_numeration.whisper import whisper


def bench_row(field: NumberField, q: int, normalizer: Optional[ConversionRule] = None,
              selector: Optional[DigitSelector] = None) -> BenchRowDTO:
    start = perf_counter()
    rep = represent_field_element(field, field.rational(Fraction(1, q)), normalizer, selector)
    seconds = perf_counter() - start
    return BenchRowDTO(q=q, seconds=seconds, preperiod_length=len(rep.preperiod), period_length=len(rep.period),
                       alphabet_bound=rep.alphabet_bound)


def bench(field: NumberField, qs: Iterable[int], normalizer: Optional[ConversionRule] = None,
          selector: Optional[DigitSelector] = None, workers: int = 1) -> List[BenchRowDTO]:
    """Represents 1/q for every q; rows come back in the order of qs."""
    qs = list(qs)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        rows = list(pool.map(lambda q: bench_row(field, q, normalizer, selector), qs))
    whisper("bench", f"{len(rows)} rows over {field}")
    return rows
