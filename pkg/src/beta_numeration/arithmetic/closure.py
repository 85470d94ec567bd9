from typing import Iterator, List, Optional, Tuple

from beta_numeration.arithmetic.conversion import ConversionRule, apply_rule, integer_digits
from beta_numeration.digits import Representation, ZERO, canonicalize, eval_rep
from beta_numeration.errors import FieldMismatch, NormalizerRangeExceeded, ValueNotPreserved
from beta_numeration.field import LaurentIntElement, NumberField
from beta_numeration.utils import lcm_all, timeit
from beta_numeration.whisper import whisper


def align(reps: List[Representation]) -> List[Representation]:
    """Same leading index, preperiod length and period length for every nonzero input."""
    reps = [rep for rep in reps if not rep.is_zero]
    if not reps:
        return []
    leading = max(rep.leading_index for rep in reps)
    reps = [rep.raised_to(leading) for rep in reps]
    head = max(len(rep.preperiod) for rep in reps)
    reps = [rep.with_preperiod(head) for rep in reps]
    if all(rep.is_finite for rep in reps):
        return reps
    s = lcm_all(len(rep.period) or 1 for rep in reps)
    return [rep.with_period_length(s) for rep in reps]


def _digitwise_sum(reps: List[Representation]) -> Representation:
    reps = align(reps)
    if not reps:
        return ZERO
    preperiod = tuple(map(sum, zip(*(rep.preperiod for rep in reps))))
    period = tuple(map(sum, zip(*(rep.period for rep in reps)))) if reps[0].period else ()
    return Representation(reps[0].leading_index, preperiod, period)


def _split(rep: Representation, lo: int, hi: int) -> List[Representation]:
    """Chunks with digits in [lo, hi] adding up digitwise to rep."""
    chunks = []
    remaining = rep
    while not remaining.is_zero and any(remaining.digits):
        def take(d: int) -> int:
            return min(max(d, lo), hi)
        chunk = Representation(remaining.leading_index, tuple(map(take, remaining.preperiod)),
                               tuple(map(take, remaining.period)))
        if chunk.is_zero:
            raise NormalizerRangeExceeded(f"digits outside [{lo}, {hi}] cannot be absorbed")
        chunks.append(chunk)
        remaining = Representation(remaining.leading_index,
                                   tuple(d - take(d) for d in remaining.preperiod),
                                   tuple(d - take(d) for d in remaining.period))
    return chunks


def _within(rep: Representation, lo: int, hi: int) -> bool:
    return all(lo <= d <= hi for d in rep.digits)


def _accumulate(rule: ConversionRule, base: Representation, addends: List[Representation]) -> Representation:
    """base (digits in the rule's alphabet) plus addends (digits in the headroom), converting after each step."""
    acc = base
    for addend in addends:
        acc = apply_rule(rule, _digitwise_sum([acc, addend]))
    return acc


def normalize(field: NumberField, rep: Representation, rule: ConversionRule) -> Representation:
    """Rewrites a representation with arbitrary integer digits over the rule's output alphabet."""
    if rule.field != field:
        raise FieldMismatch(f"{rule.name} rule is over {rule.field}")
    if rep.is_zero:
        return ZERO
    lo, hi = min(rule.alphabet), max(rule.alphabet)
    if _within(rep, lo, hi):
        return canonicalize(rep)
    if _within(rep, *rule.input_range):
        return apply_rule(rule, rep)

    if rule.is_three_halves:
        # layer j collects the beta^j digits of every digit's own base 3/2 expansion
        expansions = {d: integer_digits(field, d) for d in set(rep.digits)}
        height = max(e.leading_index or 0 for e in expansions.values())
        layers = []
        for j in range(height + 1):
            def layer_digit(d: int) -> int:
                return expansions[d].digit_at_exponent(j)
            layer = Representation(rep.leading_index + j, tuple(map(layer_digit, rep.preperiod)),
                                   tuple(map(layer_digit, rep.period)))
            if not layer.is_zero:
                layers.append(layer)
        result = canonicalize(layers[0])
        for layer in layers[1:]:
            result = per_add(field, result, layer, rule)
    else:
        room_lo, room_hi = rule.headroom
        if room_lo > 0 or room_hi < 0 or room_lo == room_hi:
            raise NormalizerRangeExceeded(f"the {rule.name} rule leaves no room to absorb digits")
        result = _accumulate(rule, ZERO, _split(rep, room_lo, room_hi))

    if eval_rep(field, result) != eval_rep(field, rep):
        raise ValueNotPreserved("normalization changed the value")
    whisper("arithmetic", f"normalized digits bounded by {rep.alphabet_bound} into {list(rule.alphabet)}", level=1)
    return result


@timeit
def per_add(field: NumberField, x: Representation, y: Representation,
            normalizer: Optional[ConversionRule] = None) -> Representation:
    """
    Digitwise sum of two eventually periodic representations. With a normalizer the result is brought
    back into its output alphabet by adding y in chunks the rule can absorb.
    """
    if normalizer is not None and normalizer.field != field:
        raise FieldMismatch(f"{normalizer.name} rule is over {normalizer.field}")

    total = _digitwise_sum([x, y])
    if normalizer is None or total.is_zero:
        result = canonicalize(total)
    elif _within(total, *normalizer.input_range):
        result = apply_rule(normalizer, total)
    else:
        lo, hi = min(normalizer.alphabet), max(normalizer.alphabet)
        base, addend = (x, y) if _within(x, lo, hi) else (y, x)
        if not _within(base, lo, hi):
            base = normalize(field, base, normalizer)
        room_lo, room_hi = normalizer.headroom
        if room_lo > 0 or room_hi < 0 or room_lo == room_hi:
            raise NormalizerRangeExceeded(f"the {normalizer.name} rule leaves no room to absorb digits")
        result = _accumulate(normalizer, base, _split(addend, room_lo, room_hi))

    if eval_rep(field, result) != eval_rep(field, x) + eval_rep(field, y):
        raise ValueNotPreserved("addition result does not evaluate to the sum")
    return result


def _check_same_field(z: LaurentIntElement, w: LaurentIntElement):
    if z.field != w.field:
        raise FieldMismatch(f"{z.field} and {w.field}")


def fin_add(z: LaurentIntElement, w: LaurentIntElement) -> LaurentIntElement:
    _check_same_field(z, w)
    return z + w


def fin_sub(z: LaurentIntElement, w: LaurentIntElement) -> LaurentIntElement:
    _check_same_field(z, w)
    return z - w


def fin_mul(z: LaurentIntElement, w: LaurentIntElement) -> LaurentIntElement:
    _check_same_field(z, w)
    return z * w


def _periodic_bounds(z: LaurentIntElement, rep: Representation) -> Tuple[int, int]:
    top = rep.leading_index + z.max_exponent
    start = rep.periodic_from_exponent + z.min_exponent
    return top, start


def _nonzero_digits(rep: Representation, lowest: int) -> Iterator[Tuple[int, int]]:
    """(exponent, digit) for the nonzero digits of rep at exponents >= lowest."""
    for k, d in enumerate(rep.preperiod):
        if d and rep.leading_index - k >= lowest:
            yield rep.leading_index - k, d
    s, begin = len(rep.period), rep.periodic_from_exponent
    for j, d in enumerate(rep.period):
        if d:
            for exponent in range(begin - j, lowest - 1, -s):
                yield exponent, d


@timeit
def fin_times_per(z: LaurentIntElement, rep: Representation,
                  normalizer: Optional[ConversionRule] = None) -> Representation:
    """
    Shift and add: the digit of beta^e in the product is sum over terms c beta^f of c times the digit of
    beta^(e-f). Only nonzero digits are visited, each once per term.
    """
    field = z.field
    if z.is_zero or rep.is_zero:
        return ZERO

    top, start = _periodic_bounds(z, rep)
    s = len(rep.period)
    leading = max(top, start) if s else top
    bottom = start - s + 1 if s else start + 1
    stream = [0] * (leading - bottom + 1)
    for f, c in z.terms:
        for exponent, d in _nonzero_digits(rep, bottom - f):
            stream[leading - exponent - f] += c * d
    head = leading - start
    product = Representation(leading, stream[:head], stream[head:])

    result = normalize(field, product, normalizer) if normalizer else canonicalize(product)
    if eval_rep(field, result) != z.value * eval_rep(field, rep):
        raise ValueNotPreserved("product does not evaluate to z times the representation")
    return result
