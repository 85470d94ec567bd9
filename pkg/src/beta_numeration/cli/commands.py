import json
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from beta_numeration.arithmetic import (ConversionRule, apply_rule, builtin_rule_three_halves, convert_32, normalize,
                                        per_add, fin_times_per, rule_from_table)
from beta_numeration.classify import classify_base, qbeta_hypotheses, weak_greedy_advisory
from beta_numeration.cli.bench import bench
from beta_numeration.communication.models import (BenchRowDTO, ClassificationDTO, CommandConfig, ErrorDTO,
                                                  InversionDTO, RepresentationDTO, SelectorConfig, TraceDTO)
from beta_numeration.digits import Alphabet, Representation, eval_rep, lift_rep_from_power_base, parse_representation
from beta_numeration.dynamics import (DigitSelector, DiskRegion, PolygonRegion, balanced_selector, gaussian_digits,
                                      greedy_selector, ito_sadahiro_selector, orbit_periodize, thurston_default,
                                      thurston_selector)
from beta_numeration.errors import FieldMismatch, ParseError
from beta_numeration.field import FieldElement, LaurentIntElement, NumberField, parse_field
from beta_numeration.pipeline import build_reciprocal, invert_integer_thm_finite, represent_field_element
from beta_numeration.utils import parse_rational
from beta_numeration.whisper import whisper

SCHEMAS: Dict[str, type] = {
    "classification": ClassificationDTO,
    "representation": RepresentationDTO,
    "trace": TraceDTO,
    "bench": BenchRowDTO,
    "inversion": InversionDTO,
    "error": ErrorDTO,
    "config": CommandConfig,
}


def parse_value(field: NumberField, text: str) -> FieldElement:
    """"p/q" on the basis element 1, or a coordinate vector "p0/q0;p1/q1;..."."""
    return field.element(parse_rational(part) for part in text.split(";"))


def _integer_laurent(x: FieldElement) -> LaurentIntElement:
    if x.denominator != 1:
        raise ParseError(f"{x} is not in Z[beta]")
    return LaurentIntElement(x.field, tuple((i, int(c)) for i, c in enumerate(x.coords)))


def _reps(config: CommandConfig, count: Optional[int] = None) -> List[Representation]:
    reps = [parse_representation(text) for text in config.reps]
    if count is not None and len(reps) != count:
        raise ParseError(f"{config.subcommand} takes {count} representation(s), got {len(reps)}")
    return reps


def normalizer_for(config: CommandConfig, field: NumberField) -> Optional[ConversionRule]:
    if config.rule:
        dto = config.rule
        return rule_from_table(field, dto.t, dto.r, dto.input_range, dto.alphabet, dto.table)
    if not config.normalize:
        return None
    rule = builtin_rule_three_halves()
    if rule.field != field:
        raise FieldMismatch("--normalize without --rule-file is only available in base 3/2")
    return rule


def selector_for(config: Optional[SelectorConfig], field: NumberField) -> Optional[DigitSelector]:
    if config is None:
        return None
    if config.kind == "greedy":
        return greedy_selector(field)
    if config.kind == "balanced":
        return balanced_selector(field)
    if config.kind == "itosadahiro":
        return ito_sadahiro_selector(field)

    if config.polygon:
        region = PolygonRegion(tuple((parse_rational(x), parse_rational(y)) for x, y in config.polygon))
    elif config.radius:
        region = DiskRegion(parse_rational(config.radius))
    else:
        region = None
    if config.gaussian:
        digits = gaussian_digits(field)
    elif config.digits:
        digits = Alphabet(tuple(config.digits))
    else:
        digits = None
    if region is None and digits is None:
        return thurston_default(field)
    return thurston_selector(field, digits or gaussian_digits(field), region or DiskRegion(Fraction(1)))


def _trace_dto(trace) -> TraceDTO:
    return TraceDTO(q=trace.q, r=trace.r, qbar=trace.qbar, m=trace.m, l=trace.l, s=trace.s,
                    Z=[list(row) for row in trace.Z] if trace.Z is not None else None,
                    z={str(e): c for e, c in trace.z.terms} if trace.z is not None else {},
                    inverse_a_exponent=trace.inverse_a_exponent, r_exponent=trace.r_exponent,
                    representation=RepresentationDTO.build(trace.representation))


def _classify(config: CommandConfig, field: NumberField):
    return ClassificationDTO.build(field, classify_base(field), weak_greedy_advisory(field), qbeta_hypotheses(field))


def _represent(config: CommandConfig, field: NumberField):
    normalizer = normalizer_for(config, field)
    x = parse_value(field, config.value)
    if config.trace:
        if not x.is_rational or x.coords[0].numerator != 1:
            raise ParseError("--trace dumps the construction of 1/q and needs such a value")
        return _trace_dto(build_reciprocal(field, x.denominator, normalizer))
    rep = represent_field_element(field, x, normalizer, selector_for(config.selector, field), config.max_steps)
    return RepresentationDTO.build(rep)


def _eval(config: CommandConfig, field: NumberField):
    return "\n".join(str(eval_rep(field, rep)) for rep in _reps(config))


def _add(config: CommandConfig, field: NumberField):
    x, y = _reps(config, 2)
    return RepresentationDTO.build(per_add(field, x, y, normalizer_for(config, field)))


def _mul(config: CommandConfig, field: NumberField):
    (rep,) = _reps(config, 1)
    z = _integer_laurent(parse_value(field, config.value))
    return RepresentationDTO.build(fin_times_per(z, rep, normalizer_for(config, field)))


def _convert(config: CommandConfig, field: NumberField):
    (rep,) = _reps(config, 1)
    rule = normalizer_for(config, field)
    if rule is None:
        return RepresentationDTO.build(convert_32(field, rep))
    if config.normalize:
        return RepresentationDTO.build(normalize(field, rep, rule))
    return RepresentationDTO.build(apply_rule(rule, rep))


def _invert(config: CommandConfig, field: NumberField):
    if config.n is None or config.n < 1:
        raise ParseError("--n must be a positive integer")
    inverse = invert_integer_thm_finite(field, config.n)
    if inverse is None:
        return InversionDTO(n=config.n, invertible=False)
    return InversionDTO(n=config.n, invertible=True, terms={str(e): c for e, c in inverse.terms})


def _lift(config: CommandConfig, field: NumberField):
    return RepresentationDTO.build(lift_rep_from_power_base(field, config.power, _reps(config)))


def _orbit(config: CommandConfig, field: NumberField):
    selector = selector_for(config.selector, field)
    if selector is None:
        selector = greedy_selector(field) if field.is_real else thurston_default(field)
    rep = orbit_periodize(field, selector, parse_value(field, config.value), config.max_steps)
    normalizer = normalizer_for(config, field)
    return RepresentationDTO.build(normalize(field, rep, normalizer) if normalizer else rep)


def _bench(config: CommandConfig, field: NumberField):
    return bench(field, range(config.q_from, config.q_to + 1), normalizer_for(config, field),
                 selector_for(config.selector, field), config.workers)


COMMANDS: Dict[str, Callable] = {
    "classify": _classify,
    "represent": _represent,
    "eval": _eval,
    "add": _add,
    "mul": _mul,
    "convert": _convert,
    "invert": _invert,
    "lift": _lift,
    "orbit": _orbit,
    "bench": _bench,
}


def render(config: CommandConfig, result) -> str:
    """Text and JSON carry the same data; text keeps the representation notation and exact rationals."""
    if isinstance(result, str):
        return json.dumps(result.split("\n")) if config.output == "json" else result
    if isinstance(result, list):
        if config.output == "json":
            return json.dumps([row.model_dump() for row in result], indent=2)
        header = ",".join(BenchRowDTO.model_fields)
        return "\n".join([header] + [",".join(str(v) for v in row.model_dump().values()) for row in result])
    if config.output == "json":
        return result.model_dump_json(indent=2)

    if isinstance(result, RepresentationDTO):
        return result.text
    if isinstance(result, InversionDTO):
        if not result.invertible:
            return "not invertible in Z[beta,1/beta]"
        return " + ".join(f"{c}*beta^{e}" for e, c in sorted(result.terms.items(), key=lambda t: -int(t[0])))
    return "\n".join(f"{key}: {value}" for key, value in result.model_dump().items())


def run(config: CommandConfig) -> str:
    if config.subcommand == "schema":
        return json.dumps(SCHEMAS[config.model].model_json_schema(), indent=2)
    if not config.field:
        raise ParseError(f"{config.subcommand} needs --field")

    field = parse_field(config.field, config.root_hint)
    whisper("cli", f"{config.subcommand} over {field}")
    return render(config, COMMANDS[config.subcommand](config, field))
