import argparse
import re
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ValidationError

from beta_numeration.communication.models import CommandConfig, ConversionRuleDTO, SelectorConfig
from beta_numeration.errors import ParseError


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # "-3,2" and "-1/3" are values, not options
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):
        raise ParseError(message)


def _load(model: type, path: str) -> BaseModel:
    try:
        return model.model_validate_json(Path(path).read_text())
    except (OSError, ValidationError) as error:
        raise ParseError(f"cannot load {path}: {error}") from error


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="beta-numeration", description="Exact eventually periodic representations in base beta.")
    parser.add_argument("--json", dest="output", action="store_const", const="json", default="text",
                        help="machine readable output")
    commands = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def command(name: str, help: str, field: bool = True) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help)
        sub.add_argument("--json", dest="output", action="store_const", const="json", default=argparse.SUPPRESS)
        if field:
            sub.add_argument("--field", required=True, help='ascending coefficients, e.g. "-3,2" for 2x - 3')
            sub.add_argument("--root-hint", help='approximate root "re,im" selecting beta')
        return sub

    command("classify", "Pisot / Salem / complex Pisot report")

    represent = command("represent", "eventually periodic representation of a field element")
    represent.add_argument("--value", required=True, help='"p/q" or coordinates "p0/q0;p1/q1;..."')
    represent.add_argument("--trace", action="store_true", help="dump the congruence data of 1/q")

    evaluate = command("eval", "value of a representation")
    evaluate.add_argument("--rep", dest="reps", action="append", required=True)

    add = command("add", "digitwise sum of two representations")
    add.add_argument("--rep", dest="reps", action="append", required=True)

    mul = command("mul", "product of an element of Z[beta] and a representation")
    mul.add_argument("--value", required=True)
    mul.add_argument("--rep", dest="reps", action="append", required=True)

    convert = command("convert", "digit set conversion")
    convert.add_argument("--rep", dest="reps", action="append", required=True)

    invert = command("invert", "1/n in Z[beta, 1/beta]")
    invert.add_argument("--n", type=int, required=True)

    lift = command("lift", "interleave base beta^m representations")
    lift.add_argument("--power", type=int, required=True)
    lift.add_argument("--rep", dest="reps", action="append", required=True)

    orbit = command("orbit", "periodize the orbit of a digit selector")
    orbit.add_argument("--value", required=True)
    orbit.add_argument("--max-steps", type=int)

    bench = command("bench", "represent 1/q over a range of q")
    bench.add_argument("--q-from", type=int, default=2)
    bench.add_argument("--q-to", type=int, default=100)
    bench.add_argument("--workers", type=int, default=1)

    for sub in (represent, add, mul, convert, orbit, bench):
        sub.add_argument("--normalize", action="store_true", help="bring digits into the rule's alphabet")
        sub.add_argument("--rule-file", help="JSON conversion rule {t, r, input_range, alphabet, table}")
    for sub in (represent, orbit, bench):
        sub.add_argument("--selector", choices=["greedy", "balanced", "itosadahiro", "thurston"])
        sub.add_argument("--selector-file", help="JSON selector configuration")

    schema = command("schema", "JSON schema of a result model", field=False)
    schema.add_argument("model", choices=["classification", "representation", "trace", "bench", "inversion",
                                          "error", "config"])
    return parser


def parse_args(argv: Optional[List[str]] = None) -> CommandConfig:
    args = vars(build_parser().parse_args(argv))

    selector = None
    if args.get("selector_file"):
        selector = _load(SelectorConfig, args["selector_file"])
    elif args.get("selector"):
        selector = SelectorConfig(kind=args["selector"])
    rule = _load(ConversionRuleDTO, args["rule_file"]) if args.get("rule_file") else None

    fields = {key: value for key, value in args.items()
              if key in CommandConfig.model_fields and value is not None and key not in ("selector", "rule")}
    try:
        return CommandConfig(selector=selector, rule=rule, **fields)
    except ValidationError as error:
        raise ParseError(str(error)) from error
