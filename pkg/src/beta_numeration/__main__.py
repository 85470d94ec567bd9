import sys
from typing import List, Optional

from colorama import Back, Fore, Style

from beta_numeration.cli import parse_args, run
from beta_numeration.communication.models import ErrorDTO
from beta_numeration.errors import BetaNumerationError, ParseError
from beta_numeration.utils import colored


def _report(error: BetaNumerationError):
    body = ErrorDTO(error=error.code, message=str(error)).model_dump_json()
    if sys.stderr.isatty():
        with colored(Style.BRIGHT, Fore.RED, Back.RESET):
            print(body, end="", file=sys.stderr)
        print(file=sys.stderr)
    else:
        print(body, file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        output = run(parse_args(argv))
    except ParseError as error:
        _report(error)
        return 2
    except BetaNumerationError as error:
        _report(error)
        return 1
    print(output)
    return 0


if __name__ == '__main__':
    sys.exit(main())
