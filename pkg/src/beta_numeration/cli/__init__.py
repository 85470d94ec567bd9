from beta_numeration.cli.bench import bench, bench_row
from beta_numeration.cli.commands import normalizer_for, parse_value, render, run, selector_for
from beta_numeration.cli.parser import build_parser, parse_args
