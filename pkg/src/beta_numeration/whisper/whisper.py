# Tracer for following the constructions step by step.
import sys
from typing import Callable, Optional

from colorama import Fore, Style

from beta_numeration import global_state
from beta_numeration.whisper.thought import Thought

emitter: Optional[Callable[[Thought], None]] = None

_level_colors = {0: Fore.CYAN, 1: Fore.GREEN}


def whisper(stage: str, content: str, level: int = 0):
    global_state.step += 1
    thought = Thought(stage, content, level)
    if emitter:
        emitter(thought)

    if global_state.verbose and level <= global_state.trace_level:
        color = _level_colors.get(level, Fore.WHITE)
        print(f"{color}{thought.elapsed:<10.4f} - {thought.step:<6}  {stage:<16}: {content}{Style.RESET_ALL}",
              file=sys.stderr)
