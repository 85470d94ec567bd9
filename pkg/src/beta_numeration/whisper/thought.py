from dataclasses import dataclass, field
from time import perf_counter

from beta_numeration import global_state


@dataclass
class Thought:
    stage: str
    content: str
    level: int
    step: int = field(default_factory=lambda: global_state.step)
    elapsed: float = field(default_factory=lambda: perf_counter() - global_state.started)
