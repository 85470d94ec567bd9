from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from beta_numeration.classify import Advisory, BaseClassification, HypothesisReport
from beta_numeration.digits import Representation, format_representation
from beta_numeration.field import NumberField


class ConjugateDTO(BaseModel):
    index: int
    verdict: str
    re: List[str]
    im: List[str]


class ClassificationDTO(BaseModel):
    field: str
    is_algebraic_integer: bool
    is_rational: bool
    label: str
    conjugates: List[ConjugateDTO]
    collapse_exponents: List[int]
    unit_circle_count: Optional[int]
    advisory: str
    advisory_reasons: List[str] = []
    hypotheses: str

    @classmethod
    def build(cls, field: NumberField, classification: BaseClassification, advisory: Advisory,
              hypotheses: HypothesisReport) -> "ClassificationDTO":
        conjugates = [ConjugateDTO(index=c.index, verdict=c.verdict.value,
                                   re=[str(c.box.re.lo), str(c.box.re.hi)],
                                   im=[str(c.box.im.lo), str(c.box.im.hi)])
                      for c in classification.conj_moduli]
        return cls(field=field.spec,
                   is_algebraic_integer=classification.is_algebraic_integer,
                   is_rational=classification.is_rational,
                   label=classification.label.value,
                   conjugates=conjugates,
                   collapse_exponents=list(classification.collapse_exponents),
                   unit_circle_count=classification.unit_circle_count,
                   advisory=advisory.verdict,
                   advisory_reasons=advisory.reasons,
                   hypotheses=hypotheses.verdict)


class RepresentationDTO(BaseModel):
    L: Optional[int]
    preperiod: List[int]
    period: List[int]
    text: str = ""
    alphabet_bound: int = 0

    @classmethod
    def build(cls, rep: Representation) -> "RepresentationDTO":
        return cls(L=rep.leading_index, preperiod=list(rep.preperiod), period=list(rep.period),
                   text=format_representation(rep), alphabet_bound=rep.alphabet_bound)

    def to_representation(self) -> Representation:
        return Representation(self.L, tuple(self.preperiod), tuple(self.period))


class TraceDTO(BaseModel):
    q: int
    r: int
    qbar: int
    m: Optional[int]
    l: Optional[int]
    s: Optional[int]
    Z: Optional[List[List[int]]]
    z: Dict[str, int] = Field(default_factory=dict, description="exponent -> coefficient")
    inverse_a_exponent: int
    r_exponent: int
    representation: RepresentationDTO


class BenchRowDTO(BaseModel):
    q: int
    seconds: float
    preperiod_length: int
    period_length: int
    alphabet_bound: int


class SelectorConfig(BaseModel):
    kind: Literal["greedy", "balanced", "itosadahiro", "thurston"]
    radius: Optional[str] = None
    polygon: Optional[List[List[str]]] = None
    digits: Optional[List[int]] = None
    gaussian: bool = False


class ConversionRuleDTO(BaseModel):
    t: int
    r: int
    input_range: List[int]
    alphabet: List[int]
    table: Dict[str, int]


class CommandConfig(BaseModel):
    subcommand: Literal["classify", "represent", "eval", "add", "mul", "convert", "invert", "lift", "orbit",
                        "bench", "schema"]
    field: Optional[str] = None
    root_hint: Optional[str] = None
    value: Optional[str] = None
    reps: List[str] = []
    n: Optional[int] = None
    power: int = 1
    normalize: bool = False
    selector: Optional[SelectorConfig] = None
    rule: Optional[ConversionRuleDTO] = None
    q_from: int = 2
    q_to: int = 100
    workers: int = 1
    max_steps: Optional[int] = None
    trace: bool = False
    model: Optional[str] = None
    output: Literal["text", "json"] = "text"


class ErrorDTO(BaseModel):
    error: str
    message: str


class InversionDTO(BaseModel):
    n: int
    invertible: bool
    terms: Dict[str, int] = Field(default_factory=dict, description="exponent -> coefficient")
