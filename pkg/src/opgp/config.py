import yaml
import logging
from importlib import resources
from pathlib import Path
from typing import Annotated, Dict, Any, List, Literal, Optional, Union
from pydantic import BaseModel, Field, ValidationError, model_validator, ConfigDict, field_validator

from . import constants
from .gpr import AxisRange, SphereGrid
from .exceptions import (
    ReferenceNotFoundError,
    StageTypeError,
    ConfigParsingError,
    ConfigFileMissingError,
    ConfigValidationError,
)
from .orealg import RingKind


logger = logging.getLogger(__name__)

# Kinds of named objects a scenario can hold
MATRIX = "matrix"
IDEAL = "ideal"
MEAN = "mean"
OBSERVATIONS = "observations"
PARAMETRIZATION = "parametrization"
INTERSECTION = "intersection"
KERNEL = "kernel"
MODEL = "model"
GRID = "grid"

# Anything that can stand in for an operator matrix
MATRIX_LIKE = {MATRIX, PARAMETRIZATION, INTERSECTION}


class RingModel(BaseModel):
    """
        Class Config-Validation Model describe `ring`
    """
    variables: List[str]
    kind: RingKind = RingKind.WEYL
    partials: Optional[List[str]] = None
    model_config = ConfigDict(extra="forbid")


class ObservationModel(BaseModel):
    """
        Class Config-Validation Model for one datum; `functional` names a declared matrix.
    """
    point: List[float]
    value: List[float]
    functional: Optional[str] = None
    model_config = ConfigDict(extra="forbid")


# --- checks ---
class _CheckBase(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def references(self) -> Dict[str, set]:
        """name -> allowed kinds, for cross-reference validation"""
        return {}


class ZeroProductCheck(_CheckBase):
    kind: Literal["zero_product"]
    left: str
    right: str

    def references(self):
        return {self.left: MATRIX_LIKE, self.right: MATRIX_LIKE}


class ParametrizationCheck(_CheckBase):
    kind: Literal["parametrization"]
    system: str
    parametrization: str

    def references(self):
        return {self.system: MATRIX_LIKE, self.parametrization: MATRIX_LIKE}


class ControllableCheck(_CheckBase):
    kind: Literal["controllable"]
    system: str
    expected: bool = True

    def references(self):
        return {self.system: MATRIX_LIKE}


class ModuleEqualCheck(_CheckBase):
    kind: Literal["module_equal"]
    left: str
    right: str
    side: Literal["column", "row"] = "column"

    def references(self):
        return {self.left: MATRIX_LIKE, self.right: MATRIX_LIKE}


class ExtraRelationsCheck(_CheckBase):
    """`expected` names a matrix with the same row module; omitted means no extra relations."""
    kind: Literal["extra_relations"]
    intersection: str
    expected: Optional[str] = None

    def references(self):
        refs = {self.intersection: {INTERSECTION}}
        if self.expected:
            refs[self.expected] = MATRIX_LIKE
        return refs


class ConstraintCheck(_CheckBase):
    kind: Literal["constraint"]
    model: str
    operator: str

    def references(self):
        return {self.model: {MODEL}, self.operator: MATRIX_LIKE}


class BoundaryCheck(_CheckBase):
    """Restrict the posterior mean to `variable` = `at` and compare components with exact polynomials."""
    kind: Literal["boundary"]
    model: str
    variable: str
    at: Union[int, str] = 0
    components: List[int]
    expected: List[str]

    @model_validator(mode='after')
    def check_lengths(self) -> 'BoundaryCheck':
        if len(self.components) != len(self.expected):
            raise ValueError("'components' and 'expected' must have the same length")
        if any(c < 1 for c in self.components):
            raise ValueError("components are numbered from 1")
        return self

    def references(self):
        return {self.model: {MODEL}}


class ValueCheck(_CheckBase):
    kind: Literal["value"]
    model: str
    point: List[float]
    expected: List[float]
    tolerance: float = 1e-4

    def references(self):
        return {self.model: {MODEL}}


class InterpolationCheck(_CheckBase):
    kind: Literal["interpolation"]
    model: str
    tolerance: float = 1e-6

    def references(self):
        return {self.model: {MODEL}}


class KernelOracleCheck(_CheckBase):
    """Finite differences of the base kernel against a pushed kernel at random point pairs."""
    kind: Literal["kernel_oracle"]
    kernel: str
    pairs: int = 20
    seed: int = 0
    low: float = -1.0
    high: float = 1.0
    tolerance: float = constants.FD_TOLERANCE

    def references(self):
        return {self.kernel: {KERNEL}}


CheckModel = Annotated[
    Union[
        ZeroProductCheck, ParametrizationCheck, ControllableCheck, ModuleEqualCheck,
        ExtraRelationsCheck, ConstraintCheck, BoundaryCheck, ValueCheck,
        InterpolationCheck, KernelOracleCheck,
    ],
    Field(discriminator="kind"),
]


# --- stages ---
class _StageBase(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def inputs(self) -> Dict[str, set]:
        return {}

    def produces(self) -> Optional[tuple]:
        """(name, kind) registered by this stage"""
        return None

    def label(self) -> str:
        return self.stage


class ParametrizeStage(_StageBase):
    """
    Class Config-Validation Model for `parametrize`.
    - arrange: signed 1-based column permutation applied to B, e.g. [2, -1]
    """
    stage: Literal["parametrize"]
    input: str
    output: str
    arrange: Optional[List[int]] = None

    def inputs(self):
        return {self.input: MATRIX_LIKE}

    def produces(self):
        return self.output, PARAMETRIZATION

    def label(self):
        return f"parametrize '{self.output}'"


class IntersectStage(_StageBase):
    stage: Literal["intersect"]
    left: str
    right: str
    output: str
    arrange: Optional[List[int]] = None

    def inputs(self):
        return {self.left: MATRIX_LIKE, self.right: MATRIX_LIKE}

    def produces(self):
        return self.output, INTERSECTION

    def label(self):
        return f"intersect '{self.output}'"


class BoundaryStage(_StageBase):
    stage: Literal["boundary"]
    ideal: str
    output: str

    def inputs(self):
        return {self.ideal: {IDEAL}}

    def produces(self):
        return self.output, MATRIX

    def label(self):
        return f"boundary '{self.output}'"


class KernelStage(_StageBase):
    """
    Class Config-Validation Model for `kernel`: the squared exponential pushed through `operator`.
    - lengthscales: one per variable, exact rationals as strings or numbers
    """
    stage: Literal["kernel"]
    operator: str
    output: str
    lengthscales: Optional[List[Union[int, float, str]]] = None

    def inputs(self):
        return {self.operator: MATRIX_LIKE}

    def produces(self):
        return self.output, KERNEL

    def label(self):
        return f"kernel '{self.output}'"


class FitStage(_StageBase):
    stage: Literal["fit"]
    kernel: str
    observations: str
    output: str
    mean: Optional[str] = None
    jitter: Optional[float] = None

    @field_validator("jitter")
    @classmethod
    def nonnegative(cls, v):
        if v is not None and v < 0:
            raise ValueError("jitter must be nonnegative")
        return v

    def inputs(self):
        refs = {self.kernel: {KERNEL}, self.observations: {OBSERVATIONS}}
        if self.mean:
            refs[self.mean] = {MEAN}
        return refs

    def produces(self):
        return self.output, MODEL

    def label(self):
        return f"fit '{self.output}'"


class SvgOptions(BaseModel):
    scale: float = constants.SVG_DEFAULT_SCALE
    project: str = "z"
    highlight: bool = True
    model_config = ConfigDict(extra="forbid")


class GridStage(_StageBase):
    """
    Class Config-Validation Model for `grid`: exactly one of `axes` or `sphere`.
    - svg: also render a quiver plot next to the CSV
    """
    stage: Literal["grid"]
    model: str
    output: str
    axes: Optional[List[AxisRange]] = None
    sphere: Optional[SphereGrid] = None
    std: bool = False
    svg: Optional[SvgOptions] = None

    @field_validator("axes", mode="before")
    @classmethod
    def axes_from_triples(cls, v):
        """[min, max, count] triples are accepted for brevity"""
        if isinstance(v, list):
            return [dict(zip(("min", "max", "count"), a)) if isinstance(a, (list, tuple)) else a for a in v]
        return v

    @model_validator(mode='after')
    def one_grid_kind(self) -> 'GridStage':
        if (self.axes is None) == (self.sphere is None):
            raise ValueError("exactly one of 'axes' or 'sphere' must be given")
        return self

    def inputs(self):
        return {self.model: {MODEL}}

    def produces(self):
        return self.output, GRID

    def label(self):
        return f"grid '{self.output}'"


class CheckStage(_StageBase):
    stage: Literal["check"]
    name: str = "check"
    checks: List[CheckModel] = Field(default_factory=list)

    def inputs(self):
        refs: Dict[str, set] = {}
        for check in self.checks:
            for name, kinds in check.references().items():
                refs[name] = refs.get(name, set()) | kinds
        return refs

    def label(self):
        return f"check '{self.name}'"


StageModel = Annotated[
    Union[ParametrizeStage, IntersectStage, BoundaryStage, KernelStage, FitStage, GridStage, CheckStage],
    Field(discriminator="stage"),
]


class ScenarioModel(BaseModel):
    """
        Class Config-Validation Model describe top-level of a scenario
    """
    name: str
    description: str = ""
    ring: RingModel
    matrices: Dict[str, List[List[Union[str, int]]]] = Field(default_factory=dict)
    boundaries: Dict[str, List[Union[str, List[str]]]] = Field(default_factory=dict)
    means: Dict[str, List[Union[str, int]]] = Field(default_factory=dict)
    observations: Dict[str, List[ObservationModel]] = Field(default_factory=dict)
    jitter: float = constants.DEFAULT_JITTER
    pipeline: List[StageModel] = Field(default_factory=list)
    model_config = ConfigDict(extra="forbid")

    @model_validator(mode='after')
    def validate_names_unique(self) -> 'ScenarioModel':
        seen: Dict[str, str] = {}
        for section in ("matrices", "boundaries", "means", "observations"):
            for name in getattr(self, section):
                if name in seen:
                    raise ConfigValidationError(f"Name '{name}' is declared in both '{seen[name]}' and '{section}'.")
                seen[name] = section
        return self

    @model_validator(mode='after')
    def validate_cross_references(self) -> 'ScenarioModel':
        """Every stage input is declared, or produced by an earlier stage, with a usable kind"""
        kinds: Dict[str, str] = {}
        kinds.update({name: MATRIX for name in self.matrices})
        kinds.update({name: IDEAL for name in self.boundaries})
        kinds.update({name: MEAN for name in self.means})
        kinds.update({name: OBSERVATIONS for name in self.observations})

        for name, obs in self.observations.items():
            for o in obs:
                if o.functional is None:
                    continue
                if o.functional not in kinds:
                    raise ReferenceNotFoundError(f"Observation set '{name}' uses undeclared functional '{o.functional}'.")
                if kinds[o.functional] != MATRIX:
                    raise StageTypeError(f"Functional '{o.functional}' of '{name}' is a {kinds[o.functional]}, not a matrix.")

        for index, stage in enumerate(self.pipeline, start=1):
            logger.debug(f"[Validation] Checking stage {index} ({stage.label()})...")
            for ref, allowed in stage.inputs().items():
                if ref not in kinds:
                    raise ReferenceNotFoundError(f"Stage {index} ({stage.label()}) refers to undeclared '{ref}'.")
                if kinds[ref] not in allowed:
                    raise StageTypeError(
                        f"Stage {index} ({stage.label()}) needs '{ref}' to be one of {sorted(allowed)}, "
                        f"but it is a {kinds[ref]}."
                    )
            produced = stage.produces()
            if produced:
                name, kind = produced
                if name in kinds:
                    raise ConfigValidationError(f"Stage {index} ({stage.label()}) redefines '{name}'.")
                kinds[name] = kind
        return self


class Scenario:
    """
    Loads and validates a scenario YAML file using Pydantic models.
    """
    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        logger.info(f"Loading scenario from '{self.path}'...")
        raw_data = self._load_raw_config()
        try:
            self.model = ScenarioModel.model_validate(raw_data)
            logger.debug(f"Scenario model validated successfully: \n{self.model.model_dump_json(indent=2)}")
        except ValidationError as e:
            raise ConfigValidationError(f"Scenario validation failed for '{self.path}':\n{e}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Scenario":
        scenario = cls.__new__(cls)
        scenario.path = None
        try:
            scenario.model = ScenarioModel.model_validate(data)
        except ValidationError as e:
            raise ConfigValidationError(f"Scenario validation failed:\n{e}")
        return scenario

    def _load_raw_config(self) -> Dict[str, Any]:
        try:
            content = self.path.read_text(encoding="utf-8")
            config_data = yaml.safe_load(content)
            if not isinstance(config_data, dict):
                raise ConfigParsingError(f"Scenario '{self.path}' must be a YAML document containing a dictionary.")
            logger.debug(f"Successfully parsed YAML from '{self.path}'.")
            return config_data
        except FileNotFoundError:
            raise ConfigFileMissingError(f"Scenario file not found at: {self.path}")
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            where = f" (line {mark.line + 1}, column {mark.column + 1})" if mark else ""
            raise ConfigParsingError(f"Error parsing YAML file '{self.path}'{where}: {e}")

    @property
    def name(self) -> str:
        return self.model.name


def bundled_scenarios() -> List[str]:
    """Names of the scenarios shipped with the package."""
    root = resources.files("opgp.resources") / "scenarios"
    return sorted(
        Path(entry.name).stem for entry in root.iterdir()
        if entry.name.endswith(constants.SCENARIO_SUFFIXES)
    )


def resolve_scenario(spec: str) -> Path:
    """An existing path is taken as is; otherwise `spec` names a bundled scenario."""
    path = Path(spec)
    if path.exists():
        return path
    root = resources.files("opgp.resources") / "scenarios"
    for suffix in ("",) + constants.SCENARIO_SUFFIXES:
        candidate = root / f"{spec}{suffix}"
        if candidate.is_file():
            return Path(str(candidate))
    raise ConfigFileMissingError(
        f"'{spec}' is neither a scenario file nor a bundled scenario ({', '.join(bundled_scenarios())})."
    )
