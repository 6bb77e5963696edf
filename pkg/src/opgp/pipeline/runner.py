import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from .checks import run_check
from .workspace import Artifact, Workspace
from .. import config, constants
from ..config import Scenario
from ..datacls import CheckReport
from ..gpr import GridSpec, Observation, export_grid, fit
from ..kernelcalc import base_kernel, dump_kernel, push_kernel
from ..orealg import OperatorMatrix, OrePoly, RingKind, RingSpec, parse_operator
from ..parametrize import arrange_columns, boundary_param, intersect, parametrize
from ..render import quiver_svg
from ..exceptions import OpgpError

logger = logging.getLogger(__name__)


def scenario_ring(model: config.RingModel) -> RingSpec:
    if model.kind == RingKind.WEYL:
        return RingSpec.weyl(model.variables, model.partials)
    return RingSpec.commutative(model.variables)


class Runner:
    """
    Executes the pipeline of a scenario stage by stage.

    With `output_dir` set, artifacts go to `<output_dir>/<scenario name>/`;
    without it everything stays in memory.
    """

    def __init__(self, scenario: Scenario, output_dir: Optional[Path] = None):
        self.scenario = scenario
        self.model = scenario.model
        self.output_dir = Path(output_dir) / self.model.name if output_dir is not None else None
        self.ring = scenario_ring(self.model.ring)
        self.ws = Workspace(self.ring)
        self.report = CheckReport(scenario=self.model.name)
        self._handlers = {
            "parametrize": self._parametrize,
            "intersect": self._intersect,
            "boundary": self._boundary,
            "kernel": self._kernel,
            "fit": self._fit,
            "grid": self._grid,
            "check": self._check,
        }
        logger.debug(f"Runner initialized for scenario '{self.model.name}'. Output dir: '{self.output_dir}'")

    def run(self) -> CheckReport:
        logger.info(f"[Runner] Starting scenario '{self.model.name}' ({len(self.model.pipeline)} stage(s))...")
        self._declare()
        for index, stage in enumerate(self.model.pipeline, start=1):
            logger.info(f"[Runner] Stage {index}: {stage.label()}")
            try:
                self._handlers[stage.stage](stage)
            except OpgpError as e:
                logger.error(f"[Runner] Stage {index} ({stage.label()}) failed: {e}")
                raise
        if self.output_dir is not None and any(s.stage == "check" for s in self.model.pipeline):
            self._write_report()
        logger.info(
            f"[Runner] Scenario '{self.model.name}' finished: "
            f"{len(self.report.results) - len(self.report.failures)}/{len(self.report.results)} check(s) passed."
        )
        return self.report

    # --- declarations ---
    def _declare(self):
        for name, rows in self.model.matrices.items():
            m = OperatorMatrix.parse(rows, self.ring)
            self.ws.put(name, Artifact(config.MATRIX, m, matrix=m))
        for name, gens in self.model.boundaries.items():
            assignment = [[g] if isinstance(g, str) else g for g in gens]
            self.ws.put(name, Artifact(config.IDEAL, assignment))
        base = self.ring.base_ring()
        for name, polys in self.model.means.items():
            self.ws.put(name, Artifact(config.MEAN, [parse_operator(str(p), base) for p in polys]))
        for name, items in self.model.observations.items():
            obs = [
                Observation(
                    point=tuple(o.point),
                    value=tuple(o.value),
                    functional=self.ws.matrix(o.functional) if o.functional else None,
                    name=o.functional,
                )
                for o in items
            ]
            self.ws.put(name, Artifact(config.OBSERVATIONS, obs))

    # --- stages ---
    def _parametrize(self, stage: config.ParametrizeStage):
        result = parametrize(self.ws.matrix(stage.input))
        b = arrange_columns(result.B, stage.arrange) if stage.arrange else result.B
        self.ws.put(stage.output, Artifact(config.PARAMETRIZATION, result, matrix=b))
        self._write_matrix(stage.output, b)

    def _intersect(self, stage: config.IntersectStage):
        result = intersect(self.ws.matrix(stage.left), self.ws.matrix(stage.right))
        p = arrange_columns(result.P, stage.arrange) if stage.arrange else result.P
        self.ws.put(stage.output, Artifact(config.INTERSECTION, result, matrix=p))
        self._write_matrix(stage.output, p)
        self._write_matrix(f"{stage.output}_C", result.C)
        self._write_matrix(f"{stage.output}_extra", result.extra_relations)

    def _boundary(self, stage: config.BoundaryStage):
        m = boundary_param(self.ws.get(stage.ideal, config.IDEAL).value, self.ring)
        self.ws.put(stage.output, Artifact(config.MATRIX, m, matrix=m))
        self._write_matrix(stage.output, m)

    def _kernel(self, stage: config.KernelStage):
        operator = self.ws.matrix(stage.operator)
        lengthscales = [Fraction(str(v)) for v in stage.lengthscales] if stage.lengthscales else None
        base = base_kernel(self.ring.d, operator.cols, lengthscales, self.ring)
        kernel = push_kernel(operator, base)
        extras = {
            "operator": operator,
            "lengthscales": [float(v) for v in lengthscales] if lengthscales else None,
        }
        self.ws.put(stage.output, Artifact(config.KERNEL, kernel, extras=extras))
        if self.output_dir is not None:
            dump_kernel(kernel, self.output_dir / f"{stage.output}{constants.KERNEL_SUFFIX}")

    def _fit(self, stage: config.FitStage):
        kernel = self.ws.get(stage.kernel, config.KERNEL).value
        observations = self.ws.get(stage.observations, config.OBSERVATIONS).value
        mean: Optional[List[OrePoly]] = self.ws.get(stage.mean, config.MEAN).value if stage.mean else None
        jitter = stage.jitter if stage.jitter is not None else self.model.jitter
        model = fit(kernel, observations, mean, jitter)
        self.ws.put(stage.output, Artifact(config.MODEL, model))
        if self.output_dir is not None:
            model.dump(self.output_dir / f"{stage.output}{constants.MODEL_SUFFIX}")

    def _grid(self, stage: config.GridStage):
        model = self.ws.get(stage.model, config.MODEL).value
        spec = GridSpec(axes=stage.axes, sphere=stage.sphere, std=stage.std)
        table = export_grid(model, spec)
        self.ws.put(stage.output, Artifact(config.GRID, table))
        if self.output_dir is None:
            return
        table.to_csv(self.output_dir / f"{stage.output}{constants.GRID_SUFFIX}")
        if stage.svg is not None:
            highlight = [o.point for o in model.observations] if stage.svg.highlight else []
            svg = quiver_svg(table.header, table.values, stage.svg.scale, stage.svg.project, highlight)
            path = self.output_dir / f"{stage.output}{constants.SVG_SUFFIX}"
            path.write_text(svg, encoding="utf-8")
            logger.debug(f"[Runner] Wrote {path}")

    def _check(self, stage: config.CheckStage):
        for check in stage.checks:
            self.report.results.append(run_check(stage.name, check, self.ws))

    # --- artifacts ---
    def _write_matrix(self, name: str, m: OperatorMatrix):
        if self.output_dir is None:
            return
        path = self.output_dir / f"{name}{constants.MATRIX_SUFFIX}"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(f"{m}\n", encoding="utf-8")
        logger.debug(f"[Runner] Wrote {path}")

    def _write_report(self):
        path = self.output_dir / constants.CHECK_REPORT_FILENAME
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.report.model_dump(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
        logger.info(f"[Runner] Check report written to '{path}'")

    @property
    def artifacts(self) -> Dict[str, Artifact]:
        return {name: self.ws.get(name) for name in self.ws.names()}
