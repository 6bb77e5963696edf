"""
Assertions of `check` stages. Each kind maps to a function returning (passed, detail).
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Tuple

import numpy as np

from .workspace import Workspace
from .. import config
from ..datacls import CheckResult
from ..gpr import GPModel
from ..groebner import column_module_equal, row_module_equal
from ..kernelcalc import GaussianFactor, GaussianPolyExpr, apply_operator_point, compare_push
from ..orealg import mat_mul, parse_operator
from ..parametrize import parametrize, verify_parametrization
from ..exceptions import ComputationError, UnknownVariableError

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]


def _zero_product(check: config.ZeroProductCheck, ws: Workspace) -> Outcome:
    product = mat_mul(ws.matrix(check.left), ws.matrix(check.right))
    if product.is_zero():
        return True, f"{check.left}*{check.right} = 0"
    return False, f"{check.left}*{check.right} = {product}"


def _parametrization(check: config.ParametrizationCheck, ws: Workspace) -> Outcome:
    report = verify_parametrization(ws.matrix(check.system), ws.matrix(check.parametrization))
    return report.passed, (
        f"product_zero={report.product_zero}, residue_a={report.residue_a.rows} row(s), "
        f"residue_aprime={report.residue_aprime.rows} row(s)"
    )


def _controllable(check: config.ControllableCheck, ws: Workspace) -> Outcome:
    result = parametrize(ws.matrix(check.system))
    return result.controllable == check.expected, f"controllable={result.controllable}, witness={result.witness}"


def _module_equal(check: config.ModuleEqualCheck, ws: Workspace) -> Outcome:
    left, right = ws.matrix(check.left), ws.matrix(check.right)
    equal = column_module_equal(left, right) if check.side == "column" else row_module_equal(left, right)
    return equal, f"{check.side} modules of '{check.left}' and '{check.right}' {'agree' if equal else 'differ'}"


def _extra_relations(check: config.ExtraRelationsCheck, ws: Workspace) -> Outcome:
    """Compared modulo the rows of [B1 B2], which are always relations of C."""
    result = ws.get(check.intersection, config.INTERSECTION).value
    extra = result.extra_relations
    if check.expected is None:
        return extra.rows == 0, f"extra relations: {extra}"
    expected = ws.matrix(check.expected)
    equal = row_module_equal(extra.vstack(result.B), expected.vstack(result.B))
    return equal, f"extra relations: {extra}"


def _constraint(check: config.ConstraintCheck, ws: Workspace) -> Outcome:
    """A (posterior mean - mu) is exactly zero; for mu solving A mu = g this is A m = g."""
    model: GPModel = ws.get(check.model, config.MODEL).value
    residual = apply_operator_point(ws.matrix(check.operator), model.deviation())
    nonzero = [i + 1 for i, e in enumerate(residual) if not e.is_zero()]
    if nonzero:
        return False, f"nonzero residual in component(s) {nonzero}"
    return True, f"{check.operator} annihilates the posterior deviation exactly"


def _boundary(check: config.BoundaryCheck, ws: Workspace) -> Outcome:
    """
    Exact restriction of the posterior mean. Passing is sufficient for the
    boundary values to hold; Gaussian terms are only cancelled when their
    polynomials vanish on the restriction.
    """
    model: GPModel = ws.get(check.model, config.MODEL).value
    base = ws.ring.base_ring()
    if check.variable not in base.variables:
        raise UnknownVariableError(f"'{check.variable}' is not one of {list(base.variables)}.")
    values = {base.variables.index(check.variable): Fraction(check.at)}
    failures = []
    for component, text in zip(check.components, check.expected):
        if component > model.outputs:
            failures.append(f"component {component} does not exist")
            continue
        restricted = model.posterior_mean[component - 1].restrict_polynomials(values)
        target = parse_operator(text, base).substitute(values)
        expected = GaussianPolyExpr.term(target, GaussianFactor.plain(model.d))
        if restricted != expected:
            failures.append(f"f{component}|{check.variable}={check.at} = {restricted}, expected {target}")
    if failures:
        return False, "; ".join(failures)
    return True, f"boundary values hold on {check.variable} = {check.at}"


def _value(check: config.ValueCheck, ws: Workspace) -> Outcome:
    model: GPModel = ws.get(check.model, config.MODEL).value
    got = model.predict_mean(check.point)
    if len(got) != len(check.expected):
        return False, f"model has {len(got)} outputs, expected {len(check.expected)}"
    deviation = float(np.max(np.abs(got - np.asarray(check.expected))))
    return deviation <= check.tolerance, f"mean {got.tolist()} at {check.point}, deviation {deviation:.3e}"


def _interpolation(check: config.InterpolationCheck, ws: Workspace) -> Outcome:
    model: GPModel = ws.get(check.model, config.MODEL).value
    worst = 0.0
    for obs in model.observations:
        exprs = list(model.posterior_mean)
        if obs.functional is not None:
            exprs = apply_operator_point(obs.functional, exprs)
        got = np.array([e.evaluate(obs.point) for e in exprs])
        worst = max(worst, float(np.max(np.abs(got - np.asarray(obs.value)))))
    return worst <= check.tolerance, f"largest deviation from the data {worst:.3e}"


def _kernel_oracle(check: config.KernelOracleCheck, ws: Workspace) -> Outcome:
    artifact = ws.get(check.kernel, config.KERNEL)
    kernel, operator = artifact.value, artifact.extras["operator"]
    lengthscales = artifact.extras.get("lengthscales")
    rng = np.random.default_rng(check.seed)
    worst = 0.0
    agreed = True
    for _ in range(check.pairs):
        x1 = rng.uniform(check.low, check.high, kernel.d)
        x2 = rng.uniform(check.low, check.high, kernel.d)
        ok, deviation = compare_push(operator, kernel.evaluate(x1, x2), x1, x2, lengthscales, check.tolerance)
        agreed &= ok
        worst = max(worst, deviation)
    return agreed, f"{check.pairs} point pairs, largest absolute deviation {worst:.3e}"


CHECKS: Dict[str, Callable[..., Outcome]] = {
    "zero_product": _zero_product,
    "parametrization": _parametrization,
    "controllable": _controllable,
    "module_equal": _module_equal,
    "extra_relations": _extra_relations,
    "constraint": _constraint,
    "boundary": _boundary,
    "value": _value,
    "interpolation": _interpolation,
    "kernel_oracle": _kernel_oracle,
}


def run_check(stage: str, check, ws: Workspace) -> CheckResult:
    """A computation failure inside a check fails that check only."""
    try:
        passed, detail = CHECKS[check.kind](check, ws)
    except ComputationError as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    level = logging.INFO if passed else logging.WARNING
    logger.log(level, f"[Check] {check.kind}: {'PASS' if passed else 'FAIL'} ({detail})")
    return CheckResult(stage=stage, kind=check.kind, passed=passed, detail=detail)
