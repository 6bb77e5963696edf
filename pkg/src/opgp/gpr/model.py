"""
Conditioning pushed-forward Gaussian processes on (derivative) observations.

The posterior mean mu(x) + sum_i alpha_i k(x, x_i) is kept as exact
expressions: each float alpha_i enters through Fraction(alpha_i), which is
the exact value of the double, so operators applied to the mean cancel
exactly where they should.
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .observation import Observation
from .. import constants
from ..datacls import ModelDocument, ObservationDocument
from ..kernelcalc import (
    GaussianPolyExpr, KernelMatrix, apply_group, apply_operator_point, evaluate_pair,
    expr_to_document, kernel_to_document, plain_vector, substitute_group2,
)
from ..orealg import OperatorMatrix, OrePoly
from ..exceptions import CholeskyError, DimensionMismatchError, NonFiniteError, RingMismatchError

logger = logging.getLogger(__name__)


class _Blocks:
    """Symbolic kernels with observation functionals applied, cached per functional."""

    def __init__(self, kernel: KernelMatrix):
        self.kernel = kernel
        self._right: Dict[Optional[OperatorMatrix], KernelMatrix] = {}
        self._both: Dict[Tuple[Optional[OperatorMatrix], Optional[OperatorMatrix]], KernelMatrix] = {}

    def right(self, L: Optional[OperatorMatrix]) -> KernelMatrix:
        """K L<2>^T: the covariance of f with L f."""
        if L not in self._right:
            self._right[L] = self.kernel if L is None else apply_group(L, self.kernel, 2)
        return self._right[L]

    def both(self, Li: Optional[OperatorMatrix], Lj: Optional[OperatorMatrix]) -> KernelMatrix:
        key = (Li, Lj)
        if key not in self._both:
            right = self.right(Lj)
            self._both[key] = right if Li is None else apply_group(Li, right, 1)
        return self._both[key]


def _check_observations(kernel: KernelMatrix, observations: Sequence[Observation]):
    if not observations:
        raise DimensionMismatchError("At least one observation is required.")
    outputs = kernel.size
    for obs in observations:
        obs.check(kernel.d, outputs)
        if obs.functional is not None and obs.functional.ring.variables != kernel.ring.variables:
            raise RingMismatchError(f"Functional over {obs.functional.ring} observes a kernel over {kernel.ring}.")


def _gram(blocks: _Blocks, observations: Sequence[Observation]) -> np.ndarray:
    outputs = blocks.kernel.size
    sizes = [obs.rows(outputs) for obs in observations]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    G = np.zeros((offsets[-1], offsets[-1]))
    for i, oi in enumerate(observations):
        for j, oj in enumerate(observations):
            block = evaluate_pair(blocks.both(oi.functional, oj.functional), oi.point, oj.point)
            G[offsets[i]:offsets[i + 1], offsets[j]:offsets[j + 1]] = block
    return G


def gram(kernel: KernelMatrix, observations: Sequence[Observation]) -> np.ndarray:
    """Block (i, j) is functional_i<1> functional_j<2> K evaluated at (x_i, x_j)."""
    _check_observations(kernel, observations)
    G = _gram(_Blocks(kernel), observations)
    asym = float(np.max(np.abs(G - G.T))) if G.size else 0.0
    if asym > constants.GRAM_SYMMETRY_TOLERANCE:
        logger.warning(f"[GP] Gram matrix asymmetric by {asym:.3e}.")
    return G


def _observed_mean(mean: Sequence[OrePoly], obs: Observation) -> List[float]:
    if obs.functional is None:
        return [p.evaluate(obs.point) for p in mean]
    L = obs.functional
    out = []
    for r in range(L.rows):
        total = 0.0
        for u in range(L.cols):
            if not L[r, u].is_zero():
                total += L[r, u].act(mean[u]).evaluate(obs.point)
        out.append(total)
    return out


class GPModel:
    """
    A conditioned process; immutable after `fit`.

    cross[i] holds K(x, x_i) with observation i's functional applied on the
    right, as centered expressions (outputs x rows_i).
    """

    def __init__(
            self,
            kernel: KernelMatrix,
            mean: Sequence[OrePoly],
            observations: Sequence[Observation],
            jitter: float,
            alpha: np.ndarray,
            factor,
            cross: List[List[List[GaussianPolyExpr]]],
            posterior_mean: List[GaussianPolyExpr],
    ):
        self.kernel = kernel
        self.mean = tuple(mean)
        self.observations = tuple(observations)
        self.jitter = jitter
        self.alpha = alpha
        self._factor = factor
        self._cross = cross
        self.posterior_mean = tuple(posterior_mean)

    @property
    def d(self) -> int:
        return self.kernel.d

    @property
    def outputs(self) -> int:
        return self.kernel.size

    @property
    def homogeneous(self) -> bool:
        return all(p.is_zero() for p in self.mean)

    def mean_expressions(self) -> List[GaussianPolyExpr]:
        return plain_vector(self.mean, self.d)

    def deviation(self) -> List[GaussianPolyExpr]:
        """Posterior mean minus the prior mean, i.e. the kernel part alone."""
        return [m - mu for m, mu in zip(self.posterior_mean, self.mean_expressions())]

    def _check_point(self, x: Sequence[float]):
        if len(x) != self.d:
            raise DimensionMismatchError(f"Point {list(x)} does not have {self.d} coordinates.")

    def predict_mean(self, x: Sequence[float]) -> np.ndarray:
        self._check_point(x)
        return np.array([e.evaluate(x) for e in self.posterior_mean])

    def _cross_matrix(self, x: Sequence[float]) -> np.ndarray:
        """k(x, X): outputs x (total observed rows)."""
        cols = [np.array([[e.evaluate(x) for e in row] for row in block]) for block in self._cross]
        return np.hstack(cols)

    def predict_cov(self, x: Sequence[float], x2: Optional[Sequence[float]] = None) -> np.ndarray:
        """k(x, x') - k(x, X) (K + eps^2 I)^{-1} k(x', X)^T."""
        x2 = x if x2 is None else x2
        self._check_point(x)
        self._check_point(x2)
        prior = evaluate_pair(self.kernel, x, x2)
        kx, kx2 = self._cross_matrix(x), self._cross_matrix(x2)
        cov = prior - kx @ cho_solve(self._factor, kx2.T)
        if not np.all(np.isfinite(cov)):
            raise NonFiniteError(f"Posterior covariance at {list(x)}, {list(x2)} is not finite.")
        return cov

    def predict_std(self, x: Sequence[float]) -> np.ndarray:
        """Per-component standard deviation; tiny negative variances from rounding clip to zero."""
        return np.sqrt(np.clip(np.diag(self.predict_cov(x)), 0.0, None))

    def to_document(self) -> ModelDocument:
        return ModelDocument(
            kernel=kernel_to_document(self.kernel),
            observations=[
                ObservationDocument(
                    point=list(o.point),
                    value=list(o.value),
                    functional=None if o.functional is None else o.functional.to_lists(),
                )
                for o in self.observations
            ],
            jitter=self.jitter,
            alpha=[float(a) for a in self.alpha],
            prior_mean=[str(p) for p in self.mean],
            posterior_mean=[expr_to_document(e) for e in self.posterior_mean],
        )

    def dump(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_document().model_dump_json(indent=2), encoding="utf-8")
        logger.debug(f"[GP] Wrote {path}")
        return path


def fit(
        kernel: KernelMatrix,
        observations: Sequence[Observation],
        mean: Optional[Sequence[OrePoly]] = None,
        jitter: float = constants.DEFAULT_JITTER,
) -> GPModel:
    """alpha = (K + eps^2 I)^{-1} (y - mu(X)) by Cholesky; the posterior mean is assembled symbolically."""
    if jitter < 0:
        raise ValueError(f"Jitter must be nonnegative, got {jitter}")
    _check_observations(kernel, observations)
    base = kernel.ring.base_ring()
    outputs, d = kernel.size, kernel.d
    if mean is None:
        mean = [OrePoly.zero(base)] * outputs
    if len(mean) != outputs:
        raise DimensionMismatchError(f"Mean has {len(mean)} components, the kernel {outputs}.")
    for p in mean:
        if p.ring != base:
            raise RingMismatchError(f"Mean component over {p.ring}, expected {base}.")

    blocks = _Blocks(kernel)
    G = _gram(blocks, observations)
    n = G.shape[0]
    y = np.concatenate([np.asarray(o.value, dtype=float) for o in observations])
    mu = np.concatenate([_observed_mean(mean, o) for o in observations])
    logger.info(f"[GP] Fitting {len(observations)} observations ({n} values) with jitter {jitter:g}.")

    try:
        factor = cho_factor(G + jitter ** 2 * np.eye(n), lower=True)
    except LinAlgError as e:
        smallest = float(np.linalg.eigvalsh(G + jitter ** 2 * np.eye(n))[0])
        raise CholeskyError("Gram matrix is not positive definite", smallest) from e
    alpha = cho_solve(factor, y - mu)
    if not np.all(np.isfinite(alpha)):
        raise NonFiniteError("Solved weights are not finite.")

    cross = [substitute_group2(blocks.right(o.functional), o.point) for o in observations]
    posterior = plain_vector(mean, d)
    k = 0
    for block in cross:
        for t in range(len(block[0])):
            weight = Fraction(float(alpha[k]))
            posterior = [p + block[u][t].scale(weight) for u, p in enumerate(posterior)]
            k += 1
    logger.debug(f"[GP] Posterior mean has {sum(len(e) for e in posterior)} terms.")
    return GPModel(kernel, mean, observations, jitter, alpha, factor, cross, posterior)


def apply_to_mean(A: OperatorMatrix, model: GPModel, deviation: bool = False) -> List[GaussianPolyExpr]:
    """A applied to the posterior mean, or to posterior mean - mu with `deviation`."""
    return apply_operator_point(A, model.deviation() if deviation else list(model.posterior_mean))
