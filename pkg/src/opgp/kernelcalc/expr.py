"""
Sums of polynomial times squared-exponential terms.

Every term is p(u) * exp(-1/2 * sum_a s_a (u_a - w_a)^2), where either
w_a is a second group of variables (paired form, the kernel k(x1, x2)) or a
fixed center c_a (centered form, k(x, c) after substituting a data point).
Scales s_a = 1/lengthscale_a^2; all-zero scales mark a plain polynomial.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .. import constants
from ..orealg import OrePoly, RingSpec
from ..exceptions import DimensionMismatchError, NonFiniteError, RingMismatchError, UnknownVariableError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class GaussianFactor:
    """exp(-1/2 sum_a scales[a] (u_a - w_a)^2); w is the second group when center is None."""
    scales: Tuple[Fraction, ...]
    center: Optional[Tuple[Fraction, ...]] = None

    @classmethod
    def paired(cls, d: int, scales: Optional[Sequence[Scalar]] = None) -> "GaussianFactor":
        return cls(_scales(d, scales))

    @classmethod
    def plain(cls, d: int) -> "GaussianFactor":
        return cls((Fraction(0),) * d, (Fraction(0),) * d)

    @property
    def d(self) -> int:
        return len(self.scales)

    @property
    def is_paired(self) -> bool:
        return self.center is None

    @property
    def is_plain(self) -> bool:
        return not any(self.scales)

    def at(self, point: Sequence[Scalar]) -> "GaussianFactor":
        return GaussianFactor(self.scales, tuple(Fraction(c) for c in point))

    def sort_key(self) -> Tuple:
        return (self.is_paired, self.center or (), self.scales)

    def exponent(self, values: Sequence[float]) -> float:
        d = self.d
        if self.is_paired:
            diffs = [values[a] - values[d + a] for a in range(d)]
        else:
            diffs = [values[a] - float(self.center[a]) for a in range(d)]
        return -0.5 * sum(float(s) * t * t for s, t in zip(self.scales, diffs))

    def __str__(self) -> str:
        if self.is_plain:
            return "1"
        return f"exp[scales={[str(s) for s in self.scales]}, center={None if self.center is None else [str(c) for c in self.center]}]"


def _scales(d: int, scales: Optional[Sequence[Scalar]]) -> Tuple[Fraction, ...]:
    if scales is None:
        return (Fraction(1),) * d
    if len(scales) != d:
        raise DimensionMismatchError(f"Expected {d} scales, got {len(scales)}.")
    return tuple(Fraction(s) for s in scales)


def paired_ring(base: RingSpec) -> RingSpec:
    """Q[x1.., x2..]: the base variables of `base` suffixed by group."""
    first, second = constants.GROUP_SUFFIXES
    names = [f"{v}{first}" for v in base.variables] + [f"{v}{second}" for v in base.variables]
    return RingSpec.commutative(names)


class GaussianPolyExpr:
    """
    Canonical sum of polynomial * GaussianFactor terms; like factors are merged
    and zero polynomials dropped, so the zero expression has no terms.
    """

    __slots__ = ("ring", "d", "_terms")

    def __init__(self, ring: RingSpec, d: int, terms: Optional[Mapping[GaussianFactor, OrePoly]] = None):
        self.ring = ring
        self.d = d
        clean: Dict[GaussianFactor, OrePoly] = {}
        for factor, poly in (terms or {}).items():
            if poly.ring != ring:
                raise RingMismatchError(f"Polynomial over {poly.ring} in an expression over {ring}.")
            if factor.d != d:
                raise DimensionMismatchError(f"Factor of dimension {factor.d} in an expression of dimension {d}.")
            if factor in clean:
                poly = clean[factor] + poly
            if poly.is_zero():
                clean.pop(factor, None)
            else:
                clean[factor] = poly
        self._terms = clean

    @classmethod
    def zero(cls, ring: RingSpec, d: int) -> "GaussianPolyExpr":
        return cls(ring, d)

    @classmethod
    def term(cls, poly: OrePoly, factor: GaussianFactor) -> "GaussianPolyExpr":
        return cls(poly.ring, factor.d, {factor: poly})

    # --- inspection ---
    @property
    def is_paired(self) -> bool:
        return self.ring.d == 2 * self.d

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> List[Tuple[GaussianFactor, OrePoly]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def __iter__(self) -> Iterator[Tuple[GaussianFactor, OrePoly]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def polynomial(self, factor: GaussianFactor) -> OrePoly:
        return self._terms.get(factor, OrePoly.zero(self.ring))

    # --- linear structure ---
    def _check(self, other: "GaussianPolyExpr"):
        if self.ring != other.ring or self.d != other.d:
            raise RingMismatchError("Expressions over different variables cannot be combined.")

    def __add__(self, other: "GaussianPolyExpr") -> "GaussianPolyExpr":
        self._check(other)
        terms = dict(self._terms)
        for factor, poly in other._terms.items():
            terms[factor] = terms[factor] + poly if factor in terms else poly
        return GaussianPolyExpr(self.ring, self.d, terms)

    def __neg__(self) -> "GaussianPolyExpr":
        return GaussianPolyExpr(self.ring, self.d, {f: -p for f, p in self._terms.items()})

    def __sub__(self, other: "GaussianPolyExpr") -> "GaussianPolyExpr":
        return self + (-other)

    def scale(self, c: Scalar) -> "GaussianPolyExpr":
        return GaussianPolyExpr(self.ring, self.d, {f: p.scale(c) for f, p in self._terms.items()})

    def mul_poly(self, p: OrePoly) -> "GaussianPolyExpr":
        if p.ring != self.ring:
            raise RingMismatchError(f"Cannot multiply an expression over {self.ring} by a polynomial over {p.ring}.")
        return GaussianPolyExpr(self.ring, self.d, {f: q * p for f, q in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianPolyExpr):
            return NotImplemented
        return self.ring == other.ring and self.d == other.d and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, self.d, frozenset(self._terms.items())))

    # --- calculus ---
    def variable_index(self, variable: Union[int, str]) -> int:
        if isinstance(variable, str):
            if variable not in self.ring.variables:
                raise UnknownVariableError(f"'{variable}' is not one of {list(self.ring.variables)}.")
            return self.ring.variables.index(variable)
        if not 0 <= variable < self.ring.d:
            raise UnknownVariableError(f"Variable index {variable} out of range for {self.ring}.")
        return variable

    def _offset(self, factor: GaussianFactor, axis: int) -> OrePoly:
        """u_a - w_a as a polynomial of the expression ring."""
        u = OrePoly.generator(self.ring, self.ring.variables[axis])
        if factor.is_paired:
            return u - OrePoly.generator(self.ring, self.ring.variables[self.d + axis])
        return u - factor.center[axis]

    def diff(self, variable: Union[int, str]) -> "GaussianPolyExpr":
        """Product rule on p, chain rule on the quadratic exponent."""
        v = self.variable_index(variable)
        axis, second = v % self.d, v >= self.d
        terms: Dict[GaussianFactor, OrePoly] = {}
        for factor, poly in self._terms.items():
            out = poly.derivative(v)
            s = factor.scales[axis]
            if s:
                chain = self._offset(factor, axis).scale(s if second else -s)
                out = out + poly * chain
            terms[factor] = out
        return GaussianPolyExpr(self.ring, self.d, terms)

    def swap_groups(self) -> "GaussianPolyExpr":
        """k(x1, x2) -> k(x2, x1); the exponent is symmetric."""
        if not self.is_paired:
            raise DimensionMismatchError("Only paired expressions have two variable groups.")
        d = self.d
        mapping = [i + d if i < d else i - d for i in range(2 * d)]
        return GaussianPolyExpr(self.ring, d, {f: p.rename(self.ring, mapping) for f, p in self._terms.items()})

    def substitute_group2(self, point: Sequence[Scalar], base: RingSpec) -> "GaussianPolyExpr":
        """Replace the second group by `point`; the result lives over `base`."""
        if not self.is_paired:
            raise DimensionMismatchError("Expression has no second variable group.")
        if len(point) != self.d:
            raise DimensionMismatchError(f"Point has {len(point)} coordinates, expected {self.d}.")
        d = self.d
        values = {d + a: Fraction(c) for a, c in enumerate(point)}
        mapping = [i % d for i in range(2 * d)]
        terms: Dict[GaussianFactor, OrePoly] = {}
        for factor, poly in self._terms.items():
            new_factor = factor if factor.is_plain else factor.at(point)
            new_poly = poly.substitute(values).rename(base, mapping)
            terms[new_factor] = terms[new_factor] + new_poly if new_factor in terms else new_poly
        return GaussianPolyExpr(base, d, terms)

    def restrict_polynomials(self, values: Mapping[int, Scalar]) -> "GaussianPolyExpr":
        """
        Substitute into the polynomial parts only, leaving every Gaussian factor as is.

        Exponentials never vanish, so a term whose polynomial becomes zero is
        exactly zero on the restriction; nonzero terms are not restrictions.
        """
        return GaussianPolyExpr(self.ring, self.d, {f: p.substitute(values) for f, p in self._terms.items()})

    def evaluate(self, x: Sequence[float]) -> float:
        if len(x) != self.ring.d:
            raise DimensionMismatchError(f"Expected {self.ring.d} coordinates, got {len(x)}.")
        total = 0.0
        for factor, poly in self.items():
            total += poly.evaluate(x) * math.exp(factor.exponent(x))
        if not math.isfinite(total):
            raise NonFiniteError(f"Expression evaluates to {total} at {list(x)}.")
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({poly})*{factor}" for factor, poly in self.items())

    def __repr__(self) -> str:
        return f"GaussianPolyExpr({self})"
