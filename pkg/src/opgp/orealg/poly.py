"""
Exact-coefficient elements of a RingSpec.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .ring import Monomial, RingSpec, word_product
from ..exceptions import AlgebraError, DimensionMismatchError, RingMismatchError

Scalar = Union[int, Fraction]


class OrePoly:
    """
    A finite sum of rational multiples of normal-ordered words x^a D^b.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Optional[Mapping[Monomial, Scalar]] = None):
        self.ring = ring
        clean: Dict[Monomial, Fraction] = {}
        for mono, coef in (terms or {}).items():
            if coef:
                clean[mono] = Fraction(coef)
        self._terms = clean
        self._hash = None

    # --- constructors ---
    @classmethod
    def zero(cls, ring: RingSpec) -> "OrePoly":
        return cls(ring)

    @classmethod
    def constant(cls, ring: RingSpec, value: Scalar) -> "OrePoly":
        return cls(ring, {Monomial.one(ring.d): value})

    @classmethod
    def one(cls, ring: RingSpec) -> "OrePoly":
        return cls.constant(ring, 1)

    @classmethod
    def generator(cls, ring: RingSpec, name: str) -> "OrePoly":
        partial, index = ring.locate(name)
        return cls(ring, {Monomial.unit(ring.d, index, partial): 1})

    @classmethod
    def _raw(cls, ring: RingSpec, terms: Dict[Monomial, Fraction]) -> "OrePoly":
        """Wrap an already-clean term map without copying."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._hash = None
        return poly

    # --- inspection ---
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m.is_one for m in self._terms)

    def has_partials(self) -> bool:
        return any(any(m.b) for m in self._terms)

    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=-1)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in decreasing graded reverse lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: t[0].grevlex_key(), reverse=True)

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise AlgebraError("The zero polynomial has no leading term.")
        mono = max(self._terms, key=Monomial.grevlex_key)
        return mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    # --- arithmetic ---
    def _check(self, other: "OrePoly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"Cannot combine elements of {self.ring} and {other.ring}.")

    def _coerce(self, other) -> Optional["OrePoly"]:
        if isinstance(other, OrePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return OrePoly.constant(self.ring, other)
        return None

    def __add__(self, other) -> "OrePoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coef in other._terms.items():
            value = out.get(mono, 0) + coef
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return OrePoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "OrePoly":
        return OrePoly._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "OrePoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "OrePoly":
        return (-self) + other

    def scale(self, factor: Scalar) -> "OrePoly":
        if not factor:
            return OrePoly.zero(self.ring)
        factor = Fraction(factor)
        return OrePoly._raw(self.ring, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other) -> "OrePoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, OrePoly):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other) -> "OrePoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "OrePoly":
        if n < 0:
            raise AlgebraError("Negative powers are not defined in a polynomial ring.")
        result = OrePoly.one(self.ring)
        for _ in range(n):
            result = mul(result, self)
        return result

    def word_mul(self, word: Monomial, coef: Scalar = 1) -> "OrePoly":
        """Left multiplication coef * word * self."""
        out: Dict[Monomial, Fraction] = {}
        coef = Fraction(coef)
        for mono, c in self._terms.items():
            for prod_mono, k in word_product(self.ring, word, mono).items():
                value = out.get(prod_mono, 0) + coef * c * k
                if value:
                    out[prod_mono] = value
                else:
                    out.pop(prod_mono, None)
        return OrePoly._raw(self.ring, out)

    # --- comparison ---
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == OrePoly.constant(self.ring, other)
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # --- operator calculus ---
    def involute(self) -> "OrePoly":
        """theta: fixes x_i, sends D_i to -D_i and reverses products."""
        if not self.ring.is_weyl:
            return self
        d = self.ring.d
        out = OrePoly.zero(self.ring)
        for mono, coef in self._terms.items():
            sign = -1 if sum(mono.b) % 2 else 1
            # theta(x^a D^b) = (-1)^|b| D^b x^a
            partial = Monomial((0,) * d, mono.b)
            base = OrePoly._raw(self.ring, {Monomial(mono.a, (0,) * d): Fraction(1)})
            out = out + base.word_mul(partial, sign * coef)
        return out

    def derivative(self, index: int) -> "OrePoly":
        """Partial derivative of a polynomial (no partials) w.r.t. base variable `index`."""
        if self.has_partials():
            raise AlgebraError("Only polynomials can be differentiated symbolically.")
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in self._terms.items():
            e = mono.a[index]
            if e == 0:
                continue
            a = mono.a[:index] + (e - 1,) + mono.a[index + 1:]
            out[Monomial(a, mono.b)] = coef * e
        return OrePoly._raw(self.ring, out)

    def act(self, f: "OrePoly") -> "OrePoly":
        """
        Apply this operator to the polynomial function f over the base ring.

        Partials act as derivations and base variables as multiplication.
        """
        base = self.ring.base_ring()
        if f.ring != base:
            raise RingMismatchError(f"Operators of {self.ring} act on {base}, not {f.ring}.")
        d = self.ring.d
        out = OrePoly.zero(base)
        for mono, coef in self._terms.items():
            g = f
            for i, k in enumerate(mono.b):
                for _ in range(k):
                    g = g.derivative(i)
            out = out + g.word_mul(Monomial(mono.a, (0,) * d), coef)
        return out

    def substitute(self, values: Mapping[int, Scalar]) -> "OrePoly":
        """Replace base variables by rational numbers; partials are left alone."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in self._terms.items():
            c = Fraction(coef)
            a = list(mono.a)
            for index, value in values.items():
                if a[index]:
                    c *= Fraction(value) ** a[index]
                    a[index] = 0
            if not c:
                continue
            key = Monomial(tuple(a), mono.b)
            value = out.get(key, 0) + c
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return OrePoly._raw(self.ring, out)

    def evaluate(self, point: Sequence[float]) -> float:
        """Float value of a polynomial at `point`, summed in canonical term order."""
        if len(point) != self.ring.d:
            raise DimensionMismatchError(f"Expected {self.ring.d} coordinates, got {len(point)}.")
        total = 0.0
        for mono, coef in self.sorted_terms():
            value = float(coef)
            for x, e in zip(point, mono.a):
                if e:
                    value *= x ** e
            total += value
        return total

    def rename(self, ring: RingSpec, mapping: Sequence[int]) -> "OrePoly":
        """
        Move a polynomial into `ring`, sending base variable i to variable mapping[i].
        """
        out: Dict[Monomial, Fraction] = {}
        n = ring.d
        zero = (0,) * n
        for mono, coef in self._terms.items():
            a = [0] * n
            for i, e in enumerate(mono.a):
                a[mapping[i]] += e
            key = Monomial(tuple(a), zero)
            out[key] = out.get(key, 0) + coef
        return OrePoly(ring, out)

    # --- text ---
    def _word_text(self, mono: Monomial) -> List[str]:
        parts = []
        for name, e in zip(self.ring.names, mono.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return parts

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, coef) in enumerate(self.sorted_terms()):
            sign = "-" if coef < 0 else "+"
            words = self._word_text(mono)
            body = "*".join([str(abs(coef))] + words)
            if i == 0:
                pieces.append(f"-{body}" if sign == "-" else body)
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"OrePoly({self})"


def mul(p: OrePoly, q: OrePoly) -> OrePoly:
    """Normal-ordered product p*q; factor order matters in a Weyl algebra."""
    p._check(q)
    out: Dict[Monomial, Fraction] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            for mono, k in word_product(p.ring, m1, m2).items():
                value = out.get(mono, 0) + c1 * c2 * k
                if value:
                    out[mono] = value
                else:
                    out.pop(mono, None)
    return OrePoly._raw(p.ring, out)

