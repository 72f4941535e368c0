"""
Laurent polynomials in u, v, w, X_1, ..., X_n with integer coefficients.

Terms are kept as a map from dense exponent vectors (u, v, w, X_1..X_n)
to non-zero coefficients, so two polynomials are equal exactly when
their maps are.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import sympy

from gtsij.errors import InterfaceError

Exponents = Tuple[int, ...]
BASE_VARIABLES = ("u", "v", "w")


def variable_names(n: int) -> Tuple[str, ...]:
    return BASE_VARIABLES + tuple(f"X{i}" for i in range(1, n + 1))


class LaurentPoly:
    """A finite sum of coefficient * u^a v^b w^c X_1^d_1 ... X_n^d_n"""

    def __init__(self, n: int, terms: Mapping[Exponents, int] = None):
        if n < 0:
            raise InterfaceError(f"A Laurent polynomial needs n >= 0 X variables, got {n}")
        self.n = n
        self.terms: Dict[Exponents, int] = {}
        for exponents, coefficient in (terms or {}).items():
            self._add_term(tuple(exponents), coefficient)

    def _add_term(self, exponents: Exponents, coefficient: int) -> None:
        if len(exponents) != self.n + 3:
            raise InterfaceError(f"Exponent vector {exponents} does not fit {self.n + 3} variables")
        if exponents[0] < 0 or exponents[1] < 0 or exponents[2] < 0:
            raise InterfaceError(f"u, v and w take non-negative exponents, got {exponents[:3]}")
        value = self.terms.get(exponents, 0) + int(coefficient)
        if value:
            self.terms[exponents] = value
        else:
            self.terms.pop(exponents, None)

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * (n + 3): 1})

    @classmethod
    def monomial(cls, n: int, u: int = 0, v: int = 0, w: int = 0, x: Sequence[int] = (), coefficient: int = 1) -> "LaurentPoly":
        """coefficient * u^u v^v w^w X_1^x_1 ... (missing X exponents are 0)."""
        x = tuple(x)
        if len(x) > n:
            raise InterfaceError(f"{len(x)} X exponents given for n={n}")
        return cls(n, {(u, v, w) + x + (0,) * (n - len(x)): coefficient})

    def _check_same(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly):
            raise InterfaceError(f"Cannot combine a Laurent polynomial with {other!r}")
        if other.n != self.n:
            raise InterfaceError(f"Laurent polynomials over X_1..X_{self.n} and X_1..X_{other.n} do not mix")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_same(other)
        result = LaurentPoly(self.n, self.terms)
        for exponents, coefficient in other.terms.items():
            result._add_term(exponents, coefficient)
        return result

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check_same(other)
        result = LaurentPoly(self.n)
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result._add_term(tuple(p + q for p, q in zip(left, right)), a * b)
        return result

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        """Exact value for the given variable values; unnamed variables default to 1."""
        names = variable_names(self.n)
        unknown = set(assignment) - set(names)
        if unknown:
            raise InterfaceError(f"Unknown variables {sorted(unknown)}; expected a subset of {names}")
        values = [Fraction(assignment.get(name, 1)) for name in names]
        total = Fraction(0)
        for exponents, coefficient in self.terms.items():
            term = Fraction(coefficient)
            for name, value, e in zip(names, values, exponents):
                if e < 0 and value == 0:
                    raise InterfaceError(f"Cannot evaluate {name}^{e} at 0")
                if e:
                    term *= value ** e
            total += term
        return total

    def to_sympy(self) -> sympy.Expr:
        symbols = sympy.symbols(variable_names(self.n))
        expression = sympy.Integer(0)
        for exponents, coefficient in self.terms.items():
            term = sympy.Integer(coefficient)
            for symbol, e in zip(symbols, exponents):
                term *= symbol ** e
            expression += term
        return expression

    @staticmethod
    def _monomial_text(names: Sequence[str], exponents: Exponents) -> str:
        parts = []
        for position, (name, e) in enumerate(zip(names, exponents)):
            if e == 0:
                continue
            if position < 3:
                parts.append(name if e == 1 else f"{name}^{e}")
            else:
                parts.append(f"{name}^{e}")
        return " ".join(parts) or "1"

    def lines(self) -> List[str]:
        """`coefficient monomial` per term, sorted by exponent vector, e.g. `1 u X1^1`."""
        names = variable_names(self.n)
        return [
            f"{self.terms[e]} {self._monomial_text(names, e)}"
            for e in sorted(self.terms)
        ]

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, " + (" + ".join(self.lines()) or "0") + ")"


def poly_sum(n: int, parts: Iterable[LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly.zero(n)
    for part in parts:
        total._check_same(part)
        for exponents, coefficient in part.terms.items():
            total._add_term(exponents, coefficient)
    return total
