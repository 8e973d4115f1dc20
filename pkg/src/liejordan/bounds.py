"""Exact bound expressions for Jordan constants of transformation groups.

The driving quantity is the Jordan constant J(n) of the complex general
linear group in dimension n.  It equals (n+1)! once n is at least 71
and also at n in {63, 65, 67, 69}; for the remaining small n the exact
value is not pinned down here, so those atoms stay symbolic.  Every
bound below is either an exact integer or a product/power expression
over symbolic J atoms, never a float.

Dimension-zero groups are trivial, so J(0) = 1 by convention; callers
that care can flag when that convention fired.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

_EXACT_SPORADIC = frozenset({63, 65, 67, 69})
_EXACT_FROM = 71


class BoundExpr:
    """Base class for exact bound values and symbolic bound expressions."""

    __slots__ = ()

    def is_exact(self) -> bool:
        return isinstance(self, ExactInt)


@dataclass(frozen=True)
class ExactInt(BoundExpr):
    value: int

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"bounds are positive integers, got {self.value}")

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class SymbolicJ(BoundExpr):
    arg: int

    def __post_init__(self):
        m = self.arg
        if not (1 <= m < _EXACT_FROM) or m in _EXACT_SPORADIC:
            raise ValueError(f"J({m}) has a known exact value and must not stay symbolic")

    def render(self) -> str:
        return f"J({self.arg})"


@dataclass(frozen=True)
class Power(BoundExpr):
    base: BoundExpr
    exponent: int

    def __post_init__(self):
        if self.exponent < 2:
            raise ValueError(f"power nodes need exponent >= 2, got {self.exponent}")

    def render(self) -> str:
        base = self.base.render()
        if isinstance(self.base, Product):
            base = f"({base})"
        return f"{base}^{self.exponent}"


@dataclass(frozen=True)
class Product(BoundExpr):
    operands: tuple[BoundExpr, ...]

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("product nodes need at least two operands")
        object.__setattr__(self, "operands", tuple(self.operands))

    def render(self) -> str:
        return " * ".join(op.render() for op in self.operands)


def _power(base: BoundExpr, exponent: int) -> BoundExpr:
    if exponent == 1:
        return base
    if base.is_exact():
        return ExactInt(base.value ** exponent)
    return Power(base, exponent)


def _scale(coefficient: int, expr: BoundExpr) -> BoundExpr:
    if coefficient == 1:
        return expr
    if expr.is_exact():
        return ExactInt(coefficient * expr.value)
    return Product((ExactInt(coefficient), expr))


def jordan_gl(n: int) -> BoundExpr:
    """Jordan constant of the n-dimensional complex general linear group.

    Exactly (n+1)! for n >= 71 and for n in {63, 65, 67, 69}; 1 for
    n = 0; a symbolic atom J(n) otherwise.
    """
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    if n == 0:
        return ExactInt(1)
    if n >= _EXACT_FROM or n in _EXACT_SPORADIC:
        return ExactInt(math.factorial(n + 1))
    return SymbolicJ(n)


@dataclass(frozen=True)
class GroupDims:
    """Dimension n of the group and its number of components b."""

    n: int
    b: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"dimension must be non-negative, got {self.n}")
        if self.b < 1:
            raise ValueError(f"component count must be positive, got {self.b}")


def _linear_cap(m: int) -> int:
    """Dimension of the faithful linear model used by the Lie-group bound."""
    return m * (2 ** m + 10)


def _lie_arg(dims: GroupDims) -> int:
    return _linear_cap(dims.n)


def bound_lie(dims: GroupDims) -> BoundExpr:
    """Jordan bound for a Lie group with n-dimensional identity component
    and b components: b * J(n(2^n + 10))^b."""
    return _scale(dims.b, _power(jordan_gl(_lie_arg(dims)), dims.b))


def bound_lie_connected(n: int) -> BoundExpr:
    """Jordan bound for a connected Lie group of dimension n."""
    return bound_lie(GroupDims(n))


def _algebraic_arg(dims: GroupDims) -> int:
    return dims.n * (2 ** (2 * dims.n + 1) + 20)


def bound_algebraic(dims: GroupDims) -> BoundExpr:
    """Jordan bound for a complex algebraic group with n-dimensional
    identity component and b components: b * J(n(2^(2n+1) + 20))^b."""
    return _scale(dims.b, _power(jordan_gl(_algebraic_arg(dims)), dims.b))


def _compact_complex_arg(n: int) -> int:
    return (2 * n * n + n) * (2 ** (2 * n * n + n) + 10)


def bound_compact_complex(n: int) -> BoundExpr:
    """Jordan bound for the automorphism group of a compact complex
    n-manifold, via its real dimension count 2n^2 + n."""
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    return jordan_gl(_compact_complex_arg(n))


def _hyperbolic_arg(n: int) -> int:
    return (2 * n + n * n) * (2 ** (2 * n + n * n) + 10)


def bound_hyperbolic(n: int) -> BoundExpr:
    """Jordan bound for the isometry group of hyperbolic n-space, which
    embeds in the projective linear group of dimension (n+1)^2 - 1."""
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    return jordan_gl(_hyperbolic_arg(n))


def stabilizer_bound_hyperbolic(n: int) -> BoundExpr:
    """Jordan bound for a point stabilizer in the hyperbolic isometry
    group: the stabilizer embeds linearly in dimension n."""
    return jordan_gl(n)


def _riemannian_arg(n: int) -> int:
    return (n * n + n) * (2 ** ((n * n + n - 2) // 2) + 5)


def bound_riemannian(n: int) -> BoundExpr:
    """Jordan bound for the isometry group of a compact Riemannian
    n-manifold, whose dimension is at most n(n+1)/2."""
    if n < 0:
        raise ValueError(f"dimension must be non-negative, got {n}")
    if n == 0:
        # the exponent (n^2 + n - 2) / 2 is negative at n = 0; the manifold
        # is a point and its isometry group is trivial
        return ExactInt(1)
    return jordan_gl(_riemannian_arg(n))


def consistency_check_bounds(n: int) -> bool:
    """Check that each geometric bound argument agrees with the generic
    Lie-group argument at the corresponding group dimension.

    For the Riemannian case this is a genuine identity between two
    differently written expressions: with m = n(n+1)/2,
    2m(2^(m-1) + 5) = m(2^m + 10).
    """
    if n < 1:
        raise ValueError(f"consistency checks need n >= 1, got {n}")
    checks = [
        _compact_complex_arg(n) == _linear_cap(2 * n * n + n),
        _hyperbolic_arg(n) == _linear_cap(2 * n + n * n),
        _riemannian_arg(n) == _linear_cap(n * (n + 1) // 2),
    ]
    return all(checks)


def expr_to_json(expr: BoundExpr) -> dict:
    """Serialize a bound expression to a JSON-ready dict.

    Integers travel as decimal strings so arbitrary-precision values
    survive any JSON reader.
    """
    if isinstance(expr, ExactInt):
        return {"kind": "exact", "value": str(expr.value)}
    if isinstance(expr, SymbolicJ):
        return {"kind": "symbolic_j", "arg": expr.arg}
    if isinstance(expr, Power):
        return {"kind": "power", "operands": [expr_to_json(expr.base)],
                "exponent": expr.exponent}
    if isinstance(expr, Product):
        return {"kind": "product",
                "operands": [expr_to_json(op) for op in expr.operands]}
    raise TypeError(f"not a bound expression: {expr!r}")


def expr_from_json(data: dict) -> BoundExpr:
    """Parse a dict produced by expr_to_json; inverse of it on valid input.

    Trees whose subexpressions are all exact are collapsed, so the
    result always satisfies the constructor invariants.
    """
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError(f"expected a bound-expression dict, got {data!r}")
    kind = data["kind"]
    if kind == "exact":
        return ExactInt(int(data["value"]))
    if kind == "symbolic_j":
        return SymbolicJ(int(data["arg"]))
    if kind == "power":
        operands = data["operands"]
        if len(operands) != 1:
            raise ValueError("power nodes serialize exactly one operand")
        return _power(expr_from_json(operands[0]), int(data["exponent"]))
    if kind == "product":
        parts = [expr_from_json(op) for op in data["operands"]]
        if len(parts) < 2:
            raise ValueError("product nodes need at least two operands")
        coefficient = 1
        symbolic = [p for p in parts if not p.is_exact()]
        for p in parts:
            if p.is_exact():
                coefficient *= p.value
        if not symbolic:
            return ExactInt(coefficient)
        if len(symbolic) == 1:
            return _scale(coefficient, symbolic[0])
        rest = Product(tuple(symbolic))
        return _scale(coefficient, rest)
    raise ValueError(f"unknown bound-expression kind {kind!r}")
