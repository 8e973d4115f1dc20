"""Center of the simply connected group and faithfulness of weight sets.

An element of the maximal torus is written x = sum mu_i alpha_i^vee with
rational coefficients; it is central exactly when every simple root
takes an integer value on it, i.e. when the Cartan matrix applied to mu
is integral.  The center is therefore the finite group (C^-1 Z^l) / Z^l,
and each nonidentity class is stored by its unique representative with
all coordinates in [0, 1).

A weight evaluates on x to sum lambda_i mu_i mod 1, and a central
element acts trivially in the irreducible representation of highest
weight lambda exactly when that value is 0.  A set of weights is
faithful when no nonidentity central class evaluates to 0 under all of
them.

Convention note: for D of odd rank the center is cyclic of order 4 and
the class representatives carry quarter coordinates on the two fork
nodes; which fork node shows 1/4 and which 3/4 is an artifact of the
node numbering, so tests against externally given generators should
compare class sets, not individual lifts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootdata import DominantWeight, RootDatum


@dataclass(frozen=True)
class CenterClass:
    """A nonidentity central class, as simple-coroot coordinates in [0, 1)."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if not any(coords):
            raise ValueError("the identity class is not represented")
        for c in coords:
            if not 0 <= c < 1:
                raise ValueError(f"class coordinates must lie in [0, 1), got {coords}")
        object.__setattr__(self, "coords", coords)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class WeightSet:
    """A nonempty set of nonzero dominant weights, kept in sorted order."""

    weights: tuple[DominantWeight, ...]

    def __post_init__(self):
        weights = tuple(self.weights)
        if not weights:
            raise ValueError("a weight set must contain at least one weight")
        seen = set()
        for w in weights:
            if w.is_zero:
                raise ValueError("the zero weight detects nothing and is not allowed")
            if w.coords in seen:
                raise ValueError(f"duplicate weight {w.coords}")
            seen.add(w.coords)
        object.__setattr__(
            self, "weights", tuple(sorted(weights, key=lambda w: w.coords)))

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return ";".join(str(w) for w in self.weights)


def _det(matrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _inverse(matrix) -> list[list[Fraction]]:
    """Exact inverse of an integer matrix via Gauss-Jordan over Fraction."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] +
           [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        factor = aug[col][col]
        aug[col] = [x / factor for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def center_order(datum: RootDatum) -> int:
    """Order of the center: the determinant of the Cartan matrix."""
    return _det(datum.cartan)


def _mod1(vec) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) % 1 for c in vec)


def center_classes(datum: RootDatum) -> list[CenterClass]:
    """All nonidentity central classes, sorted lexicographically.

    The columns of the inverse Cartan matrix generate the center mod 1;
    the closure under addition is tiny (at most the determinant), so a
    plain worklist suffices.  The count is checked against the
    determinant.
    """
    inv = _inverse(datum.cartan)
    rank = datum.rank
    generators = [_mod1(tuple(inv[i][j] for i in range(rank))) for j in range(rank)]
    zero = tuple(Fraction(0) for _ in range(rank))
    classes = {zero}
    frontier = [g for g in generators if g not in classes]
    classes.update(frontier)
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                s = _mod1(tuple(x + y for x, y in zip(a, g)))
                if s not in classes:
                    classes.add(s)
                    nxt.append(s)
        frontier = nxt
    if len(classes) != center_order(datum):
        raise AssertionError(
            f"{datum.type}: found {len(classes)} central classes, "
            f"determinant is {center_order(datum)}")
    classes.discard(zero)
    return [CenterClass(c) for c in sorted(classes)]


def pair(weight: DominantWeight, element) -> Fraction:
    """Value of a weight on a central element, as a fraction in [0, 1).

    The element may be a CenterClass or any rational coordinate vector
    over the simple coroots; integer shifts of the coordinates do not
    change the result because weight coordinates are integers.
    """
    coords = element.coords if isinstance(element, CenterClass) else tuple(element)
    if len(coords) != len(weight.coords):
        raise ValueError(
            f"element has {len(coords)} coordinates, weight has {len(weight.coords)}")
    return sum((Fraction(c) * l for l, c in zip(weight.coords, coords)),
               Fraction(0)) % 1


def is_faithful(datum: RootDatum, weight_set: WeightSet) -> bool:
    """Whether the direct sum over the weight set has trivial kernel.

    True exactly when every nonidentity central class is detected by at
    least one weight in the set.
    """
    for w in weight_set:
        if len(w.coords) != datum.rank:
            raise ValueError(
                f"weight {w.coords} does not match rank {datum.rank} of {datum.type}")
    return all(
        any(pair(w, cls) for w in weight_set)
        for cls in center_classes(datum))
