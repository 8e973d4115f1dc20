"""Exact Jordan constants of explicit finite groups.

A group arrives either as a Cayley table or as permutation generators
and is normalised to a table with the identity at index 0.  The Jordan
constant is the maximum over all subgroups F of the minimal index of a
normal abelian subgroup of F; it is 1 exactly for abelian groups, and
the group order itself is the trivial boundedness constant.

Subgroup enumeration is the standard bottom-up closure: every subgroup
arises from a smaller one by adjoining a single element, so repeatedly
extending each known subgroup by each outside element finds the whole
lattice.  Each subgroup keeps the generator list that built it, which
makes normality checks cheap (conjugating generators suffices).

Both the permutation closure and the lattice walk are guarded by
configurable order limits, since subgroup lattices explode quickly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OrderLimitError

DEFAULT_CLOSURE_LIMIT = 5000
DEFAULT_JORDAN_LIMIT = 200


class FiniteGroup:
    """A finite group as a Cayley table over indices 0..order-1.

    Index 0 is the identity.  Table input is fully validated: every row
    and column must be a permutation, row and column 0 the identity,
    and associativity is checked on all triples.  Groups built from
    permutation generators skip the associativity check, which holds by
    construction.
    """

    def __init__(self, mult, source: str = "table", check_associativity: bool = True):
        self.mult = tuple(tuple(row) for row in mult)
        self.order = len(self.mult)
        self.source = source
        self._validate(check_associativity)
        self.inverses = tuple(row.index(0) for row in self.mult)

    def _validate(self, check_associativity: bool):
        n = self.order
        if n < 1:
            raise ValueError("a group table needs at least the identity")
        everything = frozenset(range(n))
        for i, row in enumerate(self.mult):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            if frozenset(row) != everything:
                raise ValueError(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if frozenset(row[j] for row in self.mult) != everything:
                raise ValueError(f"column {j} is not a permutation of 0..{n - 1}")
        if any(self.mult[0][j] != j for j in range(n)):
            raise ValueError("row 0 is not the identity")
        if any(self.mult[i][0] != i for i in range(n)):
            raise ValueError("column 0 is not the identity")
        if check_associativity:
            mult = self.mult
            for a in range(n):
                row_a = mult[a]
                for b in range(n):
                    ab = row_a[b]
                    row_ab = mult[ab]
                    row_b = mult[b]
                    for c in range(n):
                        if row_ab[c] != row_a[row_b[c]]:
                            raise ValueError(
                                f"associativity fails at ({a}, {b}, {c})")

    def conjugate(self, g: int, a: int) -> int:
        """g * a * g^-1."""
        return self.mult[self.mult[g][a]][self.inverses[g]]


@dataclass(frozen=True)
class Subgroup:
    """A subgroup by sorted element indices plus a generating set."""

    elements: tuple[int, ...]
    generators: tuple[int, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)


def _parse_perm_line(line: str, degree: int, lineno: int) -> tuple[int, ...]:
    tokens = line.split()
    if len(tokens) != degree:
        raise ValueError(
            f"line {lineno}: expected {degree} images, got {len(tokens)}")
    try:
        images = tuple(int(t) - 1 for t in tokens)
    except ValueError:
        raise ValueError(f"line {lineno}: images must be integers") from None
    if sorted(images) != list(range(degree)):
        raise ValueError(f"line {lineno}: not a permutation of 1..{degree}")
    return images


def _perm_closure(generators, degree: int, limit: int):
    """All products of the generators, via breadth-first closure."""
    identity = tuple(range(degree))
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(p[g[x]] for x in range(degree))
                if q not in elements:
                    if len(elements) >= limit:
                        raise OrderLimitError(
                            f"permutation closure exceeded {limit} elements")
                    elements.add(q)
                    nxt.append(q)
        frontier = nxt
    return elements


def parse_group(text: str, closure_limit: int = DEFAULT_CLOSURE_LIMIT) -> FiniteGroup:
    """Parse a group description.

    Two formats, chosen by the first line:

    * "perm <degree>" followed by one generator per line, written as the
      images of 1..degree.  The group is the closure of the generators;
      the product p*q acts by applying q first.
    * "table <n>" followed by n rows of n indices in 0..n-1, with the
      identity at index 0.

    Permutation closures larger than closure_limit are refused.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty group description")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header {lines[0]!r}, expected 'perm <n>' or 'table <n>'")
    kind, raw_size = header
    try:
        size = int(raw_size)
    except ValueError:
        raise ValueError(f"bad header size {raw_size!r}") from None
    if size < 1:
        raise ValueError(f"header size must be positive, got {size}")

    if kind == "perm":
        generators = [
            _parse_perm_line(ln, size, i + 2) for i, ln in enumerate(lines[1:])]
        elements = _perm_closure(generators, size, closure_limit)
        identity = tuple(range(size))
        ordered = [identity] + sorted(elements - {identity})
        index = {p: i for i, p in enumerate(ordered)}
        mult = [
            [index[tuple(p[q[x]] for x in range(size))] for q in ordered]
            for p in ordered]
        return FiniteGroup(mult, source="perm", check_associativity=False)

    if kind == "table":
        rows = lines[1:]
        if len(rows) != size:
            raise ValueError(f"expected {size} table rows, got {len(rows)}")
        mult = []
        for i, ln in enumerate(rows):
            try:
                row = [int(t) for t in ln.split()]
            except ValueError:
                raise ValueError(f"table row {i} has non-integer entries") from None
            if any(not 0 <= x < size for x in row):
                raise ValueError(f"table row {i} has entries outside 0..{size - 1}")
            mult.append(row)
        return FiniteGroup(mult, source="table")

    raise ValueError(f"unknown format {kind!r}, expected 'perm' or 'table'")


def _closure_in_table(mult, seed) -> tuple[int, ...]:
    """Subgroup generated by the seed elements; finite, so products suffice."""
    elements = [0]
    present = {0}
    for s in seed:
        if s not in present:
            present.add(s)
            elements.append(s)
    i = 0
    while i < len(elements):
        a = elements[i]
        row_a = mult[a]
        j = 0
        while j < len(elements):
            b = elements[j]
            for p in (row_a[b], mult[b][a]):
                if p not in present:
                    present.add(p)
                    elements.append(p)
            j += 1
        i += 1
    return tuple(sorted(present))


def all_subgroups(G: FiniteGroup, max_order: int = DEFAULT_JORDAN_LIMIT) -> list[Subgroup]:
    """Every subgroup, sorted by order then element list.

    Groups over max_order are refused; the lattice walk is quadratic in
    the number of subgroups, which grows quickly.
    """
    if G.order > max_order:
        raise OrderLimitError(
            f"group order {G.order} exceeds limit {max_order}")
    mult = G.mult
    trivial = (0,)
    found: dict[tuple[int, ...], tuple[int, ...]] = {trivial: ()}
    frontier = [trivial]
    while frontier:
        nxt = []
        for elems in frontier:
            gens = found[elems]
            inside = set(elems)
            for g in range(1, G.order):
                if g in inside:
                    continue
                bigger = _closure_in_table(mult, elems + (g,))
                if bigger not in found:
                    found[bigger] = gens + (g,)
                    nxt.append(bigger)
        frontier = nxt
    return [Subgroup(elems, found[elems])
            for elems in sorted(found, key=lambda e: (len(e), e))]


def _is_abelian(mult, elements) -> bool:
    return all(mult[a][b] == mult[b][a] for a in elements for b in elements)


def _is_normal_in(G: FiniteGroup, sub_elements: frozenset, ambient: Subgroup) -> bool:
    """Whether the element set is closed under conjugation by the ambient
    subgroup; checking the ambient generators suffices."""
    conjugators = ambient.generators or ambient.elements
    return all(
        G.conjugate(g, a) in sub_elements
        for g in conjugators for a in sub_elements)


def _min_index(G: FiniteGroup, F: Subgroup, lattice) -> int:
    inside = frozenset(F.elements)
    best = F.order  # the trivial subgroup is always normal and abelian
    for A in lattice:
        aset = frozenset(A.elements)
        if not aset <= inside:
            continue
        index = F.order // A.order
        if index >= best:
            continue
        if _is_abelian(G.mult, A.elements) and _is_normal_in(G, aset, F):
            best = index
    return best


def min_normal_abelian_index(F: Subgroup, G: FiniteGroup,
                             max_order: int = DEFAULT_JORDAN_LIMIT) -> int:
    """Smallest index of a normal abelian subgroup of F inside G."""
    return _min_index(G, F, all_subgroups(G, max_order))


def jordan_constant_with_witness(
    G: FiniteGroup, max_order: int = DEFAULT_JORDAN_LIMIT
) -> tuple[int, Subgroup]:
    """Jordan constant of G plus the first subgroup attaining it.

    The witness is the first subgroup in (order, elements) order whose
    minimal normal abelian index equals the maximum.
    """
    lattice = all_subgroups(G, max_order)
    best = 0
    witness = lattice[0]
    for F in lattice:
        value = _min_index(G, F, lattice)
        if value > best:
            best = value
            witness = F
    return best, witness


def jordan_constant(G: FiniteGroup, max_order: int = DEFAULT_JORDAN_LIMIT) -> int:
    """Maximum over subgroups F of the minimal normal abelian index in F."""
    return jordan_constant_with_witness(G, max_order)[0]


def boundedness_constant(G: FiniteGroup) -> int:
    """The order of G: the trivial bound on its finite subgroup orders."""
    return G.order


def subgroup_group(G: FiniteGroup, sub: Subgroup) -> FiniteGroup:
    """A subgroup re-indexed as a standalone group.

    Element 0 of G is in every subgroup and stays at index 0.
    """
    index = {g: i for i, g in enumerate(sub.elements)}
    mult = [[index[G.mult[a][b]] for b in sub.elements] for a in sub.elements]
    return FiniteGroup(mult, source="table", check_associativity=False)
