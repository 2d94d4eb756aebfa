"""Finite abelian groups presented by moduli, and their subgroups as lattices.

A group G = Z/n_1 x ... x Z/n_k is written additively; an element is its
exponent tuple reduced componentwise.  A subgroup H is stored canonically as
the Hermite normal form of its preimage lattice L in Z^k, where

    R  =  the relation lattice generated by n_j * e_j,   R ⊆ L ⊆ Z^k,

so H = L/R, [G : H] = det(L) and membership is exact back-substitution.
Quotient structure (invariant factors, a generator of a cyclic quotient)
comes from the Smith normal form of the same basis matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm, prod

from .errors import PreconditionError
from .numtheory import prime_divisors
from .ratlinalg import MatZ, _hermite, smith_with_transforms

__all__ = [
    "FinAbGroup",
    "GroupElement",
    "Subgroup",
    "QuotientInfo",
    "subgroup_from_generators",
    "index_and_quotient",
    "minimal_overgroups",
]


@dataclass(frozen=True)
class FinAbGroup:
    """Z/n_1 x ... x Z/n_k for the given moduli (each >= 1, at least one)."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        mods = tuple(int(n) for n in self.moduli)
        if not mods or any(n < 1 for n in mods):
            raise PreconditionError(f"moduli must be integers >= 1, got {self.moduli}")
        object.__setattr__(self, "moduli", mods)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def exponent(self) -> int:
        return lcm(*self.moduli)

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def element(self, exps) -> "GroupElement":
        return GroupElement(self, tuple(exps))

    def elements(self):
        """All elements in index order (leftmost coordinate most significant)."""
        for exps in itertools.product(*(range(n) for n in self.moduli)):
            yield GroupElement(self, exps)

    def exponent_tuples(self):
        return itertools.product(*(range(n) for n in self.moduli))

    def index_of(self, exps) -> int:
        i = 0
        for e, n in zip(exps, self.moduli):
            i = i * n + e
        return i

    def element_of_index(self, i: int) -> "GroupElement":
        exps = []
        for n in reversed(self.moduli):
            i, e = divmod(i, n)
            exps.append(e)
        return GroupElement(self, tuple(reversed(exps)))

    def generator_elements(self) -> tuple["GroupElement", ...]:
        """The standard generators e_1, ..., e_k."""
        k = self.rank
        return tuple(
            GroupElement(self, tuple(int(i == j) for i in range(k))) for j in range(k)
        )

    def relation_rows(self) -> tuple[tuple[int, ...], ...]:
        k = self.rank
        return tuple(
            tuple(self.moduli[j] if i == j else 0 for i in range(k)) for j in range(k)
        )

    def invariants(self) -> tuple[int, ...]:
        """Invariant factors d1 | d2 | ... | dk of the group itself."""
        return _group_invariants(self.moduli)

    def is_cyclic(self) -> bool:
        return sum(1 for d in self.invariants() if d > 1) <= 1


@lru_cache(maxsize=None)
def _group_invariants(moduli: tuple[int, ...]) -> tuple[int, ...]:
    from .ratlinalg import snf_invariants

    return snf_invariants(MatZ.diagonal(moduli))


@dataclass(frozen=True)
class GroupElement:
    """An element of a FinAbGroup, written additively."""

    group: FinAbGroup
    exps: tuple[int, ...]

    def __post_init__(self):
        mods = self.group.moduli
        if len(self.exps) != len(mods):
            raise PreconditionError(
                f"element has {len(self.exps)} coordinates, group has rank {len(mods)}"
            )
        object.__setattr__(
            self, "exps", tuple(int(e) % n for e, n in zip(self.exps, mods))
        )

    def _check(self, other: "GroupElement"):
        if self.group != other.group:
            raise PreconditionError("elements of different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.exps, other.exps))
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-e for e in self.exps))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.group, tuple(a - b for a, b in zip(self.exps, other.exps))
        )

    def __rmul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        return GroupElement(self.group, tuple(k * e for e in self.exps))

    __mul__ = __rmul__

    def is_identity(self) -> bool:
        return all(e == 0 for e in self.exps)

    def order(self) -> int:
        return lcm(*(n // gcd(e, n) for e, n in zip(self.exps, self.group.moduli)))

    def index(self) -> int:
        return self.group.index_of(self.exps)

    def __repr__(self):
        return f"GroupElement{self.exps}"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a FinAbGroup, canonicalized by its preimage-lattice HNF.

    hnf_basis is k x k, upper triangular with positive diagonal, rows spanning
    a lattice that contains every relation row n_j * e_j.  Equal subgroups have
    identical bases, so equality and hashing are structural.
    """

    group: FinAbGroup
    hnf_basis: MatZ

    def __post_init__(self):
        k = self.group.rank
        b = self.hnf_basis
        if b.rows != k or b.cols != k:
            raise PreconditionError(f"subgroup basis must be {k}x{k}")
        e = b.entries
        for i in range(k):
            if e[i][i] <= 0 or any(e[i][j] for j in range(i)):
                raise PreconditionError("subgroup basis is not in Hermite normal form")
            for j in range(i + 1, k):
                if not 0 <= e[i][j] < e[j][j]:
                    raise PreconditionError(
                        "subgroup basis is not in Hermite normal form"
                    )
        for row in self.group.relation_rows():
            if not _lattice_contains(e, row):
                raise PreconditionError(
                    "subgroup lattice does not contain the relation lattice"
                )

    @classmethod
    def from_lattice_rows(cls, group: FinAbGroup, rows) -> "Subgroup":
        """Canonicalize spanning rows (relations are appended automatically)."""
        all_rows = [tuple(int(v) for v in r) for r in rows]
        all_rows += list(group.relation_rows())
        hnf_rows, _, _ = _hermite(all_rows, group.rank)
        return cls(group, MatZ(tuple(tuple(r) for r in hnf_rows)))

    @classmethod
    def whole(cls, group: FinAbGroup) -> "Subgroup":
        return cls.from_lattice_rows(group, MatZ.identity(group.rank).entries)

    @classmethod
    def trivial(cls, group: FinAbGroup) -> "Subgroup":
        return cls.from_lattice_rows(group, ())

    @property
    def index(self) -> int:
        """[G : H] = det of the basis (triangular, so the diagonal product)."""
        e = self.hnf_basis.entries
        return prod(e[i][i] for i in range(self.group.rank))

    @property
    def order(self) -> int:
        return self.group.order // self.index

    def contains_exps(self, exps) -> bool:
        return _lattice_contains(self.hnf_basis.entries, exps)

    def contains(self, g: GroupElement) -> bool:
        if g.group != self.group:
            raise PreconditionError("element of a different group")
        return self.contains_exps(g.exps)

    def elements(self):
        for exps in self.group.exponent_tuples():
            if self.contains_exps(exps):
                yield GroupElement(self.group, exps)

    def generators(self) -> tuple[GroupElement, ...]:
        """The basis rows as group elements (they generate H)."""
        return tuple(GroupElement(self.group, row) for row in self.hnf_basis.entries)

    def is_contained_in(self, other: "Subgroup") -> bool:
        if self.group != other.group:
            raise PreconditionError("subgroups of different groups")
        return all(
            _lattice_contains(other.hnf_basis.entries, row)
            for row in self.hnf_basis.entries
        )

    def group_invariants(self) -> tuple[int, ...]:
        """Invariant factors of H itself (not of the quotient G/H)."""
        from .ratlinalg import snf_invariants

        b = self.hnf_basis.entries
        k = self.group.rank
        rel = [list(r) for r in self.group.relation_rows()]
        c = [_solve_upper(b, row) for row in rel]
        return snf_invariants(MatZ(tuple(tuple(r) for r in c)))

    @property
    def sort_key(self):
        return (self.index, self.hnf_basis.entries)

    def to_jsonable(self) -> dict:
        return {
            "group": list(self.group.moduli),
            "hnf": self.hnf_basis.to_jsonable(),
        }

    @classmethod
    def from_jsonable(cls, obj) -> "Subgroup":
        return cls(FinAbGroup(tuple(obj["group"])), MatZ.from_jsonable(obj["hnf"]))

    def __repr__(self):
        return f"Subgroup(index {self.index} of {self.group.moduli})"


def _lattice_contains(basis_entries, vec) -> bool:
    """Is vec an integer combination of the (upper-triangular) basis rows?"""
    v = list(vec)
    k = len(basis_entries)
    for i in range(k):
        q, rem = divmod(v[i], basis_entries[i][i])
        if rem:
            return False
        if q:
            row = basis_entries[i]
            for j in range(i, k):
                v[j] -= q * row[j]
    return True


def _solve_upper(basis_entries, vec) -> list[int]:
    """Integer coordinates of vec in the upper-triangular basis (must exist)."""
    v = list(vec)
    k = len(basis_entries)
    out = [0] * k
    for i in range(k):
        q, rem = divmod(v[i], basis_entries[i][i])
        if rem:
            raise PreconditionError("vector is not in the lattice")
        out[i] = q
        if q:
            row = basis_entries[i]
            for j in range(i, k):
                v[j] -= q * row[j]
    return out


def subgroup_from_generators(group: FinAbGroup, gens) -> Subgroup:
    """The subgroup generated by the given elements (empty set -> trivial)."""
    rows = []
    for g in gens:
        if not isinstance(g, GroupElement):
            g = group.element(g)
        elif g.group != group:
            raise PreconditionError("generator from a different group")
        rows.append(g.exps)
    return Subgroup.from_lattice_rows(group, rows)


@dataclass(frozen=True)
class QuotientInfo:
    """Structure of G/H: order, invariant factors, and a generator when cyclic."""

    index: int
    invariants: tuple[int, ...]
    is_cyclic: bool
    generator: GroupElement | None


def index_and_quotient(group: FinAbGroup, h: Subgroup) -> QuotientInfo:
    """Index and invariant factors of G/H; a generator coset when cyclic.

    The Smith normal form U B V = D of the subgroup basis B gives the quotient
    coordinates x -> x V mod diag(D); the generator of a cyclic quotient is the
    preimage of the last coordinate vector, i.e. the last row of V^{-1}.
    """
    if h.group != group:
        raise PreconditionError("subgroup of a different group")
    d, _, _, vinv = smith_with_transforms(h.hnf_basis)
    k = group.rank
    invariants = tuple(d.entries[i][i] for i in range(k))
    nontrivial = [i for i in range(k) if invariants[i] > 1]
    is_cyclic = len(nontrivial) <= 1
    generator = None
    if is_cyclic:
        if nontrivial:
            generator = GroupElement(group, vinv.entries[nontrivial[0]])
        else:
            generator = group.identity()
    return QuotientInfo(h.index, invariants, is_cyclic, generator)


def all_subgroups(
    group: FinAbGroup, limit: int = 2_000_000
) -> tuple[Subgroup, ...]:
    """Every subgroup of G, in canonical order (index ascending, then basis).

    Enumerates Hermite normal forms directly: the i-th diagonal entry must
    divide n_i (the lattice contains n_i * e_i), the above-diagonal entries
    range over [0, pivot), and candidates failing to contain some relation
    row are discarded.  Each subgroup appears exactly once because the HNF
    basis is unique.  Raises PreconditionError when the candidate count
    would exceed ``limit`` (very high-rank 2-groups).
    """
    from .numtheory import divisors

    k = group.rank
    diag_choices = [divisors(n) for n in group.moduli]
    relations = group.relation_rows()

    total = 0
    found = []

    def fill(rows, col):
        # rows: the diagonal-fixed matrix being completed, column by column.
        nonlocal total
        if col == k:
            total += 1
            if total > limit:
                raise PreconditionError(
                    "subgroup enumeration is too large for this group"
                )
            entries = tuple(tuple(r) for r in rows)
            if all(_lattice_contains(entries, rel) for rel in relations):
                found.append(Subgroup(group, MatZ(entries)))
            return
        d = rows[col][col]
        def above(i):
            if i == col:
                fill(rows, col + 1)
                return
            for v in range(d):
                rows[i][col] = v
                above(i + 1)
            rows[i][col] = 0
        above(0)

    def pick_diag(i, rows):
        if i == k:
            fill([r[:] for r in rows], 0)
            return
        for d in diag_choices[i]:
            rows[i][i] = d
            pick_diag(i + 1, rows)
        rows[i][i] = 0

    pick_diag(0, [[0] * k for _ in range(k)])
    return tuple(sorted(found, key=lambda s: s.sort_key))


def minimal_overgroups(group: FinAbGroup, k_sub: Subgroup) -> tuple[Subgroup, ...]:
    """The overgroups H ⊇ K with [H : K] prime, for K with cyclic quotient.

    For cyclic G/K of order n generated by the coset of x, there is exactly one
    such H per prime p | n, namely H_p = <K, (n/p) x>; so the number of minimal
    overgroups equals the number of distinct primes dividing [G : K].
    """
    info = index_and_quotient(group, k_sub)
    if not info.is_cyclic:
        raise PreconditionError("minimal overgroups require a cyclic quotient G/K")
    return _minimal_overgroups_from_generator(group, k_sub, info.index, info.generator)


def _minimal_overgroups_from_generator(
    group: FinAbGroup, k_sub: Subgroup, n: int, x: GroupElement
) -> tuple[Subgroup, ...]:
    if n == 1:
        return ()
    base = [row for row in k_sub.hnf_basis.entries]
    out = []
    for p in prime_divisors(n):
        out.append(
            Subgroup.from_lattice_rows(group, base + [((n // p) * x).exps])
        )
    return tuple(sorted(out, key=lambda s: s.sort_key))
