"""Complex characters of a finite abelian group, and its rational irreducibles.

A character of G = Z/n_1 x ... x Z/n_k is determined by exponents
(a_1, ..., a_k): it sends g to exp(2*pi*i * val(g) / N) where N = lcm(n_j) and

    val(g)  =  sum_j (N / n_j) * a_j * g_j   (mod N).

All character data is kept as exact integer exponents; no complex floats ever
appear.  Characters with the same kernel form one Galois orbit and correspond
to a single irreducible rational representation, whose degree is phi(n) for
n the order of the character (equivalently, n = [G : kernel] and the quotient
G/kernel is cyclic).  The canonical representative of the orbit is the
exponent tuple that is lexicographically smallest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm

from .abgroup import FinAbGroup, GroupElement, Subgroup
from .errors import InternalCheckError, PreconditionError
from .numtheory import moebius, totient
from .ratlinalg import MatQ, MatZ, _hermite, companion_matrix, cyclotomic

__all__ = [
    "Character",
    "RationalIrrep",
    "char_kernel",
    "rational_irreps",
    "ramanujan_sum",
    "irrep_model",
]


@dataclass(frozen=True)
class Character:
    """The character g -> exp(2*pi*i * val(g) / N) given by exponents a_j."""

    group: FinAbGroup
    exps: tuple[int, ...]

    def __post_init__(self):
        mods = self.group.moduli
        if len(self.exps) != len(mods):
            raise PreconditionError(
                f"character has {len(self.exps)} exponents, group has rank {len(mods)}"
            )
        object.__setattr__(
            self, "exps", tuple(int(a) % n for a, n in zip(self.exps, mods))
        )

    @property
    def modulus(self) -> int:
        """N = lcm of the moduli; values live among the N-th roots of unity."""
        return self.group.exponent

    def value_exponent(self, g: GroupElement) -> int:
        """val(g) in Z/N, so the value of the character is zeta_N ** val(g)."""
        if g.group != self.group:
            raise PreconditionError("element of a different group")
        n_all = self.modulus
        return (
            sum(
                (n_all // n) * a * e
                for a, e, n in zip(self.exps, g.exps, self.group.moduli)
            )
            % n_all
        )

    def order(self) -> int:
        """The order of the character in the dual group."""
        return lcm(*(n // gcd(n, a) for a, n in zip(self.exps, self.group.moduli)))

    def root_exponent(self, g: GroupElement) -> int:
        """m(g) in Z/n with value = zeta_n ** m(g), for n the character order.

        The character takes values among the n-th roots of unity, so
        val(g) * n / N is an exact integer.
        """
        n = self.order()
        v = self.value_exponent(g) * n
        q, r = divmod(v, self.modulus)
        if r:
            raise InternalCheckError("character value is not an n-th root of unity")
        return q % n

    def kernel(self) -> Subgroup:
        return char_kernel(self)

    def galois_orbit(self) -> tuple["Character", ...]:
        """All characters with the same kernel: the powers of exponent coprime
        to the order, sorted lexicographically by exponent tuple."""
        n = self.order()
        seen = sorted(
            tuple((t * a) % m for a, m in zip(self.exps, self.group.moduli))
            for t in range(1, n + 1)
            if gcd(t, n) == 1
        )
        return tuple(Character(self.group, e) for e in seen)

    def __repr__(self):
        return f"Character{self.exps}"


def char_kernel(chi: Character) -> Subgroup:
    """The kernel of a character, computed exactly as a lattice kernel.

    g is in the kernel iff val(g) = sum_j c_j g_j = 0 mod N with
    c_j = (N/n_j) a_j.  The integer solutions (g, t) of
    sum c_j g_j + N t = 0 form a lattice whose projection to the g-part,
    together with the relation rows, is the kernel subgroup.  The left kernel
    of the column (c_1, ..., c_k, N)^T is read off the Hermite transform.
    """
    group = chi.group
    n_all = chi.modulus
    col = [
        [((n_all // n) * a) % n_all]
        for a, n in zip(chi.exps, group.moduli)
    ]
    col.append([n_all])
    hnf_rows, pivot_cols, u = _hermite(col, 1, with_transform=True)
    rank = len(pivot_cols)
    kernel_rows = [row[: group.rank] for row in u[rank:]]
    return Subgroup.from_lattice_rows(group, kernel_rows)


@dataclass(frozen=True)
class RationalIrrep:
    """An irreducible rational representation W of G.

    Canonically identified by its kernel K: the quotient G/K is cyclic of
    order n (the order of any character in the orbit), the degree is phi(n),
    and `representative` is the lexicographically smallest character in the
    Galois orbit.
    """

    kernel: Subgroup
    order: int
    degree: int
    representative: Character

    @property
    def group(self) -> FinAbGroup:
        return self.kernel.group

    @property
    def sort_key(self):
        return self.kernel.sort_key

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        return (
            f"RationalIrrep(order {self.order}, degree {self.degree}, "
            f"rep {self.representative.exps})"
        )


def rational_irreps(group: FinAbGroup) -> tuple[RationalIrrep, ...]:
    """All irreducible rational representations, in canonical order.

    Complex characters are grouped by kernel; each kernel class is one
    rational irreducible.  The canonical order is by kernel sort key
    (index ascending, then basis entries), so the trivial representation
    always comes first.
    """
    by_kernel: dict[Subgroup, list[Character]] = {}
    for exps in itertools.product(*(range(n) for n in group.moduli)):
        chi = Character(group, exps)
        by_kernel.setdefault(chi.kernel(), []).append(chi)
    irreps = []
    total_degree = 0
    for kernel, orbit in by_kernel.items():
        n = orbit[0].order()
        if kernel.index != n:
            raise InternalCheckError("kernel index differs from character order")
        if any(chi.order() != n for chi in orbit):
            raise InternalCheckError("characters with equal kernels have equal order")
        degree = totient(n)
        if len(orbit) != degree:
            raise InternalCheckError(
                f"Galois orbit size {len(orbit)} != phi({n}) = {degree}"
            )
        rep = min(orbit, key=lambda chi: chi.exps)
        irreps.append(RationalIrrep(kernel, n, degree, rep))
        total_degree += degree
    if total_degree != group.order:
        raise InternalCheckError("degrees of rational irreducibles do not sum to |G|")
    return tuple(sorted(irreps, key=lambda w: w.sort_key))


def ramanujan_sum(n: int, k: int) -> int:
    """c_n(k): the sum of zeta**k over primitive n-th roots of unity zeta.

    Computed by the closed form c_n(k) = mu(n/d) * phi(n) / phi(n/d) with
    d = gcd(n, k); always an integer.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    d = gcd(n, k % n)
    m = n // d
    mu = moebius(m)
    if mu == 0:
        return 0
    return mu * (totient(n) // totient(m))


def irrep_model(w: RationalIrrep) -> tuple[MatQ, ...]:
    """Integer matrices realizing W: generator e_j acts as C ** m_j.

    C is the companion matrix of the n-th cyclotomic polynomial and
    m_j = m(e_j) is the root exponent of the representative character at the
    j-th standard generator; this is the action on Q[x]/(Phi_n) where x is
    sent to the representative character value.
    """
    n = w.order
    group = w.group
    if n == 1:
        one = MatQ.identity(1)
        return tuple(one for _ in range(group.rank))
    c = companion_matrix(cyclotomic(n))
    rep = w.representative
    out = []
    for g in group.generator_elements():
        out.append(c ** rep.root_exponent(g))
    return tuple(out)
