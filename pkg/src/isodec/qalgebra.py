"""The rational group algebra Q[G] of a finite abelian group.

Elements are dense coefficient vectors indexed by group-element index, stored
as integer numerators over one positive common denominator.  The module
provides the three idempotent constructions the decomposition rests on:

* ``averaging_idempotent(H)``     p_H = (1/|H|) sum of the elements of H,
* ``central_idempotent(W)``       e_W with coefficients c_n(m(g)) / |G|,
  where c_n is a Ramanujan sum and m(g) the root exponent of a character
  generating W,
* ``product_formula_idempotent(K)``  the product of (p_K - p_H) over the
  minimal overgroups H of K, which equals e_W for the irreducible W with
  kernel K.  The identity of the last two is a key internal cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from .abgroup import FinAbGroup, GroupElement, Subgroup
from .chars import RationalIrrep, ramanujan_sum
from .errors import PreconditionError
from .ratlinalg import fraction_from_jsonable, fraction_to_jsonable

__all__ = [
    "GroupAlgebraElem",
    "identity",
    "zero",
    "from_terms",
    "averaging_idempotent",
    "central_idempotent",
    "product_formula_idempotent",
]


@lru_cache(maxsize=8192)
def _translation_perm(moduli: tuple[int, ...], h_index: int) -> tuple[int, ...]:
    """perm[i] = index of (g_i + h), for translation by the element of index h."""
    group = FinAbGroup(moduli)
    h = group.element_of_index(h_index)
    out = []
    for exps in group.exponent_tuples():
        out.append(
            group.index_of(tuple((a + b) % n for a, b, n in zip(exps, h.exps, moduli)))
        )
    return tuple(out)


class GroupAlgebraElem:
    """An element of Q[G]: integer numerators over one common denominator."""

    __slots__ = ("group", "nums", "den")

    def __init__(self, group: FinAbGroup, nums, den: int = 1):
        nums = tuple(int(v) for v in nums)
        den = int(den)
        if len(nums) != group.order:
            raise PreconditionError(
                f"expected {group.order} coefficients, got {len(nums)}"
            )
        if den == 0:
            raise PreconditionError("zero denominator")
        if den < 0:
            nums = tuple(-v for v in nums)
            den = -den
        g = gcd(den, *nums) if any(nums) else den
        if g > 1:
            nums = tuple(v // g for v in nums)
            den //= g
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("GroupAlgebraElem is immutable")

    def coeff(self, g: GroupElement) -> Fraction:
        if g.group != self.group:
            raise PreconditionError("element of a different group")
        return Fraction(self.nums[g.index()], self.den)

    def terms(self):
        """Nonzero (element, coefficient) pairs in element-index order."""
        for i, v in enumerate(self.nums):
            if v:
                yield self.group.element_of_index(i), Fraction(v, self.den)

    def _check(self, other: "GroupAlgebraElem"):
        if self.group != other.group:
            raise PreconditionError("elements of different group algebras")

    def __add__(self, other: "GroupAlgebraElem") -> "GroupAlgebraElem":
        self._check(other)
        a, b = self.den, other.den
        return GroupAlgebraElem(
            self.group,
            [x * b + y * a for x, y in zip(self.nums, other.nums)],
            a * b,
        )

    def __sub__(self, other: "GroupAlgebraElem") -> "GroupAlgebraElem":
        self._check(other)
        a, b = self.den, other.den
        return GroupAlgebraElem(
            self.group,
            [x * b - y * a for x, y in zip(self.nums, other.nums)],
            a * b,
        )

    def __neg__(self) -> "GroupAlgebraElem":
        return GroupAlgebraElem(self.group, [-v for v in self.nums], self.den)

    def scale(self, q) -> "GroupAlgebraElem":
        q = Fraction(q)
        return GroupAlgebraElem(
            self.group,
            [v * q.numerator for v in self.nums],
            self.den * q.denominator,
        )

    def __mul__(self, other: "GroupAlgebraElem") -> "GroupAlgebraElem":
        """Convolution product: (x*y)(g) = sum over h of x(h) y(g-h)."""
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        self._check(other)
        moduli = self.group.moduli
        out = [0] * len(self.nums)
        for h_index, xv in enumerate(self.nums):
            if not xv:
                continue
            perm = _translation_perm(moduli, h_index)
            for i, yv in enumerate(other.nums):
                if yv:
                    out[perm[i]] += xv * yv
        return GroupAlgebraElem(self.group, out, self.den * other.den)

    def is_idempotent(self) -> bool:
        return self * self == self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElem)
            and self.group == other.group
            and self.nums == other.nums
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.group, self.nums, self.den))

    def to_jsonable(self) -> dict:
        return {
            "group": list(self.group.moduli),
            "coeffs": [
                [fraction_to_jsonable(c), list(g.exps)] for g, c in self.terms()
            ],
        }

    @classmethod
    def from_jsonable(cls, obj) -> "GroupAlgebraElem":
        group = FinAbGroup(tuple(obj["group"]))
        return from_terms(
            group,
            {
                group.element(exps): fraction_from_jsonable(c)
                for c, exps in obj["coeffs"]
            },
        )

    def __repr__(self):
        parts = [f"{c}*{g.exps}" for g, c in self.terms()]
        return "GroupAlgebraElem(" + (" + ".join(parts) if parts else "0") + ")"


def zero(group: FinAbGroup) -> GroupAlgebraElem:
    return GroupAlgebraElem(group, [0] * group.order)


def identity(group: FinAbGroup) -> GroupAlgebraElem:
    nums = [0] * group.order
    nums[group.identity().index()] = 1
    return GroupAlgebraElem(group, nums)


def from_terms(group: FinAbGroup, coeffs: dict) -> GroupAlgebraElem:
    """Build an element from {GroupElement: coefficient}."""
    fracs = {g: Fraction(c) for g, c in coeffs.items()}
    den = 1
    for c in fracs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    nums = [0] * group.order
    for g, c in fracs.items():
        if g.group != group:
            raise PreconditionError("element of a different group")
        nums[g.index()] += c.numerator * (den // c.denominator)
    return GroupAlgebraElem(group, nums, den)


def averaging_idempotent(h: Subgroup) -> GroupAlgebraElem:
    """p_H = (1/|H|) sum of the elements of H."""
    group = h.group
    nums = [0] * group.order
    for i, exps in enumerate(group.exponent_tuples()):
        if h.contains_exps(exps):
            nums[i] = 1
    return GroupAlgebraElem(group, nums, h.order)


def central_idempotent(w: RationalIrrep) -> GroupAlgebraElem:
    """e_W: coefficient of g is c_n(m(g)) / |G|, summing the character orbit.

    Here n is the order of W, m(g) the root exponent of the representative
    character, and c_n a Ramanujan sum — the exact value of the orbit-summed
    character at g.
    """
    group = w.group
    n = w.order
    rep = w.representative
    c_table = [ramanujan_sum(n, k) for k in range(n)]
    nums = [c_table[rep.root_exponent(g)] for g in group.elements()]
    return GroupAlgebraElem(group, nums, group.order)


def product_formula_idempotent(k_sub: Subgroup) -> GroupAlgebraElem:
    """The product of (p_K - p_H) over the minimal overgroups H of K.

    For K the kernel of an irreducible rational representation W this product
    equals the central idempotent e_W; the empty product (K = G) is p_G
    itself, matching the trivial representation.
    """
    from .abgroup import minimal_overgroups

    over = minimal_overgroups(k_sub.group, k_sub)
    p_k = averaging_idempotent(k_sub)
    if not over:
        return p_k
    return reduce(
        lambda acc, f: acc * f,
        (p_k - averaging_idempotent(h) for h in over),
    )
