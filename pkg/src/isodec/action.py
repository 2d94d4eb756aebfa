"""Group actions on rational vector spaces and isotypical decomposition.

A ``GAction`` is a representation rho: G -> GL_m(Q) given by one matrix per
standard generator of G.  The abelian variety with G-action is modeled up to
isogeny by this rational representation; abelian subvarieties correspond to
G-invariant rational subspaces.

The three geometric constructions:

* ``fixed_subvariety(A, H)``           the image of p_H (the fixed part A^H),
* ``complementary_subvariety(A, K, H)`` the image of p_K - p_H, i.e. the
  complement of A^H inside A^K (defined for K contained in H),
* ``isotypical_component(A, W)``       the component associated to the
  irreducible rational representation W with kernel K, computed two
  independent ways and cross-checked:

    (1) as the intersection of the complements of A^H in A^K over all
        minimal overgroups H of K (the defining formula), and
    (2) as the image of the central idempotent e_W.

``isotypical_decomposition`` assembles all components, checks that dimensions
are additive and exhaust the space, and derives multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .abgroup import (
    FinAbGroup,
    GroupElement,
    Subgroup,
    minimal_overgroups,
    subgroup_from_generators,
)
from .chars import RationalIrrep, rational_irreps
from .errors import InternalCheckError, PreconditionError, ValidationError
from .qalgebra import GroupAlgebraElem, central_idempotent
from .ratlinalg import MatQ, SubspaceQ, image_space, intersect_spaces, sum_spaces

__all__ = [
    "GAction",
    "validate_action",
    "action_matrix",
    "algebra_matrix",
    "fixed_subvariety",
    "complementary_subvariety",
    "isotypical_component",
    "isotypical_decomposition",
    "IsotypicalComponent",
    "IsotypicalReport",
]

# Cache the full g -> rho(g) table only while |G| * dim^2 stays this small.
_TABLE_BUDGET = 4_000_000


@dataclass(frozen=True)
class GAction:
    """A rational representation of a finite abelian group.

    Build with ``validate_action``; the constructor assumes the matrices
    already satisfy the generator relations and commute.
    """

    group: FinAbGroup
    gen_matrices: tuple[MatQ, ...]
    dim: int
    faithful: bool
    action_kernel: Subgroup
    warnings: tuple[str, ...] = ()
    name: str | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"GAction({self.group.moduli} on Q^{self.dim}{label})"


def validate_action(group: FinAbGroup, matrices, name: str | None = None) -> GAction:
    """Check generator matrices and assemble a GAction.

    Raises ValidationError if the count is wrong, a matrix is not square of
    the common size, a generator relation M_j ** n_j != I fails, or two
    generator matrices do not commute.  A non-faithful action is legal but
    recorded with a warning (components for representations that the kernel
    does not fix are forced to zero).
    """
    mats = tuple(matrices)
    k = group.rank
    if len(mats) != k:
        raise ValidationError(f"expected {k} generator matrices, got {len(mats)}")
    if any(not isinstance(m, MatQ) for m in mats):
        raise ValidationError("generator matrices must be rational matrices")
    dim = mats[0].rows
    for j, m in enumerate(mats):
        if m.rows != m.cols:
            raise ValidationError(f"generator {j + 1}: matrix is not square")
        if m.rows != dim:
            raise ValidationError(
                f"generator {j + 1}: size {m.rows} differs from generator 1 size {dim}"
            )
    for j, (m, n) in enumerate(zip(mats, group.moduli)):
        if not (m ** n).is_identity():
            raise ValidationError(f"generator {j + 1}: M^{n} != I")
    for i in range(k):
        for j in range(i + 1, k):
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                raise ValidationError(f"generators {i + 1} and {j + 1} do not commute")

    cache: dict = {}
    kernel_gens = []
    if group.order * dim * dim <= _TABLE_BUDGET:
        table = list(_matrix_iter(group, mats))
        cache["table"] = tuple(table)
        kernel_gens = [
            group.element_of_index(i) for i, m in enumerate(table) if m.is_identity()
        ]
    else:
        for g, m in zip(group.elements(), _matrix_iter(group, mats)):
            if m.is_identity():
                kernel_gens.append(g)
    action_kernel = subgroup_from_generators(group, kernel_gens)
    faithful = action_kernel.order == 1
    warnings = ()
    if not faithful:
        warnings = (
            "action is not faithful: a subgroup of order "
            f"{action_kernel.order} acts trivially",
        )
    return GAction(group, mats, dim, faithful, action_kernel, warnings, name, cache)


def _matrix_iter(group: FinAbGroup, mats: tuple[MatQ, ...]):
    """rho(g) for every g in index order, using O(|G|) multiplications.

    Recursively: for each exponent of the leading generator, multiply the
    current prefix into every matrix produced for the remaining generators.
    """
    dim = mats[0].rows

    def rec(j: int, prefix: MatQ):
        if j == len(mats):
            yield prefix
            return
        cur = prefix
        for e in range(group.moduli[j]):
            yield from rec(j + 1, cur)
            if e + 1 < group.moduli[j]:
                cur = cur @ mats[j]

    yield from rec(0, MatQ.identity(dim))


def _table(action: GAction):
    """The cached g -> rho(g) table, or None when above the size budget."""
    if "table" in action._cache:
        return action._cache["table"]
    if action.group.order * action.dim * action.dim <= _TABLE_BUDGET:
        action._cache["table"] = tuple(_matrix_iter(action.group, action.gen_matrices))
        return action._cache["table"]
    return None


def action_matrix(action: GAction, g: GroupElement) -> MatQ:
    """rho(g), from the cached table when available."""
    if g.group != action.group:
        raise PreconditionError("element of a different group")
    table = _table(action)
    if table is not None:
        return table[g.index()]
    m = MatQ.identity(action.dim)
    for e, gen in zip(g.exps, action.gen_matrices):
        if e:
            m = m @ (gen ** e)
    return m


def algebra_matrix(action: GAction, x: GroupAlgebraElem) -> MatQ:
    """The matrix of a group-algebra element: sum of x(g) * rho(g).

    Accumulates integer numerators over a running common denominator, so the
    result is exact and cheap even for elements with many terms.
    """
    if x.group != action.group:
        raise PreconditionError("group algebra element of a different group")
    dim = action.dim
    table = _table(action)
    acc = [[0] * dim for _ in range(dim)]
    acc_den = 1
    for i, num in enumerate(x.nums):
        if not num:
            continue
        m = table[i] if table is not None else action_matrix(
            action, action.group.element_of_index(i)
        )
        new_den = lcm(acc_den, m.den)
        s = new_den // acc_den
        t = num * (new_den // m.den)
        if s == 1:
            for r, mr in zip(acc, m.num):
                for j, v in enumerate(mr):
                    if v:
                        r[j] += t * v
        else:
            for r, mr in zip(acc, m.num):
                for j in range(dim):
                    r[j] = r[j] * s + t * mr[j]
        acc_den = new_den
    return MatQ._raw(acc, acc_den * x.den, dim)


def _avg_matrix(action: GAction, h: Subgroup) -> MatQ:
    """Matrix of the averaging idempotent p_H, cached per subgroup."""
    cache = action._cache.setdefault("avg", {})
    m = cache.get(h)
    if m is None:
        from .qalgebra import averaging_idempotent

        m = algebra_matrix(action, averaging_idempotent(h))
        cache[h] = m
    return m


def fixed_subvariety(action: GAction, h: Subgroup) -> SubspaceQ:
    """A^H: the image of the averaging idempotent p_H."""
    if h.group != action.group:
        raise PreconditionError("subgroup of a different group")
    return image_space(_avg_matrix(action, h))


def complementary_subvariety(action: GAction, k_sub: Subgroup, h: Subgroup) -> SubspaceQ:
    """P(A^K / A^H): the complement of A^H inside A^K, for K contained in H.

    This is the image of the idempotent p_K - p_H, the unique G-invariant
    complement up to isogeny.
    """
    if k_sub.group != action.group or h.group != action.group:
        raise PreconditionError("subgroup of a different group")
    if not k_sub.is_contained_in(h):
        raise PreconditionError(
            "the complement P(A^K/A^H) requires K to be contained in H"
        )
    return image_space(_avg_matrix(action, k_sub) - _avg_matrix(action, h))


def isotypical_component(action: GAction, w: RationalIrrep) -> SubspaceQ:
    """The isotypical component of W, computed two ways and cross-checked.

    Route one is the defining intersection over minimal overgroups of the
    kernel (the fixed part itself when the kernel is all of G); route two is
    the image of the central idempotent e_W.  Disagreement raises
    InternalCheckError — it would mean the algebra identity behind the
    construction failed.
    """
    if w.group != action.group:
        raise PreconditionError("representation of a different group")
    k_sub = w.kernel
    over = minimal_overgroups(action.group, k_sub)
    if not over:
        by_intersection = fixed_subvariety(action, k_sub)
    else:
        parts = [complementary_subvariety(action, k_sub, h) for h in over]
        by_intersection = parts[0]
        for p in parts[1:]:
            by_intersection = intersect_spaces(by_intersection, p)
    by_idempotent = image_space(algebra_matrix(action, central_idempotent(w)))
    if by_intersection != by_idempotent:
        raise InternalCheckError(
            "isotypical component mismatch: the intersection of complements "
            "differs from the image of the central idempotent"
        )
    return by_intersection


@dataclass(frozen=True)
class IsotypicalComponent:
    """One isotypical piece: the irreducible, its subspace, its multiplicity."""

    irrep: RationalIrrep
    subspace: SubspaceQ
    multiplicity: int

    @property
    def dim(self) -> int:
        return self.subspace.dim


@dataclass(frozen=True)
class IsotypicalReport:
    """The full isotypical decomposition of an action."""

    action: GAction
    components: tuple[IsotypicalComponent, ...]
    warnings: tuple[str, ...]

    @property
    def nonzero_components(self) -> tuple[IsotypicalComponent, ...]:
        return tuple(c for c in self.components if c.multiplicity)

    def to_jsonable(self) -> dict:
        return {
            "group": list(self.action.group.moduli),
            "name": self.action.name,
            "dim": self.action.dim,
            "faithful": self.action.faithful,
            "components": [
                {
                    "kernel_hnf": c.irrep.kernel.hnf_basis.to_jsonable(),
                    "order": c.irrep.order,
                    "degree": c.irrep.degree,
                    "representative": list(c.irrep.representative.exps),
                    "multiplicity": c.multiplicity,
                    "dim": c.dim,
                    "basis": c.subspace.basis.to_jsonable(),
                }
                for c in self.components
            ],
            "warnings": list(self.warnings),
        }


def isotypical_decomposition(action: GAction) -> IsotypicalReport:
    """Decompose the action space into isotypical components.

    Components appear in the canonical order of the irreducibles (kernel
    index ascending).  Internal checks: each component dimension must be a
    multiple of the irreducible's degree, the dimensions must add up without
    overlap, and the components must span the whole space.
    """
    irreps = rational_irreps(action.group)
    components = []
    running = SubspaceQ.zero(action.dim)
    for w in irreps:
        s = isotypical_component(action, w)
        if s.dim % w.degree:
            raise InternalCheckError(
                f"component dimension {s.dim} is not a multiple of degree {w.degree}"
            )
        mult = s.dim // w.degree
        new_running = sum_spaces(running, s)
        if new_running.dim != running.dim + s.dim:
            raise InternalCheckError("isotypical components overlap")
        running = new_running
        components.append(IsotypicalComponent(w, s, mult))
    if running.dim != action.dim:
        raise InternalCheckError("isotypical components do not span the space")
    warnings = list(action.warnings)
    warnings.extend(_plausibility_warnings(action, components))
    return IsotypicalReport(action, tuple(components), tuple(warnings))


def _plausibility_warnings(action: GAction, components) -> list[str]:
    """Heuristic signals that an action is unlikely to come from a genuine
    abelian variety (where the space is H_1 of a complex torus, so even-
    dimensional, and components with real representations carry a polarized
    complex structure of even multiplicity)."""
    out = []
    if action.dim % 2:
        out.append(
            f"total dimension {action.dim} is odd; rational homology of an "
            "abelian variety has even dimension"
        )
    for c in components:
        if c.irrep.order in (1, 2) and c.multiplicity % 2:
            out.append(
                f"component of order {c.irrep.order} has odd multiplicity "
                f"{c.multiplicity}; a totally real isotypical piece of an "
                "abelian variety has even multiplicity"
            )
    return out
