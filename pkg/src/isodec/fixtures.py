"""Generators for test actions of known decomposition.

Four kinds:

* ``regular``            the regular representation of Z/n (cyclic shift);
                         every irreducible appears with multiplicity one.
* ``paper-example``      the motivating family: G = Z/p^3 x Z/q^2 for primes
                         p, q, acting with prescribed multiplicities on the
                         four representation classes with kernels determined
                         by the characters (p^2, q), (0, q), (p^2, 0) and the
                         trivial one.
* ``semisimple``         block-diagonal sums of the standard integer models
                         of the irreducibles, with chosen multiplicities in
                         canonical irreducible order.
* ``random-conjugated``  a semisimple fixture conjugated by a seeded random
                         unimodular integer matrix, so the block structure is
                         hidden but the answer is still known exactly.

Every fixture records its expected multiplicities as ground truth.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .abgroup import FinAbGroup
from .actionfile import ActionFile
from .action import validate_action
from .chars import Character, char_kernel, irrep_model, rational_irreps
from .errors import ValidationError
from .numtheory import is_prime
from .ratlinalg import MatQ, inverse

__all__ = ["FixtureSpec", "make_fixture", "FIXTURE_KINDS"]

FIXTURE_KINDS = ("regular", "paper-example", "semisimple", "random-conjugated")


@dataclass(frozen=True)
class FixtureSpec:
    """Parameters for one fixture; unused fields may stay None."""

    kind: str
    n: int | None = None
    p: int | None = None
    q: int | None = None
    moduli: tuple[int, ...] | None = None
    multiplicities: tuple[int, ...] | None = None
    seed: int = 0
    max_dim: int = 24


def _block_diag(blocks: list[MatQ]) -> MatQ:
    n = sum(b.rows for b in blocks)
    rows = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        fr = b.fraction_rows()
        for i in range(b.rows):
            for j in range(b.cols):
                rows[off + i][off + j] = fr[i][j]
        off += b.rows
    return MatQ(rows)


def _semisimple_action(group: FinAbGroup, multiplicities, name: str):
    """Block-diagonal action with the given multiplicity per irreducible
    (canonical order), plus its ground truth."""
    irreps = rational_irreps(group)
    mult = tuple(int(m) for m in multiplicities)
    if len(mult) != len(irreps):
        raise ValidationError(
            f"expected {len(irreps)} multiplicities (one per irreducible class "
            f"of {list(group.moduli)}), got {len(mult)}"
        )
    if any(m < 0 for m in mult):
        raise ValidationError("multiplicities must be non-negative")
    if not any(mult):
        raise ValidationError("at least one multiplicity must be positive")
    models = [irrep_model(w) for w in irreps]
    gen_mats = []
    for j in range(group.rank):
        blocks = []
        for w_i, m in enumerate(mult):
            blocks.extend([models[w_i][j]] * m)
        gen_mats.append(_block_diag(blocks))
    action = validate_action(group, gen_mats, name=name)
    ground_truth = tuple(
        (w.kernel.hnf_basis, m) for w, m in zip(irreps, mult)
    )
    return ActionFile(action, ground_truth)


def _regular(n: int) -> ActionFile:
    if n is None or n < 1:
        raise ValidationError("regular fixture needs an order n >= 1")
    group = FinAbGroup((n,))
    shift = MatQ(
        [[1 if (i - 1) % n == j else 0 for j in range(n)] for i in range(n)]
    )
    action = validate_action(group, [shift], name=f"regular({n})")
    ground_truth = tuple(
        (w.kernel.hnf_basis, 1) for w in rational_irreps(group)
    )
    return ActionFile(action, ground_truth)


def _paper_example(p: int, q: int, multiplicities) -> ActionFile:
    if p is None or q is None or not is_prime(p) or not is_prime(q):
        raise ValidationError("paper-example fixture needs two primes p, q")
    group = FinAbGroup((p ** 3, q ** 2))
    irreps = rational_irreps(group)
    index_of = {w.kernel: i for i, w in enumerate(irreps)}
    # The four distinguished classes, named by a character in each orbit.
    special = [
        Character(group, (p ** 2, q)),
        Character(group, (0, q)),
        Character(group, (p ** 2, 0)),
        Character(group, (0, 0)),
    ]
    mult = [0] * len(irreps)
    if multiplicities is None:
        multiplicities = (1, 1, 1, 1)
    ms = tuple(int(m) for m in multiplicities)
    if len(ms) != 4:
        raise ValidationError(
            "paper-example fixture takes 4 multiplicities "
            "(W, W1, W2, trivial)"
        )
    for chi, m in zip(special, ms):
        if m < 0:
            raise ValidationError("multiplicities must be non-negative")
        mult[index_of[char_kernel(chi)]] = m
    if not any(mult):
        raise ValidationError("at least one multiplicity must be positive")
    return _semisimple_action(
        group, mult, name=f"paper-example(p={p},q={q})"
    )


def _random_unimodular(dim: int, rng: random.Random) -> MatQ:
    """A product of about 2*dim integer shears: unimodular, exactly invertible."""
    rows = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    m = MatQ(rows)
    if dim == 1:
        return m
    for _ in range(2 * dim):
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        while j == i:
            j = rng.randrange(dim)
        c = rng.choice((-1, 1))
        shear = [[Fraction(int(a == b)) for b in range(dim)] for a in range(dim)]
        shear[i][j] = Fraction(c)
        m = m @ MatQ(shear)
    return m


def _random_multiplicities(group: FinAbGroup, rng: random.Random, max_dim: int):
    irreps = rational_irreps(group)
    degrees = [w.degree for w in irreps]
    mult = [0] * len(irreps)
    budget = max_dim
    # Keep adding random irreducibles while the dimension budget allows.
    candidates = [i for i, d in enumerate(degrees) if d <= budget]
    while candidates:
        i = rng.choice(candidates)
        mult[i] += 1
        budget -= degrees[i]
        candidates = [i for i, d in enumerate(degrees) if d <= budget]
    if not any(mult):
        mult[0] = 1
    return tuple(mult)


def make_fixture(spec: FixtureSpec) -> ActionFile:
    if spec.kind == "regular":
        return _regular(spec.n)
    if spec.kind == "paper-example":
        return _paper_example(spec.p, spec.q, spec.multiplicities)
    if spec.kind in ("semisimple", "random-conjugated"):
        if not spec.moduli:
            raise ValidationError(f"{spec.kind} fixture needs group moduli")
        group = FinAbGroup(spec.moduli)
        rng = random.Random(spec.seed)
        mult = spec.multiplicities
        if mult is None:
            if spec.kind == "semisimple":
                mult = tuple(1 for _ in rational_irreps(group))
            else:
                mult = _random_multiplicities(group, rng, spec.max_dim)
        name = f"{spec.kind}({','.join(map(str, group.moduli))}; seed={spec.seed})"
        af = _semisimple_action(group, mult, name=name)
        if spec.kind == "semisimple":
            return af
        dim = af.action.dim
        u = _random_unimodular(dim, rng)
        u_inv = inverse(u)
        mats = [u @ m @ u_inv for m in af.action.gen_matrices]
        action = validate_action(group, mats, name=name)
        return ActionFile(action, af.ground_truth)
    raise ValidationError(
        f"unknown fixture kind {spec.kind!r} (choose from {', '.join(FIXTURE_KINDS)})"
    )
