"""Command-line interface.

Commands::

    decompose <file>      isotypical decomposition of an action file
    roan <file>           the order-filtration of a cyclic action
    verify <file>         cross-check filtration vs. isotypical components
    characters --group …  the rational irreducible classes of a group
    subgroups --group …   all subgroups (or --kernels: cyclic-quotient ones)
    fixture <kind> …      generate a test action file of known decomposition

Common flags: ``--json`` for machine output (default is aligned text),
``--max-order`` to cap the group order (default 10000), and
``--check-plausibility`` to print warnings about actions that cannot arise
from an abelian variety.  Output is deterministic: identical inputs and
flags give identical bytes.

Exit codes: 0 success; 2 invalid input (parse or validation failure);
3 precondition failure (valid input outside the supported domain, e.g.
``roan`` on a non-cyclic group); 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abgroup import FinAbGroup, Subgroup, all_subgroups, index_and_quotient
from .action import isotypical_decomposition
from .actionfile import ActionFile, load_action_file, serialize_action_file
from .chars import rational_irreps
from .errors import InternalCheckError, PreconditionError, ValidationError
from .fixtures import FIXTURE_KINDS, FixtureSpec, make_fixture
from .roan import verify_roan_matching

__all__ = ["main"]

DEFAULT_MAX_ORDER = 10_000


def _group_label(moduli) -> str:
    return " x ".join(f"Z/{n}" for n in moduli)


def _fmt_intmat(rows) -> str:
    return json.dumps([list(r) for r in rows])


def _render_table(headers, rows) -> list[str]:
    cells = [list(headers)] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(headers))]
    out = []
    for r in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return out


def _print_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _parse_group_arg(text: str, max_order: int) -> FinAbGroup:
    parts = [p.strip() for p in text.split(",")]
    try:
        moduli = tuple(int(p) for p in parts if p != "")
    except ValueError:
        raise ValidationError(
            f"cannot parse group {text!r}: expected comma-separated integers"
        ) from None
    if not moduli:
        raise ValidationError("group must have at least one modulus")
    if any(n < 1 for n in moduli):
        raise ValidationError("group moduli must be >= 1")
    group = FinAbGroup(moduli)
    _check_order(group, max_order)
    return group


def _check_order(group: FinAbGroup, max_order: int) -> None:
    if group.order > max_order:
        raise ValidationError(
            f"group order {group.order} exceeds --max-order {max_order}"
        )


def _load_file(path: str, max_order: int) -> ActionFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e.strerror or e}") from None
    af = load_action_file(text)
    _check_order(af.action.group, max_order)
    return af


# ---------------------------------------------------------------- decompose


def _cmd_decompose(args) -> int:
    af = _load_file(args.file, args.max_order)
    report = isotypical_decomposition(af.action)
    if args.json:
        _print_json(report.to_jsonable())
        return 0
    action = af.action
    lines = [
        f"group {_group_label(action.group.moduli)} (order {action.group.order})",
        f"action {action.name or '(unnamed)'}  dim {action.dim}  "
        f"faithful {'yes' if action.faithful else 'no'}",
        "",
    ]
    rows = []
    for c in report.components:
        rows.append(
            (
                c.irrep.order,
                c.irrep.degree,
                c.multiplicity,
                c.dim,
                _fmt_intmat(c.irrep.kernel.hnf_basis.entries),
            )
        )
    lines += _render_table(
        ("order", "degree", "mult", "dim", "kernel"), rows
    )
    nonzero = len(report.nonzero_components)
    lines.append("")
    lines.append(
        f"{len(report.components)} isotypical classes, {nonzero} nonzero; "
        f"dimensions sum to {sum(c.dim for c in report.components)}"
    )
    if args.check_plausibility:
        if report.warnings:
            lines.append("")
            for w in report.warnings:
                lines.append(f"warning: {w}")
        else:
            lines.append("")
            lines.append("plausibility: no warnings")
    print("\n".join(lines))
    return 0


# --------------------------------------------------------------------- roan


def _cmd_roan(args) -> int:
    af = _load_file(args.file, args.max_order)
    group = af.action.group
    if not group.is_cyclic():
        raise PreconditionError("Roan's decomposition requires a cyclic group")
    from .action import action_matrix
    from .roan import roan_decomposition

    info = index_and_quotient(group, Subgroup.trivial(group))
    alpha = action_matrix(af.action, info.generator)
    report = roan_decomposition(alpha, group.order)
    if args.json:
        _print_json(report.to_jsonable())
        return 0
    lines = [
        f"group {_group_label(group.moduli)} (order {group.order})",
        f"action {af.action.name or '(unnamed)'}  dim {report.dim}",
        f"eigenvalue orders: {', '.join(map(str, report.orders))}",
        f"filtration dims: {' > '.join(str(y.dim) for y in report.filtration)}",
        "",
    ]
    lines += _render_table(
        ("order", "dim"), [(d, s.dim) for d, s in report.components]
    )
    print("\n".join(lines))
    return 0


# ------------------------------------------------------------------- verify


def _cmd_verify(args) -> int:
    af = _load_file(args.file, args.max_order)
    group = af.action.group
    if not group.is_cyclic():
        raise PreconditionError(
            "verify requires a cyclic group (the filtration matching is "
            "defined for cyclic actions)"
        )
    match = verify_roan_matching(af.action)
    gt_status = _check_ground_truth(af)
    if args.json:
        obj = match.to_jsonable()
        obj["ground_truth"] = gt_status
        _print_json(obj)
        return 0
    lines = [
        f"group {_group_label(group.moduli)} (order {group.order})",
        f"action {af.action.name or '(unnamed)'}  dim {af.action.dim}",
        "",
    ]
    rows = [
        (d, dim, _fmt_intmat(k.hnf_basis.entries)) for d, k, dim in match.matches
    ]
    lines += _render_table(("order", "dim", "kernel"), rows)
    lines.append("")
    lines.append(
        f"filtration pieces matched: {len(match.matches)}; "
        f"zero components: {len(match.zero_components)}"
    )
    lines.append(f"ground truth: {gt_status}")
    lines.append("verify: OK")
    print("\n".join(lines))
    return 0


def _check_ground_truth(af: ActionFile) -> str:
    """Compare the computed multiplicities against the file's expectations."""
    if af.ground_truth is None:
        return "absent"
    report = isotypical_decomposition(af.action)
    computed = {
        c.irrep.kernel.hnf_basis.entries: c.multiplicity for c in report.components
    }
    expected = dict.fromkeys(computed, 0)
    for k, m in af.ground_truth:
        if k.entries not in expected:
            raise ValidationError(
                f"ground truth names an unknown kernel {_fmt_intmat(k.entries)}"
            )
        expected[k.entries] += m
    bad = {k: (expected[k], computed[k]) for k in computed if expected[k] != computed[k]}
    if bad:
        details = "; ".join(
            f"kernel {_fmt_intmat(k)}: expected {e}, computed {c}"
            for k, (e, c) in sorted(bad.items())
        )
        raise InternalCheckError(f"decomposition differs from ground truth: {details}")
    return "ok"


# --------------------------------------------------------------- characters


def _cmd_characters(args) -> int:
    group = _parse_group_arg(args.group, args.max_order)
    irreps = rational_irreps(group)
    if args.json:
        _print_json(
            {
                "group": list(group.moduli),
                "irreps": [
                    {
                        "kernel_hnf": w.kernel.hnf_basis.to_jsonable(),
                        "order": w.order,
                        "degree": w.degree,
                        "representative": list(w.representative.exps),
                    }
                    for w in irreps
                ],
            }
        )
        return 0
    lines = [
        f"group {_group_label(group.moduli)} (order {group.order}): "
        f"{len(irreps)} rational irreducible classes",
        "",
    ]
    rows = [
        (
            w.order,
            w.degree,
            "(" + ",".join(map(str, w.representative.exps)) + ")",
            _fmt_intmat(w.kernel.hnf_basis.entries),
        )
        for w in irreps
    ]
    lines += _render_table(("order", "degree", "representative", "kernel"), rows)
    print("\n".join(lines))
    return 0


# ---------------------------------------------------------------- subgroups


def _cmd_subgroups(args) -> int:
    group = _parse_group_arg(args.group, args.max_order)
    subs = all_subgroups(group)
    infos = [(s, index_and_quotient(group, s)) for s in subs]
    if args.kernels:
        infos = [(s, q) for s, q in infos if q.is_cyclic]
    if args.json:
        _print_json(
            {
                "group": list(group.moduli),
                "kernels_only": bool(args.kernels),
                "subgroups": [
                    {
                        "hnf": s.hnf_basis.to_jsonable(),
                        "index": s.index,
                        "order": s.order,
                        "quotient_invariants": [d for d in q.invariants if d > 1],
                        "cyclic_quotient": q.is_cyclic,
                    }
                    for s, q in infos
                ],
            }
        )
        return 0
    what = "cyclic-quotient subgroups (kernels)" if args.kernels else "subgroups"
    lines = [
        f"group {_group_label(group.moduli)} (order {group.order}): "
        f"{len(infos)} {what}",
        "",
    ]
    rows = []
    for s, q in infos:
        inv = [d for d in q.invariants if d > 1]
        rows.append(
            (
                s.index,
                s.order,
                "trivial" if not inv else " x ".join(f"Z/{d}" for d in inv),
                "yes" if q.is_cyclic else "no",
                _fmt_intmat(s.hnf_basis.entries),
            )
        )
    lines += _render_table(("index", "order", "quotient", "cyclic", "hnf"), rows)
    print("\n".join(lines))
    return 0


# ------------------------------------------------------------------ fixture


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise ValidationError(
            f"cannot parse {what} {text!r}: expected comma-separated integers"
        ) from None


def _cmd_fixture(args) -> int:
    kind = args.kind
    if kind not in FIXTURE_KINDS:
        raise ValidationError(
            f"unknown fixture kind {kind!r} (choose from {', '.join(FIXTURE_KINDS)})"
        )
    params = list(args.params)
    mult = (
        _parse_int_list(args.multiplicities, "--multiplicities")
        if args.multiplicities
        else None
    )
    if kind == "regular":
        if len(params) != 1:
            raise ValidationError("regular fixture takes one parameter: n")
        spec = FixtureSpec("regular", n=params[0])
    elif kind == "paper-example":
        if len(params) != 2:
            raise ValidationError("paper-example fixture takes two parameters: p q")
        spec = FixtureSpec(
            "paper-example", p=params[0], q=params[1], multiplicities=mult
        )
    else:
        if params:
            raise ValidationError(
                f"{kind} fixture takes no positional parameters; use --group"
            )
        if not args.group:
            raise ValidationError(f"{kind} fixture requires --group")
        moduli = _parse_int_list(args.group, "--group")
        spec = FixtureSpec(
            kind,
            moduli=moduli,
            multiplicities=mult,
            seed=args.seed,
            max_dim=args.max_dim,
        )
    af = make_fixture(spec)
    _check_order(af.action.group, args.max_order)
    text = serialize_action_file(af)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ------------------------------------------------------------------- parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--json", action="store_true", help="machine-readable JSON output"
    )
    p.add_argument(
        "--max-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        metavar="N",
        help=f"refuse groups of order above N (default {DEFAULT_MAX_ORDER})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isodec",
        description=(
            "Exact isotypical decomposition of finite abelian group actions "
            "on rational vector spaces."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "decompose", help="isotypical decomposition of an action file"
    )
    p.add_argument("file", help="action file (JSON)")
    p.add_argument(
        "--check-plausibility",
        action="store_true",
        help="print warnings for actions no abelian variety can realize",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("roan", help="order-filtration of a cyclic action")
    p.add_argument("file", help="action file (JSON)")
    _add_common(p)
    p.set_defaults(func=_cmd_roan)

    p = sub.add_parser(
        "verify",
        help="cross-check the filtration against the isotypical components",
    )
    p.add_argument("file", help="action file (JSON)")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "characters", help="rational irreducible classes of a group"
    )
    p.add_argument(
        "--group", required=True, metavar="n1,n2,…", help="moduli, e.g. 8,9"
    )
    _add_common(p)
    p.set_defaults(func=_cmd_characters)

    p = sub.add_parser("subgroups", help="subgroup lattice of a group")
    p.add_argument(
        "--group", required=True, metavar="n1,n2,…", help="moduli, e.g. 8,9"
    )
    p.add_argument(
        "--kernels",
        action="store_true",
        help="only subgroups with cyclic quotient (irreducible kernels)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_subgroups)

    p = sub.add_parser(
        "fixture", help="generate an action file of known decomposition"
    )
    p.add_argument("kind", help=f"one of: {', '.join(FIXTURE_KINDS)}")
    p.add_argument(
        "params",
        nargs="*",
        type=int,
        help="regular: n; paper-example: p q",
    )
    p.add_argument("--group", metavar="n1,n2,…", help="moduli for (semi)simple kinds")
    p.add_argument(
        "--multiplicities",
        metavar="m1,m2,…",
        help="one per irreducible class (canonical order)",
    )
    p.add_argument("--seed", type=int, default=0, help="randomness seed (default 0)")
    p.add_argument(
        "--max-dim",
        type=int,
        default=24,
        help="dimension budget for random multiplicities (default 24)",
    )
    p.add_argument("-o", "--output", metavar="FILE", help="write here instead of stdout")
    _add_common(p)
    p.set_defaults(func=_cmd_fixture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InternalCheckError as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
