"""Command-line front end.

Subcommands: verify, enumerate, decompose, lift, pi, orders.  Output is
UTF-8; export-style commands print JSON by default (--text for aligned
text), verify prints a text table by default (--json for machine parsing).
Exit codes: 0 success/pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from qe7 import e7_delpezzo as e7
from qe7 import heisenberg as hb, verify
from qe7.f2sym import (
    IsotropicSubspace,
    QuadLabel,
    SympVector,
    all_vectors,
    enumerate_lagrangians,
    enumerate_quad_forms,
    generate_group,
    orthogonal_group_order,
    standard_lagrangian,
    transvection_matrix,
)


def _print_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=False))


def _emit(data, rows, header, as_text: bool) -> None:
    """Print either the JSON document or an aligned text table."""
    if not as_text:
        _print_json(data)
        return
    widths = [
        max(len(str(h)), max((len(str(r[i])) for r in rows), default=0))
        for i, h in enumerate(header)
    ]
    print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip())
    for r in rows:
        print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())


def _cmd_verify(args) -> int:
    report = verify.run_verify(args.suite)
    if args.json:
        _print_json(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def _enumerate_roots(args) -> int:
    roots = e7.enumerate_roots()
    if args.count_only:
        _print_json({"kind": "count", "what": "roots", "count": len(roots)})
        return 0
    entries = []
    for r in roots:
        coords = e7.root_in_simple_coords(r)
        entries.append(
            {
                "name": r.name,
                "vector": list(r.vector().coeffs),
                "simple_coords": list(coords.coords),
                "pi": str(e7.pi_map(coords)),
            }
        )
    data = {"kind": "enumeration", "what": "roots", "count": len(entries), "entries": entries}
    rows = [
        (e["name"], e["vector"], e["simple_coords"], e["pi"]) for e in entries
    ]
    _emit(data, rows, ("name", "vector", "simple_coords", "pi"), args.text)
    return 0


def _enumerate_weights(args) -> int:
    classes = e7.all_weight_classes()
    if args.count_only:
        _print_json({"kind": "count", "what": "weights", "count": len(classes)})
        return 0
    entries = [
        {
            "name": w.name,
            "vector": list(w.vector().coeffs),
            "odd_form": str(e7.odd_form_of_weight(w if w.sign == 1 else w.negated())),
        }
        for w in classes
    ]
    data = {
        "kind": "enumeration",
        "what": "weights",
        "count": len(entries),
        "entries": entries,
    }
    rows = [(e["name"], e["vector"], e["odd_form"]) for e in entries]
    _emit(data, rows, ("name", "vector", "odd_form"), args.text)
    return 0


def _enumerate_lagrangians(args) -> int:
    subs = enumerate_lagrangians(args.k)
    if args.count_only:
        _print_json({"kind": "count", "what": "lagrangians", "count": len(subs)})
        return 0
    entries = [
        {"basis": str(s), "points": [str(p) for p in s.points]} for s in subs
    ]
    data = {
        "kind": "enumeration",
        "what": "lagrangians",
        "count": len(entries),
        "entries": entries,
    }
    rows = [(e["basis"], " ".join(e["points"])) for e in entries]
    _emit(data, rows, ("basis", "points"), args.text)
    return 0


def _enumerate_quadforms(args) -> int:
    pairs = enumerate_quad_forms(args.k, 0) + enumerate_quad_forms(args.k, 1)
    if args.count_only:
        _print_json({"kind": "count", "what": "quadforms", "count": len(pairs)})
        return 0
    entries = [
        {
            "label": str(q),
            "parity": "even" if q.is_even else "odd",
            "zeros": z,
        }
        for q, z in pairs
    ]
    data = {
        "kind": "enumeration",
        "what": "quadforms",
        "count": len(entries),
        "entries": entries,
    }
    rows = [(e["label"], e["parity"], e["zeros"]) for e in entries]
    _emit(data, rows, ("label", "parity", "zeros"), args.text)
    return 0


def _cmd_enumerate(args) -> int:
    return {
        "roots": _enumerate_roots,
        "weights": _enumerate_weights,
        "lagrangians": _enumerate_lagrangians,
        "quadforms": _enumerate_quadforms,
    }[args.what](args)


def _cmd_decompose(args) -> int:
    if args.lagrangian:
        try:
            sub = IsotropicSubspace.from_string(3, args.lagrangian)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if not sub.is_lagrangian:
            print("error: basis does not span a Lagrangian subspace", file=sys.stderr)
            return 2
    else:
        sub = standard_lagrangian(3)
    dec = e7.restriction_decomposition(sub)
    data = {"kind": "decomposition", **dec.to_json()}
    rows = [
        (
            ln.get("a", "-"),
            " ".join(ln["points"]),
            " ".join(ln["roots"]),
            " ".join(ln["weights"]),
        )
        for ln in data["lines"]
    ]
    _emit(data, rows, ("a", "points", "roots", "weights"), args.text)
    return 0


def _cmd_lift(args) -> int:
    try:
        v = SympVector.from_string(args.v)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.k is not None and args.k != v.k:
        print("error: --k disagrees with the vector string", file=sys.stderr)
        return 2
    op = hb.lift_transvection(v)
    data = {"kind": "lift", "v": str(v), "k": v.k, "operator": op.to_json()}
    rows = [
        tuple(",".join(e.to_strings()) for e in row) for row in op.entries
    ]
    _emit(data, rows, tuple(f"col{i}" for i in range(op.dim)), args.text)
    return 0


def _cmd_pi(args) -> int:
    try:
        root = e7.RootLabel.from_name(args.root)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    coords = e7.root_in_simple_coords(
        root if root.sign == 1 else root.negated()
    )
    data = {
        "kind": "pi",
        "root": root.name,
        "simple_coords": list(coords.coords),
        "image": str(e7.pi_map(coords)),
    }
    _emit(data, [(data["root"], data["simple_coords"], data["image"])],
          ("root", "simple_coords", "image"), args.text)
    return 0


def _cmd_orders(args) -> int:
    entries = {}
    ks = (args.k,) if args.k else (1, 2, 3)
    for k in ks:
        gens = [transvection_matrix(v) for v in all_vectors(k) if not v.is_zero()]
        if k == 3:
            entries["sp6"] = verify.sp6_catalog().order
        else:
            entries[f"sp{2*k}"] = generate_group(gens).order
        even = QuadLabel(SympVector(k, 0, 0))
        odd = next(q for q, _ in enumerate_quad_forms(k, 1))
        entries[f"orthogonal_even_k{k}"] = orthogonal_group_order(even)
        entries[f"orthogonal_odd_k{k}"] = orthogonal_group_order(odd)
        entries[f"lagrangians_k{k}"] = len(enumerate_lagrangians(k))
    if args.k in (None, 3):
        entries["weyl_e7"] = e7.weyl_group().order
    data = {"kind": "orders", "orders": entries}
    _emit(data, sorted(entries.items()), ("group", "order"), args.text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qe7",
        description="Exact qubit/Heisenberg/E7 finite-structure toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate structures")
    p.add_argument("what", choices=("roots", "weights", "lagrangians", "quadforms"))
    p.add_argument("--k", type=int, default=3, choices=(1, 2, 3, 4))
    p.add_argument("--count-only", action="store_true")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--json", action="store_true", help="JSON output (default)")
    grp.add_argument("--text", action="store_true", help="aligned text output")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("decompose", help="Fano-plane restriction data")
    p.add_argument(
        "--lagrangian",
        help='basis string "abc:def,abc:def,abc:def" (default: standard)',
    )
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--json", action="store_true")
    grp.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("lift", help="normalizer lift of a transvection")
    p.add_argument("--v", required=True, help='vector string "abc:def"')
    p.add_argument("--k", type=int)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--json", action="store_true")
    grp.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("pi", help="reduction of a root to the qubit space")
    p.add_argument("--root", required=True, help='root name like "R2568"')
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--json", action="store_true")
    grp.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_pi)

    p = sub.add_parser("orders", help="group orders")
    p.add_argument("--k", type=int, choices=(1, 2, 3))
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--json", action="store_true")
    grp.add_argument("--text", action="store_true")
    p.set_defaults(func=_cmd_orders)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
