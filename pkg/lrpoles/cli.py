"""lrpoles CLI: enumerate LR-tableaux, classify partial maps, realize poles
and embeddings, build boundary posets, and run the verification suites."""
import argparse
import json
import sys

PRIMES = [2, 3, 5, 7]


# ---- Helpers ----

def _fail(message, code=1):
    print(f"Error: {message}", file=sys.stderr)
    sys.exit(code)


def _print_json(obj):
    print(json.dumps(obj))


def _shape(args):
    from lrpoles._combinatorics import parse_partition
    if None in (args.alpha, args.beta, args.gamma):
        _fail("--alpha, --beta and --gamma are required", 2)
    try:
        return tuple(parse_partition(x) for x in (args.alpha, args.beta, args.gamma))
    except ValueError as e:
        _fail(e, 2)


def _load(model, path):
    """Parse a JSON input file; any problem with it is a usage error."""
    from pydantic import ValidationError
    from lrpoles._io import load
    try:
        return load(model, path)
    except OSError as e:
        _fail(f"cannot read {path}: {e.strerror}", 2)
    except ValidationError as e:
        _fail(f"{path}: {e.errors()[0]['msg']}", 2)


def _load_tableau(path, code=2):
    from lrpoles._combinatorics import LRViolation
    from lrpoles._io import TableauFile
    try:
        return _load(TableauFile, path).tableau()
    except LRViolation as e:
        _print_json(e.to_dict())
        _fail(f"{path}: {e}", code)


def _tableau_json(t):
    return {**t.to_dict(), "grid": t.grid()}


def _generator(c):
    terms = []
    for block, shift in c.generator_terms():
        power = "" if shift == 0 else "T " if shift == 1 else f"T^{shift} "
        terms.append(f"{power}b{block}")
    return " + ".join(terms) or "0"


# ---- Commands ----

def cmd_tableaux(args):
    from lrpoles._combinatorics import ShapeMismatch, enumerate_lr
    from lrpoles.logs import log

    if args.check:
        t = _load_tableau(args.check, code=1)
        _print_json({"valid": True, **_tableau_json(t)})
        return
    alpha, beta, gamma = _shape(args)
    log("info", event="tableaux", alpha=list(alpha), beta=list(beta), gamma=list(gamma))
    try:
        found = enumerate_lr(alpha, beta, gamma)
    except ShapeMismatch as e:
        _fail(e, 2)
    if args.list:
        print(json.dumps([_tableau_json(t) for t in found], indent=2))
    else:
        print(len(found))


def cmd_pmaps(args):
    from lrpoles._combinatorics import (canonical_invariant, decomposition_of,
                                        enumerate_partial_maps, jumps, satisfies_ebp)

    t = _load_tableau(args.file)
    maps = enumerate_partial_maps(t)
    if args.classes:
        classes = {}
        for i, g in enumerate(maps):
            classes.setdefault(canonical_invariant(g), []).append(i)
        for k, (invariant, members) in enumerate(classes.items()):
            g = maps[members[0]]
            ebp = satisfies_ebp(g)
            if args.ebp_only and not ebp:
                continue
            d = decomposition_of(g) if ebp else None
            _print_json({"class": k, "maps": members, "ebp": ebp,
                         "invariant": [[e, list(rows)] for e, rows in invariant],
                         "decomposition": d.to_dict() if d else None,
                         "label": str(d) if d else None})
        return
    for i, g in enumerate(maps):
        ebp = satisfies_ebp(g)
        if args.ebp_only and not ebp:
            continue
        _print_json({"index": i, "map": g.to_list(), "jumps": list(jumps(g)), "ebp": ebp})


def cmd_poles(args):
    from lrpoles._combinatorics import (CyclicType, extended_pole_split, gaps,
                                        pair_from_decomposition, pole_columns, pole_data,
                                        tableau_of_cyclic)
    from lrpoles._engine import endo_submodule, realize_pole
    from lrpoles._engine.field import _get_prime

    if args.decomposition:
        from lrpoles._combinatorics import LRViolation
        from lrpoles._io import DecompositionFile
        try:
            d = _load(DecompositionFile, args.decomposition).decomposition()
            t, g = pair_from_decomposition(d)
        except (LRViolation, ValueError) as e:
            _fail(e, 2)
        _print_json({"decomposition": d.to_dict(), "label": str(d), **_tableau_json(t),
                     "map": g.to_list()})
        return
    if args.heights is None:
        _fail("give a height sequence or --decomposition FILE", 2)
    try:
        h = tuple(int(x) for x in args.heights.split(",") if x.strip())
        c = extended_pole_split(h, args.nongap) if args.nongap is not None else CyclicType(h)
        data = pole_data(c.pole)
    except ValueError as e:
        _fail(e, 2)
    t = tableau_of_cyclic(c)
    out = {"pole": list(c.pole), "gaps": list(gaps(c.pole)), "beta": list(data.beta),
           "shifts": list(data.shifts), "ambient": list(c.ambient), "generator": _generator(c),
           "columns": [str(col) for col in pole_columns(c.pole)], **_tableau_json(t)}
    if args.endo:
        p = _get_prime(args.prime)
        e = realize_pole(CyclicType(c.pole), p)
        out["endo_dimension"] = int(endo_submodule(e.ambient, e.vectors()[0]).shape[0])
    _print_json(out)


def cmd_embed(args):
    from lrpoles._engine import height_sequence_of, tableau_of_embedding
    from lrpoles._io import EmbeddingFile

    try:
        e = _load(EmbeddingFile, args.file).instance()
        t = tableau_of_embedding(e)
    except ValueError as err:
        _fail(err, 2)
    _print_json({"beta": list(e.ambient.beta), **_tableau_json(t),
                 "heights": [list(height_sequence_of(e.ambient, v)) for v in e.vectors()]})


def cmd_poset(args):
    from lrpoles._combinatorics import ShapeMismatch
    from lrpoles._engine import CertificateFailure
    from lrpoles._io import PosetFile
    from lrpoles._poset import EdgeKind, build_boundary_poset, emit_hasse_dot
    from lrpoles.logs import log

    alpha, beta, gamma = _shape(args)
    try:
        poset = build_boundary_poset(alpha, beta, gamma, verify=args.certify, p=args.prime)
    except ShapeMismatch as e:
        _fail(e, 2)
    except CertificateFailure as e:
        log("error", event="certificate", edge=e.edge, mu=e.mu, reason=str(e))
        _fail(f"edge {e.edge}: {e}", 3)

    outputs = []
    if args.json:
        outputs.append((args.json, PosetFile.from_poset(poset).dumps()))
    if args.dot or not args.json:
        outputs.append((args.dot or "-", emit_hasse_dot(poset)))
    for target, text in outputs:
        _write(target, text)
    if all(target != "-" for target, _ in outputs):
        box = [e for e in poset.edges if e.kind is EdgeKind.BOX_MOVE]
        _print_json({"nodes": len(poset.nodes), "box_moves": len(box),
                     "hasse": len(poset.hasse_edges()),
                     "certified": sum(e.certified for e in box)})


def _write(target, text):
    if target == "-":
        sys.stdout.write(text)
        return
    from pathlib import Path
    Path(target).write_text(text)


def cmd_verify(args):
    from lrpoles._engine.field import _get_prime
    from lrpoles._poset.main import _get_workers
    from lrpoles._verify import run

    outcomes = run(args.suite, _get_prime(args.prime), args.max_size, _get_workers())
    for o in outcomes:
        _print_json(o.to_dict())
    if not all(o.passed for o in outcomes):
        sys.exit(1)


def cmd_version(args):
    try:
        from importlib.metadata import version
        print(f"lrpoles {version('lrpoles')}")
    except Exception:
        print("lrpoles (development)")


# ---- Entry point ----

def _add_shape(p):
    p.add_argument("--alpha", help="Content, comma-separated column heights (\"\" = empty)")
    p.add_argument("--beta", help="Outer shape")
    p.add_argument("--gamma", help="Inner shape")


def main(argv=None):
    from lrpoles._verify import SUITES

    parser = argparse.ArgumentParser(prog="lrpoles",
                                     description="LR-tableaux, poles and boundary posets over F_p")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableaux", help="Enumerate or check LR-tableaux")
    _add_shape(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="Print the number of tableaux (default)")
    mode.add_argument("--list", action="store_true", help="Print the tableaux as JSON")
    mode.add_argument("--check", metavar="FILE", help="Validate a tableau file")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("pmaps", help="Partial maps on a tableau")
    p.add_argument("file", help="Tableau file ({\"chain\": ...} or {\"grid\": ...})")
    p.add_argument("--list", action="store_true", help="One line per map (default)")
    p.add_argument("--classes", action="store_true", help="One line per equivalence class")
    p.add_argument("--ebp-only", action="store_true", help="Only maps with the empty box property")
    p.set_defaults(func=cmd_pmaps)

    p = sub.add_parser("poles", help="Pole data, tableau and endo-submodule of a height sequence")
    p.add_argument("heights", nargs="?", help="Height sequence, e.g. 1,3,4")
    p.add_argument("--nongap", type=int, default=None, help="Index of a non-gap to extend by")
    p.add_argument("--endo", action="store_true", help="Dimension of End(B) applied to the generator")
    p.add_argument("--decomposition", metavar="FILE", help="Tableau and map of a pole decomposition")
    p.add_argument("--prime", type=int, choices=PRIMES, default=None)
    p.set_defaults(func=cmd_poles)

    p = sub.add_parser("embed", help="Tableau of an explicit embedding")
    p.add_argument("file", help="Embedding file ({\"p\", \"beta\", \"generators\"})")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("poset", help="Boundary poset of a shape as DOT or JSON")
    _add_shape(p)
    p.add_argument("--dot", metavar="OUT", help="Write the Hasse diagram (- for stdout)")
    p.add_argument("--json", metavar="OUT", help="Write the poset as JSON (- for stdout)")
    p.add_argument("--certify", action="store_true", help="Certify every box move with Q(mu)")
    p.add_argument("--prime", type=int, choices=PRIMES, default=None)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("suite", choices=list(SUITES))
    p.add_argument("--prime", type=int, choices=PRIMES, default=None)
    p.add_argument("--max-size", type=int, default=None, help="Sweep bound (suite default if omitted)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("version", help="Print lrpoles version")
    p.set_defaults(func=cmd_version)

    args = parser.parse_args(argv)
    from lrpoles.logs import log
    log("info", event="start", command=args.command)
    args.func(args)
    log("info", event="finish", command=args.command)


if __name__ == "__main__":
    main()
