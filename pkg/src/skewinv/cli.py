"""Command-line interface.

Every subcommand except ``scenario`` and ``derive`` reads a session from a
config file (see :mod:`skewinv.config`) or from ``--algebra``/``--group``.
Exit codes: 0 pass, 1 expectation mismatch (or a negative answer), 2
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import scenarios
from .config import ConfigError, Session, load_config, parse_session
from .derivation import DerivationError
from .expr import ParseError
from .rewrite import DegreeBoundError

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG = 0, 1, 2


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# built-in derivation scripts


def builtin_script(name: str) -> str:
    """Script text for a built-in name such as ``squares:4:1:2`` or ``klein``."""
    from . import chains
    parts = name.split(":")
    head = parts[0]
    try:
        args = [int(a) for a in parts[1:] if a]
    except ValueError:
        raise UsageError(f"bad built-in derivation {name!r}") from None
    if head == "squares" and len(args) == 3:
        return chains.squares_chain(*args)
    if head == "squares-sklyanin" and len(args) == 2:
        return chains.squares_chain(3, *args, sklyanin=True)
    if head == "klein" and not args:
        return chains.klein_chain()
    if head == "pair-swap" and len(args) == 1:
        return chains.pair_swap_chain(args[0])
    if head == "sklyanin-squares" and not args:
        return chains.sklyanin_squares_chain()
    if head == "weighted-klein" and not args:
        return chains.weighted_klein_chain()
    if head in ("vandermonde", "coprime") and not args:
        sess, _ = parse_session(f"algebra: V n=3\nbound: 10\ngroup: {chains.LEMMA41_GROUP}")
        build = chains.vandermonde_chain if head == "vandermonde" else chains.coprime_chain
        return build(sess.group, chains.LEMMA41_GROUP)
    raise UsageError(f"unknown built-in derivation {name!r}; known: {', '.join(BUILTINS)}")


BUILTINS = ("squares:N:I:J", "squares-sklyanin:I:J", "klein", "pair-swap:N", "sklyanin-squares",
            "weighted-klein", "vandermonde", "coprime")


# ---------------------------------------------------------------------------
# session handling


def _session(args, require_group: bool = False) -> Session:
    if args.config:
        sess = load_config(args.config, args.field_order, args.degree_bound)
    elif args.algebra:
        text = f"algebra: {args.algebra}\n" + (f"group: {args.group}\n" if args.group else "")
        sess, _ = parse_session(text, args.field_order, args.degree_bound)
    else:
        raise UsageError("give a config file or --algebra")
    if require_group and sess.group is None:
        raise ConfigError("this command needs a group")
    return sess


def _emit(args, data: dict, text: str):
    if args.output == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _elem(sess: Session, S, text: str):
    from .derivation import evaluate
    return evaluate(text, S, sess.names).elem


# ---------------------------------------------------------------------------
# subcommands


def cmd_nf(args) -> int:
    sess = _session(args)
    A = sess.algebra
    p = A.nf(A.free.parse(args.expr))
    _emit(args, {"input": args.expr, "normal_form": str(p)}, str(p))
    return EXIT_OK


def cmd_hilbert(args) -> int:
    from .series import SeriesError, hilbert_series, reconstruct
    sess = _session(args)
    N = args.terms if args.terms is not None else sess.algebra.bound
    s = hilbert_series(sess.algebra, N)
    try:
        form = str(reconstruct(s))
    except SeriesError:
        form = None
    _emit(args, {"dims": s.to_json(), "rational_form": form},
          f"dims: {' '.join(s.to_json())}\nform: {form or 'not reconstructed'}")
    return EXIT_OK


def cmd_trace(args) -> int:
    from .series import SeriesError, hdet, reflection_number, trace_form, trace_series
    sess = _session(args, require_group=True)
    A, G, F = sess.algebra, sess.group, sess.field
    N = args.terms if args.terms is not None else A.bound
    rows, lines = [], []
    for g in G:
        if args.element and g.label != args.element:
            continue
        s = trace_series(g, A, N)
        row = {"element": g.label, "series": s.to_json()}
        try:
            row["form"] = str(trace_form(g, A, N))
            row["reflection_number"] = reflection_number(g, A, N)
            row["hdet"] = hdet(g, A, N).to_json(F)
        except SeriesError as exc:
            row["note"] = str(exc)
        rows.append(row)
        lines.append(f"{g.label}: {row.get('form', '?')}  r={row.get('reflection_number', '?')}"
                     f"  hdet={row.get('hdet', {}).get('hdet', '?')}")
    if not rows:
        raise UsageError(f"no group element labelled {args.element!r}; labels: {G.labels()}")
    _emit(args, {"group": G.labels(), "traces": rows}, "\n".join(lines))
    return EXIT_OK


def cmd_molien(args) -> int:
    from .series import molien_hilbert
    sess = _session(args, require_group=True)
    N = args.terms if args.terms is not None else sess.algebra.bound
    res = molien_hilbert(sess.group, sess.algebra, N)
    form = str(res.form) if res.form else None
    _emit(args, {"series": res.series.to_json(), "direct": res.direct, "agrees": res.agrees, "rational_form": form},
          f"molien: {' '.join(res.series.to_json())}\ndirect: {' '.join(map(str, res.direct))}\n"
          f"form: {form or 'not reconstructed'}")
    return EXIT_OK if res.agrees else EXIT_MISMATCH


def cmd_member(args) -> int:
    from .skew import is_member
    sess = _session(args, require_group=True)
    S = sess.skew()
    u = _elem(sess, S, args.expr)
    res = is_member(u, S, certificate=args.certificate)
    text = f"{u}: {'in' if res.member else 'not in'} (f_G)"
    if res.certificate:
        text += f"\ncertificate: {len(res.certificate)} sandwich terms"
    _emit(args, {"element": str(u), **res.to_json(S)}, text)
    return EXIT_OK if res.member else EXIT_MISMATCH


def cmd_ideal_dims(args) -> int:
    from .skew import quotient_dims, quotient_skew_dims
    sess = _session(args, require_group=True)
    S = sess.skew()
    D = args.degree if args.degree is not None else min(8, sess.algebra.bound)
    qa = quotient_dims(S, D)
    qs = quotient_skew_dims(S, D)
    _emit(args, {"quotient_A": qa, "quotient_skew": qs},
          f"A/((f) ∩ A): {' '.join(map(str, qa))}\n(A#G)/(f): {' '.join(map(str, qs))}")
    return EXIT_OK


def cmd_derive(args) -> int:
    from .derivation import DerivationScript, load_script, run_derivation
    if args.builtin:
        script = DerivationScript.parse(builtin_script(args.builtin), args.builtin)
    elif args.script:
        script = load_script(args.script)
    else:
        raise UsageError("give a script file or --builtin NAME")
    if args.degree_bound is not None or args.field_order is not None:
        sess, _ = parse_session(script.header_text, args.field_order, args.degree_bound, require_group=True)
        rep = run_derivation(script, sess.skew(), sess.names, oracle=args.oracle)
    else:
        rep = run_derivation(script, oracle=args.oracle)
    _emit(args, rep.to_json(), rep.to_text())
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_pertinency(args) -> int:
    from .pertinency import pertinency_report
    sess = _session(args, require_group=True)
    rep = pertinency_report(sess.algebra, sess.group, args.degree)
    text = (f"{rep.algebra} with {rep.group}\n  dims: {' '.join(map(str, rep.dims))}\n"
            f"  conclusion: {rep.conclusion}\n  isolated singularity: {rep.isolated_singularity}"
            f"\n  growth: {rep.growth}")
    if rep.upper_bound is not None and rep.upper_reason:
        text += f"\n  upper bound {rep.upper_bound}: {rep.upper_reason}"
    _emit(args, rep.to_json(), text)
    return EXIT_OK


def cmd_scenario(args) -> int:
    if args.list:
        for n in scenarios.names():
            print(f"{n:<24} {scenarios.get(n).summary}")
        return EXIT_OK
    selected = scenarios.names() if args.all else args.names
    if not selected:
        raise UsageError("name a scenario or pass --all")
    if args.regenerate:
        scenarios.regenerate(selected)
        print(f"froze DERIVED values for {len(selected)} scenario(s) in {scenarios.GOLDEN_PATH.name}")
        return EXIT_OK
    reports = scenarios.run_many(selected, args.jobs)
    if args.output == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        print("\n\n".join(r.to_text() for r in reports))
        passed = sum(r.ok for r in reports)
        print(f"\n{passed}/{len(reports)} scenarios passed")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-bound", type=int, default=None, help="completion bound D")
    common.add_argument("--field-order", type=int, default=None, help="m for Q(z_m)")
    common.add_argument("--output", choices=("text", "json"), default="text")

    session = argparse.ArgumentParser(add_help=False)
    session.add_argument("config", nargs="?", help="session config file")
    session.add_argument("--algebra", help="inline algebra, e.g. 'V n=3'")
    session.add_argument("--group", help="inline group, e.g. '(1 2); (2 3)'")

    p = argparse.ArgumentParser(prog="skewinv", description="exact computations in skew group algebras")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", parents=[common, session], help="normal form of an expression in A")
    s.add_argument("--expr", required=True)
    s.set_defaults(func=cmd_nf)

    for name, func, helptext in (("hilbert", cmd_hilbert, "Hilbert series of A"),
                                 ("trace", cmd_trace, "trace series, reflection numbers, hdet"),
                                 ("molien", cmd_molien, "Hilbert series of A^G")):
        s = sub.add_parser(name, parents=[common, session], help=helptext)
        s.add_argument("-N", "--terms", type=int, default=None, help="number of series terms")
        if name == "trace":
            s.add_argument("--element", help="only this group element label")
        s.set_defaults(func=func)

    s = sub.add_parser("member", parents=[common, session], help="decide membership in (f_G)")
    s.add_argument("--expr", required=True, help="element of A#G; group names act as 1#g")
    s.add_argument("--certificate", action="store_true", help="also produce an explicit sandwich sum")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("ideal-dims", parents=[common, session], help="quotient dimensions by degree")
    s.add_argument("-D", "--degree", type=int, default=None)
    s.set_defaults(func=cmd_ideal_dims)

    s = sub.add_parser("derive", parents=[common], help="replay a derivation script")
    s.add_argument("script", nargs="?")
    s.add_argument("--builtin", help="one of: " + ", ".join(BUILTINS))
    s.add_argument("--oracle", action="store_true", help="check certified values with the slice oracle")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("pertinency", parents=[common, session], help="pertinency report")
    s.add_argument("-D", "--degree", type=int, default=None, help="evidence bound")
    s.set_defaults(func=cmd_pertinency)

    s = sub.add_parser("scenario", parents=[common], help="run named scenarios")
    s.add_argument("names", nargs="*")
    s.add_argument("--all", action="store_true")
    s.add_argument("--list", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--regenerate", action="store_true", help="recompute and freeze DERIVED values")
    s.set_defaults(func=cmd_scenario)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParseError, UsageError, DerivationError, scenarios.ScenarioError, DegreeBoundError,
            FileNotFoundError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
