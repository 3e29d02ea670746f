"""Command-line driver: ``quivercm <subcommand> ...``.

Exit codes: 0 success, 1 input error, 2 scale guardrail, 3 verification
mismatch. Diagnostics go to stderr as a single ``error: ...`` line.
"""

from __future__ import annotations

import argparse
import json
import sys

from .degeneration import corollary1_check, degeneration_poset, export_dot
from .errors import InputError, QuiverCMError, ScaleError, VerificationError
from .fields import field_from_name
from .formats import parse_quiver, parse_representation
from .groebner.polynomial import format_polynomial
from .groebner.resolution import resolve
from .groebner.verify import pd_formula_survey, rank_condition_ideal, verify_cm
from .homogeneity import is_homogeneous, is_homogeneous_at
from .homology import ext1_dim, end_dim, hom_dim, invariant_report, pd_formula, pd_formula_caveat
from .quiver import classify, rep_space_dim, vertex_end_dim
from .roots import decompose, enumerate_orbits, positive_roots, tits_form


DEFAULT_PRIME = 32003


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror or exc)) from None


def _field(args):
    if not args.field:
        return None
    if args.field.lower() == "f":
        return field_from_name("F%d" % DEFAULT_PRIME)
    return field_from_name(args.field)


def _quiver(path):
    return parse_quiver(_read(path))


def _rep(args, path, q=None):
    if q is None and args.quiver:
        q = _quiver(args.quiver)
    return parse_representation(_read(path), q, _field(args))


def _dims(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError("dimension vector must be comma-separated integers, got %r" % text) from None


def _dim_arg(args):
    text = args.dim or args.d
    if not text:
        raise InputError("missing dimension vector (give it positionally or with --dim)")
    return _dims(text)


def _root_text(r) -> str:
    return "(" + ",".join(map(str, r)) + ")"


# --- subcommands: each returns (payload for json, text lines) --------------------


def cmd_classify(args):
    q = _quiver(args.quiver_file)
    c = classify(q)
    flags = dict(c.flags(), vertices=list(q.vertices), arrows=[list(a) for a in q.arrows])
    lines = ["%s: %s" % (k, v) for k, v in c.flags().items()]
    return flags, lines


def cmd_hom(args):
    m = _rep(args, args.m)
    n = _rep(args, args.n, m.quiver)
    h = hom_dim(m, n)
    return {"hom_dim": h}, ["dim Hom(M, N) = %d" % h]


def cmd_end(args):
    m = _rep(args, args.m)
    e = end_dim(m)
    return {"end_dim": e, "vertex_end_dim": vertex_end_dim(m.dims)}, ["dim End(M) = %d" % e]


def cmd_ext(args):
    m = _rep(args, args.m)
    e = ext1_dim(m)
    return {"ext1_dim": e}, ["dim Ext^1(M, M) = %d" % e]


def cmd_orbit_dim(args):
    m = _rep(args, args.m)
    rep = invariant_report(m)
    return rep.as_dict(), ["dim O_M = %d (l = %d, codim = %d)" % (rep.orbit_dim, rep.l, rep.ext1_dim)]


def cmd_pd_formula(args):
    m = _rep(args, args.m)
    l = rep_space_dim(m.quiver, m.dims)
    e = end_dim(m)
    s = vertex_end_dim(m.dims)
    value = pd_formula(m)
    caveat = pd_formula_caveat(m.quiver)
    payload = {"l": l, "end_dim": e, "vertex_end_dim": s, "pd_formula": value, "caveat": caveat}
    lines = ["pd_formula = l + dim End - sum d_i^2 = %d + %d - %d = %d" % (l, e, s, value)]
    if caveat:
        lines.append("caveat: " + caveat)
    return payload, lines


def cmd_decompose(args):
    m = _rep(args, args.m)
    label = decompose(m)
    payload = {"label": str(label), "roots": [[list(r), k] for r, k in label.parts]}
    return payload, [str(label)]


def cmd_roots(args):
    q = _quiver(args.quiver_file)
    roots = positive_roots(q)
    payload = {"dynkin": classify(q).dynkin, "count": len(roots), "roots": [list(r) for r in roots]}
    lines = ["%s: %d positive roots" % (classify(q).dynkin, len(roots))]
    lines += ["%s  q=%d" % (_root_text(r), tits_form(q, r)) for r in roots]
    return payload, lines


def cmd_enumerate(args):
    q = _quiver(args.quiver_file)
    labels = enumerate_orbits(q, _dim_arg(args))
    payload = {"count": len(labels), "labels": [str(lab) for lab in labels]}
    return payload, [str(lab) for lab in labels]


def cmd_degen_poset(args):
    q = _quiver(args.quiver_file)
    field = _field(args)
    p = degeneration_poset(q, _dim_arg(args), field) if field else degeneration_poset(q, _dim_arg(args))
    if args.format == "dot":
        return None, export_dot(p).rstrip("\n").split("\n")
    report = corollary1_check(p)
    payload = p.as_dict()
    payload["corollary1"] = report.as_dict()
    lines = []
    for i, (lab, a) in enumerate(zip(p.labels, p.annotations)):
        lines.append("%d: %s  dim O = %d  pd = %d%s%s" % (i, lab, a.orbit_dim, a.pd_formula, "  open" if a.open else "", "  closed" if a.closed else ""))
    lines.append("covers: " + " ".join("%d>%d" % c for c in p.covers))
    lines.append("pd/degeneration checks: %s" % ("ok" if report.ok else "VIOLATED"))
    return payload, lines


def cmd_homogeneous(args):
    m = _rep(args, args.m)
    if args.lam is not None:
        lam = m.field.parse(args.lam)
        iso = is_homogeneous_at(m, lam)
        text = "lambda*M isomorphic to M at λ=%s" % args.lam if iso else "not homogeneous; witness λ=%s" % args.lam
        return {"lambda": args.lam, "isomorphic": iso}, [text]
    v = is_homogeneous(m)
    return v.as_dict(), [v.describe()]


def cmd_ideal(args):
    q = _quiver(args.quiver_file)
    m = _rep(args, args.m, q)
    ideal = rank_condition_ideal(q, m)
    payload = ideal.as_dict()
    payload["homogeneous"] = ideal.homogeneous
    return payload, [format_polynomial(g) for g in ideal.generators]


def cmd_resolve(args):
    q = _quiver(args.quiver_file)
    m = _rep(args, args.m, q)
    ideal = rank_condition_ideal(q, m)
    res = resolve(ideal.generators, ideal.ring)
    b = res.betti
    payload = {"pd": b.pd, "ranks": b.ranks(), "betti": b.entries(), "l": ideal.ring.nvars}
    return payload, [b.format(), "pd = %d" % b.pd]


def cmd_verify_cm(args):
    q = _quiver(args.quiver_file)
    m = _rep(args, args.m, q)
    r = verify_cm(q, m)
    lines = [
        "l = %d, generators = %d" % (r.l, r.generators),
        r.betti.format(),
        "pd_resolution = %d, pd_formula = %d" % (r.pd_resolution, r.pd_formula),
        "dim = %d, depth = %d, height = %d" % (r.dim, r.depth, r.ht),
        "cm = %s, perfect = %s" % (r.cm, r.perfect_ideal),
        "cm <=> pd equality: %s, pd + depth = l: %s" % (r.theorem3_equivalence_holds, r.auslander_buchsbaum_holds),
    ]
    ok = r.theorem3_equivalence_holds and r.auslander_buchsbaum_holds
    return r.as_dict(), lines, (None if ok else "verification mismatch: CM / pd equality disagree")


def cmd_survey(args):
    q = _quiver(args.quiver_file)
    field = _field(args)
    rows = pd_formula_survey(q, _dim_arg(args), field) if field else pd_formula_survey(q, _dim_arg(args))
    payload = {"rows": [r.as_dict() for r in rows]}
    lines = ["%-40s pd=%d  dim O=%d%s%s" % (r.label, r.pd_formula, r.orbit_dim, "  open" if r.open else "", "  closed" if r.closed else "") for r in rows]
    return payload, lines


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--quiver", help="quiver file for representation files without embedded arrows")
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--field", help="q, f<p>, or f for F_32003; only for files with integer entries")

    parser = _Parser(prog="quivercm", description="Quiver representations and orbit-closure checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, dim=False):
        p = sub.add_parser(name, parents=[common])
        for arg in positional:
            p.add_argument(arg)
        if dim:
            p.add_argument("d", nargs="?", help="dimension vector, e.g. 1,2,1")
            p.add_argument("--dim")
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "quiver_file")
    add("hom", cmd_hom, "m", "n")
    add("end", cmd_end, "m")
    add("ext", cmd_ext, "m")
    add("orbit-dim", cmd_orbit_dim, "m")
    add("pd-formula", cmd_pd_formula, "m")
    add("decompose", cmd_decompose, "m")
    add("roots", cmd_roots, "quiver_file")
    add("enumerate", cmd_enumerate, "quiver_file", dim=True)
    add("degen-poset", cmd_degen_poset, "quiver_file", dim=True)
    h = add("homogeneous", cmd_homogeneous, "m")
    h.add_argument("--lambda", dest="lam")
    add("ideal", cmd_ideal, "quiver_file", "m")
    add("resolve", cmd_resolve, "quiver_file", "m")
    add("verify-cm", cmd_verify_cm, "quiver_file", "m")
    add("survey", cmd_survey, "quiver_file", dim=True)
    return parser


def _emit(args, payload, lines):
    if args.format == "json":
        if payload is None:
            raise InputError("json output is not available for this subcommand")
        text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    else:
        if args.format == "dot" and args.command != "degen-poset":
            raise InputError("dot output is only available for degen-poset")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    try:
        result = args.func(args)
        payload, lines = result[0], result[1]
        mismatch = result[2] if len(result) > 2 else None
        _emit(args, payload, lines)
    except ScaleError as exc:
        print("error: scale: %s" % exc, file=sys.stderr)
        return 2
    except VerificationError as exc:
        print("error: verification: %s" % exc, file=sys.stderr)
        return 3
    except (QuiverCMError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    if mismatch:
        print("error: verification: %s" % mismatch, file=sys.stderr)
        return 3
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
