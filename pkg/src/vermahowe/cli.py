"""Command-line front end.

Every subcommand prints a human-readable summary on stdout and, with
``--output PATH``, writes a JSON document (``--json`` prints the document
instead of the summary).  Output depends only on the arguments and the seed,
so reruns are byte-identical.

Exit status: 0 when every check passes, 1 on a failed check, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import braid, gtbasis, lkb, qgroup
from .errors import ParseError, PurityError, SpecializationSingular
from .scalar import QUANTUM, GeneratorSet, Specialization, SpecializedQuantum, SymbolicClassical, SymbolicQuantum
from .verma import random_monomials

MAX_N = 8
MAX_L = 5
SEED_ENV = "VERMAHOWE_SEED"

PROPERTIES = {
    "braid-relations": "colored reading respects s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}, far commutation and s_i s_i^-1 = 1",
    "yang-baxter": "R-matrices satisfy Yang-Baxter, invert to the identity and commute with E, F, K",
    "commuting-actions": "the gl(2) and gl(n) actions on the monomial model commute",
    "casimir": "gl(n) Casimirs act on Gelfand-Tsetlin vectors by x_k(x_k+k-1) + c_k(c_k+k-3)",
    "infbraid": "omega_ij satisfy the infinitesimal pure braid relations and e_ij e_ji = omega_ij + e_ii",
    "duality": "graded pieces split as sum_{c<=t} C(c+n-2,c) = C(t+n-1,t) and dim ker E = C(l+n-2,l)",
    "simplicity": "the LKB representation has a one-dimensional commutant under the braids pure on S",
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers


def read_params(path: str, gens: GeneratorSet) -> Specialization:
    """``key = value`` lines (``v``, ``U1``, ...); ``#`` starts a comment."""
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        t = line.split("#", 1)[0].strip()
        if not t:
            continue
        key, sep, val = t.partition("=")
        if not sep:
            raise ParseError(f"{path}:{lineno}: expected 'key = value'")
        try:
            values[key.strip()] = Fraction(val.strip())
        except ValueError:
            raise ParseError(f"{path}:{lineno}: not a rational number: {val.strip()!r}") from None
    unknown = set(values) - set(gens.names)
    if unknown:
        raise ParseError(f"{path}: unknown parameters {sorted(unknown)}")
    try:
        return Specialization.from_mapping(gens, values)
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None


def resolve_colors(args, n: int):
    if getattr(args, "colors_file", None):
        colors = braid.read_colors(Path(args.colors_file).read_text().splitlines())
    elif getattr(args, "colors", None):
        colors = braid.parse_colors(args.colors)
    elif getattr(args, "handlebody", None) is not None:
        g = args.handlebody
        colors = braid.handlebody_colors(g, n - g)
    else:
        return tuple(range(1, n + 1))
    if len(colors) != n:
        raise ParseError(f"need {n} colors, got {len(colors)}")
    return colors


def guard(args, n=None, l=None):
    if args.force:
        return
    if n is not None and n > MAX_N:
        raise UsageError(f"n={n} exceeds the guardrail n <= {MAX_N}; pass --force to override")
    if l is not None and l > MAX_L:
        raise UsageError(f"l={l} exceeds the guardrail l <= {MAX_L}; pass --force to override")


def quantum_context(args, n: int):
    gens = GeneratorSet(QUANTUM, n)
    if args.params:
        return SpecializedQuantum(read_params(args.params, gens))
    if args.mode == "specialized":
        return SpecializedQuantum(Specialization.draw(gens, args.seed))
    return SymbolicQuantum(n)


def point_of(K):
    if isinstance(K, SpecializedQuantum):
        return {k: str(v) for k, v in K.sp.as_dict().items()}
    return None


# ---------------------------------------------------------------------------
# commands; each returns (document, human text, ok)


def cmd_dim(args):
    guard(args, args.n, args.l if args.l is not None else args.l_max)
    ls = [args.l] if args.l is not None else list(range(args.l_max + 1))
    rows = []
    for l in ls:
        got = qgroup.certified_hw_dimension(args.n, l, SymbolicQuantum(args.n), args.seed)
        rows.append({"n": args.n, "l": l, "dim": got, "expected": lkb.lkb_rank(args.n, l)})
    ok = all(r["dim"] == r["expected"] for r in rows)
    text = ["n  l  dim"] + [f"{r['n']:<2} {r['l']:<2} {r['dim']}" for r in rows]
    return {"command": "dim", "rows": rows, "ok": ok}, "\n".join(text), ok


def cmd_matrix(args):
    w = braid.parse_word(args.word, args.n)
    guard(args, args.n, args.l)
    colors = resolve_colors(args, args.n)
    K = quantum_context(args, max(colors))
    space = lkb.lkb_basis(args.n, args.l, colors, K)
    M = lkb.word_matrix(w, space)
    doc = M.to_json()
    if point_of(K):
        doc["point"] = point_of(K)
    text = json.dumps(doc, sort_keys=True, indent=2)
    return doc, text, True


def _report_doc(name, reports, extra=None):
    reports = list(reports)
    ok = all(r.ok for r in reports)
    doc = {"command": f"verify {name}", "property": PROPERTIES[name], "ok": ok,
           "reports": [r.summary() for r in reports]}
    doc.update(extra or {})
    lines = [f"property: {PROPERTIES[name]}"]
    for r in reports:
        lines.append(f"  {r.name}: {r.checked} checked, {len(r.failures)} failed")
    lines.append("PASS" if ok else "FAIL")
    return doc, "\n".join(lines), ok


def verify_braid_relations(args):
    guard(args, args.n, args.l)
    colors = resolve_colors(args, args.n)
    K = quantum_context(args, max(colors))
    rep = braid.braid_relations_report(args.n, args.l, K, colors)
    return _report_doc("braid-relations", [rep], {"n": args.n, "l_max": args.l, "colors": list(colors),
                                                  "point": point_of(K)})


def verify_yang_baxter(args):
    guard(args, None, args.l)
    K = quantum_context(args, 3)
    reps = [braid.yang_baxter_report(args.l, K), braid.inverse_report(args.deg, K),
            braid.equivariance_report(args.l, K)]
    return _report_doc("yang-baxter", reps, {"l_max": args.l, "inverse_degree": args.deg, "point": point_of(K)})


def verify_commuting_actions(args):
    ns = [args.n] if args.n else [2, 3, 4]
    for n in ns:
        guard(args, n)
    reps = []
    for n in ns:
        sample = random_monomials(args.seed + n, n, args.samples)
        if args.field in ("quantum", "both"):
            reps.append(qgroup.commuting_actions_report(n, sample, quantum_context(args, n)))
        if args.field in ("classical", "both"):
            reps.append(qgroup.commuting_actions_report(n, sample, SymbolicClassical(n)))
    return _report_doc("commuting-actions", reps, {"n": ns, "samples": args.samples, "seed": args.seed})


def verify_casimir(args):
    ns = [args.n] if args.n else [2, 3, 4]
    for n in ns:
        guard(args, n)
    reps = []
    for n in ns:
        K = SymbolicClassical(n)
        rep = qgroup.CheckReport(f"Casimir eigenvalues n={n}")
        for p in gtbasis.patterns(n, args.c_max, args.r_max):
            for res in gtbasis.casimir_check(p, K):
                rep.record(("C", res.k), str(p), {} if res.ok else {0: 1})
        reps.append(rep)
    return _report_doc("casimir", reps, {"n": ns, "c_max": args.c_max, "r_max": args.r_max})


def verify_infbraid(args):
    ns = [args.n] if args.n else [2, 3, 4]
    for n in ns:
        guard(args, n)
    reps = [gtbasis.infbraid_relations_check(n, random_monomials(args.seed + n, n, args.samples),
                                             SymbolicClassical(n)) for n in ns]
    return _report_doc("infbraid", reps, {"n": ns, "samples": args.samples, "seed": args.seed})


def verify_duality(args):
    ns = [args.n] if args.n else list(range(2, 7))
    for n in ns:
        guard(args, n, args.l_max)
    rows, ok = [], True
    for n in ns:
        rep = qgroup.duality_dimension_check(n, args.t_max, SymbolicQuantum(n), args.seed, args.l_max)
        ok = ok and rep.ok
        rows.append(rep.summary())
    doc = {"command": "verify duality", "property": PROPERTIES["duality"], "ok": ok, "reports": rows}
    lines = [f"property: {PROPERTIES['duality']}"]
    for r in rows:
        bad = [x for x in r["binomial_identity"] + r["kernel_dimensions"] if not x["ok"]]
        lines.append(f"  n={r['n']}: {len(r['binomial_identity'])} identities, "
                     f"{len(r['kernel_dimensions'])} kernel dimensions, {len(bad)} failed")
    lines.append("PASS" if ok else "FAIL")
    return doc, "\n".join(lines), ok


def cmd_simplicity(args):
    guard(args, args.n, args.l)
    S = braid.Partition.parse(args.partition) if args.partition else braid.Partition.finest(args.n)
    if S.n != args.n:
        raise ParseError(f"partition {S} does not cover 1..{args.n}")
    rep = lkb.simplicity_report(args.n, args.l, S, args.trials, args.seed)
    doc = rep.to_json()
    doc["command"] = "simplicity"
    doc["property"] = PROPERTIES["simplicity"]
    lines = [f"property: {PROPERTIES['simplicity']}",
             f"  W_({args.n},{args.l}) dim {rep.dim}, partition {S}, {len(rep.generators)} generators"]
    for t in rep.trials:
        lines.append(f"  seed {t.seed}: commutant dim {t.commutant}" + (f" ({t.error})" if t.error else ""))
    lines.append(f"verdict: {rep.verdict}")
    return doc, "\n".join(lines), rep.certified


VERIFY = {
    "braid-relations": verify_braid_relations,
    "yang-baxter": verify_yang_baxter,
    "commuting-actions": verify_commuting_actions,
    "casimir": verify_casimir,
    "infbraid": verify_infbraid,
    "duality": verify_duality,
}


# ---------------------------------------------------------------------------
# argument parsing


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser(default_seed: int = 0) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=default_seed,
                        help=f"random seed (default: ${SEED_ENV} or 0)")
    common.add_argument("--output", "-o", help="write the JSON document to this path")
    common.add_argument("--json", action="store_true", help="print the JSON document instead of the summary")
    common.add_argument("--force", action="store_true", help=f"allow n > {MAX_N} or l > {MAX_L}")

    scalars = argparse.ArgumentParser(add_help=False)
    scalars.add_argument("--mode", choices=("symbolic", "specialized"), default="symbolic")
    scalars.add_argument("--params", help="file of 'key = value' lines fixing v, U1, ... (implies specialized)")

    colors = argparse.ArgumentParser(add_help=False)
    g = colors.add_mutually_exclusive_group()
    g.add_argument("--colors", help="inline colors, e.g. '1,1,2'")
    g.add_argument("--colors-file", help="file with one color index per line")
    g.add_argument("--handlebody", type=int, metavar="G",
                   help="G core strands with their own colors, the rest sharing one color")

    p = argparse.ArgumentParser(prog="vermahowe", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dim", parents=[common], help="LKB rank table")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--l", type=int)
    d.add_argument("--l-max", type=int, default=4)

    m = sub.add_parser("matrix", parents=[common, scalars, colors], help="matrix of a braid word on W_{n,l}")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--l", type=int, required=True)
    m.add_argument("--word", required=True, help="e.g. 's1 s2^-1' or '1 -2'")

    s = sub.add_parser("simplicity", parents=[common], help="commutant-based simplicity certificate")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--partition", help="e.g. '[1][2][3]' (default: finest)")
    s.add_argument("--trials", type=int, default=3)

    v = sub.add_parser("verify", help="verification suites")
    vs = v.add_subparsers(dest="check", required=True)
    x = vs.add_parser("braid-relations", parents=[common, scalars, colors])
    x.add_argument("--n", type=int, default=3)
    x.add_argument("--l", type=int, default=2)
    x = vs.add_parser("yang-baxter", parents=[common, scalars])
    x.add_argument("--l", type=int, default=2)
    x.add_argument("--deg", type=int, default=3, help="degree bound for the inverse check")
    x = vs.add_parser("commuting-actions", parents=[common, scalars])
    x.add_argument("--n", type=int, help="default: 2, 3 and 4")
    x.add_argument("--samples", type=int, default=200)
    x.add_argument("--field", choices=("quantum", "classical", "both"), default="both")
    x = vs.add_parser("casimir", parents=[common])
    x.add_argument("--n", type=int, help="default: 2, 3 and 4")
    x.add_argument("--c-max", type=int, default=3)
    x.add_argument("--r-max", type=int, default=2)
    x = vs.add_parser("infbraid", parents=[common])
    x.add_argument("--n", type=int, help="default: 2, 3 and 4")
    x.add_argument("--samples", type=int, default=200)
    x = vs.add_parser("duality", parents=[common])
    x.add_argument("--n", type=int, help="default: 2..6")
    x.add_argument("--t-max", type=int, default=6)
    x.add_argument("--l-max", type=int, default=4)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser(_default_seed()).parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse reports its own errors
        return 2 if exc.code else 0
    if args.command == "verify":
        fn = VERIFY[args.check]
    else:
        fn = {"dim": cmd_dim, "matrix": cmd_matrix, "simplicity": cmd_simplicity}[args.command]
    try:
        if getattr(args, "n", None) is not None and args.n < 1:
            raise UsageError("n must be positive")
        if getattr(args, "l", None) is not None and args.l < 0:
            raise UsageError("l must be nonnegative")
        doc, text, ok = fn(args)
    except (UsageError, ParseError, PurityError, SpecializationSingular, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(payload)
    sys.stdout.write(payload if args.json else text + "\n")
    if not ok:
        print("check failed; see the failure manifest in the JSON document", file=sys.stderr)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
