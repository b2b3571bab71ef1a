"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 parse/usage error,
3 precondition refusal.  ``ZCCS_WORKERS`` sets the verification worker count.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys

from . import __version__
from .analysis import (
    length_coverage,
    pmepr_report,
    set_size_bound_check,
    verify_zccs,
)
from .ccc import ccc_dft, ccc_table1, verify_ccc
from .construct import ZccsBuildRecipe, barker_weight
from .errors import DocumentError, DomainError, PreconditionError, ZccsError
from .io import dumps, loads, parse_sign_matrix, read_document, sign_matrix_text
from .kernels import OrthogonalFamily, barker, composite_barker, hadamard
from .sequences import CodeMatrix, CodeSet, PhaseSequence, code_accs

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_REFUSED = 0, 1, 2, 3

GRAMMAR = """\
recipe grammar:
  --source  dft:K | table1 | file:PATH      (PATH: set document or sign-matrix text)
  --seed    barker:P | composite:P1xP2x... | file:PATH
            P in {1,2,3,4,5,7,11,13}; barker:1 is the trivial seed (1)
  --expand  hadamard:P | file:PATH          (rows of an orthogonal family; replaces --seed)
  --weight  barker:K | file:PATH            (row weights, length = number of rows)
"""


class RecipeError(ZccsError):
    pass


def _split(desc: str, what: str):
    kind, _, arg = desc.partition(":")
    if not kind:
        raise RecipeError(f"empty {what} descriptor")
    return kind, arg


def _int(arg: str, desc: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise RecipeError(f"expected an integer in {desc!r}") from None


def _read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc


def resolve_source(desc: str) -> CodeSet:
    kind, arg = _split(desc, "source")
    if kind == "table1" and not arg:
        return ccc_table1()
    if kind == "dft":
        return ccc_dft(_int(arg, desc))
    if kind == "file":
        text = _read_text(arg)
        if text.lstrip().startswith("{"):
            s, _ = loads(text)
        else:
            s = CodeSet(CodeMatrix(rows) for rows in parse_sign_matrix(text))
        report = verify_ccc(s)
        if not report.passed:
            raise PreconditionError(f"{arg} does not verify as a CCC ({report.classification})")
        return CodeSet(s.codes, Z=s.N, kind="CCC", meta={"source": desc})
    raise RecipeError(f"unknown source {desc!r}")


def _sequence_from_file(path) -> PhaseSequence:
    blocks = parse_sign_matrix(_read_text(path))
    rows = [r for block in blocks for r in block]
    if len(rows) != 1:
        raise DocumentError(f"{path}: expected exactly one sequence, found {len(rows)}")
    return rows[0]


def resolve_seed(desc: str) -> PhaseSequence:
    kind, arg = _split(desc, "seed")
    if kind == "barker":
        p = _int(arg, desc)
        if p == 1:
            return PhaseSequence([0], q=1)
        return PhaseSequence(barker(p).phases, q=2)
    if kind == "composite":
        factors = [_int(f, desc) for f in arg.lower().split("x") if f]
        return composite_barker(factors)
    if kind == "file":
        return _sequence_from_file(arg)
    raise RecipeError(f"unknown seed {desc!r}")


def resolve_family(desc: str) -> OrthogonalFamily:
    kind, arg = _split(desc, "expand")
    if kind == "hadamard":
        return hadamard(_int(arg, desc))
    if kind == "file":
        blocks = parse_sign_matrix(_read_text(arg))
        return OrthogonalFamily(r for block in blocks for r in block)
    raise RecipeError(f"unknown family {desc!r}")


def resolve_weight(desc: str) -> PhaseSequence:
    kind, arg = _split(desc, "weight")
    if kind == "barker":
        return PhaseSequence(barker(_int(arg, desc)).phases, q=2)
    if kind == "file":
        return _sequence_from_file(arg)
    raise RecipeError(f"unknown weight {desc!r}")


def build_from_recipe(recipe: dict) -> CodeSet:
    ccc = resolve_source(recipe["source"])
    family = resolve_family(recipe["expand"]) if recipe.get("expand") else None
    seed = None
    if family is None:
        seed = resolve_seed(recipe.get("seed") or "barker:1")
    weight = resolve_weight(recipe["weight"]) if recipe.get("weight") else None
    return ZccsBuildRecipe(ccc, seed=seed, family=family, weight=weight).build()


def provenance_for(recipe: dict, s: CodeSet) -> dict:
    prov = {"tool": f"zccs {__version__}", "recipe": {k: recipe.get(k) for k in ("source", "seed", "expand", "weight")}}
    if "ordering" in s.meta:
        prov["ordering"] = s.meta["ordering"]
    return prov


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- subcommands ------------------------------------------------------------------
def cmd_generate(args) -> int:
    if args.expand and args.seed:
        print("note: --expand supplies the seeds; --seed is ignored", file=sys.stderr)
    recipe = {
        "source": args.source,
        "seed": None if args.expand else (args.seed or "barker:1"),
        "expand": args.expand,
        "weight": args.weight,
    }
    s = build_from_recipe(recipe)
    if args.out:
        _write(args.out, dumps(s, provenance_for(recipe, s)))
    if args.text or not args.out:
        _write(args.text, sign_matrix_text(s))
    if args.out:
        k, m, z, n = s.params
        print(f"wrote {s.kind} (K,M,Z,N)=({k},{m},{z},{n}) to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    s, _ = read_document(args.file)
    v = verify_zccs(s)
    k, m, z, n = s.params
    print(f"classification: {v.classification}")
    print(f"declared (K,M,Z,N): ({k},{m},{z},{n})")
    print(f"measured Z: {v.Z_meas}")
    print(f"exact: {'yes' if v.exact else 'no'}")
    if v.passed:
        b = set_size_bound_check(s, v)
        rel = "equality" if b.optimal else ("strict" if b.holds else "violated")
        print(f"set-size bound: K={b.K} <= M(N-Z+1)={b.bound} ({rel})")
    for viol in v.violations[:10]:
        print(f"violation: codes ({viol.i},{viol.j}) tau={viol.tau} value={viol.value}")
    print("PASS" if v.passed else "FAIL")
    return EXIT_OK if v.passed else EXIT_FAIL


def cmd_analyze(args) -> int:
    s, _ = read_document(args.file)
    if not args.force and not verify_zccs(s).passed:
        print("refusing to analyze an unverified set (use --force)", file=sys.stderr)
        return EXIT_REFUSED
    os.makedirs(args.out_dir, exist_ok=True)
    reports = pmepr_report(s, args.axis, args.oversampling)
    pm_path = os.path.join(args.out_dir, f"pmepr_{args.axis}.csv")
    with open(pm_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["code", args.axis, "bound", "bound_float", "pmepr_numeric"])
        for rep in reports:
            for idx, (bnd, num) in enumerate(zip(rep.bounds, rep.numeric)):
                w.writerow([rep.code, idx, str(bnd), f"{float(bnd):.12g}", f"{num:.12g}"])
    prof_path = os.path.join(args.out_dir, "aacs.csv")
    with open(prof_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["code", "tau", "re", "im"])
        for k, code in enumerate(s.codes):
            prof = code_accs(code)
            for tau, v in zip(prof.lags, prof.values):
                if prof.exact:
                    w.writerow([k, int(tau), int(round(v.real)), int(round(v.imag))])
                else:
                    w.writerow([k, int(tau), f"{v.real:.12g}", f"{v.imag:.12g}"])
    best = max(r.max_bound for r in reports)
    print(f"max {args.axis} bound: {best} ({float(best):.6g})")
    print(f"max {args.axis} PMEPR (oversampling {args.oversampling}): {max(r.max_numeric for r in reports):.6g}")
    print(f"wrote {pm_path}")
    print(f"wrote {prof_path}")
    return EXIT_OK


def cmd_export(args) -> int:
    s, _ = read_document(args.file)
    _write(args.out, sign_matrix_text(s))
    return EXIT_OK


def cmd_transform(args) -> int:
    s, prov = read_document(args.file)
    out = barker_weight(s, resolve_weight(args.weight))
    prov = dict(prov)
    prov.setdefault("transforms", []).append({"weight": args.weight})
    _write(args.out, dumps(out, prov))
    return EXIT_OK


def cmd_replay(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        original = fh.read()
    _, prov = loads(original)
    recipe = prov.get("recipe")
    if not isinstance(recipe, dict) or "source" not in recipe:
        raise DocumentError("document carries no replayable recipe")
    s = build_from_recipe(recipe)
    for step in prov.get("transforms", []):
        s = barker_weight(s, resolve_weight(step["weight"]))
    regenerated = dumps(s, prov)
    same = regenerated == original
    print("identical" if same else "DIFFERENT")
    return EXIT_OK if same else EXIT_FAIL


def cmd_coverage(args) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["length", "gcp_length", "seed_length", "zcz_width", "in_compared_forms"])
    for entry in length_coverage(args.max_len):
        best = entry.best
        w.writerow([entry.length, best.N, best.P, best.width, int(entry.in_compared_forms)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zccs",
        description="Build and check type-II Z-complementary code sets.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=GRAMMAR,
    )
    p.add_argument("--version", action="version", version=f"zccs {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a code set from a recipe",
                       formatter_class=argparse.RawDescriptionHelpFormatter, epilog=GRAMMAR)
    g.add_argument("--source", required=True)
    g.add_argument("--seed")
    g.add_argument("--expand")
    g.add_argument("--weight")
    g.add_argument("-o", "--out", help="set document path")
    g.add_argument("--text", help="sign-matrix text path ('-' for stdout)")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="classify a set document and measure its zone")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("analyze", help="PMEPR and correlation reports as CSV")
    a.add_argument("file")
    a.add_argument("--axis", choices=("row", "column"), default="column")
    a.add_argument("--out-dir", default=".")
    a.add_argument("--oversampling", type=int, default=16)
    a.add_argument("--force", action="store_true")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("export", help="write a set document as sign-matrix text")
    e.add_argument("file")
    e.add_argument("-o", "--out")
    e.set_defaults(func=cmd_export)

    t = sub.add_parser("transform", help="apply row weights to a set document")
    t.add_argument("file")
    t.add_argument("--weight", required=True)
    t.add_argument("-o", "--out")
    t.set_defaults(func=cmd_transform)

    r = sub.add_parser("replay", help="rebuild a document from its provenance and compare bytes")
    r.add_argument("file")
    r.set_defaults(func=cmd_replay)

    c = sub.add_parser("coverage", help="type-II ZCP lengths and zone widths up to a bound")
    c.add_argument("--max-len", type=int, required=True)
    c.set_defaults(func=cmd_coverage)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RecipeError as exc:
        print(f"usage error: {exc}\n\n{GRAMMAR}", file=sys.stderr)
        return EXIT_PARSE
    except DocumentError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except DomainError as exc:
        print(f"usage error: {exc}\n\n{GRAMMAR}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
