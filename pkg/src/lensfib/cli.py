"""Command-line front end: ``lensfib <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (reported as a one-line
JSON record whose ``error`` field names the exception), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence, TextIO

from . import braid as br
from . import contact, contfrac, kirby, lenslift, openbook, render
from .errors import LensfibError


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _h1(value) -> object:
    return "infinite" if value == math.inf else value


def _matrix_text(rows: Sequence[Sequence[int]]) -> str:
    if not rows:
        return "(empty)"
    width = max(len(str(x)) for r in rows for x in r)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows)


def _cmd_contfrac(args, out: TextIO) -> None:
    terms = contfrac.expand_neg_cf(args.P, args.Q)
    M = contfrac.chain_matrix(terms)
    if args.format == "json":
        out.write(_dump({"p": args.P, "q": args.Q, "terms": terms,
                         "chain_matrix": M.rows(), "h1_order": _h1(kirby.h1_order(M))}) + "\n")
    else:
        out.write(json.dumps(terms) + "\n")
        out.write(_matrix_text(M.rows()) + "\n")


def _cmd_kirby(args, out: TextIO) -> None:
    with open(args.matrix) as fh:
        M = kirby.FramedLinkMatrix(json.load(fh))
    with open(args.moves) as fh:
        moves = [kirby.move_from_dict(m) for m in json.load(fh)]
    before = kirby.h1_order(M)
    result = kirby.replay(M, moves)
    after = kirby.h1_order(result)
    if args.format == "json":
        out.write(_dump({"matrix": result.rows(), "h1_order": _h1(after),
                         "initial_h1_order": _h1(before), "moves": len(moves)}) + "\n")
    else:
        out.write(_matrix_text(result.rows()) + "\n")
        out.write(f"h1_order: {_h1(after)}\n")


def _cmd_fibered(args, out: TextIO) -> None:
    terms: Optional[list[int]]
    if args.q == 1:
        fl = openbook.build_fibered_Lp1(args.p)
        terms = [-args.p]
    else:
        params = lenslift.normalize(args.p, args.q)
        if params.q == 1:
            fl = openbook.build_fibered_Lp1(params.p)
            terms = [-params.p]
        else:
            terms = contfrac.expand_neg_cf(params.p, params.q)
            fl = openbook.build_fibered_Lpq(terms)
    book, pres = fl
    record = {
        "lens": {"p": args.p, "q": args.q},
        "terms": terms,
        "open_book": book.to_dict(),
        "presentation": pres.to_dict(),
        "twist_count": book.twist_count(),
        "kirby_trace": fl.trace.to_list(),
    }
    if book.is_annulus:
        record["reduced_monodromy"] = openbook.mcg_annulus_reduce(book)
    if args.format == "json":
        out.write(_dump(record) + "\n")
        return
    out.write(f"page: genus {book.genus}, {book.boundary_count} boundary components\n")
    word = " ".join(f"D_{t.curve}^{t.exp}" for t in book.monodromy) or "id"
    out.write(f"monodromy: {word}\n")
    out.write(f"fixed part: framings {pres.fixed_part.framings()}, braid [{br.format_word(pres.fixed_braid)}]"
              f" on {pres.fixed_braid.strands} strands\n")
    out.write(f"moving part: {pres.moving_components} binding components\n")
    if "reduced_monodromy" in record:
        out.write(f"reduced monodromy: D_gamma^{record['reduced_monodromy']}\n")


def _classification_record(word: br.BraidWord, fibred_naming: bool) -> dict:
    inv = br.closure_invariants(word)
    rec = {"word": br.format_word(word), "letters": list(word.letters),
           "strands": word.strands, "invariants": inv.to_dict()}
    if word.strands == 2:
        cls = br.classify_two_strand_closure(word)
        rec["classification"] = cls.label(fibred_naming)
    return rec


def _write_classification(rec: dict, args, out: TextIO) -> None:
    if args.format == "json":
        out.write(_dump(rec) + "\n")
        return
    out.write(f"word: {rec['word'] or '(identity)'}\n")
    inv = rec["invariants"]
    out.write(f"components: {inv['components']}, exponent sum: {inv['exponent_sum']}\n")
    out.write(f"linking: {inv['linking']}\n")
    if "classification" in rec:
        out.write(f"classification: {rec['classification']}\n")


def _cmd_lift(args, out: TextIO) -> None:
    band = lenslift.BandDiagram.parse(args.band, args.strands)
    if args.normalize:
        params = lenslift.normalize(args.p, args.q)
    else:
        params = lenslift.LensParams(args.p, args.q)
    word = lenslift.lift(band, params)
    rec = _classification_record(word, args.fibred_naming)
    rec["lens"] = params.to_dict()
    rec["band"] = band.word.to_dict()
    _write_classification(rec, args, out)


def _cmd_classify(args, out: TextIO) -> None:
    word = br.parse_word(args.band, args.strands)
    _write_classification(_classification_record(word, args.fibred_naming), args, out)


def _cmd_render(args, out: TextIO) -> None:
    band = lenslift.BandDiagram.parse(args.band, args.strands)
    diagram = render.render_band(band)
    if args.format == "json":
        out.write(_dump({"band": band.word.to_dict(), "lines": list(diagram.lines)}) + "\n")
    else:
        out.write(str(diagram) + "\n")


def _parse_grid(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 50x50x3, got {text!r}") from None
    if len(parts) != 3 or min(parts) < 2:
        raise argparse.ArgumentTypeError(f"grid needs three sizes >= 2, got {text!r}")
    return parts  # type: ignore[return-value]


def _cmd_contact_check(args, out: TextIO) -> None:
    params = lenslift.LensParams(args.p, args.q)
    alpha = contact.standard_forms()["s3_standard"]
    report = contact.check_supports(alpha, grid=args.grid, tol=args.tol)
    defect = contact.zp_invariance_defect(params, sample_count=args.samples)
    rec = {
        "lens": params.to_dict(),
        "form": alpha.name,
        "open_book": "Hopf link z1*z2=0, pages theta1+theta2=omega",
        "grid": list(args.grid),
        "zp_invariance_defect": round(defect, 10),
        "report": report.to_dict(),
    }
    if args.format == "json":
        out.write(_dump(rec) + "\n")
        return
    out.write(f"form: {alpha.name} on S^3, lens ({params.p}, {params.q})\n")
    out.write(f"Z_p invariance defect: {defect:.3e}\n")
    r = report
    out.write(f"min page area: {r.min_page_area_value:.6g}, min binding value: {r.min_binding_value:.6g}\n")
    out.write(f"samples: {r.sample_count}, threshold: {r.threshold:.3g}, supported: {r.verdict}\n")


R3_SAMPLE_POINTS = [(x, y, z) for x in (-1.0, 0.0, 1.0) for y in (-1.0, 0.0, 1.0) for z in (0.0, 1.0)]


def _cmd_contact_r3(args, out: TextIO) -> None:
    forms = contact.standard_forms()
    rows = []
    for key in ("r3_standard", "r3_symmetric"):
        alpha = forms[key]
        for pt in R3_SAMPLE_POINTS:
            rows.append({"form": alpha.name, "point": list(pt),
                         "value": round(contact.contact_volume_value(alpha, pt), 9)})
    if args.format == "json":
        out.write(_dump(rows) + "\n")
    else:
        for r in rows:
            out.write(f"{r['form']:<18} at {tuple(r['point'])}: alpha^dalpha = {r['value']:.6f}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    naming = argparse.ArgumentParser(add_help=False)
    naming.add_argument("--paper-naming", dest="fibred_naming", action="store_true",
                        help="label Hopf links by the fibred-link (page boundary) orientation")

    parser = argparse.ArgumentParser(prog="lensfib", description="Fibered links in lens spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contfrac", parents=[common], help="continued fraction of -P/Q and chain matrix")
    p.add_argument("P", type=int)
    p.add_argument("Q", type=int)
    p.set_defaults(func=_cmd_contfrac)

    p = sub.add_parser("kirby", help="Kirby moves on linking matrices")
    ksub = p.add_subparsers(dest="kirby_command", required=True)
    pa = ksub.add_parser("apply", parents=[common], help="replay a move list")
    pa.add_argument("--moves", required=True, help="JSON list of move records")
    pa.add_argument("--matrix", required=True, help="JSON array of arrays")
    pa.set_defaults(func=_cmd_kirby)

    p = sub.add_parser("fibered", parents=[common], help="fibered link and open book in L(P, Q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.set_defaults(func=_cmd_fibered)

    p = sub.add_parser("lift", parents=[common, naming], help="lift a band diagram to S^3")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--band", default="")
    p.add_argument("--strands", type=int, default=2)
    p.add_argument("--normalize", action="store_true", help="normalize (p, q) before lifting")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("classify", parents=[common, naming], help="closure invariants of a braid word")
    p.add_argument("--band", default="")
    p.add_argument("--strands", type=int, default=2)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("render", parents=[common], help="ASCII band diagram")
    p.add_argument("--band", default="")
    p.add_argument("--strands", type=int, required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("contact", help="contact-form verification")
    csub = p.add_subparsers(dest="contact_command", required=True)
    pc = csub.add_parser("check", parents=[common], help="open-book compatibility on S^3")
    pc.add_argument("--p", type=int, required=True)
    pc.add_argument("--q", type=int, required=True)
    pc.add_argument("--grid", type=_parse_grid, default=(50, 50, 3), help="NTxNTHETAxNOMEGA")
    pc.add_argument("--tol", type=float, default=None)
    pc.add_argument("--samples", type=int, default=200)
    pc.set_defaults(func=_cmd_contact_check)
    pr = csub.add_parser("r3", parents=[common], help="alpha^dalpha for the R^3 examples")
    pr.set_defaults(func=_cmd_contact_r3)

    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except LensfibError as exc:
        out.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return 1
    except (OSError, ValueError, TypeError, KeyError) as exc:
        out.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
