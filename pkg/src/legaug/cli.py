"""Command-line front end.

Exit status: 0 on success, 1 on bad input, 2 when a consistency check fails
(which means a bug in this package, not in the input).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import atlas
from .augment import IllegalRhoError, enumerate_augmentations, is_augmentation, Augmentation
from .correspond import (
    ExtractionError,
    check_equivalence,
    check_rotation_criterion,
    extract_ruling,
    parity_violations,
)
from .dga import build_dga, check_d_squared, degree_violations, differential_to_json, format_sum, format_word
from .front import (
    MultiComponentError,
    PlatDiagram,
    PlatParseError,
    maslov_potential,
    parse_plat,
    rotation_number,
    thurston_bennequin,
    validate,
)
from .ruling import enumerate_rulings, format_pairing

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class InputError(Exception):
    pass


def _read_input(arg: str) -> tuple[str, str]:
    if arg == "-":
        return sys.stdin.read(), "<stdin>"
    if arg.startswith("@"):
        name = arg[1:]
        if name not in atlas.fixture_names():
            raise InputError(f"unknown fixture {name!r}; available: {', '.join(atlas.fixture_names())}")
        return atlas.fixture_text(name), f"{name}.plat"
    path = Path(arg)
    try:
        return path.read_text(encoding="utf-8"), str(path)
    except OSError as exc:
        raise InputError(f"{arg}: {exc.strerror}") from None


def _knot(d: PlatDiagram) -> dict:
    return {"cusps": d.cusps, "crossings": list(d.crossings)}


def _info(od, dga) -> dict:
    pot = maslov_potential(od)
    return {
        "knot": _knot(od.diagram),
        "tb": thurston_bennequin(od),
        "r": rotation_number(od),
        "modulus": dga.modulus,
        "potential": list(pot.values),
        "generators": [
            {"name": g.name, "kind": "cusp" if g.is_cusp else "crossing", "grading": g.grading}
            for g in dga.generators
        ],
    }


def _cmd_info(od, dga, args):
    out = _info(od, dga)
    out["parity_ok"] = not parity_violations(od)
    return out, EXIT_OK


def _cmd_dga(od, dga, args):
    out = {"knot": _knot(od.diagram), "modulus": dga.modulus, "gradings": dga.grading}
    out["differential"] = differential_to_json(dga.differential)
    out["d_squared_zero"] = bool(check_d_squared(dga.differential))
    return out, EXIT_OK if out["d_squared_zero"] else EXIT_CHECK


def _cmd_augs(od, dga, args):
    augs = enumerate_augmentations(dga, args.rho)
    return {
        "knot": _knot(od.diagram),
        "rho": args.rho,
        "count": len(augs),
        "augmentations": [a.to_json() for a in augs],
    }, EXIT_OK


def _cmd_rulings(od, dga, args):
    rulings = enumerate_rulings(od, args.rho)
    return {
        "knot": _knot(od.diagram),
        "rho": args.rho,
        "count": len(rulings),
        "rulings": [r.to_json() for r in rulings],
    }, EXIT_OK


def _cmd_extract(od, dga, args):
    if args.support is not None:
        support = tuple(x.strip() for x in args.support.split(",") if x.strip())
        try:
            ok = is_augmentation(dga, support, args.rho)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
        if not ok:
            raise InputError(f"{{{','.join(support)}}} is not a rho={args.rho} augmentation")
        augs = [Augmentation(tuple(sorted(set(support), key=lambda x: int(x[1:]))), args.rho)]
    else:
        augs = enumerate_augmentations(dga, args.rho)
    status = EXIT_OK
    items = []
    for eps in augs:
        item = {"support": list(eps.support)}
        try:
            ex = extract_ruling(od, eps)
        except ExtractionError as exc:
            item["error"] = f"{type(exc).__name__}: {exc}"
            status = EXIT_CHECK
        else:
            item["switches"] = list(ex.switches)
            item["trace"] = [s.to_json() for s in ex.trace]
        items.append(item)
    return {"knot": _knot(od.diagram), "rho": args.rho, "extractions": items}, status


def _cmd_check(od, dga, args):
    eq = check_equivalence(od, args.rho, dga)
    rot = check_rotation_criterion(od, dga)
    d2 = bool(check_d_squared(dga.differential))
    degree_ok = not degree_violations(dga)
    parity_ok = not parity_violations(od)
    ok = eq.ok and rot.ok and d2 and degree_ok and parity_ok
    out = {
        "knot": _knot(od.diagram),
        "rho": args.rho,
        "augmentations": eq.augmentations,
        "rulings": eq.rulings,
        "equivalence": eq.to_json(),
        "rotation": rot.to_json(),
        "d_squared_zero": d2,
        "degree_ok": degree_ok,
        "parity_ok": parity_ok,
        "ok": ok,
    }
    return out, EXIT_OK if ok else EXIT_CHECK


COMMANDS = {
    "info": (_cmd_info, "classical invariants and gradings"),
    "dga": (_cmd_dga, "Chekanov-Eliashberg differential over Z/2"),
    "augs": (_cmd_augs, "enumerate augmentations"),
    "rulings": (_cmd_rulings, "enumerate normal rulings"),
    "extract": (_cmd_extract, "turn augmentations into rulings, with traces"),
    "check": (_cmd_check, "augmentation/ruling equivalence and rotation criterion"),
}


def _text(command: str, data: dict, od, dga) -> str:
    d = od.diagram
    lines = [f"plat: cusps {d.cusps}, crossings {' '.join(map(str, d.crossings)) or '(none)'}"]
    if command == "info":
        lines.append(f"tb = {data['tb']}, r = {data['r']}, gradings mod {data['modulus'] or 'Z'}")
        lines.append("potential: " + " ".join(f"{i}:{v}" for i, v in enumerate(data["potential"], 1)))
        lines.extend(f"|{g['name']}| = {g['grading']}" for g in data["generators"])
        lines.append(f"parity law: {'holds' if data['parity_ok'] else 'VIOLATED'}")
    elif command == "dga":
        for g, words in dga.differential.items():
            lines.append(f"d{g} = {format_sum(words)}")
        lines.append(f"d^2 = 0: {'yes' if data['d_squared_zero'] else 'NO'}")
    elif command == "augs":
        lines.append(f"{data['count']} augmentation(s), rho={data['rho']}")
        lines.extend("  {" + ", ".join(a["support"]) + "}" for a in data["augmentations"])
    elif command == "rulings":
        lines.append(f"{data['count']} normal ruling(s), rho={data['rho']}")
        lines.extend("  switches {" + ", ".join(r["switches"]) + "}" for r in data["rulings"])
    elif command == "extract":
        for item in data["extractions"]:
            head = "{" + ", ".join(item["support"]) + "}"
            if "error" in item:
                lines.append(f"{head} -> ERROR {item['error']}")
                continue
            lines.append(f"{head} -> switches {{{', '.join(item['switches'])}}}")
            for s in item["trace"]:
                extra = ""
                if s["betas"]:
                    extra += " betas " + " ".join(f"({p},{q})" for p, q in s["betas"])
                if s["flips"]:
                    extra += " flips " + ",".join(s["flips"])
                lines.append(f"    {s['crossing']}: {s['config']} {s['action']}{extra}")
    elif command == "check":
        eq, rot = data["equivalence"], data["rotation"]
        lines.append(f"rho={data['rho']}: {data['augmentations']} augmentation(s), {data['rulings']} ruling(s)")
        lines.append(f"existence equivalence: {'holds' if eq['equivalent'] else 'FAILS'}")
        for failure in eq["extraction_failures"]:
            lines.append(f"  extraction failure: {failure}")
        for img in eq["images"]:
            lines.append(f"  {img['count']} x switches {{{', '.join(img['switches'])}}}")
        lines.append(
            f"rotation criterion: r = {rot['rotation_number']}, 2-graded augmentation "
            f"{'exists' if rot['has_2_graded_augmentation'] else 'absent'}, "
            f"{'satisfied' if rot['ok'] else 'VIOLATED'}"
        )
        lines.append(f"d^2 = 0: {data['d_squared_zero']}, degree -1: {data['degree_ok']}, parity: {data['parity_ok']}")
        lines.append("OK" if data["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="plat file, '-' for stdin, '@name' for a bundled fixture")
    common.add_argument("--rho", type=int, default=0, help="grading parameter: 0 graded, 1 ungraded, k k-graded")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--orientation", choices=("canonical", "reversed"), default="canonical")

    parser = argparse.ArgumentParser(prog="legaug", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "extract":
            p.add_argument("--support", help="comma-separated generators of one augmentation, e.g. q1,q3")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        text, source = _read_input(args.input)
        diagram = parse_plat(text, source)
        try:
            od = validate(diagram, args.orientation)
        except MultiComponentError as exc:
            raise InputError(f"{source}: {exc}") from None
        dga = build_dga(od)
        handler = COMMANDS[args.command][0]
        data, status = handler(od, dga, args)
    except (InputError, PlatParseError, IllegalRhoError) as exc:
        print(f"legaug: error: {exc}", file=stderr)
        return EXIT_INPUT
    if args.format == "json":
        stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        stdout.write(_text(args.command, data, od, dga))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
