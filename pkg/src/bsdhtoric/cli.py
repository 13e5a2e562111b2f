"""Command-line interface.

Examples::

    bsdh-toric expand --type A2 --word 1,2,1 --seq 1,2,3
    bsdh-toric basis --type A3 --word 1,2,3,1,2,1 --algorithm weyl
    bsdh-toric mori --type A3 --word 1,2,3,1,2,1 --format json
    bsdh-toric fano --cartan cartan.json --word 1,2
    bsdh-toric ample --type A2 --word 1,2,1 --divisor divisor.json
    bsdh-toric report --input problem.json

Exit codes: 0 success, 1 usage, 2 validation, 3 overflow, 4 internal consistency.
All positions and root indices are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import chow, enumeration, extremal, intersect
from .errors import ArithmeticOverflow, ConsistencyError, ValidationError
from .rootsys import RootSystem, named_root_system, parse_type, validate_cartan
from .word import Word, admissible, label, make_word

COMMANDS = ("expand", "basis", "mori", "fano", "ample", "enumerate", "report")
EXPAND_METHODS = {"fast": chow.expand, "oracle": chow.expand_oracle, "coroot": chow.expand_coroot}

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_OVERFLOW, EXIT_CONSISTENCY = range(5)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    word: Word
    seq: tuple[int, ...] | None = None
    divisor: intersect.DivisorClass | None = None
    method: str = "fast"
    algorithm: str = "comp"
    fmt: str = "text"
    max_enumerate: int = enumeration.DEFAULT_MAX_M


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bsdh-toric", description="Curve and divisor theory of the toric degeneration of a BSDH variety.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_argument_group("input (use --input, or a root system flag plus --word)")
    src.add_argument("--input", metavar="FILE", help="JSON document with root system, word and optional seq/divisor")
    src.add_argument("--type", nargs="+", metavar="F N", help="named finite type, e.g. 'A2' or 'A 2'")
    src.add_argument("--cartan", metavar="FILE", help="JSON Cartan matrix (bare or as {'cartan': ...})")
    src.add_argument("--word", metavar="CSV", help="root indices, e.g. 1,2,1")
    p.add_argument("--seq", metavar="CSV", help="admissible positions for 'expand'")
    p.add_argument("--divisor", metavar="FILE", help="JSON divisor for 'ample'")
    p.add_argument("--method", choices=tuple(EXPAND_METHODS), default="fast")
    p.add_argument("--algorithm", choices=extremal.ALGORITHMS, default="comp")
    p.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    p.add_argument("--max-enumerate", type=int, default=enumeration.DEFAULT_MAX_M, metavar="M")
    return p


def _csv(text: str, what: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from None


def root_system_from_json(doc) -> RootSystem:
    """Accept {"type": {"family": "A", "rank": 3}}, {"cartan": [[...]]} or a bare matrix."""
    if isinstance(doc, list):
        return validate_cartan(doc)
    if not isinstance(doc, dict):
        raise UsageError("root system JSON must be an object or a matrix")
    keys = [k for k in ("type", "cartan") if k in doc]
    if len(keys) != 1:
        raise UsageError("root system JSON needs exactly one of 'type' or 'cartan'")
    if keys[0] == "cartan":
        return validate_cartan(doc["cartan"])
    t = doc["type"]
    if isinstance(t, str):
        return parse_type(t)
    if not isinstance(t, dict) or "family" not in t or "rank" not in t:
        raise UsageError("'type' must look like {'family': 'A', 'rank': 3}")
    return named_root_system(t["family"], t["rank"])


def divisor_from_json(doc) -> intersect.DivisorClass:
    if isinstance(doc, dict) and "divisor" in doc:
        doc = doc["divisor"]
    if not isinstance(doc, dict) or "basis" not in doc:
        raise UsageError("divisor JSON needs a 'basis' key")
    basis = str(doc["basis"]).lower()
    if basis == "lt":
        if "coeffs" not in doc:
            raise UsageError("LT divisor needs 'coeffs'")
        return intersect.DivisorClass.lt(doc["coeffs"])
    if basis == "boundary":
        if "schubert" not in doc:
            raise UsageError("boundary divisor needs 'schubert'")
        return intersect.DivisorClass.boundary(doc["schubert"], doc.get("nonschubert"))
    raise UsageError(f"unknown divisor basis {doc['basis']!r}")


def parse_input(argv: list[str] | None = None) -> RunConfig:
    args = _parser().parse_args(argv)
    seq_raw = args.seq
    divisor = divisor_from_json(_load_json(args.divisor)) if args.divisor else None

    if args.input:
        if args.type or args.cartan or args.word:
            raise UsageError("--input cannot be combined with --type, --cartan or --word")
        doc = _load_json(args.input)
        if not isinstance(doc, dict) or "word" not in doc:
            raise UsageError("--input JSON needs a 'word' key")
        rs = root_system_from_json({k: doc[k] for k in ("type", "cartan") if k in doc})
        roots = doc["word"]
        if seq_raw is None and "seq" in doc:
            seq_raw = ",".join(map(str, doc["seq"]))
        if divisor is None and "divisor" in doc:
            divisor = divisor_from_json(doc["divisor"])
    else:
        if bool(args.type) == bool(args.cartan):
            raise UsageError("give exactly one of --type or --cartan (or use --input)")
        if args.word is None:
            raise UsageError("--word is required")
        rs = parse_type(" ".join(args.type)) if args.type else root_system_from_json(_load_json(args.cartan))
        roots = _csv(args.word, "--word")
    if not isinstance(roots, list) or not all(isinstance(r, int) for r in roots):
        raise UsageError("word must be a list of integers")

    w = make_word(rs, roots)
    config = RunConfig(args.command, w, method=args.method, algorithm=args.algorithm, fmt=args.fmt,
                       max_enumerate=args.max_enumerate, divisor=divisor)
    if args.command == "expand" and seq_raw is None:
        raise UsageError("'expand' needs --seq")
    if seq_raw is not None:
        config.seq = admissible(w, _csv(seq_raw, "--seq"))
    if args.command == "ample" and divisor is None:
        raise UsageError("'ample' needs --divisor")
    if args.command != "expand" and w.m == 0:
        raise ValidationError("the word must be nonempty")
    return config


# -- command bodies: each returns (json payload, text lines) -------------------


def _expand(cfg: RunConfig):
    c = EXPAND_METHODS[cfg.method](cfg.word, cfg.seq)
    payload = {"word": list(cfg.word.roots), "seq": list(cfg.seq), "method": cfg.method, "coeffs": list(c.coeffs)}
    return payload, [f"{label(cfg.seq)} = {c}"]


def _basis(cfg: RunConfig):
    b = extremal.extremal_basis(cfg.word, cfg.algorithm)
    payload = {"subsequences": [list(s) for s in b.subsequences], "rays": [list(r.coeffs) for r in b.rays]}
    lines = [f"L_{j}(w) = {label(s)} = {r}" for j, (s, r) in enumerate(zip(b.subsequences, b.rays), 1)]
    return payload, lines


def _mori(cfg: RunConfig):
    rays = intersect.mori_rays(cfg.word)
    return {"mori_rays": rays}, ["Mori rays: " + (", ".join(f"L_{r}" for r in rays) or "none")]


def _fano(cfg: RunConfig):
    w = cfg.word
    rows = []
    for r in range(1, w.m + 1):
        reason = intersect.mori_failure(w, r)
        rows.append({"position": r, "mori": reason is None, "K_dot": intersect.canonical_dot_schubert(w, r), "reason": reason})
    fano = all(row["mori"] for row in rows)
    head = "Fano" if fano else "not Fano: " + next(row["reason"] for row in rows if not row["mori"])
    lines = [head] + [
        f"  L_{row['position']}: K.L={row['K_dot']}  " + ("Mori" if row["mori"] else row["reason"]) for row in rows
    ]
    return {"fano": fano, "lines": rows}, lines


def _ample(cfg: RunConfig):
    w, D = cfg.word, cfg.divisor
    basis = extremal.extremal_basis(w, cfg.algorithm)
    dots = intersect.ray_intersections(w, D, basis)
    lt = intersect.to_lt(w, D)
    toric = all(v > 0 for v in dots)
    bsdh = intersect.bsdh_ample(lt) if lt is not None else None
    payload = {
        "toric_ample": toric,
        "bsdh_ample": bsdh,
        "ray_intersections": dots,
        "lt_coeffs": list(lt.lt_coeffs) if lt is not None else None,
    }
    lines = [
        f"toric ample: {'yes' if toric else 'no'}",
        "BSDH ample: " + ("n/a (non-Schubert boundary part)" if bsdh is None else "yes" if bsdh else "no"),
    ] + [f"  D.L_{j}(w) = {v}" for j, v in enumerate(dots, 1)]
    return payload, lines


def _enumerate(cfg: RunConfig):
    rep = enumeration.verify_report(cfg.word, cfg.max_enumerate)
    lines = [f"fixed points: {rep.fixed_points}", f"invariant curves: {rep.curves}"]
    for c in rep.clauses:
        lines.append(f"  {c.name}: {'pass' if c.passed else 'FAIL'}" + (f"  witness={c.witness}" if c.witness else ""))
    if not rep.passed:
        raise ConsistencyError("enumeration report has failing clauses", report=rep.to_json())
    return rep.to_json(), lines


def _report(cfg: RunConfig):
    w = cfg.word
    out = {"root_system": {"name": w.rs.name, "cartan": [list(r) for r in w.rs.cartan], "finite": w.rs.finite},
           "word": list(w.roots)}
    lines = [f"root system {w.rs} ({'finite' if w.rs.finite else 'non-finite'}), word {list(w.roots)}"]
    parts = [("basis", _basis), ("mori", _mori), ("fano", _fano)]
    if cfg.seq is not None:
        parts.insert(0, ("expand", _expand))
    if cfg.divisor is not None:
        parts.append(("ample", _ample))
    if w.m <= cfg.max_enumerate:
        parts.append(("enumerate", _enumerate))
    for key, fn in parts:
        payload, text = fn(cfg)
        out[key] = payload
        lines += [f"[{key}]"] + text
    out["canonical_dots"] = [intersect.canonical_dot_schubert(w, r) for r in range(1, w.m + 1)]
    return out, lines


HANDLERS = {
    "expand": _expand,
    "basis": _basis,
    "mori": _mori,
    "fano": _fano,
    "ample": _ample,
    "enumerate": _enumerate,
    "report": _report,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    payload, lines = HANDLERS[cfg.command](cfg)
    if cfg.fmt == "json":
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        return run(parse_input(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticOverflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        if exc.details:
            print(json.dumps(exc.details, default=str), file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
