"""hullforge command line: construct, verify, atlas, export.

Exit codes: 0 certified 1-d hull MDS code, 2 precondition failure,
3 certification failure, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .artifacts import ArtifactError, dumps, load_matrix, matrix_to_text
from .atlas import build_atlas, to_csv, to_markdown
from .code import CertificationError, LinearCode, certify
from .constructions import FAMILIES, ConstructionError, HullCode, PreconditionError, construct
from .gf import GF, FieldError, prime_power
from .grs import GrsError, grs_dual

EXIT_OK, EXIT_PRECONDITION, EXIT_CERT, EXIT_IO = 0, 2, 3, 4

# parameters each family reads from the command line
FAMILY_PARAMS = {
    "even-q": ("n", "s"),
    "xn-x": ("n", "s"),
    "subfield": ("r", "s"),
    "roots-of-unity": ("n", "s", "variant"),
    "additive-cosets": ("r", "t", "s"),
    "mult-cosets": ("n", "t", "s", "variant", "extend"),
}
for _f in ("1", "2", "3a", "3b"):
    FAMILY_PARAMS[f"square-{_f}"] = ("N", "s")
for _f in ("4", "5", "6"):
    FAMILY_PARAMS[f"square-{_f}"] = ("r", "t", "s")
for _f in ("7", "8"):
    FAMILY_PARAMS[f"square-{_f}"] = ("t", "s")
for _f in ("9", "11"):
    FAMILY_PARAMS[f"square-{_f}"] = ("m0", "l", "t", "s")
for _f in ("10", "12"):
    FAMILY_PARAMS[f"square-{_f}"] = ("l", "s")


class _Fail(Exception):
    def __init__(self, code: int, kind: str, message: str, **extra):
        super().__init__(message)
        self.code, self.kind, self.extra = code, kind, extra


def _field(args) -> GF | None:
    mod = None
    if args.modulus:
        try:
            mod = [int(c) for c in args.modulus.replace(" ", "").split(",")]
        except ValueError:
            raise _Fail(EXIT_IO, "parse", f"bad --modulus {args.modulus!r}") from None
    try:
        if args.q is not None:
            p, m = prime_power(args.q)
        elif args.p is not None:
            p, m = args.p, args.m or 1
        elif mod is not None:
            raise _Fail(EXIT_PRECONDITION, "precondition", "--modulus needs --q or --p/--m")
        else:
            return None
        return GF(p, m, mod)
    except FieldError as e:
        raise _Fail(EXIT_PRECONDITION, "precondition", str(e)) from None


def _write(path: str | None, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as e:
        raise _Fail(EXIT_IO, "io", str(e)) from None


def _params(args) -> dict:
    keys = FAMILY_PARAMS[args.family]
    out = {}
    for key in keys:
        if key == "N":
            val = args.N if args.N is not None else args.n
        elif key == "extend":
            if args.extend:
                out["extend"] = True
            continue
        else:
            val = getattr(args, key)
        if val is None:
            raise _Fail(EXIT_PRECONDITION, "precondition", f"family {args.family} needs --{key}")
        if key == "variant" and args.family == "mult-cosets":
            try:
                val = int(val)
            except ValueError:
                raise _Fail(EXIT_PRECONDITION, "precondition", f"variant must be 1..8, got {val}") from None
        out[key] = val
    if args.dual:
        out["dual"] = True
    return out


def cmd_construct(args) -> int:
    F = _field(args)
    if F is None:
        raise _Fail(EXIT_PRECONDITION, "precondition", "give the field with --q or --p/--m")
    params = _params(args)
    try:
        hc = construct(F, args.family, **params)
    except CertificationError as e:
        raise _Fail(EXIT_CERT, "certification", str(e), discrepancy=str(e.discrepancy)) from None
    except ConstructionError as e:
        raise _Fail(EXIT_PRECONDITION, "precondition", str(e), family=args.family) from None
    if args.format == "text":
        _write(args.out, matrix_to_text(F, hc.generator()))
    else:
        _write(args.out, dumps(hc.to_dict()))
    c = hc.cert
    print(f"[{c.n},{c.k},{c.d}] hull_dim={c.hull_dim} mds={c.is_mds}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        F, M, _ = load_matrix(args.path, _field(args))
    except (ArtifactError, GrsError, FieldError, KeyError) as e:
        raise _Fail(EXIT_IO, "parse", str(e)) from None
    C = LinearCode(F, M)
    cert = certify(C)
    out = cert.to_dict()
    out["rank_deficient"] = C.rank_deficient
    print(json.dumps(out))
    return EXIT_OK if cert.hull_dim == 1 and cert.is_mds else EXIT_CERT


def cmd_atlas(args) -> int:
    qs = []
    for tok in args.qs.split(","):
        try:
            qs.append(int(tok))
            prime_power(int(tok))
        except (ValueError, FieldError) as e:
            raise _Fail(EXIT_PRECONDITION, "precondition", f"bad q {tok!r}: {e}") from None
    fams = args.families.split(",") if args.families else None
    rows = build_atlas(qs, args.max_N, fams, workers=args.workers)
    _write(args.out, to_markdown(rows) if args.format == "markdown" else to_csv(rows))
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        with open(args.path) as fh:
            d = json.load(fh)
        hc = HullCode.from_dict(d)
    except (OSError, json.JSONDecodeError, KeyError, GrsError, FieldError) as e:
        raise _Fail(EXIT_IO, "parse", str(e)) from None
    if args.format == "json":
        _write(args.out, dumps(hc.to_dict()))
    elif args.format == "text":
        _write(args.out, matrix_to_text(hc.field, hc.generator()))
    else:
        _write(args.out, matrix_to_text(hc.field, grs_dual(hc.spec).generator()))
    return EXIT_OK


def _field_flags(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, help="field size (prime power)")
    p.add_argument("--p", type=int, help="characteristic")
    p.add_argument("--m", type=int, help="extension degree")
    p.add_argument("--modulus", help="modulus coefficients, constant term first, e.g. 2,0,0,2,1")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hullforge", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and certify a code from a family")
    _field_flags(c)
    c.add_argument("--family", required=True, choices=sorted(FAMILY_PARAMS))
    for flag in ("n", "N", "s", "t", "r", "l", "m0"):
        c.add_argument(f"--{flag}", type=int)
    c.add_argument("--variant", help="1..8 for mult-cosets, odd-k/even-k for roots-of-unity")
    c.add_argument("--extend", action="store_true", help="allow t past the guaranteed range")
    c.add_argument("--dual", action="store_true", help="emit the dual code")
    c.add_argument("--out")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="certify a generator matrix")
    v.add_argument("path")
    _field_flags(v)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("atlas", help="tabulate every admissible construction")
    a.add_argument("--q", dest="qs", required=True, help="comma separated field sizes")
    a.add_argument("--max-N", dest="max_N", type=int, default=24)
    a.add_argument("--families", help="comma separated subset of: " + ",".join(FAMILIES))
    a.add_argument("--format", choices=("csv", "markdown"), default="csv")
    a.add_argument("--workers", type=int, default=1)
    a.add_argument("--out")
    a.set_defaults(func=cmd_atlas)

    e = sub.add_parser("export", help="re-emit an artifact")
    e.add_argument("path")
    e.add_argument("--format", choices=("json", "text", "parity-check"), default="json")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as f:
        rec = {"error": f.kind, "message": str(f), **f.extra}
        print(json.dumps(rec), file=sys.stderr)
        return f.code


if __name__ == "__main__":
    sys.exit(main())
