"""Command-line front end. One JSON document per invocation on stdout.

Exit codes: 0 success, 2 domain error (one machine-parsable "Name: reason"
line on stderr), 1 internal failure. --plain switches to human-readable
output. The enumeration cap may be overridden by --cap or the
CONGRUENCE_LAB_CAP environment variable; the flag wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import CongruenceLabError, CounterexampleFound, ParseError
from .gamma import gamma_index, gamma_level, gamma_member
from .intmat import IntMatrix
from .modular import ModMatrix, enumerate_sl
from .selfcheck import run_selfcheck
from .torsion import matrix_order, mod_spectrum
from .witnesses import phi_k, witness_p, witness_rf
from .words import decompose_int, decompose_mod, lift_to_int

__all__ = ["run", "main"]

ENV_CAP = "CONGRUENCE_LAB_CAP"


def _any_matrix(text: str) -> IntMatrix | ModMatrix:
    return ModMatrix.from_text(text) if "mod" in text else IntMatrix.from_text(text)


def _resolve_cap(args) -> int | None:
    if args.cap is not None:
        return args.cap
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"bad {ENV_CAP} value {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--plain", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap override")

    parser = argparse.ArgumentParser(
        prog="congruence-lab",
        description="Exact computations in SL_n(Z) and its congruence quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="elementary word for a matrix over Z or Z/N")
    p.add_argument("matrix", help='matrix text, e.g. "0,-1;1,0" or "0,1;1,1 mod 2"')

    p = sub.add_parser("lift", parents=[common], help="integer matrix of det 1 reducing to the input mod N")
    p.add_argument("matrix")
    p.add_argument("--mod", type=int, required=True, metavar="N")

    p = sub.add_parser("level", parents=[common], help="exact congruence level of a matrix")
    p.add_argument("matrix")

    p = sub.add_parser("member", parents=[common], help="membership in Gamma(N)")
    p.add_argument("matrix")
    p.add_argument("--mod", type=int, required=True, metavar="N")

    p = sub.add_parser("index", parents=[common], help="index of Gamma(N), i.e. |SL_n(Z/N)|")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int, required=True, metavar="N")

    p = sub.add_parser("enumerate", parents=[common], help="all of SL_n(Z/N) by brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int, required=True, metavar="N")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("order", parents=[common], help="exact multiplicative order in SL_n(Z)")
    p.add_argument("matrix")

    p = sub.add_parser("spectrum", parents=[common], help="element orders of SL_n(Z/N)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=int, required=True, metavar="N")

    p = sub.add_parser("phi", parents=[common], help="depth-map image of a Gamma(p^k) element in sl_n(Z/p)")
    p.add_argument("matrix")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("witness-rf", parents=[common], help="finite quotient separating a matrix from 1")
    p.add_argument("matrix")

    p = sub.add_parser("witness-p", parents=[common], help="p-group quotient separating a Gamma(p) element from 1")
    p.add_argument("matrix")
    p.add_argument("--prime", type=int, required=True)

    p = sub.add_parser("selfcheck", parents=[common], help="run the built-in invariant suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _dispatch(args) -> tuple[int, object, str]:
    """Returns (exit_code, json_payload, plain_text)."""
    cmd = args.command
    if getattr(args, "n", None) is not None and args.n < 1:
        raise ParseError("--n must be >= 1")
    if getattr(args, "k", None) is not None and args.k < 1:
        raise ParseError("--k must be >= 1")

    if cmd == "decompose":
        m = _any_matrix(args.matrix)
        word = decompose_mod(m) if isinstance(m, ModMatrix) else decompose_int(m)
        text = word.to_text()
        return 0, {"word": text, "n": word.n, "length": len(word)}, text

    if cmd == "lift":
        y = ModMatrix(IntMatrix.from_text(args.matrix).rows, args.mod)
        lifted = lift_to_int(y)
        return 0, {"matrix": lifted.to_text(), "mod": args.mod}, lifted.to_text()

    if cmd == "level":
        lvl = gamma_level(IntMatrix.from_text(args.matrix))
        payload = {"level": "infinite" if lvl == 0 else lvl}
        return 0, payload, "infinite" if lvl == 0 else str(lvl)

    if cmd == "member":
        ok = gamma_member(IntMatrix.from_text(args.matrix), args.mod)
        return 0, {"member": ok}, "yes" if ok else "no"

    if cmd == "index":
        value = gamma_index(args.n, args.mod)
        return 0, value, str(value)

    if cmd == "enumerate":
        matrices = enumerate_sl(args.n, args.mod, cap=_resolve_cap(args))
        if args.count_only:
            return 0, {"count": len(matrices)}, str(len(matrices))
        texts = [m.to_text() for m in matrices]
        return 0, {"count": len(texts), "matrices": texts}, "\n".join(texts)

    if cmd == "order":
        result = matrix_order(IntMatrix.from_text(args.matrix))
        if result.is_finite:
            return 0, {"kind": "finite", "value": result.value}, f"finite {result.value}"
        return 0, {"kind": "infinite"}, "infinite"

    if cmd == "spectrum":
        orders = sorted(mod_spectrum(args.n, args.mod, cap=_resolve_cap(args)))
        return 0, {"orders": orders}, " ".join(map(str, orders))

    if cmd == "phi":
        image = phi_k(IntMatrix.from_text(args.matrix), args.prime, args.k)
        payload = {"prime": args.prime, "k": args.k, "image": image.to_text()}
        return 0, payload, image.to_text()

    if cmd == "witness-rf":
        w = witness_rf(IntMatrix.from_text(args.matrix))
        return 0, w.to_json(), _plain_witness(w)

    if cmd == "witness-p":
        w = witness_p(IntMatrix.from_text(args.matrix), args.prime)
        return 0, w.to_json(), _plain_witness(w)

    if cmd == "selfcheck":
        report = run_selfcheck(quick=args.quick, seed=args.seed, cap=_resolve_cap(args))
        lines = [
            f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']:<34} {c['detail']}"
            for c in report["checks"]
        ]
        lines.append(f"{report['passed']} passed, {report['failed']} failed ({report['mode']} mode)")
        return (0 if report["failed"] == 0 else 1), report, "\n".join(lines)

    raise AssertionError(f"unhandled command {cmd}")


def _plain_witness(w) -> str:
    return "\n".join(f"{key}: {value}" for key, value in w.to_json().items())


def run(argv: list[str] | None = None) -> int:
    """Entry point returning the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        code, payload, plain = _dispatch(args)
    except CongruenceLabError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except CounterexampleFound as e:
        print(f"CounterexampleFound: {e}", file=sys.stderr)
        return 1
    except Exception as e:  # pragma: no cover - internal failure guard
        print(f"InternalError: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    print(plain if args.plain else json.dumps(payload))
    return code


def main() -> None:
    sys.exit(run())
