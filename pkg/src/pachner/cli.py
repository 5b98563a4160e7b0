"""Command line interface: ``pachner <command> ...``.

Complexes are given either as a file (facet list or JSON) or as a builtin
name, with the dimension parameter after a colon: ``torus7``,
``boundary_simplex:4``. Exit status is 0 on success, 1 when a verification
fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus, fvector
from .complex import SimplicialComplex, simplex
from .errors import PachnerError
from .formats import format_json, read_complex, write_complex
from .gadget import a_vector, gadget_2, verify_gadget
from .harness import balance_check, formula_from_spec, invariance_report, invariant_delta
from .moves import BistellarMove, MoveLog, WalkConfig, apply_move, enumerate_moves, random_walk, replay
from .recognition import Verdict, sphere_recognize, verify_closed_manifold

SCHEMA = 1


class UsageError(Exception):
    pass


def load_complex(spec: str) -> SimplicialComplex:
    if Path(spec).is_file():
        return read_complex(spec)
    name, _, param = spec.partition(":")
    try:
        return corpus.builtin_complex(name, int(param) if param else None)
    except KeyError as exc:
        raise UsageError(f"{spec!r} is neither a file nor a builtin ({exc.args[0]})") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise UsageError(f"bad dimension range {text!r}; use N or A..B") from None


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(",", " ").split())


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _table(rows: list[tuple]) -> list[str]:
    widths = [max(len(str(r[j])) for r in rows) for j in range(len(rows[0]))]
    return ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def _save_log(log: MoveLog, path: str | None) -> None:
    if path:
        Path(path).write_text(log.to_jsonl())


def _resolve_move(m: SimplicialComplex, args: argparse.Namespace) -> BistellarMove:
    sigma = simplex(_ints(args.sigma))
    if args.tau:
        tau = simplex(_ints(args.tau))
        if args.i == 0 and tau != (m.next_label,):
            raise UsageError("0-moves take the next fresh label; omit --tau")
        return BistellarMove(sigma, tau, args.i, m.dim)
    for mv in enumerate_moves(m, args.i):
        if mv.sigma == sigma:
            return mv
    raise UsageError(f"no valid {args.i}-move with sigma={list(sigma)}")


# --- commands -------------------------------------------------------------------

def cmd_info(args):
    m = load_complex(args.complex)
    payload = {
        "schema": SCHEMA,
        "dim": m.dim,
        "f_vector": list(m.f_vector),
        "euler_characteristic": m.euler_characteristic,
        "vertices": len(m.vertices),
    }
    lines = _table([("dim", m.dim), ("f-vector", m.f_vector), ("euler", m.euler_characteristic)])
    status = 0
    if args.verify:
        if args.seed is None:
            raise UsageError("--verify runs a randomized search; pass --seed")
        check = verify_closed_manifold(m, args.budget, args.seed)
        payload["manifold"] = {"verdict": check.verdict.value, "witness": check.witness, "reason": check.reason}
        lines += _table([("manifold", check.verdict.value, check.reason)])
        status = 0 if check.verdict is Verdict.VERIFIED else 1
    _emit(args, payload, lines)
    return status


def cmd_moves(args):
    m = load_complex(args.complex)
    indices = [args.i] if args.i is not None else range(m.dim + 1)
    moves = [mv for i in indices for mv in enumerate_moves(m, i)]
    payload = {"schema": SCHEMA, "count": len(moves), "moves": [mv.to_dict() for mv in moves]}
    lines = [f"{len(moves)} moves"] + [str(mv) for mv in moves]
    _emit(args, payload, lines)
    return 0


def cmd_apply(args):
    m = load_complex(args.complex)
    mv = _resolve_move(m, args)
    out = apply_move(m, mv)
    if args.out:
        write_complex(out, args.out)
    delta = [b - a for a, b in zip(m.f_vector, out.f_vector)]
    payload = {"schema": SCHEMA, "move": mv.to_dict(), "f_vector": list(out.f_vector), "delta": delta}
    _emit(args, payload, [str(mv), f"f-vector {out.f_vector}  delta {tuple(delta)}"])
    return 0


def cmd_walk(args):
    m = load_complex(args.complex)
    weights = tuple(float(w) for w in args.weights.split(",")) if args.weights else None
    end, log = random_walk(m, WalkConfig(args.steps, args.seed, weights, args.temperature, args.cooling))
    _save_log(log, args.log)
    if args.out:
        write_complex(end, args.out)
    counts = [sum(1 for mv in log.moves if mv.i == i) for i in range(m.dim + 1)]
    payload = {"schema": SCHEMA, "seed": args.seed, "steps": len(log), "move_counts": counts,
               "start_f_vector": list(m.f_vector), "end_f_vector": list(end.f_vector)}
    _emit(args, payload, _table([("seed", args.seed), ("moves by index", counts),
                                 ("start", m.f_vector), ("end", end.f_vector)]))
    return 0


def cmd_replay(args):
    m = load_complex(args.complex)
    log = MoveLog.from_jsonl(Path(args.log).read_text())
    end = replay(m, log.moves)
    if args.out:
        write_complex(end, args.out)
    payload = {"schema": SCHEMA, "moves": len(log), "end_f_vector": list(end.f_vector)}
    _emit(args, payload, [f"replayed {len(log)} moves, end f-vector {end.f_vector}"])
    return 0


def cmd_recognize(args):
    m = load_complex(args.complex)
    cert = sphere_recognize(m, args.budget, args.seed)
    if cert is None:
        payload = {"schema": SCHEMA, "verdict": "unknown", "budget": args.budget, "seed": args.seed}
        _emit(args, payload, [f"unknown after {args.budget} moves (seed {args.seed})"])
        return 1
    _save_log(cert.log, args.log)
    payload = {"schema": SCHEMA, "verdict": "sphere", "seed": args.seed, "length": len(cert.log),
               "end_f_vector": list(cert.end.f_vector), "certificate_replays": cert.check()}
    _emit(args, payload, [f"sphere: {len(cert.log)} moves to {cert.end.f_vector} (seed {args.seed})"])
    return 0


def derivation(n: int) -> dict:
    spectrum = fvector.h_values(n)
    psi = fvector.derive_psi(n)
    prop = fvector.proportionality(n)
    return {
        "n": n,
        "H": {str(i): str(spectrum[i]) for i in range(-1, n + 1)},
        "degenerate": spectrum.degenerate,
        "c_matrix": fvector.c_matrix(n),
        "move_count_differences": {
            f"m{i}-m{n - 1 - i}": str(form) for i, form in enumerate(fvector.move_count_forms(n))
        },
        "psi": {"full": psi.as_strings(), "reduced": psi.reduce().as_strings(), "text": str(psi)},
        "euler_psi": {"full": fvector.euler_psi(n).as_strings(),
                      "reduced": fvector.euler_psi(n, reduced=True).as_strings()},
        "lambda": None if prop.both_zero else str(prop.lam),
        "both_zero": prop.both_zero,
        "global": [str(c) for c in fvector.globalize(n, psi.reduce())],
    }


def cmd_derive(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    d = derivation(args.n)
    lines = _table([
        ("H", " ".join(f"H{i}={v}" for i, v in d["H"].items())),
        ("psi", d["psi"]["text"]),
        ("lambda", d["lambda"] if d["lambda"] is not None else "both zero"),
        ("global", " ".join(d["global"])),
        *[(k, v) for k, v in d["move_count_differences"].items()],
    ])
    _emit(args, {"schema": SCHEMA, **d}, lines)
    return 0


def cmd_verify_theorem(args):
    rows, results, ok = [("n", "result", "H-consistent")], [], True
    for n in parse_range(args.n):
        if n < 2:
            raise UsageError("dimensions start at 2")
        try:
            prop = fvector.proportionality(n)
            result = "both-zero" if prop.both_zero else f"lambda={prop.lam}"
        except PachnerError as exc:
            prop, result, ok = None, f"not-proportional: {exc}", False
        psi, spectrum = fvector.derive_psi(n), fvector.h_values(n)
        consistent = all(psi.gradient_dot(fvector.r_column(n, i)) == spectrum[i] for i in range(n))
        ok = ok and consistent
        rows.append((n, result, consistent))
        results.append({"n": n, "result": result, "h_consistent": consistent,
                        "lambda": None if prop is None or prop.both_zero else str(prop.lam)})
    _emit(args, {"schema": SCHEMA, "pass": ok, "results": results}, _table(rows))
    return 0 if ok else 1


def cmd_gadget(args):
    if args.n != 2:
        raise UsageError("only the 2-dimensional gadget cell is constructed")
    k = gadget_2()
    report = verify_gadget(k)
    meta = {
        "base": k.base,
        "boundary_vertices": list(k.boundary_vertices),
        "designated_moves": [mv.to_dict() for mv in k.designated_moves],
        "a_vector": list(a_vector(k)),
    }
    if args.emit:
        data = json.loads(format_json(k.cell, "gadget_2"))
        data.update(meta)
        Path(args.emit).write_text(json.dumps(data) + "\n")
    payload = {"schema": SCHEMA, "pass": report.passed, "reasons": report.reasons,
               "f_vector": list(k.cell.f_vector), **meta}
    _emit(args, payload, _table([("verify", "pass" if report else "fail"), ("a_vector", a_vector(k)),
                                 ("f-vector", k.cell.f_vector)]) + report.reasons)
    return 0 if report else 1


def cmd_invariance(args):
    m = load_complex(args.complex)
    psi = formula_from_spec(m.dim, args.psi)
    report = invariance_report(m, psi, WalkConfig(args.steps, args.seed))
    payload = report.to_dict()
    payload["psi"] = str(psi)
    lines = [f"psi = {psi}", f"start value {report.start_value}"]
    if report.invariant:
        lines.append(f"invariant over {report.steps} steps (seed {args.seed})")
    else:
        w = report.witness
        lines.append(f"witness at step {w.step}: {w.move} changes {w.before} -> {w.after}")
    _emit(args, payload, lines)
    return 0 if report.invariant else 1


def cmd_balance(args):
    m = load_complex(args.complex)
    psi = formula_from_spec(m.dim, args.psi)
    if args.all:
        moves = [mv for i in range(m.dim + 1) for mv in enumerate_moves(m, i)]
    elif args.sigma is not None and args.i is not None:
        moves = [_resolve_move(m, args)]
    else:
        raise UsageError("give --i and --sigma, or --all")
    rows, results, ok = [("move", "balance", "delta")], [], True
    for mv in moves:
        lhs, delta = balance_check(m, mv, psi), invariant_delta(m, mv, psi)
        ok = ok and lhs == 0 and lhs == delta
        rows.append((str(mv), str(lhs), str(delta)))
        results.append({"move": mv.to_dict(), "balance": str(lhs), "delta": str(delta)})
    _emit(args, {"schema": SCHEMA, "psi": str(psi), "balanced": ok, "results": results}, _table(rows))
    return 0 if ok else 1


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pachner", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help, complex_arg=True, seed=None):
        p = sub.add_parser(name, help=help)
        if complex_arg:
            p.add_argument("complex", help="file or builtin name[:n]")
        p.add_argument("--format", choices=("json", "text"), default="json")
        if seed == "required":
            p.add_argument("--seed", type=int, required=True)
        elif seed == "optional":
            p.add_argument("--seed", type=int)
        p.set_defaults(func=func)
        return p

    p = command("info", cmd_info, "f-vector, Euler characteristic, manifold check", seed="optional")
    p.add_argument("--verify", action="store_true", help="check that all vertex links are spheres")
    p.add_argument("--budget", type=int, default=10_000)

    p = command("moves", cmd_moves, "list valid bistellar moves")
    p.add_argument("--i", type=int)

    for name, func, help in (("apply", cmd_apply, "apply one move"),
                             ("balance", cmd_balance, "balance equation of moves under a formula")):
        p = command(name, func, help)
        p.add_argument("--i", type=int, required=(name == "apply"))
        p.add_argument("--sigma", required=(name == "apply"), help="vertices, e.g. 1,2,3")
        p.add_argument("--tau")
        if name == "apply":
            p.add_argument("--out")
        else:
            p.add_argument("--psi", default="euler")
            p.add_argument("--all", action="store_true")

    p = command("walk", cmd_walk, "seeded random walk of moves", seed="required")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--weights", help="comma separated per-index weights")
    p.add_argument("--temperature", type=float)
    p.add_argument("--cooling", type=float, default=1.0)
    p.add_argument("--log", help="write the move log (JSON lines)")
    p.add_argument("--out", help="write the end complex")

    p = command("replay", cmd_replay, "replay a move log")
    p.add_argument("log")
    p.add_argument("--out")

    p = command("recognize-sphere", cmd_recognize, "flip search towards a simplex boundary", seed="required")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--log", help="write the certificate (JSON lines)")

    p = command("derive", cmd_derive, "derive the local formula for dimension n", complex_arg=False)
    p.add_argument("--n", type=int, required=True)

    p = command("verify-theorem", cmd_verify_theorem, "proportionality over a range of n", complex_arg=False)
    p.add_argument("--n", required=True, help="N or A..B")

    p = command("gadget", cmd_gadget, "build and verify a gadget cell", complex_arg=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", help="write the cell and its metadata as JSON")

    p = command("invariance", cmd_invariance, "walk and watch a local formula", seed="required")
    p.add_argument("--psi", default="derived", help="euler | derived | f<k> | b_-1,b_0,...")
    p.add_argument("--steps", type=int, default=200)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PachnerError, ValueError, OSError) as exc:
        print(f"pachner {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
