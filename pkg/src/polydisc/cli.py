"""Command-line front end.

Every check in the library is reachable from the shell with reproducible
numeric parameters: membership queries, Schwarz-condition suites,
interpolant construction and evaluation, distance reports, geometric
witness generation, forward-oracle sweeps, membership slice rasters (CSV),
and the identity/equivalence regressions.

Complex numbers in JSON are always [re, im] pairs; points are
{"n": int, "coords": [[re, im], ...]}.  Exit codes: 0 success, 1 a
predicate came back false under --assert, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import distances, geometry, interpolation, membership, sampling, schwarz
from .errors import PolydiscError
from .mobius import CPoint, binom

_SETS = ("tilde-g", "tilde-gamma", "g", "gamma", "b-gamma")


def _parse_point(text: str) -> CPoint:
    """Point from inline JSON, from a file path, or from stdin ("-")."""
    stripped = text.strip()
    if stripped == "-":
        stripped = sys.stdin.read()
    elif not stripped.startswith("{"):
        with open(stripped) as fh:
            stripped = fh.read()
    return CPoint.from_json(json.loads(stripped))


def _parse_complex(text: str) -> complex:
    parts = [float(p) for p in text.split(",")]
    if len(parts) == 1:
        return complex(parts[0], 0.0)
    if len(parts) == 2:
        return complex(parts[0], parts[1])
    raise ValueError("expected 're' or 're,im'")


def _emit(args, payload: dict | str) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))


def _cmd_membership(args) -> int:
    point = _parse_point(args.point)
    if args.set == "tilde-g":
        rep = membership.in_tilde_g(point, cond=args.cond, band=args.band)
    elif args.set == "tilde-gamma":
        rep = membership.in_tilde_gamma(point, cond=args.cond, band=args.band)
    elif args.set == "g":
        rep = membership.in_g(point, band=args.band)
    elif args.set == "gamma":
        rep = membership.in_gamma(point, band=args.band)
    else:
        verdict = membership.in_b_gamma(point, band=args.band)
        _emit(args, {"point": point.to_json(), "set": "b-gamma", "verdict": verdict})
        return 0 if (verdict or not args.assert_) else 1
    _emit(args, rep.to_json())
    return 0 if (rep.verdict or not args.assert_) else 1


def _cmd_schwarz(args) -> int:
    point = _parse_point(args.point)
    problem = schwarz.SchwarzProblem(lambda0=_parse_complex(args.lambda0), target=point)
    conds = range(2, 12) if args.cond == "all" else [int(args.cond)]
    margins = [schwarz.check_condition(problem, c, band=args.band) for c in conds]
    payload = problem.to_json()
    payload["conditions"] = [m.to_json() for m in margins]
    payload["verdict"] = all(m.holds for m in margins)
    _emit(args, payload)
    return 0 if (payload["verdict"] or not args.assert_) else 1


def _cmd_interpolate(args) -> int:
    point = _parse_point(args.point)
    lam0 = _parse_complex(args.lambda0)
    rng = np.random.default_rng(args.seed)
    if args.worked_family:
        g = interpolation.np2(0.0, 0.3, -0.8, 0.625, t=_parse_complex(args.t))
        disc = interpolation.worked_family(g)
    elif args.extremal:
        _, disc = interpolation.extremal_disc(point, band=args.band, rng=rng)
    else:
        disc = interpolation.build_interpolant(
            point, lam0, nu=args.nu, band=args.band, rng=rng
        )
    payload = {"disc": disc.to_json(), "evaluations": []}
    for text in args.eval or []:
        lam = _parse_complex(text)
        payload["evaluations"].append(
            {"lambda": [lam.real, lam.imag], "value": disc(lam).to_json()}
        )
    _emit(args, payload)
    return 0


def _cmd_distance(args) -> int:
    point = _parse_point(args.point)
    rep = distances.distance_report(
        point, grid=args.grid, band=args.band, rng=np.random.default_rng(args.seed)
    )
    payload = rep.to_json()
    if args.mobius_scale:
        payload["closed_form_mobius"] = math.tanh(rep.closed_form)
    _emit(args, payload)
    return 0


def _cmd_witness(args) -> int:
    if args.kind == "nonconvex":
        a, b, c = geometry.nonconvex_witness(args.n)
        payload = {
            "kind": "nonconvex",
            "a": a.to_json(),
            "b": b.to_json(),
            "midpoint": c.to_json(),
            "a_in_closure": True,
            "b_in_closure": True,
            "midpoint_in_closure": False,
        }
    elif args.kind == "noncircular":
        y, iy = geometry.noncircular_witness(args.n)
        payload = {
            "kind": "noncircular",
            "point": y.to_json(),
            "rotated": iy.to_json(),
            "point_in_closure": True,
            "rotated_in_closure": False,
        }
    else:
        point = _parse_point(args.point)
        poly = geometry.separating_polynomial(
            point, samples=args.samples, rng=np.random.default_rng(args.seed)
        )
        payload = {"kind": "separating", "polynomial": poly.to_json()}
    _emit(args, payload)
    return 0


def _oracle_shard(task) -> tuple[int, int]:
    kind, n, count, seed = task
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(count):
        if kind == "open":
            s = membership.symmetrize(sampling.g_point_disc(n, rng, rmax=0.95))
            ok = membership.in_g(s).verdict
        elif kind == "closed":
            s = membership.symmetrize(sampling.g_point_disc(n, rng, rmax=1.0))
            ok = membership.in_gamma(s).verdict
        else:
            s = membership.symmetrize([sampling.torus_point(rng) for _ in range(n)])
            ok = membership.in_b_gamma(s)
        bad += 0 if ok else 1
    return count, bad


def _cmd_oracle(args) -> int:
    dims = [int(d) for d in args.dims.split(",")]
    shards = []
    per = max(1, args.samples // (3 * len(dims)))
    seed = args.seed
    for n in dims:
        for kind in ("open", "closed", "torus"):
            shards.append((kind, n, per, seed))
            seed += 1
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_oracle_shard, shards))
    else:
        results = [_oracle_shard(t) for t in shards]
    payload = {"strata": [], "checked": 0, "failures": 0}
    for (kind, n, _, _), (count, bad) in zip(shards, results):
        payload["strata"].append(
            {"stratum": kind, "n": n, "checked": count, "failures": bad}
        )
        payload["checked"] += count
        payload["failures"] += bad
    _emit(args, payload)
    return 0 if (payload["failures"] == 0 or not args.assert_) else 1


def _cmd_plot_slice(args) -> int:
    point = _parse_point(args.point)
    n = point.n
    span = binom(n, 1) + 0.5
    re_lo = args.re_min if args.re_min is not None else -span
    re_hi = args.re_max if args.re_max is not None else span
    im_lo = args.im_min if args.im_min is not None else -span
    im_hi = args.im_max if args.im_max is not None else span
    lines = ["re,im,in_tilde_g,in_g"]
    for a in range(args.resolution):
        re = re_lo + (re_hi - re_lo) * a / (args.resolution - 1)
        for b in range(args.resolution):
            im = im_lo + (im_hi - im_lo) * b / (args.resolution - 1)
            coords = list(point.coords)
            coords[0] = complex(re, im)
            probe = CPoint(tuple(coords))
            tg = membership.in_tilde_g(probe, cond="C7", band=args.band).verdict
            gg = membership.in_g(probe, band=args.band).verdict if tg else False
            lines.append(f"{re!r},{im!r},{int(tg)},{int(gg)}")
    _emit(args, "\n".join(lines))
    return 0


def _cmd_regress(args) -> int:
    rng = np.random.default_rng(args.seed)
    rep = interpolation.identity_regressions(args.samples, rng=rng)
    eq = {"checked": 0, "skipped_boundary": 0, "disagreements": 0}
    per_dim = max(1, args.samples // 4)
    for n in (2, 3, 4, 5):
        for _ in range(per_dim):
            u = rng.random()
            if u < 0.5:
                y = sampling.tilde_g_point(n, rng)
            elif u < 0.8:
                y = sampling.exterior_point(n, rng)
            else:
                y = sampling.near_boundary_point(n, rng, spread=args.band)
            for reports in (
                membership.in_tilde_g(y, cond="ALL", band=args.band),
                membership.in_tilde_gamma(y, cond="ALL", band=args.band),
            ):
                margins = reports.per_condition
                if any(abs(m.slack) <= args.band for m in margins):
                    eq["skipped_boundary"] += 1
                    continue
                eq["checked"] += 1
                if len({m.holds for m in margins}) != 1:
                    eq["disagreements"] += 1
    sz = {"checked": 0, "skipped_boundary": 0, "disagreements": 0}
    per_dim = max(1, args.samples // 10)
    for n in (3, 4, 5):
        done = 0
        while done < per_dim:
            y = sampling.tilde_g_point(n, rng, margin=0.85)
            al = 0.1 + 0.85 * rng.random()
            try:
                problem = schwarz.SchwarzProblem(
                    lambda0=al * np.exp(2j * np.pi * rng.random()), target=y
                )
            except Exception:
                continue
            done += 1
            margins = [
                schwarz.check_condition(problem, c, band=args.band)
                for c in (3, 4, 6, 7, 8, 9, 10, 11)
            ]
            if any(abs(m.slack) <= args.band for m in margins):
                sz["skipped_boundary"] += 1
                continue
            sz["checked"] += 1
            if len({m.holds for m in margins}) != 1:
                sz["disagreements"] += 1
    payload = {
        "identities": rep,
        "membership_equivalence": eq,
        "schwarz_equivalence": sz,
    }
    _emit(args, payload)
    ok = (
        max(rep["max_rel_err"].values()) < 1e-9
        and eq["disagreements"] == 0
        and sz["disagreements"] == 0
    )
    return 0 if (ok or not args.assert_) else 1


def _common(sub, point_required: bool = True) -> None:
    sub.add_argument("--point", required=point_required, help="point JSON")
    sub.add_argument("--output", default="-", help="output path (default stdout)")
    sub.add_argument("--grid", type=int, default=4096)
    sub.add_argument("--band", type=float, default=membership.BOUNDARY_BAND)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--samples", type=int, default=10000)
    sub.add_argument(
        "--assert", dest="assert_", action="store_true",
        help="exit 1 when the computed verdict is false",
    )


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polydisc",
        description="symmetrized-polydisc membership, Schwarz feasibility, "
        "interpolation and invariant distances",
    )
    subs = ap.add_subparsers(dest="command", required=True)

    s = subs.add_parser("membership", help="set membership with condition margins")
    _common(s)
    s.add_argument("--set", choices=_SETS, default="tilde-g")
    s.add_argument("--cond", default="ALL", help="condition id (e.g. C7) or ALL")
    s.set_defaults(fn=_cmd_membership)

    s = subs.add_parser("schwarz", help="two-point Schwarz-lemma conditions")
    _common(s)
    s.add_argument("--lambda0", required=True, help="complex 're,im'")
    s.add_argument("--cond", default="all", help="condition number 2..11 or all")
    s.set_defaults(fn=_cmd_schwarz)

    s = subs.add_parser("interpolate", help="construct and evaluate a disc map")
    _common(s)
    s.add_argument("--lambda0", default="0.5", help="complex 're,im'")
    s.add_argument("--nu", type=float, default=None)
    s.add_argument("--eval", action="append", help="lambda to evaluate (repeatable)")
    s.add_argument("--worked-family", action="store_true", help="use the worked two-point family")
    s.add_argument("--t", default="0", help="family parameter (complex)")
    s.add_argument("--extremal", action="store_true", help="extremal disc on J_n")
    s.set_defaults(fn=_cmd_interpolate)

    s = subs.add_parser("distance", help="invariant distance report from 0")
    _common(s)
    s.add_argument("--mobius-scale", action="store_true")
    s.set_defaults(fn=_cmd_distance)

    s = subs.add_parser("witness", help="geometric witnesses")
    _common(s, point_required=False)
    s.add_argument("--kind", choices=("nonconvex", "noncircular", "separating"),
                   default="nonconvex")
    s.add_argument("--n", type=int, default=3)
    s.set_defaults(fn=_cmd_witness)

    s = subs.add_parser("oracle", help="forward-oracle soundness sweep")
    _common(s, point_required=False)
    s.add_argument("--dims", default="2,3,4,5")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=_cmd_oracle)

    s = subs.add_parser("plot-slice", help="CSV membership raster over y_1")
    _common(s)
    s.add_argument("--resolution", type=int, default=101)
    s.add_argument("--re-min", type=float, default=None)
    s.add_argument("--re-max", type=float, default=None)
    s.add_argument("--im-min", type=float, default=None)
    s.add_argument("--im-max", type=float, default=None)
    s.set_defaults(fn=_cmd_plot_slice)

    s = subs.add_parser("regress", help="identity and equivalence regressions")
    _common(s, point_required=False)
    s.set_defaults(fn=_cmd_regress)
    return ap


def _validate_common(args) -> None:
    if getattr(args, "grid", 8) < 8:
        raise ValueError("grid must be at least 8")
    if not 0.0 < getattr(args, "band", 1e-7) <= 1e-3:
        raise ValueError("band must lie in (0, 1e-3]")
    if getattr(args, "samples", 1) < 1:
        raise ValueError("samples must be at least 1")


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        _validate_common(args)
        return args.fn(args)
    except (PolydiscError, ValueError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
