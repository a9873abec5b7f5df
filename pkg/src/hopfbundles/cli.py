"""Command-line front end: ``hopfbundles <module> <operation> [options]``.

Every command prints one JSON document with a ``meta`` field recording the
numerical configuration.  Library errors exit with status 1 and a JSON
``error`` object; usage errors exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import codec
from .config import DEFAULT_EXP_BOUND, DEFAULT_TOL, LEMMA, THEOREM, Config
from .covers import classify_cyclic_cover, nonprimary_homology, pushforward_rank2
from .elliptic import EllipticPic, SplitKind, SplittingType
from .errors import CodecError, DomainError, HopfError
from .factors import Factor
from .manifold import HopfManifold, canonical_divisor, divisor_to_line_bundle
from .picard import LineBundle, cohomology_dims, degree, restrict_to_curve
from .projective import P1Point
from .rank2 import (
    IdealComponent,
    ZPoint,
    automorphy_factor,
    classify_extension_c2zero,
    classify_rank2_higher,
    elementary_modification,
    filtrability_verdict,
    serre_extension,
)
from .spectral import (
    bisection_genus,
    casimirs,
    graph_of_spectral,
    leaf_of_bundle,
    poisson_rank,
    spectral_of_filtrable,
)
from .stability import (
    c2one_parameters,
    d_domain,
    find_stable_higher,
    is_stable_filtrable_surface,
    is_stable_higher,
    moduli_dimension,
    monopole_parameters,
)


# -- argument parsing helpers ----------------------------------------------

def parse_complex(text: str) -> complex:
    """``"re,im"``, ``"re"`` or ``"inf"``."""
    text = text.strip()
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise DomainError(f"cannot read {text!r} as a complex number 're,im'")


def parse_point(text: str) -> P1Point:
    if text.strip().lower() in ("inf", "infinity"):
        return P1Point.infinity()
    return P1Point.affine(parse_complex(text))


def parse_factor(text: str, n: int) -> Factor:
    """A Factor as JSON (``{"exp": [...], "scalar": ...}``) or a constant ``re,im``."""
    text = text.strip()
    if text.startswith("{"):
        f = codec.decode_factor(codec.loads(text))
        if f.n != n:
            raise DomainError(f"factor has {f.n} exponents, manifold has n = {n}")
        return f
    return Factor.constant(n, parse_complex(text))


def _manifold(args) -> HopfManifold:
    if not args.mu:
        raise DomainError("--mu is required")
    return HopfManifold(tuple(parse_complex(m) for m in args.mu), exp_bound=args.exp_bound, tol=args.tol)


def _config(args) -> Config:
    return Config(args.tol, args.exp_bound, args.det_convention, args.classical_base_dim)


def _read_bundle(args):
    path = args.bundle
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return codec.decode_bundle(codec.loads(text), exp_bound=args.exp_bound, tol=args.tol)


def _splitting(text: str, q: complex) -> SplittingType:
    """``regular``, ``nonregular``, ``atiyah`` or ``jump[:h]``."""
    kind, _, h = text.partition(":")
    return SplittingType.sample(SplitKind(kind), int(h) if h else 1, q)


def _verdict(v) -> dict:
    out = {"status": v.status.value, "stable": v.stable, "branch": v.branch, "witness": v.witness}
    if v.boundary:
        out["boundary"] = True
    return out


# -- commands ----------------------------------------------------------------

def cmd_manifold(args, cfg):
    X = _manifold(args)
    if args.op == "classify":
        return {"kind": X.kind.value, "relation": X.relation, "manifold": X}
    K = canonical_divisor(X)
    return {"canonical_divisor": list(K.coeffs), "line_bundle": divisor_to_line_bundle(X, K)}


def cmd_pic(args, cfg):
    X = _manifold(args)
    L = LineBundle(parse_factor(args.factor, X.n), X)
    if args.op == "deg":
        return {"degree": degree(L)}
    if args.op == "cohom":
        h = cohomology_dims(L, cfg.exp_bound, cfg.tol, cfg.classical_base_dim)
        return {"h": list(h.h), "euler": h.euler()}
    rest, cls = restrict_to_curve(L, args.curve)
    return {"factor": rest, "class": cls.cls, "q": cls.q, "degree": cls.d}


def cmd_rank2(args, cfg):
    if args.op == "filtrability":
        return {"verdict": filtrability_verdict(args.n, True, args.c2).value}
    if args.op == "modify":
        E = _read_bundle(args)
        k = E.jump_at(args.curve, parse_point(args.point) if args.point else None)
        if k is None:
            raise DomainError(f"no jump on curve {args.curve}")
        q = E.X.mu[args.curve - 1] if args.curve in (1, 2) else E.X.mu[0]
        lam = EllipticPic(-E.jumps[k].height, parse_complex(args.lam), q)
        point = parse_point(args.point) if args.point else None
        return {"bundle": elementary_modification(E, args.curve, lam, cfg.det_convention, point, cfg.tol)}
    X = _manifold(args)
    if args.op == "serre":
        Z = []
        for item in args.z or ():
            curve, _, mult = item.partition(":")
            Z.append(ZPoint(int(mult or 1), int(curve)))
        return {"bundle": serre_extension(X, parse_factor(args.sub, X.n), parse_factor(args.quot, X.n), Z)}
    if args.op == "c2zero":
        a, b = parse_factor(args.sub, X.n), parse_factor(args.quot, X.n)
        cls = classify_extension_c2zero(a, b, X, cfg.exp_bound, cfg.tol)
        out = {"verdict": cls.verdict.value, "m": cls.m}
        if args.eps is not None:
            af = automorphy_factor(cls, a, b, X, args.eps, cfg.tol)
            out["automorphy"] = {"a": af.a, "b": af.b, "m": list(af.m), "eps": af.eps}
        return out
    t = classify_rank2_higher(
        X,
        parse_factor(args.sub, X.n),
        parse_factor(args.quot, X.n),
        args.split,
        [IdealComponent(*map(int, s.split(","))) for s in args.ideal or ()],
        cfg.exp_bound,
        cfg.tol,
    )
    return {"type": t}


def cmd_stab(args, cfg):
    if args.op == "moduli":
        M = moduli_dimension(None, args.c2)
        return {"dim": M.dim, "nonempty": M.nonempty, "c2": M.c2}
    if args.op == "monopole":
        M = monopole_parameters(args.mass, args.charge)
        return {"dim": M.dim, "nonempty": M.nonempty, "parametrization": M.parametrization}
    if args.op == "check":
        E = _read_bundle(args)
        v = is_stable_filtrable_surface(E, cfg.det_convention, cfg.exp_bound, cfg.tol, args.audit)
        return _verdict(v)
    X = _manifold(args)
    if args.op == "domain":
        l = args.l if args.l is not None else (args.l1, args.l2)
        D = d_domain(parse_factor(args.delta, X.n), l, X, cfg.det_convention)
        return {"r_lo": D.r_lo, "r_hi": D.r_hi, "empty": D.empty}
    if args.op == "c2one":
        return c2one_parameters(parse_factor(args.sub, X.n), parse_factor(args.delta, X.n), X, cfg.exp_bound, cfg.tol)
    # higher
    if args.find:
        t = find_stable_higher(X, args.max_total, tol=cfg.tol)
        return {"type": t, "verdict": _verdict(is_stable_higher(t, X, cfg.tol)) if t else None}
    t = classify_rank2_higher(
        X,
        parse_factor(args.sub, X.n),
        parse_factor(args.quot, X.n),
        False,
        [IdealComponent(*map(int, s.split(","))) for s in args.ideal or ()],
        cfg.exp_bound,
        cfg.tol,
    )
    return {"type": t, "verdict": _verdict(is_stable_higher(t, X, cfg.tol))}


def cmd_cover(args, cfg):
    if args.op == "homology":
        return {"homology": nonprimary_homology(args.d)}
    X = _manifold(args)
    c = classify_cyclic_cover(X, args.r, args.branch, args.k, args.strict_lemma)
    if args.op == "classify":
        return {"cover": c}
    M = parse_factor(args.factor, 2) if args.factor else Factor.identity(2)
    return pushforward_rank2(c, M)


def cmd_spec(args, cfg):
    if args.op == "poisson":
        q = parse_complex(args.q)
        return {"rank": poisson_rank(args.c2, _splitting(args.st1, q), _splitting(args.st2, q), cfg.tol)}
    if args.op == "genus":
        return {"genus": bisection_genus(args.c2, args.k)}
    E = _read_bundle(args)
    if args.op == "leaf":
        L = leaf_of_bundle(E, cfg.tol)
        return {"C1": L.C1, "C2": L.C2, "rank": L.rank, "dim": L.dim, "parametrization": L.parametrization}
    S = spectral_of_filtrable(E)
    if args.op == "cover":
        return {
            "vertical": [{"point": p, "multiplicity": m} for p, m in S.vertical],
            "bisection": {"reducible": S.filtrable, "sections": [S.bisection.lam1, S.bisection.lam2]},
            "class": [S.total_class.s, S.total_class.f],
            "self_intersection": S.self_intersection(),
        }
    G = graph_of_spectral(S, cfg.tol)
    if args.op == "graph":
        return {
            "vertical": [{"point": p, "multiplicity": m} for p, m in G.vertical],
            "F": G.F,
            "degree": G.degree,
            "bidegree": list(G.bidegree),
            "ambient_dim": G.ambient_dim,
        }
    c1, c2 = casimirs(G, parse_point(args.x1), parse_point(args.x2), cfg.tol)
    return {"C1": c1, "C2": c2}


def cmd_selftest(args, cfg):
    from .acceptance import run_all

    return run_all()


# -- parser ------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    # subcommands accept the flags too; SUPPRESS keeps them from resetting
    # values given before the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--tol", type=float, default=d(DEFAULT_TOL))
    parser.add_argument("--exp-bound", type=int, default=d(DEFAULT_EXP_BOUND))
    parser.add_argument("--det-convention", choices=(THEOREM, LEMMA), default=d(THEOREM))
    parser.add_argument("--classical-base-dim", type=int, default=d(None))
    parser.add_argument("--json", default=d("-"), metavar="FILE", help="write output to FILE ('-' for stdout)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    p = argparse.ArgumentParser(prog="hopfbundles", description=__doc__.splitlines()[0])
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="module", required=True)

    def op(parent, name, **kw):
        q = parent.add_parser(name, parents=[common], **kw)
        return q

    def with_mu(q):
        q.add_argument("--mu", nargs="+", metavar="RE,IM", required=True)
        return q

    m = sub.add_parser("manifold").add_subparsers(dest="op", required=True)
    with_mu(op(m, "classify"))
    with_mu(op(m, "canonical"))

    pic = sub.add_parser("pic").add_subparsers(dest="op", required=True)
    for name in ("deg", "cohom", "restrict"):
        q = with_mu(op(pic, name))
        q.add_argument("--factor", default="1,0")
        if name == "restrict":
            q.add_argument("--curve", type=int, required=True)

    r2 = sub.add_parser("rank2").add_subparsers(dest="op", required=True)
    q = with_mu(op(r2, "serre"))
    q.add_argument("--sub", required=True)
    q.add_argument("--quot", required=True)
    q.add_argument("--z", nargs="*", metavar="CURVE:MULT", help="points of Z; curve 0 = off T_1, T_2")
    q = with_mu(op(r2, "c2zero"))
    q.add_argument("--sub", required=True)
    q.add_argument("--quot", required=True)
    q.add_argument("--eps", type=int, choices=(0, 1), default=None)
    q = with_mu(op(r2, "higher"))
    q.add_argument("--sub", required=True)
    q.add_argument("--quot", default="1,0")
    q.add_argument("--split", action="store_true")
    q.add_argument("--ideal", nargs="*", metavar="I,J,KI,KJ")
    q = op(r2, "modify")
    q.add_argument("--bundle", required=True)
    q.add_argument("--curve", type=int, required=True)
    q.add_argument("--lam", default="1,0", help="class of the destabilising quotient")
    q.add_argument("--point", default=None)
    q = op(r2, "filtrability")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--c2", type=int, default=0)

    st = sub.add_parser("stab").add_subparsers(dest="op", required=True)
    q = op(st, "check")
    q.add_argument("--bundle", required=True)
    q.add_argument("--audit", action="store_true")
    q = with_mu(op(st, "domain"))
    q.add_argument("--delta", default="1,0")
    q.add_argument("--l1", type=int, default=0)
    q.add_argument("--l2", type=int, default=0)
    q.add_argument("--l", type=int, default=None, help="total jump length (classical surfaces)")
    q = op(st, "moduli")
    q.add_argument("--c2", type=int, required=True)
    q = op(st, "monopole")
    q.add_argument("--mass", type=int, required=True)
    q.add_argument("--charge", type=int, required=True)
    q = with_mu(op(st, "c2one"))
    q.add_argument("--sub", required=True)
    q.add_argument("--delta", default="1,0")
    q = with_mu(op(st, "higher"))
    q.add_argument("--sub", default="1,0")
    q.add_argument("--quot", default="1,0")
    q.add_argument("--ideal", nargs="*", metavar="I,J,KI,KJ")
    q.add_argument("--find", action="store_true", help="search for a stable type instead")
    q.add_argument("--max-total", type=int, default=8)

    cv = sub.add_parser("cover").add_subparsers(dest="op", required=True)
    for name in ("classify", "pushforward"):
        q = with_mu(op(cv, name))
        q.add_argument("--r", type=int, required=True)
        q.add_argument("--branch", choices=("0", "t1", "t2", "t1t2"), required=True)
        q.add_argument("--k", type=int, default=None)
        q.add_argument("--strict-lemma", action="store_true")
        if name == "pushforward":
            q.add_argument("--factor", default=None)
    q = op(cv, "homology")
    q.add_argument("--d", type=int, required=True)

    sp = sub.add_parser("spec").add_subparsers(dest="op", required=True)
    for name in ("cover", "graph", "leaf", "casimir"):
        q = op(sp, name)
        q.add_argument("--bundle", required=True)
        if name == "casimir":
            q.add_argument("--x1", default="inf")
            q.add_argument("--x2", default="0")
    q = op(sp, "poisson")
    q.add_argument("--c2", type=int, required=True)
    q.add_argument("--st1", required=True, metavar="KIND[:H]")
    q.add_argument("--st2", required=True, metavar="KIND[:H]")
    q.add_argument("--q", default="0.5", help="modulus of the elliptic curve")
    q = op(sp, "genus")
    q.add_argument("--c2", type=int, required=True)
    q.add_argument("--k", type=int, default=0)

    op(sub, "selftest")
    return p


COMMANDS = {
    "manifold": cmd_manifold,
    "pic": cmd_pic,
    "rank2": cmd_rank2,
    "stab": cmd_stab,
    "cover": cmd_cover,
    "spec": cmd_spec,
    "selftest": cmd_selftest,
}


def _emit(doc: dict, dest: str):
    text = codec.dumps(doc) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        result = COMMANDS[args.module](args, cfg)
        code = 0
        if args.module == "selftest" and result["failed"]:
            code = 1
        _emit({**result, "meta": cfg.as_meta()}, args.json)
        return code
    except (HopfError, OSError, json.JSONDecodeError) as exc:
        err = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, CodecError):
            err["path"] = exc.path
        _emit({"error": err, "meta": {"tol": args.tol, "exp_bound": args.exp_bound}}, args.json)
        return 1


if __name__ == "__main__":
    sys.exit(main())
