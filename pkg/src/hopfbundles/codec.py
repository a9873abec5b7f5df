"""JSON encoding of the domain types.

Complex numbers are ``{"re": x, "im": y}``; floats are emitted with ``repr``
precision by :mod:`json`, so decoding restores them exactly.  Decoders raise
:class:`CodecError` carrying the JSON path of the offending value.
"""
from __future__ import annotations

import json
from dataclasses import is_dataclass
from enum import Enum
from typing import Any, Optional

from .covers import AbelianGroup, Branch, CoverDescriptor, CoverKind, HomologyTable
from .errors import CodecError, HopfError
from .factors import Factor
from .manifold import HopfManifold, Kind
from .projective import P1Point, RationalMap
from .rank2 import FiltrableRank2, JumpRecord


def _expect(obj, typ, path):
    if not isinstance(obj, typ) or (typ is int and isinstance(obj, bool)):
        name = typ.__name__ if isinstance(typ, type) else "/".join(t.__name__ for t in typ)
        raise CodecError(f"expected {name}, got {type(obj).__name__}", path)
    return obj


def _field(d, key, path, typ=None, default=KeyError):
    _expect(d, dict, path)
    if key not in d:
        if default is KeyError:
            raise CodecError(f"missing key {key!r}", path)
        return default
    v = d[key]
    return _expect(v, typ, f"{path}.{key}") if typ is not None else v


# -- scalars ----------------------------------------------------------------

def encode_complex(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def decode_complex(obj, path: str = "$") -> complex:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    re = _field(obj, "re", path, (int, float))
    im = _field(obj, "im", path, (int, float), 0.0)
    return complex(re, im)


# -- factors, manifolds, points --------------------------------------------

def encode_factor(f: Factor) -> dict:
    return {"exp": list(f.exponents), "scalar": encode_complex(f.scalar)}


def decode_factor(obj, path: str = "$") -> Factor:
    exps = _field(obj, "exp", path, list)
    for k, e in enumerate(exps):
        _expect(e, int, f"{path}.exp[{k}]")
    scalar = decode_complex(_field(obj, "scalar", path, default={"re": 1.0}), f"{path}.scalar")
    try:
        return Factor(tuple(exps), scalar)
    except HopfError as exc:
        raise CodecError(str(exc), path) from exc


def encode_manifold(X: HopfManifold) -> dict:
    out = {"n": X.n, "mu": [encode_complex(m) for m in X.mu], "kind": X.kind.value}
    if X.relation is not None:
        out["relation"] = list(X.relation)
    return out


def decode_manifold(obj, path: str = "$", exp_bound: int = 32, tol: float = 1e-9) -> HopfManifold:
    mus = _field(obj, "mu", path, list)
    mu = tuple(decode_complex(m, f"{path}.mu[{k}]") for k, m in enumerate(mus))
    n = _field(obj, "n", path, int, len(mu))
    if n != len(mu):
        raise CodecError(f"n = {n} but {len(mu)} multipliers given", path)
    kind = _field(obj, "kind", path, str, None)
    rel = _field(obj, "relation", path, list, None)
    try:
        return HopfManifold(
            mu,
            Kind(kind) if kind is not None else None,
            tuple(rel) if rel is not None else None,
            exp_bound=exp_bound,
            tol=tol,
        )
    except (HopfError, ValueError) as exc:
        raise CodecError(str(exc), path) from exc


def encode_point(p: P1Point) -> dict:
    return {"u": encode_complex(p.u), "v": encode_complex(p.v)}


def decode_point(obj, path: str = "$") -> P1Point:
    try:
        return P1Point(
            decode_complex(_field(obj, "u", path), f"{path}.u"),
            decode_complex(_field(obj, "v", path), f"{path}.v"),
        )
    except HopfError as exc:
        raise CodecError(str(exc), path) from exc


def encode_rational_map(F: RationalMap) -> dict:
    return {"num": [encode_complex(c) for c in F.num], "den": [encode_complex(c) for c in F.den]}


def decode_rational_map(obj, path: str = "$") -> RationalMap:
    num = _field(obj, "num", path, list)
    den = _field(obj, "den", path, list)
    try:
        return RationalMap(
            tuple(decode_complex(c, f"{path}.num[{k}]") for k, c in enumerate(num)),
            tuple(decode_complex(c, f"{path}.den[{k}]") for k, c in enumerate(den)),
        )
    except HopfError as exc:
        raise CodecError(str(exc), path) from exc


# -- bundles ----------------------------------------------------------------

def encode_bundle(E: FiltrableRank2, with_manifold: bool = True) -> dict:
    jumps = []
    for j in E.jumps:
        rec = {"curve": j.curve, "heights": list(j.heights)}
        if j.point is not None:
            rec["point"] = encode_point(j.point)
        jumps.append(rec)
    out = {
        "det": encode_factor(E.det),
        "c2": E.c2,
        "sub": encode_factor(E.sub),
        "jumps": jumps,
        "z_on_curve": list(E.z_on_curve),
        "z_off": E.z_off,
    }
    if E.split is not None:
        out["split"] = E.split
    if with_manifold:
        out["manifold"] = encode_manifold(E.X)
    return out


def decode_bundle(obj, path: str = "$", X: Optional[HopfManifold] = None, **mkw) -> FiltrableRank2:
    if X is None:
        X = decode_manifold(_field(obj, "manifold", path), f"{path}.manifold", **mkw)
    det = decode_factor(_field(obj, "det", path), f"{path}.det")
    sub = decode_factor(_field(obj, "sub", path), f"{path}.sub")
    c2 = _field(obj, "c2", path, int)
    jumps = []
    for k, rec in enumerate(_field(obj, "jumps", path, list, [])):
        p = f"{path}.jumps[{k}]"
        curve = _field(rec, "curve", p, int)
        heights = _field(rec, "heights", p, list)
        for t, h in enumerate(heights):
            _expect(h, int, f"{p}.heights[{t}]")
        point = rec.get("point")
        try:
            jumps.append(
                JumpRecord(curve, tuple(heights), decode_point(point, f"{p}.point") if point else None)
            )
        except HopfError as exc:
            raise CodecError(str(exc), p) from exc
    z_off = _field(obj, "z_off", path, int, 0)
    split = _field(obj, "split", path, bool, None)
    try:
        E = FiltrableRank2(X, det, c2, sub, tuple(jumps), z_off, split)
    except HopfError as exc:
        raise CodecError(str(exc), path) from exc
    zc = _field(obj, "z_on_curve", path, list, None)
    if zc is not None and list(E.z_on_curve) != zc:
        raise CodecError(f"z_on_curve {zc} disagrees with the jumps {list(E.z_on_curve)}", f"{path}.z_on_curve")
    return E


# -- covers -----------------------------------------------------------------

def encode_cover(c: CoverDescriptor) -> dict:
    out = {"r": c.r, "branch": c.branch.value, "kind": c.kind.value, "mu": [encode_complex(m) for m in c.mu]}
    if c.k is not None:
        out["k"] = c.k
    if c.count != 1:
        out["count"] = c.count
    if c.map_exponents is not None:
        out["map_exponents"] = list(c.map_exponents)
    if c.d is not None:
        out["d"] = c.d
        out["beta"] = encode_complex(c.beta)
    return out


def decode_cover(obj, path: str = "$") -> CoverDescriptor:
    try:
        mu = tuple(decode_complex(m, f"{path}.mu[{k}]") for k, m in enumerate(_field(obj, "mu", path, list)))
        me = _field(obj, "map_exponents", path, list, None)
        beta = _field(obj, "beta", path, default=None)
        return CoverDescriptor(
            _field(obj, "r", path, int),
            Branch(_field(obj, "branch", path, str)),
            CoverKind(_field(obj, "kind", path, str)),
            mu,
            _field(obj, "k", path, int, None),
            _field(obj, "count", path, int, 1),
            tuple(me) if me is not None else None,
            _field(obj, "d", path, int, None),
            decode_complex(beta, f"{path}.beta") if beta is not None else None,
        )
    except ValueError as exc:
        if isinstance(exc, CodecError):
            raise
        raise CodecError(str(exc), path) from exc


def encode_homology(h: HomologyTable) -> dict:
    return {f"H{i}": {"free": g.free, "torsion": list(g.torsion), "text": str(g)} for i, g in enumerate(h.groups)}


# -- generic ----------------------------------------------------------------

def to_jsonable(obj: Any) -> Any:
    """Best-effort conversion of any exported value to JSON-compatible data."""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if obj == obj and abs(obj) != float("inf") else str(obj)
    if isinstance(obj, complex):
        return encode_complex(obj)
    if isinstance(obj, Factor):
        return encode_factor(obj)
    if isinstance(obj, HopfManifold):
        return encode_manifold(obj)
    if isinstance(obj, P1Point):
        return encode_point(obj)
    if isinstance(obj, RationalMap):
        return encode_rational_map(obj)
    if isinstance(obj, FiltrableRank2):
        return encode_bundle(obj)
    if isinstance(obj, CoverDescriptor):
        return encode_cover(obj)
    if isinstance(obj, HomologyTable):
        return encode_homology(obj)
    if isinstance(obj, AbelianGroup):
        return {"free": obj.free, "torsion": list(obj.torsion)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if is_dataclass(obj):
        return {f: to_jsonable(getattr(obj, f)) for f in obj.__dataclass_fields__}
    raise CodecError(f"cannot encode {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodecError(f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from exc
