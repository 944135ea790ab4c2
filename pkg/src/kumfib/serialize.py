"""Canonical JSON forms for every certificate-bearing object.

All rationals serialize as "p/q" (or "n" for integers); curves as
{"A": ..., "B": ...}; elliptic points as "inf" or ["x", "y"]; projective
points as 3-element arrays; plane cubics as their 10 coefficients in the
fixed monomial order; polynomials as sparse term lists over the variables
actually present.  canonical_dumps is byte-deterministic (sorted keys, no
whitespace), which is what makes emitted witnesses diffable and exactly
round-trippable through `kumfib verify`.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cubic import ChordTorsionVerdict, PlaneCubic, ProjPoint
from .density import DensityWitness
from .elliptic import ECPoint, TorsionVerdict, WeierstrassCurve
from .errors import InputError
from .mpoly import MPoly, VARS, _VAR_INDEX
from .qmath import parse_rat, rat_str
from .surfaces import ComponentCensus, QuotientSurface, TwistPencil
from .twists import KthPowerFreeClass, SimultaneousTwistsResult, TwistPairWitness


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- basic forms ---------------------------------------------------------------


def curve_to_json(E: WeierstrassCurve) -> dict:
    return {"A": rat_str(E.A), "B": rat_str(E.B)}


def curve_from_json(d) -> WeierstrassCurve:
    if not isinstance(d, dict) or "A" not in d or "B" not in d:
        raise InputError('curve JSON must be {"A": ..., "B": ...}')
    return WeierstrassCurve(parse_rat(d["A"]), parse_rat(d["B"]))


def ec_point_to_json(P: ECPoint):
    if P.is_infinity:
        return "inf"
    return [rat_str(P.x), rat_str(P.y)]


def ec_point_from_json(d) -> ECPoint:
    if d == "inf":
        return ECPoint.infinity()
    if isinstance(d, (list, tuple)) and len(d) == 2:
        return ECPoint.of(parse_rat(d[0]), parse_rat(d[1]))
    raise InputError('point JSON must be "inf" or ["x", "y"]')


def proj_point_to_json(P: ProjPoint):
    return [rat_str(P.x), rat_str(P.y), rat_str(P.z)]


def proj_point_from_json(d) -> ProjPoint:
    if not isinstance(d, (list, tuple)) or len(d) != 3:
        raise InputError("projective point JSON must be a 3-element array")
    return ProjPoint(*(parse_rat(v) for v in d))


def cubic_to_json(C: PlaneCubic):
    return [rat_str(c) for c in C.coeffs]


def cubic_from_json(d) -> PlaneCubic:
    if not isinstance(d, (list, tuple)) or len(d) != 10:
        raise InputError("cubic JSON must be a 10-element coefficient array")
    return PlaneCubic([parse_rat(c) for c in d])


def surface_to_json(S: QuotientSurface) -> dict:
    return {"k": S.k, "n": S.n, "a": rat_str(S.a), "b": rat_str(S.b),
            "c": rat_str(S.c), "d": rat_str(S.d)}


def surface_from_json(d) -> QuotientSurface:
    try:
        return QuotientSurface(int(d["k"]), int(d["n"]), parse_rat(d["a"]),
                               parse_rat(d["b"]), parse_rat(d["c"]), parse_rat(d["d"]))
    except (KeyError, TypeError) as exc:
        raise InputError('surface JSON must carry k, n, a, b, c, d') from exc


def pencil_to_json(P: TwistPencil) -> dict:
    return {"curve": curve_to_json(P.curve), "f_degree": P.f_degree,
            "c": rat_str(P.c), "d": rat_str(P.d)}


def pencil_from_json(d) -> TwistPencil:
    try:
        return TwistPencil(curve_from_json(d["curve"]), int(d["f_degree"]),
                           parse_rat(d["c"]), parse_rat(d["d"]))
    except (KeyError, TypeError) as exc:
        raise InputError('pencil JSON must carry curve, f_degree, c, d') from exc


def mpoly_to_json(p: MPoly) -> dict:
    vs = p.variables()
    idx = [_VAR_INDEX[v] for v in vs]
    terms = sorted(
        ([[e[i] for i in idx], rat_str(c)] for e, c in p.terms.items()),
        key=lambda t: t[0],
    )
    return {"variables": vs, "terms": terms}


def mpoly_from_json(d) -> MPoly:
    vs = d["variables"]
    out = MPoly.zero()
    for exps, coeff in d["terms"]:
        e = [0] * len(VARS)
        for v, k in zip(vs, exps):
            e[_VAR_INDEX[v]] = int(k)
        out = out + MPoly({tuple(e): parse_rat(coeff)})
    return out


def torsion_verdict_to_json(v: TorsionVerdict) -> dict:
    if v.is_torsion:
        return {"verdict": "torsion", "order": v.order, "evidence": v.evidence}
    return {"verdict": "non-torsion", "method": v.method, "evidence": v.evidence}


def torsion_verdict_from_json(d) -> TorsionVerdict:
    if d["verdict"] == "torsion":
        return TorsionVerdict(True, order=int(d["order"]), evidence=d.get("evidence", ""))
    return TorsionVerdict(False, method=d["method"], evidence=d.get("evidence", ""))


def chord_verdict_to_json(v: ChordTorsionVerdict) -> dict:
    if v.is_torsion_class:
        return {"verdict": "torsion-class", "period": v.period,
                "points": [proj_point_to_json(p) for p in v.points]}
    return {"verdict": "non-torsion-class",
            "points": [proj_point_to_json(p) for p in v.points]}


def chord_verdict_from_json(d) -> ChordTorsionVerdict:
    pts = tuple(proj_point_from_json(p) for p in d.get("points", []))
    if d["verdict"] == "torsion-class":
        return ChordTorsionVerdict(True, period=int(d["period"]), points=pts)
    return ChordTorsionVerdict(False, points=pts)


def power_class_to_json(c: KthPowerFreeClass) -> dict:
    return {"k": c.k, "sign": c.sign, "factors": [[p, e] for p, e in c.factors]}


def power_class_from_json(d) -> KthPowerFreeClass:
    return KthPowerFreeClass(int(d["k"]), int(d["sign"]),
                             tuple((int(p), int(e)) for p, e in d["factors"]))


def twist_witness_to_json(w: TwistPairWitness) -> dict:
    return {
        "u": rat_str(w.u),
        "l": rat_str(w.l),
        "class": power_class_to_json(w.cls),
        "point1": [rat_str(w.point1[0]), rat_str(w.point1[1])],
        "point2": [rat_str(w.point2[0]), rat_str(w.point2[1])],
        "k": w.k,
        "n": w.n,
    }


def twist_witness_from_json(d) -> TwistPairWitness:
    return TwistPairWitness(
        u=parse_rat(d["u"]), l=parse_rat(d["l"]), cls=power_class_from_json(d["class"]),
        point1=(parse_rat(d["point1"][0]), parse_rat(d["point1"][1])),
        point2=(parse_rat(d["point2"][0]), parse_rat(d["point2"][1])),
        k=int(d["k"]), n=int(d["n"]),
    )


def twist_result_to_json(S: QuotientSurface, r: SimultaneousTwistsResult) -> dict:
    return {
        "kind": "twist-pairs",
        "surface": surface_to_json(S),
        "witnesses": [twist_witness_to_json(w) for w in r.witnesses],
        "complete": r.complete,
        "height_bound": r.height_bound,
        "candidates_scanned": r.candidates_scanned,
        "skipped": r.skipped,
    }


def census_to_json(c: ComponentCensus) -> dict:
    comps = [
        {"x_lo": rat_str(lo), "x_hi": rat_str(hi),
         "open_low": ol, "open_high": oh}
        for lo, hi, ol, oh in c.components
    ]
    out = {"kind": "census", "count": c.count, "components": comps}
    if c.oval is not None:
        lo, hi = c.oval
        out["oval"] = {
            "low_root": {"low": rat_str(lo.lo), "high": rat_str(lo.hi),
                         "exact": None if lo.exact is None else rat_str(lo.exact)},
            "high_root": {"low": rat_str(hi.lo), "high": rat_str(hi.hi),
                          "exact": None if hi.exact is None else rat_str(hi.exact)},
        }
    return out


def density_witness_to_json(w: DensityWitness, context: dict) -> dict:
    out = {
        "kind": f"density-{w.kind}-witness",
        "t1": rat_str(w.t1),
        "epsilon": rat_str(w.epsilon),
        "t_prime": rat_str(w.t_prime),
        "u": None if w.u is None else rat_str(w.u),
        "point": ec_point_to_json(w.point),
        "certificate": torsion_verdict_to_json(w.certificate),
        "error": rat_str(w.error),
        "curve": curve_to_json(w.curve),
        "model": w.model,
    }
    if w.class_certificate is not None:
        out["class_certificate"] = chord_verdict_to_json(w.class_certificate)
    if w.f_nonneg is not None:
        out["f_nonneg"] = w.f_nonneg
    if w.y_level is not None:
        out["y_level"] = rat_str(w.y_level)
    if w.oval_checked is not None:
        out["oval_checked"] = w.oval_checked
    out.update(context)
    return out
