"""JSON (de)serialization of the library's value types.

All ``*_to_json`` functions return plain dicts/lists of floats; the matching
``*_from_json`` functions validate shape and raise ``ValueError`` on bad input.
"""

import numpy as np

from .circle import make_diffeo
from .config import DEFAULT
from .intervals import Covering, IntervalS1
from .localization import LocalizedWord
from .moebius import CoverElement, IwasawaCoords, MoebiusElement, TSFactor

SCHEMA_VERSION = 1


def _floats(values, name):
    try:
        arr = np.asarray(values, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValueError("%s must be numeric" % name) from exc
    if not np.all(np.isfinite(arr)):
        raise ValueError("%s must be finite" % name)
    return arr


def _require(obj, keys, name):
    if not isinstance(obj, dict):
        raise ValueError("%s must be a JSON object" % name)
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ValueError("%s is missing %s" % (name, ", ".join(missing)))


def diffeo_to_json(phi):
    return {"mean": phi.mean, "cos": phi.cos.tolist(), "sin": phi.sin.tolist()}


def diffeo_from_json(obj, config=DEFAULT):
    _require(obj, ("mean",), "diffeo")
    cos = _floats(obj.get("cos", []), "cos").ravel()
    sin = _floats(obj.get("sin", []), "sin").ravel()
    mean = float(_floats(obj["mean"], "mean"))
    return make_diffeo(cos, sin, mean, config)


def interval_to_json(arc):
    return {"a": arc.a, "b": arc.b}


def interval_from_json(obj):
    _require(obj, ("a", "b"), "interval")
    return IntervalS1(float(_floats(obj["a"], "a")), float(_floats(obj["b"], "b")))


def covering_to_json(cover):
    return {"intervals": [interval_to_json(arc) for arc in cover]}


def covering_from_json(obj):
    _require(obj, ("intervals",), "covering")
    return Covering(tuple(interval_from_json(a) for a in obj["intervals"]))


def word_to_json(w):
    return {"factors": [{"interval": interval_to_json(i), "diffeo": diffeo_to_json(f)} for i, f in w]}


def word_from_json(obj, config=DEFAULT):
    _require(obj, ("factors",), "word")
    return LocalizedWord(tuple(
        (interval_from_json(f["interval"]), diffeo_from_json(f["diffeo"], config)) for f in obj["factors"]
    ))


def moebius_to_json(g):
    return {"m": np.asarray(g.matrix).tolist()}


def moebius_from_json(obj):
    _require(obj, ("m",), "moebius")
    m = _floats(obj["m"], "m")
    if m.shape != (2, 2):
        raise ValueError("moebius matrix must be 2x2")
    return MoebiusElement(m)


def iwasawa_to_json(co):
    return {"p": co.p, "tau": co.tau, "t": co.t}


def iwasawa_from_json(obj):
    _require(obj, ("p", "tau", "t"), "iwasawa")
    return IwasawaCoords(*(float(_floats(obj[k], k)) for k in ("p", "tau", "t")))


def ts_word_to_json(word):
    return [{"kind": f.kind, "param": f.parameter} for f in word]


def ts_word_from_json(obj):
    if not isinstance(obj, list):
        raise ValueError("ts word must be a JSON array")
    out = []
    for f in obj:
        _require(f, ("kind", "param"), "ts factor")
        out.append(TSFactor(f["kind"], float(_floats(f["param"], "param"))))
    return out


def cover_to_json(a):
    return {"m": np.asarray(a.base.matrix).tolist(), "lift0": a.lift_at_zero}


def cover_from_json(obj):
    _require(obj, ("m", "lift0"), "cover")
    return CoverElement(moebius_from_json(obj), float(_floats(obj["lift0"], "lift0")))
