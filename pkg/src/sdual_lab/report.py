"""Structured input documents and analysis reports.

The document format is versioned JSON with a fixed field order and
17-significant-digit float formatting, so that parse/serialize is a
byte-identical round trip and reports are deterministic functions of
their inputs.  Exactly one payload kind is present per document:

* ``twistor_tensor`` -- 4x4x4x4 real array, row-major index order.
* ``holo_tensor``    -- the 16 components of A^{ad}_{bc} as entries
                        ``{"index": [a, d, b, c], "re": x, "im": y}``.
* ``model``          -- a model descriptor (name, parameters, alpha, n).
* ``two_form``       -- 4x4 real skew array.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import calibration, forms, kaehler, models, twistor
from .karith import KTensor, check_alpha
from .kaehler import HoloCurvature
from .models import ModelDescriptor
from .twistor import TwistorTensor

SCHEMA_VERSION = "1"
PAYLOAD_KINDS = ("twistor_tensor", "holo_tensor", "model", "two_form")


class DocumentError(ValueError):
    """Malformed or invariant-violating input document."""


@dataclass(frozen=True)
class InputDocument:
    schema_version: str
    alpha: int
    kind: str
    payload: object

    def __post_init__(self):
        if self.schema_version != SCHEMA_VERSION:
            raise DocumentError(
                f"unsupported schema_version {self.schema_version!r}"
            )
        if self.kind not in PAYLOAD_KINDS:
            raise DocumentError(f"unknown payload kind {self.kind!r}")
        object.__setattr__(self, "alpha", check_alpha(self.alpha))


# ------------------------------- formatting ---------------------------------


def _fmt(x: float) -> float:
    """Canonical float: parsed back from the 17-significant-digit form."""
    return float(format(float(x), ".17g")) + 0.0


def _canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _nested(a: np.ndarray):
    if a.ndim == 1:
        return [_fmt(v) for v in a]
    return [_nested(x) for x in a]


# ------------------------------- documents ----------------------------------


def document_from_payload(payload, alpha: int = None) -> InputDocument:
    """Wrap a tensor or descriptor object in a schema document."""
    if isinstance(payload, TwistorTensor):
        return InputDocument(SCHEMA_VERSION, payload.alpha, "twistor_tensor", payload)
    if isinstance(payload, HoloCurvature):
        return InputDocument(SCHEMA_VERSION, payload.alpha, "holo_tensor", payload)
    if isinstance(payload, ModelDescriptor):
        return InputDocument(SCHEMA_VERSION, payload.alpha, "model", payload)
    if isinstance(payload, np.ndarray) and payload.shape == (4, 4):
        if alpha is None:
            raise DocumentError("two_form payload requires an explicit alpha")
        return InputDocument(SCHEMA_VERSION, check_alpha(alpha), "two_form", payload)
    raise DocumentError(f"unsupported payload type {type(payload).__name__}")


def serialize_document(doc: InputDocument) -> str:
    body = {"schema_version": doc.schema_version, "alpha": doc.alpha}
    if doc.kind == "twistor_tensor":
        body["twistor_tensor"] = _nested(doc.payload.components)
    elif doc.kind == "holo_tensor":
        T = doc.payload.tensor
        entries = []
        for a in range(2):
            for d in range(2):
                for b in range(2):
                    for c in range(2):
                        entries.append(
                            {
                                "index": [a, d, b, c],
                                "re": _fmt(T.re[a, d, b, c]),
                                "im": _fmt(T.im[a, d, b, c]),
                            }
                        )
        body["holo_tensor"] = entries
    elif doc.kind == "model":
        m = doc.payload
        body["model"] = {
            "name": m.name,
            "parameters": [_fmt(p) for p in m.parameters],
            "alpha": m.alpha,
            "n": m.n,
        }
    elif doc.kind == "two_form":
        body["two_form"] = _nested(np.asarray(doc.payload, dtype=float))
    return _canonical_dumps(body)


def parse_document(text: str) -> InputDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("document root must be an object")
    version = raw.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {version!r}")
    if "alpha" not in raw:
        raise DocumentError("document is missing the alpha field")
    try:
        alpha = check_alpha(raw["alpha"])
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc)) from exc
    kinds = [k for k in PAYLOAD_KINDS if k in raw]
    if len(kinds) != 1:
        raise DocumentError(
            f"document must contain exactly one payload kind, found {kinds}"
        )
    kind = kinds[0]
    data = raw[kind]
    try:
        if kind == "twistor_tensor":
            arr = np.asarray(data, dtype=float)
            if arr.shape != (4, 4, 4, 4):
                raise DocumentError(
                    f"twistor_tensor must be 4x4x4x4, got {arr.shape}"
                )
            payload = TwistorTensor(arr, alpha)
        elif kind == "holo_tensor":
            T = KTensor.zeros((2, 2, 2, 2), alpha)
            if not isinstance(data, list) or len(data) != 16:
                raise DocumentError("holo_tensor must list all 16 components")
            for entry in data:
                a, d, b, c = entry["index"]
                T.re[a, d, b, c] = float(entry["re"])
                T.im[a, d, b, c] = float(entry["im"])
            payload = HoloCurvature(T)
        elif kind == "model":
            payload = ModelDescriptor(
                data["name"],
                tuple(data.get("parameters", ())),
                data.get("alpha", alpha),
                data.get("n", 1),
            )
            if payload.alpha != alpha:
                raise DocumentError("model alpha disagrees with document alpha")
        else:
            arr = np.asarray(data, dtype=float)
            payload = forms.check_skew(arr)
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise DocumentError(f"invalid {kind} payload: {exc}") from exc
    return InputDocument(SCHEMA_VERSION, alpha, kind, payload)


# -------------------------------- analysis ----------------------------------


def _curvature_pair(doc: InputDocument):
    """(twistor tensor, holomorphic tensor or None) for an analyzable document."""
    payload = doc.payload
    if doc.kind == "model":
        payload = models.build(payload)
    if isinstance(payload, twistor.HermitianBlockRiemann):
        return twistor.twistor_from_riemann(payload), None
    if isinstance(payload, HoloCurvature):
        return kaehler.riemann_real(payload), payload
    if isinstance(payload, TwistorTensor):
        return payload, None
    raise DocumentError(
        f"payload kind {doc.kind!r} is not analyzable; use the hodge command"
    )


def analyze_document(doc: InputDocument, tol: float) -> dict:
    """Deterministic analysis report for a curvature document."""
    r, A = _curvature_pair(doc)
    scale = max(1.0, float(np.abs(r.components).max()))
    W = twistor.weyl_t(r)
    Wp, Wm, _ = twistor.weyl_split(W)
    res_sd = float(np.abs(Wm).max())
    res_asd = float(np.abs(Wp).max())
    rt = twistor.ricci_t(r)
    res_einstein = twistor.einstein_residual(r)
    ctc_ok, c_value = twistor.constant_twistor_curvature(r, tol)
    res_ctc = float(
        np.abs(twistor.operator_matrix(r)[:3, :3] - c_value * np.eye(3)).max()
    )
    if A is not None:
        s = kaehler.scalar_s(A)
        res_bochner = kaehler.bochner(A).max_abs()
    else:
        s = rt.kappa
        res_bochner = res_sd
    report = {
        "schema_version": SCHEMA_VERSION,
        "alpha": doc.alpha,
        "verdicts": {
            "self_dual": bool(res_sd <= tol * scale),
            "anti_self_dual": bool(res_asd <= tol * scale),
            "einstein_bundle": bool(res_einstein <= tol * scale),
            "bochner_flat": bool(res_bochner <= tol * scale),
            "constant_twistor_curvature": bool(ctc_ok),
        },
        "scalars": {
            "kappa": _fmt(rt.kappa),
            "s": _fmt(s),
            "twistor_curvature_c": _fmt(c_value),
            "bianchi_residual": _fmt(twistor.bianchi_residual(r)),
        },
        "residuals": {
            "self_dual": _fmt(res_sd),
            "anti_self_dual": _fmt(res_asd),
            "einstein_bundle": _fmt(res_einstein),
            "bochner_flat": _fmt(res_bochner),
            "constant_twistor_curvature": _fmt(res_ctc),
        },
        "calibration": {
            "sigma": calibration.sigma_oracle(),
            "epsilon_l": calibration.epsilon_l_oracle(),
        },
    }
    return report


def hodge_document(doc: InputDocument, tol: float) -> dict:
    """Decomposition report for a two_form document."""
    if doc.kind != "two_form":
        raise DocumentError("hodge analysis requires a two_form payload")
    w = np.asarray(doc.payload, dtype=float)
    alpha = doc.alpha
    plus = forms.sd_project(w, alpha)
    minus = forms.asd_project(w, alpha)
    x, y, z = forms.sd_coordinates(w, alpha)
    xa, ya, za = forms.asd_coordinates(w, alpha)
    reassembly = float(np.abs(plus + minus - w).max())
    return {
        "schema_version": SCHEMA_VERSION,
        "alpha": alpha,
        "self_dual_part": _nested(plus),
        "anti_self_dual_part": _nested(minus),
        "sd_coordinates": {"x": _fmt(x), "y": _fmt(y), "z": _fmt(z)},
        "asd_coordinates": {"x": _fmt(xa), "y": _fmt(ya), "z": _fmt(za)},
        "verdicts": {
            "self_dual": bool(forms.is_self_dual(w, alpha, tol)),
            "anti_self_dual": bool(forms.is_anti_self_dual(w, alpha, tol)),
        },
        "reassembly_residual": _fmt(reassembly),
    }


def serialize_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return _canonical_dumps(report)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []

    def format_value(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return format(v, ".17g")
        if isinstance(v, list):
            return json.dumps(v)
        return str(v)

    def walk(prefix, obj):
        for k, v in obj.items():
            key = f"{prefix}{k}"
            if isinstance(v, dict):
                walk(f"{key}.", v)
            else:
                lines.append(f"{key} = {format_value(v)}")

    walk("", report)
    return "\n".join(lines) + "\n"
