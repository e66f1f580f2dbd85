"""Command-line front end: ``generate`` complexes and ``verify`` saved ones.

Exit codes: 0 when every requested certificate passes, 1 when one fails,
2 for malformed input or violated preconditions.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

import mpmath

from .cct import CCTError, SymmetricCCT, build_symmetric, check_ideal, key_of
from .scalar import FieldElement, approx, precision
from .serialize import float_string, scalar_from_json, scalar_to_json

SCHEMA = "cct/1"
FAMILIES = ("cct", "cct-rational", "cct-inscribed", "pcctp")
CHECKS = ("ideal", "convex", "local", "width3", "avh", "reciprocal", "sphere")


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    family: str
    n: int
    backend: str
    precision: int = 256
    certify: str = "final"
    output: str = "json"
    workers: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "cct-inscribed" and self.backend != "float":
            raise ValueError("the inscribed family needs the float backend")
        if self.family != "cct-inscribed" and self.backend != "exact":
            raise ValueError(f"family {self.family} needs the exact backend")
        if self.certify not in ("none", "per-step", "final"):
            raise ValueError(f"unknown certify mode {self.certify!r}")
        if self.output not in ("json", "off", "csv"):
            raise ValueError(f"unknown format {self.output!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")


def workers_from_env() -> int:
    try:
        return max(1, int(os.environ.get("CCT_WORKERS", "1")))
    except ValueError:
        return 1


# table and file emitters


def table_string(x: FieldElement) -> str:
    """Exact entry in table style: the √2 term first, e.g. ``(-2955751√2+5033675)/16549127``."""
    a, b, c, d, den = x.integer_form()
    if c or d:
        return x.format()
    parts = []
    if b:
        mag = "" if abs(b) == 1 else str(abs(b))
        parts.append(("-" if b < 0 else "+") + mag + "√2")
    if a or not parts:
        parts.append(("-" if a < 0 else "+") + str(abs(a)))
    body = "".join(parts).lstrip("+")
    if den == 1:
        return body
    return f"({body})/{den}" if len(parts) > 1 else f"{body}/{den}"


def lambda_string(lam) -> str:
    """λ with five significant digits: fixed above 0.01, else mantissa and exponent."""
    v = float(approx(lam, 64)) if isinstance(lam, FieldElement) else float(lam)
    return f"{v:.4f}" if v >= 0.01 else f"{v:.4e}"


def kappa_rows(T: SymmetricCCT, norms: bool = False) -> list:
    """Rows (label, first, second, third, λ[, norm]) of the seed table."""
    from .geom import clifford_lambda, project_equator
    from .variants import kappa

    rows = []
    for k in range(T.width + 1):
        v = kappa(T, k)
        row = [f"kappa{k}"]
        if T.backend == "exact":
            row += [table_string(x) for x in v[:3]]
        else:
            row += [f"{float(x):.7f}" for x in v[:3]]
        row.append(lambda_string(clifford_lambda(project_equator(v))))
        if norms:
            row.append(f"{float(mpmath.sqrt(mpmath.fsum(mpmath.mpf(x) ** 2 for x in v))):.4f}")
        rows.append(row)
    return rows


def to_csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def to_off(T: SymmetricCCT) -> str:
    """Vertices in the affine chart x₅ = 1 and the quadrilateral 2-faces."""
    from .cct import _representative, _shift, class_key
    import itertools

    keys = list(T.abstract.vertices)
    index = {k: i for i, k in enumerate(keys)}
    faces = []
    for layer in range(T.width - 1):
        for n in range(12):
            p = _representative(key_of(layer, n))
            for i, j in itertools.combinations(range(3), 2):
                cyc = (p, _shift(p, i), _shift(p, i, j), _shift(p, j))
                faces.append([index[class_key(*q)] for q in cyc])
    lines = ["OFF", f"{len(keys)} {len(faces)} 0"]
    for k in keys:
        v = [mpmath.mpf(approx(x)) for x in T.vertex(k)]
        lines.append(" ".join(mpmath.nstr(x / v[-1], 17) for x in v[:-1]))
    lines += [f"4 {' '.join(map(str, f))}" for f in faces]
    return "\n".join(lines) + "\n"


# certificates


def certify_cct(T: SymmetricCCT, checks) -> dict:
    """Run the named checks; each entry has ``passed`` and a JSON-ready detail."""
    from . import convex, dual

    out = {}
    for name in checks:
        if name == "ideal":
            cert = check_ideal(T)
            out[name] = {"passed": cert.passed, "failures": [c.name for c in cert.failures()]}
        elif name == "convex":
            cert = convex.check_convex_position(T)
            out[name] = {"passed": cert.passed, "witness": _jsonable(cert.witness), "facets": len(cert.facets)}
        elif name == "local":
            cert = convex.check_local_convex_position(T)
            out[name] = {"passed": cert.passed, "witness": _jsonable(cert.witness)}
        elif name == "width3":
            sub = T.restrict(T.width - 3, T.width)
            rep = convex.check_width3_criterion(sub)
            out[name] = {"passed": rep["local"] and rep["global"], "detail": _jsonable(rep)}
        elif name == "avh":
            rep = convex.check_avh_hypotheses(T)
            out[name] = {"passed": rep["passed"], "agree": rep["agree"], "detail": _jsonable(rep)}
        elif name == "reciprocal":
            cert = convex.check_convex_position(T)
            D = dual.build_polar_dual(T, cert)
            rep = dual.check_reciprocal(T, D)
            out[name] = {"passed": rep.passed, "detail": rep.to_json()}
        elif name == "sphere":
            from .variants import check_quadric_propagation, fit_sphere

            W = fit_sphere(T, (0, 2))
            rep = check_quadric_propagation(T, W)
            worst = max(rep["worst"].values())
            out[name] = {"passed": rep["passed"], "max_residual": mpmath.nstr(worst, 5), "sphere": W.to_json()}
        else:
            raise SchemaError(f"unknown check {name!r}")
    return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, FieldElement):
        return scalar_to_json(x)
    if isinstance(x, mpmath.mpf):
        return float_string(x)
    return x


# generate


def _build(cfg: RunConfig):
    from .extend import standard_cct
    from .variants import build_inscribed, build_rational

    per_step = cfg.certify == "per-step"
    if cfg.family == "cct":
        return standard_cct(cfg.n, per_step), {}
    if cfg.family == "cct-rational":
        T, rat = build_rational(cfg.n, export_rational=True, certify=per_step)
        return T, {"rational": rat}
    if cfg.family == "cct-inscribed":
        T, W = build_inscribed(cfg.n, cfg.precision)
        return T, {"sphere": W}
    raise AssertionError(cfg.family)


def cmd_generate(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        if cfg.family == "pcctp":
            from .projective import build_pcctp

            L = build_pcctp(cfg.n, certify=cfg.certify == "per-step")
            if cfg.output != "json":
                raise ValueError("the 69-dimensional output is only exported as JSON")
            doc = L.to_json()
            doc["n"] = cfg.n
            doc["report"] = {"vertices": len(L.vertices), "rank": L.rank, "dim": L.dim, **_jsonable(L.certificate)}
            out.write(json.dumps(doc) + "\n")
            return 0
        with precision(cfg.precision):
            T, extra = _build(cfg)
            certs = {}
            if cfg.certify == "final" and T.width >= 3:
                names = ["ideal", "convex"] if cfg.family != "cct-inscribed" else ["sphere"]
                certs = certify_cct(T, names)
            elif cfg.certify == "per-step":
                certs = {"per-step": {"passed": True}}
            if cfg.output == "csv":
                rows = kappa_rows(T, norms=cfg.family == "cct-inscribed")
                header = ["vertex", "first", "second", "third", "lambda"] + (["norm"] if cfg.family == "cct-inscribed" else [])
                out.write(to_csv(rows, header))
            elif cfg.output == "off":
                out.write(to_off(T))
            else:
                doc = T.to_json()
                doc["family"] = cfg.family
                if T.backend == "float":
                    doc["precision"] = cfg.precision
                doc["certificates"] = certs
                if "rational" in extra:
                    doc["rational"] = {
                        ",".join(map(str, k)): [str(x) for x in v] for k, v in sorted(extra["rational"].items())
                    }
                if extra.get("sphere") is not None:
                    doc["sphere"] = extra["sphere"].to_json()
                out.write(json.dumps(doc) + "\n")
    except (CCTError, ValueError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    return 0 if all(c.get("passed", True) for c in certs.values()) else 1


# verify


def load_complex(doc) -> SymmetricCCT:
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise SchemaError(f"expected schema {SCHEMA!r}")
    if doc.get("kind") != "symmetric-cct":
        raise SchemaError("expected a symmetric-cct document")
    try:
        seeds = [[scalar_from_json(x) for x in s] for s in doc["seeds"]]
        ambient, backend = doc["ambient"], doc["backend"]
        width = doc["width"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed complex: {exc}") from exc
    if len(seeds) != width + 1:
        raise SchemaError("seed count does not match the width")
    return build_symmetric(seeds, ambient, backend)


def cmd_verify(path: str, checks, out=None) -> int:
    out = out or sys.stdout

    def fail(exc, code):
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return code

    try:
        with open(path) as fh:
            doc = json.load(fh)
        unknown = set(checks) - set(CHECKS)
        if unknown:
            raise SchemaError(f"unknown checks {sorted(unknown)}")
        bits = int(doc.get("precision", 256)) if isinstance(doc, dict) else 256
    except (OSError, json.JSONDecodeError, SchemaError, ValueError) as exc:
        return fail(exc, 2)
    with precision(bits):
        try:
            T = load_complex(doc)
        except (SchemaError, CCTError) as exc:
            return fail(exc, 2)
        try:
            report = certify_cct(T, checks)
        except CCTError as exc:
            report = {"error": {"passed": False, "type": type(exc).__name__, "message": str(exc)}}
        except ValueError as exc:
            return fail(exc, 2)
    passed = all(r["passed"] for r in report.values())
    out.write(json.dumps({"schema": SCHEMA, "kind": "report", "passed": passed, "checks": report}) + "\n")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cctp", description="Cross-bedding cubical tori and their polytopes.")
    sub = p.add_subparsers(dest="command", required=True)
    g = sub.add_parser("generate", help="build a complex and its certificates")
    g.add_argument("--family", choices=FAMILIES, default="cct")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--precision", type=int, default=256)
    g.add_argument("--certify", choices=("none", "per-step", "final"), default="final")
    g.add_argument("--out")
    g.add_argument("--format", choices=("json", "off", "csv"), default="json")
    v = sub.add_parser("verify", help="re-run certificates on a saved complex")
    v.add_argument("--in", dest="path", required=True)
    v.add_argument("--checks", default="ideal,convex")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate":
        try:
            cfg = RunConfig(
                family=args.family,
                n=args.n,
                backend="float" if args.family == "cct-inscribed" else "exact",
                precision=args.precision,
                certify=args.certify,
                output=args.format,
                workers=workers_from_env(),
            )
        except ValueError as exc:
            sys.stderr.write(json.dumps({"error": "ConfigError", "message": str(exc)}) + "\n")
            return 2
        if args.out:
            with open(args.out, "w") as fh:
                return cmd_generate(cfg, fh)
        return cmd_generate(cfg)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    return cmd_verify(args.path, checks)


if __name__ == "__main__":
    sys.exit(main())
