"""Reading and writing judgment matrices and result payloads.

Two matrix file shapes are understood:

* JSON, canonical form: ``{"n": 3, "labels": [...], "upper": [[i, j, value], ...]}``
  listing the strictly-upper-triangle entries; reciprocals are implied.
  A full ``{"matrix": [[...], ...]}`` form is also accepted.
* CSV: an n-by-n grid of numbers, fractions like ``1/3`` welcome, with an
  optional first row of labels. Blank lower-triangle cells are filled
  from the reciprocals.

Result payloads are plain dicts serialized with :func:`dump_json`; the
command line and the HTTP service share these builders so a number
printed by one parses back bit for bit from the other.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .eigen import EigenReport
from .errors import ParseError
from .group import GroupJudgment, GroupResult, verify_equivalence
from .lls import ConsistencyReport, PriorityVector
from .matrix import JudgmentMatrix, ScaleMode, validate_judgment_matrix


def parse_number(text: str) -> float:
    """Parse a decimal or a fraction such as ``1/3`` into a float."""
    token = text.strip()
    if not token:
        raise ValueError("empty cell")
    if "/" in token:
        return float(Fraction(token))
    return float(token)


def matrix_from_dict(
    obj,
    *,
    source: str = "<data>",
    scale_mode: ScaleMode = ScaleMode.FREE_POSITIVE,
) -> JudgmentMatrix:
    """Build a validated matrix from a decoded JSON object."""
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", location=source)
    labels = obj.get("labels", [])
    if labels is None:
        labels = []
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise ParseError("labels must be a list of strings", location=source)

    if "matrix" in obj:
        rows = obj["matrix"]
        if not isinstance(rows, list) or not rows:
            raise ParseError("matrix must be a non-empty list of rows", location=source)
        try:
            entries = np.array(rows, dtype=float)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"matrix rows are not numeric: {exc}", location=source) from None
        return validate_judgment_matrix(entries, scale_mode=scale_mode, labels=labels)

    if "upper" in obj:
        n = obj.get("n")
        if not isinstance(n, int) or n < 2:
            raise ParseError("canonical form needs an integer n >= 2", location=source)
        entries = np.full((n, n), np.nan)
        np.fill_diagonal(entries, 1.0)
        seen = set()
        triples = obj["upper"]
        if not isinstance(triples, list):
            raise ParseError("upper must be a list of [i, j, value] triples", location=source)
        for t, triple in enumerate(triples):
            if (
                not isinstance(triple, list)
                or len(triple) != 3
                or not isinstance(triple[0], int)
                or not isinstance(triple[1], int)
            ):
                raise ParseError(f"upper[{t}] is not an [i, j, value] triple", location=source)
            i, j, value = triple
            if not (0 <= i < j < n):
                raise ParseError(
                    f"upper[{t}] indices ({i}, {j}) need 0 <= i < j < {n}", location=source
                )
            if (i, j) in seen:
                raise ParseError(f"upper[{t}] repeats entry ({i}, {j})", location=source)
            seen.add((i, j))
            try:
                entries[i, j] = float(value)
            except (TypeError, ValueError):
                raise ParseError(f"upper[{t}] value is not numeric", location=source) from None
        if len(seen) != n * (n - 1) // 2:
            missing = n * (n - 1) // 2 - len(seen)
            raise ParseError(f"upper triangle incomplete: {missing} entries missing", location=source)
        return validate_judgment_matrix(entries, scale_mode=scale_mode, labels=labels)

    raise ParseError('expected either an "upper" or a "matrix" key', location=source)


def _matrix_from_csv_text(text: str, *, source: str, scale_mode: ScaleMode) -> JudgmentMatrix:
    rows = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if not rows:
        raise ParseError("file holds no rows", location=source)

    labels: list[str] = []
    first = rows[0]
    header = False
    for cell in first:
        if cell.strip():
            try:
                parse_number(cell)
            except ValueError:
                header = True
                break
    if header:
        labels = [cell.strip() for cell in first]
        rows = rows[1:]
    if not rows:
        raise ParseError("label row without data rows", location=source)

    n = len(rows)
    entries = np.full((n, n), np.nan)
    for i, row in enumerate(rows):
        lineno = i + (2 if header else 1)
        if len(row) != n:
            raise ParseError(
                f"row has {len(row)} cells, expected {n}",
                location=f"{source}:{lineno}",
            )
        for j, cell in enumerate(row):
            if not cell.strip():
                continue
            try:
                entries[i, j] = parse_number(cell)
            except (ValueError, ZeroDivisionError):
                raise ParseError(
                    f"cell {j + 1} ({cell.strip()!r}) is not a number",
                    location=f"{source}:{lineno}",
                ) from None
    return validate_judgment_matrix(entries, scale_mode=scale_mode, labels=labels)


def load_matrix(path, *, scale_mode: ScaleMode = ScaleMode.FREE_POSITIVE) -> JudgmentMatrix:
    """Load a judgment matrix from a .json or .csv file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    suffix = path.suffix.lower()
    looks_json = suffix == ".json" or (suffix != ".csv" and text.lstrip().startswith("{"))
    if looks_json:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}", location=str(path)) from None
        return matrix_from_dict(obj, source=str(path), scale_mode=scale_mode)
    return _matrix_from_csv_text(text, source=str(path), scale_mode=scale_mode)


def matrix_to_dict(mat: JudgmentMatrix) -> dict:
    """Canonical JSON object for a matrix: size, labels, upper triangle."""
    upper = [
        [i, j, float(mat.entries[i, j])]
        for i in range(mat.n)
        for j in range(i + 1, mat.n)
    ]
    obj: dict = {"n": mat.n, "upper": upper}
    if mat.labels:
        obj["labels"] = list(mat.labels)
    return obj


def save_matrix(mat: JudgmentMatrix, path) -> None:
    Path(path).write_text(dump_json(matrix_to_dict(mat)), encoding="utf-8")


def dump_json(obj) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, one trailing newline.

    Floats go through the shortest round-trip representation, so values
    survive a print/parse cycle bit for bit.
    """
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _float_list(a) -> list[float]:
    return [float(x) for x in np.asarray(a)]


def _int_list(a) -> list[int]:
    return [int(x) for x in np.asarray(a)]


def entries_to_nested(entries: np.ndarray) -> list[list[float | None]]:
    """Matrix entries as nested lists, NaN (not yet judged) becoming None."""
    return [[None if np.isnan(v) else float(v) for v in row] for row in entries]


def consistency_to_dict(report: ConsistencyReport) -> dict:
    return {
        "distance": float(report.distance),
        "sigma2": None if report.sigma2 is None else float(report.sigma2),
        "is_consistent": bool(report.is_consistent),
    }


def se_to_dict(report: EigenReport) -> dict:
    """Principal-eigenvector outcome in payload form."""
    return {
        "lambda_max": float(report.lambda_max),
        "mu": float(report.mu),
        "iterations": int(report.iterations),
        "converged": bool(report.converged),
        "w": _float_list(report.principal_w),
        "ranking": _int_list(np.argsort(-report.principal_w, kind="stable")),
    }


def priorities_payload(
    mat: JudgmentMatrix,
    pv: PriorityVector | None = None,
    report: ConsistencyReport | None = None,
    se: EigenReport | None = None,
) -> dict:
    payload: dict = {
        "n": mat.n,
        "labels": [mat.label_for(i) for i in range(mat.n)],
    }
    if pv is not None:
        payload["u"] = _float_list(pv.u)
        payload["w"] = _float_list(pv.w)
        payload["ranking"] = _int_list(pv.ranking)
    if report is not None:
        payload["consistency"] = consistency_to_dict(report)
    if se is not None:
        payload["se"] = se_to_dict(se)
    return payload


def group_payload(g: GroupJudgment, result: GroupResult) -> dict:
    experts = []
    for index in range(g.m):
        pv = result.expert_vectors[index]
        rep = result.expert_reports[index]
        experts.append(
            {
                "index": index,
                "alpha": float(g.alphas[index]),
                "u": _float_list(pv.u),
                "w": _float_list(pv.w),
                "divergence": float(result.divergences[index]),
                "consistency": consistency_to_dict(rep),
            }
        )
    return {
        "n": g.n,
        "m": g.m,
        "labels": [g.matrices[0].label_for(i) for i in range(g.n)],
        "alphas": _float_list(g.alphas),
        "u": _float_list(result.group_w.u),
        "w": _float_list(result.group_w.w),
        "ranking": _int_list(result.group_w.ranking),
        "experts": experts,
        "equivalent": verify_equivalence(g),
    }


def save_result(result, format: str = "json") -> bytes:
    """Serialize a solver result deterministically.

    JSON keeps full float precision (shortest round-trip text); csv and
    table are flat views for spreadsheets and terminals. Accepts a
    priority vector, a group result, a consistency report, or an
    eigenpair report.
    """
    if format not in ("json", "csv", "table"):
        raise ValueError(f"unknown format {format!r}")

    if isinstance(result, PriorityVector):
        obj = {
            "u": _float_list(result.u),
            "w": _float_list(result.w),
            "ranking": _int_list(result.ranking),
        }
        rows = _weight_rows(obj["w"], obj["ranking"])
    elif isinstance(result, GroupResult):
        obj = {
            "group_w": {
                "u": _float_list(result.group_w.u),
                "w": _float_list(result.group_w.w),
                "ranking": _int_list(result.group_w.ranking),
            },
            "experts": [
                {
                    "w": _float_list(pv.w),
                    "divergence": float(d),
                    "sigma2": None if rep.sigma2 is None else float(rep.sigma2),
                }
                for pv, d, rep in zip(
                    result.expert_vectors, result.divergences, result.expert_reports
                )
            ],
        }
        rows = _weight_rows(obj["group_w"]["w"], obj["group_w"]["ranking"])
    elif isinstance(result, ConsistencyReport):
        obj = consistency_to_dict(result)
        obj["residuals"] = [[float(v) for v in row] for row in result.residuals]
        rows = [
            ("distance", repr(obj["distance"])),
            ("sigma2", "" if obj["sigma2"] is None else repr(obj["sigma2"])),
            ("is_consistent", str(obj["is_consistent"]).lower()),
        ]
    elif isinstance(result, EigenReport):
        obj = se_to_dict(result)
        rows = [
            ("lambda_max", repr(obj["lambda_max"])),
            ("mu", repr(obj["mu"])),
            ("iterations", str(obj["iterations"])),
            ("converged", str(obj["converged"]).lower()),
        ]
    else:
        raise TypeError(f"cannot serialize {type(result).__name__}")

    if format == "json":
        return dump_json(obj).encode("utf-8")
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        for row in rows:
            writer.writerow(row)
        return out.getvalue().encode("utf-8")
    width = max(len(str(r[0])) for r in rows)
    lines = [f"{str(r[0]):<{width}}  " + "  ".join(str(c) for c in r[1:]) for r in rows]
    return ("\n".join(lines) + "\n").encode("utf-8")


def _weight_rows(w: list[float], ranking: list[int]) -> list[tuple]:
    rank_of = {index: pos + 1 for pos, index in enumerate(ranking)}
    rows: list[tuple] = [("index", "weight", "rank")]
    for i, weight in enumerate(w):
        rows.append((str(i), repr(weight), str(rank_of[i])))
    return rows


def render_csv(payload: dict) -> str:
    """Weights as label,value rows; one column per method that ran."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    labels = payload["labels"]
    w = payload.get("w")
    se = payload.get("se")
    if w is not None and se is not None:
        writer.writerow(["label", "weight", "se_weight"])
        for label, a, b in zip(labels, w, se["w"]):
            writer.writerow([label, repr(a), repr(b)])
    elif se is not None:
        writer.writerow(["label", "weight"])
        for label, b in zip(labels, se["w"]):
            writer.writerow([label, repr(b)])
    else:
        writer.writerow(["label", "weight"])
        for label, a in zip(labels, w):
            writer.writerow([label, repr(a)])
    return out.getvalue()


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def render_table(payload: dict) -> str:
    """Human-oriented aligned text for a solve or group payload."""
    labels = payload["labels"]
    width = max(5, max(len(s) for s in labels))
    lines = []
    se = payload.get("se")
    w = payload.get("w")
    ranking = payload.get("ranking") or (se["ranking"] if se else [])
    ranked = {int(k): pos + 1 for pos, k in enumerate(ranking)}
    if w is not None and se is not None:
        lines.append(f"{'label':<{width}}  {'weight':>10}  {'se':>10}  rank")
        for i, label in enumerate(labels):
            lines.append(
                f"{label:<{width}}  {_fmt(w[i]):>10}  {_fmt(se['w'][i]):>10}  {ranked[i]:>4}"
            )
    elif se is not None:
        lines.append(f"{'label':<{width}}  {'weight':>10}  rank")
        for i, label in enumerate(labels):
            lines.append(f"{label:<{width}}  {_fmt(se['w'][i]):>10}  {ranked[i]:>4}")
    else:
        lines.append(f"{'label':<{width}}  {'weight':>10}  rank")
        for i, label in enumerate(labels):
            lines.append(f"{label:<{width}}  {_fmt(w[i]):>10}  {ranked[i]:>4}")

    cons = payload.get("consistency")
    if cons:
        sigma2 = "n/a" if cons["sigma2"] is None else f"{cons['sigma2']:.6g}"
        verdict = "consistent" if cons["is_consistent"] else "inconsistent"
        lines.append(f"distance={cons['distance']:.6g}  sigma2={sigma2}  {verdict}")
    if se:
        lines.append(
            f"lambda_max={se['lambda_max']:.8g}  mu={se['mu']:.6g}  "
            f"iterations={se['iterations']}"
        )
    for expert in payload.get("experts", []):
        cons = expert["consistency"]
        sigma2 = "n/a" if cons["sigma2"] is None else f"{cons['sigma2']:.6g}"
        lines.append(
            f"expert {expert['index']}: alpha={expert['alpha']:.4f}  "
            f"divergence={expert['divergence']:.6g}  sigma2={sigma2}"
        )
    return "\n".join(lines) + "\n"
