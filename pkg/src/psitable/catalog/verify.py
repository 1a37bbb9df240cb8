"""Catalog operations: lookup, sampling, numerical evaluation and the
verification loop."""

from __future__ import annotations

import csv
import fnmatch
import hashlib
import io
import itertools
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .. import __version__
from ..quadrature import (
    IntegrandError,
    QuadOptions,
    QuadResult,
    integrate,
    integrate_half_line,
    integrate_pv,
)
from ..specfun import euler_gamma
from .entries import REGISTRY
from .model import ConfigurationError, ConstraintError, Entry, Sample, UnknownEntryError

DEFAULT_SEED = 20240001
DEFAULT_REL_TOL = 1e-8
DEFAULT_ABS_FLOOR = 1e-10
_MAX_DRAWS = 10_000


# ---------------------------------------------------------------- lookup


def get_entry(entry_id: str) -> Entry:
    try:
        return REGISTRY[entry_id]
    except KeyError:
        raise UnknownEntryError(entry_id) from None


def list_entries(pattern: Optional[str] = None) -> list[str]:
    """Entry ids in lexicographic order, optionally filtered by a glob."""
    ids = sorted(REGISTRY)
    if pattern is not None:
        ids = [i for i in ids if fnmatch.fnmatchcase(i, pattern)]
    return ids


def closed_form_value(entry_id: str, sample: Sample) -> float:
    entry = get_entry(entry_id)
    return float(entry.closed_form(entry.validate(sample)))


def numeric_value(entry_id: str, sample: Sample, opts: Optional[QuadOptions] = None) -> QuadResult:
    """Integrate the entry numerically, honouring its domain, pole and
    custom-route annotations."""
    entry = get_entry(entry_id)
    s = entry.validate(sample)
    opts = opts or QuadOptions()
    f = entry.integrand
    if entry.route is not None:
        return entry.route(s, opts)
    if entry.pole is not None:
        c = entry.pole(s)
        if c is not None:
            return integrate_pv(lambda x: f(s, x, None), entry.domain, c, opts, vectorized=True)
    if entry.domain.kind == "whole_line":
        return integrate(lambda x: f(s, x, None), entry.domain, entry.singularities, opts,
                         vectorized=True)
    return integrate(lambda x, xc: f(s, x, xc), entry.domain, entry.singularities, opts,
                     vectorized=True, complement=True)


# ---------------------------------------------------------------- sampling


def _rng(entry_id: str, seed: int) -> np.random.Generator:
    digest = hashlib.sha256(f"{seed}:{entry_id}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:16], "little"))


def _satisfies(entry: Entry, sample: dict) -> bool:
    try:
        entry.validate(sample)
    except ConstraintError:
        return False
    return True


def sample_params(entry_id: str, count: int, seed: int = DEFAULT_SEED) -> list[dict]:
    """Draw ``count`` valid samples, deterministically in ``(entry_id, seed)``.

    Continuous parameters are uniform on their ranges and rejection-sampled
    against the constraints. Entries whose parameters are all discrete return
    distinct combinations in shuffled order, so fewer than ``count`` samples
    come back when the grid is smaller. Parameterless entries return ``[{}]``.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    entry = get_entry(entry_id)
    if not entry.params:
        return [{}]
    rng = _rng(entry_id, seed)
    if all(p.is_discrete for p in entry.params):
        grid = [dict(zip(entry.param_names, combo))
                for combo in itertools.product(*(p.choices for p in entry.params))]
        grid = [g for g in grid if _satisfies(entry, g)]
        if not grid:
            raise ConfigurationError(f"{entry_id}: no parameter combination satisfies the constraints")
        order = rng.permutation(len(grid))
        return [grid[i] for i in order[:count]]

    out = []
    for _ in range(count):
        for _ in range(_MAX_DRAWS):
            s = {}
            for p in entry.params:
                if p.is_discrete:
                    s[p.name] = int(p.choices[rng.integers(len(p.choices))])
                else:
                    s[p.name] = float(rng.uniform(p.lo, p.hi))
            if _satisfies(entry, s):
                out.append(s)
                break
        else:
            raise ConfigurationError(f"{entry_id}: constraints rejected {_MAX_DRAWS} draws in a row")
    return out


# ---------------------------------------------------------------- records


@dataclass(frozen=True)
class VerificationRecord:
    """One comparison of a computed value against a reference.

    ``verdict`` is ``"pass"`` exactly when ``abs_diff <= max(abs_floor,
    rel_tol * |closed|)`` and the quadrature (if any) converged.
    """

    entry_id: str
    sample: dict
    closed: Optional[float]
    value: Optional[float]
    numeric: Optional[QuadResult]
    abs_diff: Optional[float]
    rel_diff: Optional[float]
    verdict: str
    reason: str
    rel_tol: float
    abs_floor: float
    control: bool = False

    @property
    def expected(self) -> bool:
        if self.control:
            return self.verdict == "fail"
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        q = self.numeric
        return {
            "id": self.entry_id,
            "sample": self.sample,
            "numeric": self.value,
            "error_estimate": None if q is None else q.error_estimate,
            "evaluations": None if q is None else q.evaluations,
            "status": "exact" if q is None else q.status.value,
            "closed": self.closed,
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "rel_tol": self.rel_tol,
            "abs_floor": self.abs_floor,
            "verdict": self.verdict,
            "control": self.control,
            "reason": self.reason,
        }


def _judge(entry_id, sample, value, numeric, closed, rel_tol, abs_floor, control=False,
           note="") -> VerificationRecord:
    diff = abs(value - closed)
    rel = diff / abs(closed) if closed != 0 else None
    threshold = max(abs_floor, rel_tol * abs(closed))
    if numeric is not None and not numeric.converged:
        verdict, reason = "fail", f"quadrature status {numeric.status.value}"
    elif diff <= threshold:
        verdict, reason = "pass", ""
    else:
        verdict, reason = "fail", f"|numeric - closed| = {diff:.3e} > {threshold:.3e}"
    if note:
        reason = f"{note}; {reason}" if reason else note
    return VerificationRecord(entry_id, dict(sample), closed, value, numeric, diff, rel,
                              verdict, reason, rel_tol, abs_floor, control)


def _skipped(entry_id, sample, reason, rel_tol, abs_floor, control) -> VerificationRecord:
    return VerificationRecord(entry_id, dict(sample), None, None, None, None, None,
                              "skipped", reason, rel_tol, abs_floor, control)


def verify_entry(
    entry_id: str,
    sample: Sample,
    opts: Optional[QuadOptions] = None,
    *,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_floor: float = DEFAULT_ABS_FLOOR,
) -> VerificationRecord:
    """Compare quadrature with the closed form. Evaluation problems become
    ``skipped`` records rather than exceptions."""
    entry = get_entry(entry_id)
    try:
        s = entry.validate(sample)
        closed = float(entry.closed_form(s))
        numeric = numeric_value(entry_id, s, opts)
    except (ConstraintError, IntegrandError, ArithmeticError, ValueError) as exc:
        return _skipped(entry_id, sample, f"{type(exc).__name__}: {exc}", rel_tol, abs_floor,
                        entry.control)
    return _judge(entry_id, s, numeric.value, numeric, closed, rel_tol, abs_floor, entry.control)


# ---------------------------------------------------------------- reports


@dataclass
class Report:
    """Records plus the settings needed to reproduce them."""

    records: list[VerificationRecord]
    seed: Optional[int]
    tolerances: dict
    wall_time: float = 0.0
    kind: str = "verify"
    version: str = __version__

    @property
    def totals(self) -> dict:
        t = {"pass": 0, "fail": 0, "skipped": 0, "controls_detected": 0, "controls_missed": 0}
        for r in self.records:
            if r.control:
                t["controls_detected" if r.verdict == "fail" else "controls_missed"] += 1
            else:
                t[r.verdict] += 1
        return t

    @property
    def unexpected(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.expected]

    @property
    def ok(self) -> bool:
        return not self.unexpected

    def to_dict(self, include_wall_time: bool = True) -> dict:
        meta = {"kind": self.kind, "seed": self.seed, "tolerances": self.tolerances,
                "version": self.version}
        if include_wall_time:
            meta["wall_time"] = round(self.wall_time, 3)
        return {"meta": meta, "records": [r.to_dict() for r in self.records],
                "totals": self.totals}

    def to_json(self, include_wall_time: bool = True) -> str:
        return json.dumps(self.to_dict(include_wall_time), indent=2, allow_nan=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        rows = [r.to_dict() for r in self.records]
        fields = ["id", "sample", "numeric", "error_estimate", "evaluations", "status", "closed",
                  "abs_diff", "rel_diff", "rel_tol", "abs_floor", "verdict", "control", "reason"]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            row = dict(row)
            row["sample"] = json.dumps(row["sample"], sort_keys=True)
            w.writerow({k: ("" if row[k] is None else row[k]) for k in fields})
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            sample = ", ".join(f"{k}={_fmt(v)}" for k, v in r.sample.items()) or "-"
            tag = " [control]" if r.control else ""
            if r.verdict == "skipped":
                lines.append(f"{r.entry_id:<24} {sample:<40} SKIPPED{tag}  {r.reason}")
                continue
            lines.append(
                f"{r.entry_id:<24} {sample:<40} numeric={r.value:+.15e} closed={r.closed:+.15e} "
                f"diff={r.abs_diff:.2e} {r.verdict.upper()}{tag}"
                + (f"  ({r.reason})" if r.verdict != "pass" else "")
            )
        t = self.totals
        lines.append(
            f"totals: pass={t['pass']} fail={t['fail']} skipped={t['skipped']} "
            f"controls_detected={t['controls_detected']} controls_missed={t['controls_missed']} "
            f"wall_time={self.wall_time:.2f}s"
        )
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else f"{v:.6g}"


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = DEFAULT_SEED
    samples_per_entry: int = 5
    opts: QuadOptions = field(default_factory=QuadOptions)
    rel_tol: float = DEFAULT_REL_TOL
    abs_floor: float = DEFAULT_ABS_FLOOR
    entry_filter: Optional[str] = None
    workers: int = 1

    def __post_init__(self):
        if self.samples_per_entry < 1:
            raise ValueError("samples_per_entry must be at least 1")
        if not (self.rel_tol > 0 and self.abs_floor > 0):
            raise ValueError("tolerances must be positive")

    def tolerances(self) -> dict:
        return {"rel_tol": self.rel_tol, "abs_floor": self.abs_floor,
                "quad_abs_tol": self.opts.abs_tol, "quad_rel_tol": self.opts.rel_tol,
                "max_level": self.opts.max_level}


def _verify_one_entry(entry_id: str, config: VerifyConfig) -> list[VerificationRecord]:
    entry = get_entry(entry_id)
    try:
        samples = sample_params(entry_id, config.samples_per_entry, config.seed)
    except ConfigurationError as exc:
        return [_skipped(entry_id, {}, str(exc), config.rel_tol, config.abs_floor, entry.control)]
    return [verify_entry(entry_id, s, config.opts, rel_tol=config.rel_tol,
                         abs_floor=config.abs_floor) for s in samples]


def verify_all(config: Optional[VerifyConfig] = None) -> Report:
    """Verify every entry (or those matching ``config.entry_filter``).

    Records come out in entry-id order whatever the worker count, because
    each entry's samples depend only on the seed and its id.
    """
    config = config or VerifyConfig()
    ids = list_entries(config.entry_filter)
    start = time.perf_counter()
    if config.workers > 1:
        with ThreadPoolExecutor(config.workers) as pool:
            chunks = list(pool.map(lambda i: _verify_one_entry(i, config), ids))
    else:
        chunks = [_verify_one_entry(i, config) for i in ids]
    records = [r for chunk in chunks for r in chunk]
    return Report(records, config.seed, config.tolerances(), time.perf_counter() - start)


# ---------------------------------------------------------------- structural checks


def _scaled(r: QuadResult, k: float, shift: float = 0.0) -> QuadResult:
    return QuadResult(k * r.value + shift, abs(k) * r.error_estimate, r.evaluations, r.status)


def _vanishing_integrand(r: float) -> Callable:
    # (v - v^r)/(v (1+v)(1+v^r)) rewritten to avoid overflow of v^r
    def f(v):
        with np.errstate(over="ignore"):
            return (1.0 - v ** (r - 1.0)) / ((1.0 + v) * (1.0 + v**r))
    return f


def property_checks(opts: Optional[QuadOptions] = None) -> Report:
    """Structural checks that do not reduce to a single closed form.

    * ``a^q I(a)`` for 3.234.1 is the same for a in {0.5, 1, 2} (1e-8).
    * ``a I(a) + ln a = -gamma`` for 4.331.1, a in {0.5, 1, 3} (1e-9).
    * The integral of ``(v - v^(p/q))/(v(1+v)(1+v^(p/q)))`` over (0, inf)
      vanishes (1e-9).
    * The special cases 3.463, 3.469.2, 3.469.3 and 3.475.3 agree with the
      general ``(p - q) gamma/(pq)`` form, both as stored closed forms and
      numerically.
    """
    opts = opts or QuadOptions()
    start = time.perf_counter()
    gamma = euler_gamma()
    recs: list[VerificationRecord] = []

    for q in (0.3, 0.7):
        ref = numeric_value("3.234.1", {"a": 1.0, "q": q}, opts)
        for a in (0.5, 2.0):
            r = _scaled(numeric_value("3.234.1", {"a": a, "q": q}, opts), a**q)
            rec = _judge("property:fake-parameter:3.234.1", {"a": a, "q": q}, r.value, r,
                         ref.value, 0.0, 1e-8, note="reference is the a = 1 integral")
            if not ref.converged:
                rec = _judge(rec.entry_id, rec.sample, r.value, ref, ref.value, 0.0, 1e-8)
            recs.append(rec)

    for a in (0.5, 1.0, 3.0):
        r = _scaled(numeric_value("4.331.1", {"a": a}, opts), a, math.log(a))
        recs.append(_judge("property:fake-parameter:4.331.1", {"a": a}, r.value, r, -gamma,
                           0.0, 1e-9))

    for p, q in ((1, 2), (2, 3), (1, 1)):
        r = integrate_half_line(_vanishing_integrand(p / q), 0.0, opts=opts, vectorized=True)
        recs.append(_judge("property:vanishing-integral", {"p": p, "q": q}, r.value, r, 0.0,
                           0.0, 1e-9))

    cases = [("3.463", {}, 2, 1), ("3.469.2", {}, 4, 1), ("3.469.3", {}, 4, 2)]
    cases += [("3.475.3", {"n": n}, 2**n, 1) for n in (1, 2, 3)]
    for eid, s, p, q in cases:
        general = (p - q) * gamma / (p * q)
        tag = f"property:special-case:{eid}"
        sample = dict(s, p=p, q=q)
        recs.append(_judge(tag, sample, closed_form_value(eid, s), None, general, 0.0, 1e-15,
                           note="stored closed form vs general form"))
        r = numeric_value(eid, s, opts)
        recs.append(_judge(tag, sample, r.value, r, general, DEFAULT_REL_TOL, DEFAULT_ABS_FLOOR,
                           note="quadrature vs general form"))

    tolerances = {"quad_abs_tol": opts.abs_tol, "quad_rel_tol": opts.rel_tol,
                  "max_level": opts.max_level}
    return Report(recs, None, tolerances, time.perf_counter() - start, kind="properties")


# ---------------------------------------------------------------- export


def export_catalog(fmt: str = "json") -> str:
    if fmt != "json":
        raise ValueError(f"unsupported export format {fmt!r}")
    doc = {"version": __version__, "entries": [get_entry(i).to_dict() for i in list_entries()]}
    return json.dumps(doc, indent=2) + "\n"
