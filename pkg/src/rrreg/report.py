"""One-shot analysis of an ideal and its JSON/CSV serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields

from .equigen import GeneratorSet
from .errors import InternalCheckError
from .parsing import IdealSpec
from .ratliff_rush import rr_closure, rr_indices
from .regularity import eu_verdict, safe_cap
from .semigroup import classify

SCHEMA = 1


@dataclass(frozen=True)
class AnalysisReport:
    d: int
    A: tuple[int, ...]
    r_J: int
    regR: int
    regF: int
    s: int
    s_star: int
    s_ini: int
    e: int
    eu_equal: bool
    eu_class: str
    eu_classes: tuple[str, ...]
    invariance: bool
    is_cm: bool
    is_buchsbaum: bool
    h1: tuple[int, ...]
    # n -> generators of the closure of I^n as (i, j) pairs
    rr_generators: dict[int, tuple[tuple[int, int], ...]] | None = None

    def __post_init__(self):
        problems = consistency_problems(self)
        if problems:
            raise InternalCheckError(f"report for d={self.d}; a={list(self.A)}: " + "; ".join(problems))

    @property
    def generator_set(self) -> GeneratorSet:
        return GeneratorSet(self.d, self.A)

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA}
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "rr_generators":
                if v is None:
                    continue
                v = {str(n): [list(g) for g in gens] for n, gens in sorted(v.items())}
            elif isinstance(v, tuple):
                v = list(v)
            out[f.name] = v
        return out

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisReport:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        kw = {}
        for f in fields(cls):
            if f.name not in data:
                continue
            v = data[f.name]
            if f.name == "rr_generators":
                v = {int(n): tuple(tuple(g) for g in gens) for n, gens in v.items()}
            elif isinstance(v, list):
                v = tuple(v)
            kw[f.name] = v
        return cls(**kw)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))


CSV_FIELDS = [
    "d", "A", "r_J", "regR", "regF", "s", "s_star", "s_ini", "e",
    "eu_equal", "eu_class", "invariance", "is_cm", "is_buchsbaum", "h1",
]


def csv_row(rep: AnalysisReport) -> dict[str, str]:
    """Flat CSV cells; sets and vectors become space-separated integers."""
    row = {}
    for k in CSV_FIELDS:
        v = getattr(rep, k)
        if isinstance(v, tuple):
            v = " ".join(str(x) for x in v)
        elif isinstance(v, bool):
            v = "true" if v else "false"
        row[k] = str(v)
    return row


def consistency_problems(rep: AnalysisReport) -> list[str]:
    p = []
    parameter = len(rep.A) == 2
    if rep.e != rep.d * rep.d:
        p.append("e != d^2")
    if not rep.r_J <= rep.regF <= rep.regR <= safe_cap(rep.d):
        p.append("r_J <= regF <= regR <= cap fails")
    if parameter:
        if (rep.regR, rep.regF, rep.s_star) != (0, 0, 1):
            p.append("parameter ideal with nonzero regularity")
    else:
        if rep.regR != max(rep.r_J, rep.s_star):
            p.append("regR != max(r_J, s*)")
        if rep.regF != max(rep.r_J, rep.s_ini):
            p.append("regF != max(r_J, s*_ini)")
    if not rep.s_ini <= rep.s_star <= max(rep.regR, 1):
        p.append("s*_ini <= s* <= max(regR, 1) fails")
    if rep.s > max(rep.regR - 1, 0):
        p.append("s > max(regR - 1, 0)")
    if rep.eu_equal != (rep.regR == rep.regF):
        p.append("eu_equal flag inconsistent")
    if rep.invariance != (rep.s_star < rep.r_J):
        p.append("invariance flag inconsistent")
    if rep.is_cm != (rep.s_ini == 1) or rep.is_cm != (not any(rep.h1)):
        p.append("Cohen-Macaulay flag inconsistent with s*_ini / h1")
    if rep.is_cm and not rep.is_buchsbaum:
        p.append("Cohen-Macaulay but not Buchsbaum")
    if len(rep.h1) != max(rep.s_ini - 1, 0):
        p.append("h1 length != s*_ini - 1")
    return p


def analyze(spec, include_rr: bool = False, max_n: int | None = None) -> AnalysisReport:
    """Compute every invariant of the ideal.

    ``spec`` is an :class:`IdealSpec` or a :class:`GeneratorSet`.  With
    ``include_rr`` the generators of the closure of ``I^n`` are attached for
    ``n = 1 .. max_n`` (default ``max(reg R, 1) + 1``).
    """
    E = spec.resolved if isinstance(spec, IdealSpec) else spec
    v = eu_verdict(E)
    idx = rr_indices(E, v.regR, v.regF)
    sg = classify(E, v.regR)
    rr = None
    if include_rr:
        top = max(v.regR, 1) + 1 if max_n is None else max_n
        rr = {n: tuple(tuple(g) for g in rr_closure(E, n, v.regR).closure.gens) for n in range(1, top + 1)}
    return AnalysisReport(
        d=E.d,
        A=tuple(E.exponents),
        r_J=v.r_J,
        regR=v.regR,
        regF=v.regF,
        s=idx.s,
        s_star=idx.s_star,
        s_ini=idx.s_ini,
        e=v.e,
        eu_equal=v.eu_equal,
        eu_class=v.eu_class.value,
        eu_classes=tuple(sorted(c.value for c in v.classes)),
        invariance=v.invariance,
        is_cm=sg.is_cm,
        is_buchsbaum=sg.is_buchsbaum,
        h1=sg.h1,
        rr_generators=rr,
    )
