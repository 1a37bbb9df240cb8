"""Data types for the identity catalog."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from ..quadrature import IntegrationDomain, QuadOptions, QuadResult, SingularitySpec

Sample = Mapping[str, float]


class ConstraintError(ValueError):
    """A parameter sample lies outside its entry's validity domain."""


class ConfigurationError(ValueError):
    """Sampling cannot satisfy an entry's constraints."""


class UnknownEntryError(KeyError):
    """No catalog entry has the requested id."""


@dataclass(frozen=True)
class Constraint:
    """Pointwise exclusion predicate over a sample."""

    description: str
    test: Callable[[Sample], bool]
    names: tuple[str, ...] = ()

    def __call__(self, sample: Sample) -> bool:
        return bool(self.test(sample))


@dataclass(frozen=True)
class ParamSpec:
    """A real parameter on the open interval ``(lo, hi)``, or a discrete one
    drawn from ``choices``."""

    name: str
    lo: float
    hi: float
    choices: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.choices is not None:
            object.__setattr__(self, "lo", float(min(self.choices)))
            object.__setattr__(self, "hi", float(max(self.choices)))
        elif not self.lo < self.hi:
            raise ValueError(f"empty range for {self.name}: ({self.lo}, {self.hi})")

    @classmethod
    def discrete(cls, name: str, *choices: int) -> "ParamSpec":
        return cls(name, 0.0, 0.0, tuple(choices))

    @property
    def is_discrete(self) -> bool:
        return self.choices is not None

    def admits(self, value: float) -> bool:
        if not math.isfinite(value):
            return False
        if self.choices is not None:
            return value in self.choices
        return self.lo < value < self.hi

    def describe(self) -> str:
        if self.choices is not None:
            return f"{self.name} in {{{', '.join(map(str, self.choices))}}}"
        return f"{self.name} in ({self.lo:g}, {self.hi:g})"


@dataclass(frozen=True)
class Entry:
    """One catalog identity ``integral = closed form``.

    ``integrand(sample, x, xc)`` is vectorised over ``x``; ``xc`` is the
    distance to the right endpoint of a finite domain (to the left endpoint of
    a half line) and is ``None`` on the whole line and in principal-value
    pieces. ``pole(sample)`` gives the interior pole location, or ``None`` when
    the ordinary rule applies for that sample. ``route`` overrides the
    numerical evaluation entirely.
    """

    id: str
    section: str
    formula: str
    domain: IntegrationDomain
    integrand: Callable
    closed_form: Callable[[Sample], float]
    params: tuple[ParamSpec, ...] = ()
    constraints: tuple[Constraint, ...] = ()
    singularities: SingularitySpec = SingularitySpec()
    anchor: str = ""
    notes: tuple[str, ...] = ()
    flags: tuple[str, ...] = ()
    control: bool = False
    pole: Optional[Callable[[Sample], Optional[float]]] = None
    route: Optional[Callable[[Sample, QuadOptions], QuadResult]] = None

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    def validate(self, sample: Sample) -> dict[str, float]:
        """Return a clean ``{name: float}`` copy of ``sample`` or raise
        :class:`ConstraintError`."""
        names = set(self.param_names)
        given = set(sample)
        if given != names:
            missing = sorted(names - given)
            extra = sorted(given - names)
            raise ConstraintError(f"{self.id}: missing {missing}, unexpected {extra}")
        clean = {}
        for spec in self.params:
            try:
                v = float(sample[spec.name])
            except (TypeError, ValueError):
                raise ConstraintError(f"{self.id}: {spec.name} is not a number") from None
            if not spec.admits(v):
                raise ConstraintError(f"{self.id}: {spec.name}={v!r} violates {spec.describe()}")
            clean[spec.name] = int(v) if spec.is_discrete else v
        for c in self.constraints:
            if not c(clean):
                raise ConstraintError(f"{self.id}: sample {clean} violates {c.description}")
        return clean

    def to_dict(self) -> dict:
        params = []
        for p in self.params:
            d = {"name": p.name, "lo": p.lo, "hi": p.hi,
                 "constraints": [c.description for c in self.constraints if p.name in c.names]}
            if p.choices is not None:
                d["choices"] = list(p.choices)
            params.append(d)
        return {
            "id": self.id,
            "section": self.section,
            "anchor": self.anchor,
            "formula": self.formula,
            "params": params,
            "constraints": [c.description for c in self.constraints],
            "domain": self.domain.describe(),
            "flags": list(self.flags),
            "notes": list(self.notes),
            "control": self.control,
        }
