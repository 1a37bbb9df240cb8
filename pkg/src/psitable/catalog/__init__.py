"""Executable catalog of definite integrals whose closed forms involve the
digamma function and its relatives."""

from .entries import REGISTRY
from .model import (
    ConfigurationError,
    Constraint,
    ConstraintError,
    Entry,
    ParamSpec,
    UnknownEntryError,
)
from .verify import (
    DEFAULT_ABS_FLOOR,
    DEFAULT_REL_TOL,
    DEFAULT_SEED,
    Report,
    VerificationRecord,
    VerifyConfig,
    closed_form_value,
    export_catalog,
    get_entry,
    list_entries,
    numeric_value,
    property_checks,
    sample_params,
    verify_all,
    verify_entry,
)

__all__ = [
    "REGISTRY",
    "ConfigurationError",
    "Constraint",
    "ConstraintError",
    "Entry",
    "ParamSpec",
    "UnknownEntryError",
    "DEFAULT_ABS_FLOOR",
    "DEFAULT_REL_TOL",
    "DEFAULT_SEED",
    "Report",
    "VerificationRecord",
    "VerifyConfig",
    "closed_form_value",
    "export_catalog",
    "get_entry",
    "list_entries",
    "numeric_value",
    "property_checks",
    "sample_params",
    "verify_all",
    "verify_entry",
]
