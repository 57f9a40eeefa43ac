"""Scheme parameter sets and their one-line text form."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import FormatError
from .poly import NVARS_MAX


@dataclass(frozen=True)
class SchemeParams:
    """Knobs for key generation, signing, and verification.

    n          variables in the key algebra (signatures live in n + 1)
    t          terms in each public sparse polynomial
    b          maximum degree of those terms
    d          maximum degree of the seed monomial in indicator sampling
    r          multiplication rounds in indicator sampling
    trials     Monte-Carlo sample count per verification side
    threshold  accepted gap between the two positive proportions

    Defaults are the recommended production profile; tests use reduced
    profiles (small n) so exact enumeration stays cheap.
    """

    n: int = 31
    t: int = 3
    b: int = 3
    d: int = 2
    r: int = 1
    trials: int = 3000
    threshold: float = 0.03

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError(f"n must be at least 4, got {self.n}")
        if self.n + 1 > NVARS_MAX:
            raise ValueError(f"n + 1 must fit in {NVARS_MAX} variables, got n={self.n}")
        if not 1 <= self.b <= self.n:
            raise ValueError(f"b must be in 1..n, got {self.b}")
        if not 1 <= self.d <= 2:
            raise ValueError(f"d must be 1 or 2, got {self.d}")
        if self.t < 1:
            raise ValueError(f"t must be positive, got {self.t}")
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not 0.0 < self.threshold < 1.0:
            raise ValueError(f"threshold must be strictly between 0 and 1, got {self.threshold}")


_INT_FIELDS = ("n", "t", "b", "d", "r", "trials")


def _typed(key: str, value: str):
    if key in _INT_FIELDS:
        try:
            return int(value)
        except ValueError:
            raise FormatError(f"parameter {key} needs an integer, got {value!r}") from None
    if key == "threshold":
        try:
            return float(value)
        except ValueError:
            raise FormatError(f"parameter threshold needs a number, got {value!r}") from None
    raise FormatError(f"unknown parameter {key!r}")


def parse_param_overrides(spec: str | None, base: SchemeParams | None = None) -> SchemeParams:
    """Apply comma-separated ``key=value`` overrides on top of a base profile."""
    params = base if base is not None else SchemeParams()
    if not spec:
        return params
    updates = {}
    for item in spec.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise FormatError(f"expected key=value, got {item!r}")
        updates[key.strip()] = _typed(key.strip(), value.strip())
    try:
        return replace(params, **updates)
    except TypeError as exc:
        raise FormatError(str(exc)) from None


def params_to_line(p: SchemeParams) -> str:
    return (
        f"params n={p.n} t={p.t} b={p.b} d={p.d} r={p.r}"
        f" trials={p.trials} threshold={p.threshold!r}"
    )


def params_from_line(line: str) -> SchemeParams:
    tokens = line.split()
    if not tokens or tokens[0] != "params":
        raise FormatError(f"expected a params line, got {line!r}")
    fields = {}
    for tok in tokens[1:]:
        key, sep, value = tok.partition("=")
        if not sep:
            raise FormatError(f"malformed params token {tok!r}")
        fields[key] = _typed(key, value)
    expected = set(_INT_FIELDS) | {"threshold"}
    if set(fields) != expected:
        missing = expected - set(fields)
        extra = set(fields) - expected
        raise FormatError(
            f"params line must carry exactly {sorted(expected)}; "
            f"missing {sorted(missing)}, unexpected {sorted(extra)}"
        )
    try:
        return SchemeParams(**fields)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
