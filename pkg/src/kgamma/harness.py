"""Verification harness for the seven Turán/Hölder-type inequalities.

Each check computes both sides of one inequality at one parameter point,
orients the slack so the claimed direction predicts slack >= 0, and
attaches a first-order propagated error margin so that a FAIL verdict can
only mean mathematics, never roundoff.

Theorem ids:
  T1   Hölder inequality for k-polygamma magnitudes
  T2   Hölder inequality for the k-zeta / k-gamma pair
  T3   the p-k variant of T2
  T4K  Turán inequality for k-gamma derivatives (T4PK: p-k variant)
  T5   midpoint (log-convexity style) inequality for k-gamma derivatives,
       additive form (T6: p-k variant)
  T7   midpoint inequality for k-polygamma, direction depending on parity
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterator, Sequence

from . import functions as fn
from .policy import DEFAULT_POLICY, AccuracyPolicy, DomainError

__all__ = [
    "THEOREM_IDS",
    "HolderPair",
    "InequalityCheck",
    "GridSpec",
    "ScanSummary",
    "check_holder_polygamma",
    "check_holder_zeta",
    "check_turan_gamma_deriv",
    "check_midpoint_gamma_deriv",
    "check_midpoint_polygamma",
    "scan_grid",
]

THEOREM_IDS = ("T1", "T2", "T3", "T4K", "T4PK", "T5", "T6", "T7")

#: Uniform relative-accuracy contract assumed for closed-form function
#: values when propagating margins (10x the 1e-12 kernel contract).
_FUNC_REL = 1e-11

#: Extra absolute tolerance granted on top of the propagated margin;
#: Hölder sides with exponents near 1 lose a few digits.
DEFAULT_SLACK_TOL = 1e-9

#: Relative contract of the j-th gamma-derivative entry.
def _deriv_rel(j: int) -> float:
    return _FUNC_REL * (j + 1)


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents p, q > 1 with 1/p + 1/q = 1."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (self.p > 1.0 and self.q > 1.0):
            raise DomainError("Hölder exponents must both exceed 1")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise DomainError(f"exponents are not conjugate: {self.p}, {self.q}")

    @classmethod
    def conjugate(cls, p: float) -> "HolderPair":
        return cls(p, p / (p - 1.0))


@dataclass(frozen=True)
class InequalityCheck:
    """One verification record: both sides, oriented slack, verdict."""

    theorem_id: str
    inputs: dict
    lhs: float
    rhs: float
    slack: float
    numerical_margin: float
    verdict: str  # PASS | FAIL | DIRECTION_NEGATIVE


def _verdict(theorem_id: str, slack: float, margin: float, slack_tol: float) -> str:
    if slack >= -(margin + slack_tol):
        return "PASS"
    # T7's printed direction is self-contradictory in the source material;
    # a violated parity prediction is a direction finding, not a hard FAIL.
    return "DIRECTION_NEGATIVE" if theorem_id == "T7" else "FAIL"


def check_holder_polygamma(
    m: int,
    n: int,
    hp: HolderPair,
    pt: fn.EvalPoint,
    policy: AccuracyPolicy = DEFAULT_POLICY,
    slack_tol: float = DEFAULT_SLACK_TOL,
) -> InequalityCheck:
    """|psi_k^(m)|^(1/p) |psi_k^(n)|^(1/q) >= |psi_k^(m/p + n/q)|.

    Magnitudes on both sides: fractional powers of the signed values are
    undefined over the reals for even orders, and the underlying Hölder
    argument is about the positive integrals.
    """
    if m < 1 or n < 1:
        raise DomainError("orders m, n must be >= 1")
    s = m / hp.p + n / hp.q
    a = abs(fn.k_polygamma(m, pt, policy))
    b = abs(fn.k_polygamma(n, pt, policy))
    lhs = a ** (1.0 / hp.p) * b ** (1.0 / hp.q)
    rhs = fn.k_polygamma_magnitude_fractional(s, pt, policy)
    slack = lhs - rhs
    # d(a^(1/p))/a = (1/p) a^(1/p - 1): relative errors divide by p, q
    margin = abs(lhs) * (_FUNC_REL / hp.p + _FUNC_REL / hp.q) + abs(rhs) * _FUNC_REL
    return InequalityCheck(
        "T1",
        {"x": pt.x, "k": pt.k, "m": m, "n": n, "holder_p": hp.p, "holder_q": hp.q},
        lhs,
        rhs,
        slack,
        margin,
        _verdict("T1", slack, margin, slack_tol),
    )


def check_holder_zeta(
    m: int,
    n: int,
    hp: HolderPair,
    k: float,
    p_param: float | None = None,
    policy: AccuracyPolicy = DEFAULT_POLICY,
    slack_tol: float = DEFAULT_SLACK_TOL,
) -> InequalityCheck:
    """Hölder inequality for the (p-)k-zeta / (p-)k-gamma pair.

    lhs = zeta_k(m+1)^(1/p) zeta_k(n+1)^(1/q)
    rhs = Gamma_k(s+1) / (Gamma_k(m+1)^(1/p) Gamma_k(n+1)^(1/q)) * zeta_k(s+1)
    with s = m/p + n/q, all functions replaced by their p-k variants when
    p_param is given.
    """
    if m < 1 or n < 1:
        raise DomainError("orders m, n must be >= 1")
    s = m / hp.p + n / hp.q
    for arg in (m + 1.0, n + 1.0, s + 1.0):
        if arg / k <= 1.0:
            raise DomainError(f"zeta argument {arg}/{k} must exceed 1")
    if p_param is None:
        theorem_id = "T2"
        zeta = lambda x: fn.k_zeta(x, k, policy)
        gamma = lambda x: fn.k_gamma(fn.EvalPoint(x, k), policy)
    else:
        theorem_id = "T3"
        zeta = lambda x: fn.pk_zeta(x, k, p_param, policy)
        gamma = lambda x: fn.pk_gamma(fn.EvalPoint(x, k, p_param), policy)
    lhs = zeta(m + 1.0) ** (1.0 / hp.p) * zeta(n + 1.0) ** (1.0 / hp.q)
    gamma_ratio = gamma(s + 1.0) / (
        gamma(m + 1.0) ** (1.0 / hp.p) * gamma(n + 1.0) ** (1.0 / hp.q)
    )
    rhs = gamma_ratio * zeta(s + 1.0)
    slack = lhs - rhs
    # lhs carries two damped factors, rhs four factors
    margin = abs(lhs) * _FUNC_REL + 4.0 * abs(rhs) * _FUNC_REL
    return InequalityCheck(
        theorem_id,
        {"k": k, "p_param": p_param, "m": m, "n": n,
         "holder_p": hp.p, "holder_q": hp.q},
        lhs,
        rhs,
        slack,
        margin,
        _verdict(theorem_id, slack, margin, slack_tol),
    )


def check_turan_gamma_deriv(
    n: int,
    pt: fn.EvalPoint,
    use_p: bool = False,
    policy: AccuracyPolicy = DEFAULT_POLICY,
    slack_tol: float = DEFAULT_SLACK_TOL,
) -> InequalityCheck:
    """Turán inequality Gamma_k^(n-1) Gamma_k^(n+1) - (Gamma_k^(n))^2 >= 0."""
    if not 1 <= n <= 7:
        raise DomainError("Turán check requires 1 <= n <= 7")
    deriv = fn.pk_gamma_deriv if use_p else fn.k_gamma_deriv
    g_lo = deriv(n - 1, pt, policy)
    g_mid = deriv(n, pt, policy)
    g_hi = deriv(n + 1, pt, policy)
    lhs = g_lo * g_hi
    rhs = g_mid * g_mid
    slack = lhs - rhs
    margin = abs(lhs) * (_deriv_rel(n - 1) + _deriv_rel(n + 1)) + abs(rhs) * (
        2.0 * _deriv_rel(n)
    )
    theorem_id = "T4PK" if use_p else "T4K"
    return InequalityCheck(
        theorem_id,
        {"x": pt.x, "k": pt.k, "p_param": pt.p if use_p else None, "n": n},
        lhs,
        rhs,
        slack,
        margin,
        _verdict(theorem_id, slack, margin, slack_tol),
    )


def check_midpoint_gamma_deriv(
    n: int,
    l: int,
    pt: fn.EvalPoint,
    use_p: bool = False,
    policy: AccuracyPolicy = DEFAULT_POLICY,
    slack_tol: float = DEFAULT_SLACK_TOL,
) -> InequalityCheck:
    """[Gamma_k^(n-l) + Gamma_k^(n+l)] / 2 - Gamma_k^(n) >= 0, n, l even.

    This is the additive form; the exponentiated statement follows from it
    by monotonicity of exp and would overflow immediately if asserted
    directly.
    """
    if n % 2 or l % 2 or not (n >= l >= 0) or n + l > 8:
        raise DomainError("midpoint check requires even n >= l >= 0 with n + l <= 8")
    deriv = fn.pk_gamma_deriv if use_p else fn.k_gamma_deriv
    g_lo = deriv(n - l, pt, policy)
    g_hi = deriv(n + l, pt, policy)
    g_mid = deriv(n, pt, policy)
    lhs = 0.5 * (g_lo + g_hi)
    rhs = g_mid
    slack = lhs - rhs
    margin = 0.5 * (
        abs(g_lo) * _deriv_rel(n - l) + abs(g_hi) * _deriv_rel(n + l)
    ) + abs(g_mid) * _deriv_rel(n)
    theorem_id = "T6" if use_p else "T5"
    return InequalityCheck(
        theorem_id,
        {"x": pt.x, "k": pt.k, "p_param": pt.p if use_p else None, "n": n, "l": l},
        lhs,
        rhs,
        slack,
        margin,
        _verdict(theorem_id, slack, margin, slack_tol),
    )


def check_midpoint_polygamma(
    n: int,
    pt: fn.EvalPoint,
    policy: AccuracyPolicy = DEFAULT_POLICY,
    slack_tol: float = DEFAULT_SLACK_TOL,
) -> InequalityCheck:
    """Midpoint inequality for k-polygamma, parity-oriented.

    d = psi_k^(n) - [psi_k^(n+1) + psi_k^(n-1)] / 2; the predicted
    direction is d >= 0 for odd n, d <= 0 for even n.  n >= 2: n = 1
    would reference the undefined psi_k^(0).  The raw difference d is kept
    in the record so reports expose the empirical direction.
    """
    if not 2 <= n <= 11:
        raise DomainError("polygamma midpoint check requires 2 <= n <= 11")
    lhs = fn.k_polygamma(n, pt, policy)
    rhs = 0.5 * (fn.k_polygamma(n + 1, pt, policy) + fn.k_polygamma(n - 1, pt, policy))
    d = lhs - rhs
    slack = d if n % 2 == 1 else -d
    margin = (abs(lhs) + abs(rhs)) * _FUNC_REL
    return InequalityCheck(
        "T7",
        {"x": pt.x, "k": pt.k, "n": n,
         "raw_difference": d, "empirical_direction": "+" if d >= 0.0 else "-"},
        lhs,
        rhs,
        slack,
        margin,
        _verdict("T7", slack, margin, slack_tol),
    )


# --------------------------------------------------------------------------
# grid sweeps


@dataclass(frozen=True)
class GridSpec:
    """Parameter lists defining a verification sweep.

    Theorem-specific hypotheses (parity, zeta-domain, Hölder integrality)
    are applied per theorem when enumerating points, so any positive lists
    are acceptable here.
    """

    xs: tuple[float, ...] = (0.5, 1.0, 2.0, 5.0, 10.0)
    ks: tuple[float, ...] = (0.5, 1.0, 2.0, 3.0)
    p_params: tuple[float, ...] = (0.5, 1.0, 2.0, 5.0)
    ms: tuple[int, ...] = (1, 2, 3, 4)
    ns: tuple[int, ...] = (1, 2, 3, 4)
    ls: tuple[int, ...] = (0, 2)
    holder_ps: tuple[float, ...] = (2.0, 3.0, 1.5)
    #: honor the integrality hypothesis on m/p + n/q for T1-T3
    integer_orders_only: bool = True

    def __post_init__(self) -> None:
        for name in ("xs", "ks", "p_params", "holder_ps"):
            if any(not (v > 0) for v in getattr(self, name)):
                raise DomainError(f"all {name} values must be positive")
        if any(v <= 1.0 for v in self.holder_ps):
            raise DomainError("Hölder exponents must exceed 1")
        if any(not isinstance(v, int) or v < 0 for v in self.ms + self.ns + self.ls):
            raise DomainError("orders must be non-negative integers")

    def holder_pairs(self) -> tuple[HolderPair, ...]:
        return tuple(HolderPair.conjugate(p) for p in self.holder_ps)


def _is_near_integer(v: float) -> bool:
    return abs(v - round(v)) <= 1e-9


@dataclass
class ScanSummary:
    per_theorem: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)

    def record(self, check: InequalityCheck) -> None:
        entry = self.per_theorem.setdefault(
            check.theorem_id,
            {"count": 0, "PASS": 0, "FAIL": 0, "DIRECTION_NEGATIVE": 0,
             "min_slack": math.inf, "min_slack_at": None},
        )
        entry["count"] += 1
        entry[check.verdict] += 1
        # ties keep the earlier (lexicographically first) grid point
        if check.slack < entry["min_slack"]:
            entry["min_slack"] = check.slack
            entry["min_slack_at"] = dict(check.inputs)


def _iter_theorem_points(
    spec: GridSpec, theorem_id: str, policy: AccuracyPolicy, slack_tol: float
) -> Iterator[Callable[[], InequalityCheck]]:
    if theorem_id == "T1":
        for x in spec.xs:
            for k in spec.ks:
                pt = fn.EvalPoint(x, k)
                for hp in spec.holder_pairs():
                    for m in spec.ms:
                        for n in spec.ns:
                            s = m / hp.p + n / hp.q
                            if s < 1.0:
                                continue
                            if spec.integer_orders_only and not _is_near_integer(s):
                                continue
                            yield partial(
                                check_holder_polygamma,
                                m, n, hp, pt, policy, slack_tol,
                            )
    elif theorem_id in ("T2", "T3"):
        p_values: Sequence[float | None]
        p_values = spec.p_params if theorem_id == "T3" else (None,)
        for k in spec.ks:
            for p_param in p_values:
                for hp in spec.holder_pairs():
                    for m in spec.ms:
                        for n in spec.ns:
                            s = m / hp.p + n / hp.q
                            if spec.integer_orders_only and not _is_near_integer(s):
                                continue
                            if min(m + 1.0, n + 1.0, s + 1.0) / k <= 1.0:
                                continue
                            yield partial(
                                check_holder_zeta,
                                m, n, hp, k, p_param, policy, slack_tol,
                            )
    elif theorem_id in ("T4K", "T4PK"):
        use_p = theorem_id == "T4PK"
        for x in spec.xs:
            for k in spec.ks:
                for p_param in (spec.p_params if use_p else (None,)):
                    pt = fn.EvalPoint(x, k, p_param)
                    for n in spec.ns:
                        if not 1 <= n <= 7:
                            continue
                        yield partial(
                            check_turan_gamma_deriv, n, pt, use_p, policy, slack_tol
                        )
    elif theorem_id in ("T5", "T6"):
        use_p = theorem_id == "T6"
        for x in spec.xs:
            for k in spec.ks:
                for p_param in (spec.p_params if use_p else (None,)):
                    pt = fn.EvalPoint(x, k, p_param)
                    for n in spec.ns:
                        if n % 2:
                            continue
                        for l in spec.ls:
                            if l % 2 or l > n or n + l > 8:
                                continue
                            yield partial(
                                check_midpoint_gamma_deriv,
                                n, l, pt, use_p, policy, slack_tol,
                            )
    elif theorem_id == "T7":
        for x in spec.xs:
            for k in spec.ks:
                pt = fn.EvalPoint(x, k)
                for n in spec.ns:
                    if not 2 <= n <= 11:
                        continue
                    yield partial(check_midpoint_polygamma, n, pt, policy, slack_tol)
    else:
        raise DomainError(f"unknown theorem id {theorem_id!r}")


def scan_grid(
    spec: GridSpec,
    theorems: Sequence[str],
    policy: AccuracyPolicy = DEFAULT_POLICY,
    slack_tol: float = DEFAULT_SLACK_TOL,
) -> tuple[list[InequalityCheck], ScanSummary]:
    """Evaluate every admissible grid point for the selected theorems.

    Output ordering is deterministic: theorems in canonical order, grid
    points in lexicographic order.  Per-point evaluation errors are
    aggregated into the summary instead of aborting the sweep.
    """
    unknown = set(theorems) - set(THEOREM_IDS)
    if unknown:
        raise DomainError(f"unknown theorem ids: {sorted(unknown)}")
    checks: list[InequalityCheck] = []
    summary = ScanSummary()
    for theorem_id in THEOREM_IDS:
        if theorem_id not in theorems:
            continue
        for thunk in _iter_theorem_points(spec, theorem_id, policy, slack_tol):
            try:
                check = thunk()
            except (ArithmeticError, ValueError) as exc:
                summary.errors.append(f"{theorem_id}: {exc}")
                continue
            checks.append(check)
            summary.record(check)
    return checks, summary
