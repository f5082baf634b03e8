"""Monogamy bounds for entanglement spread from one focus qubit.

All bounds constrain how the entanglement between a focus party A and the
rest of a pure qubit state distributes over the pairs (A, B_i), with the
remaining parties ordered B_1 ... B_{N-1}.

Lower bound families on concurrence (alpha >= 2):

  ckw               C^2(A|B1..) >= sum_i C^2(A,B_i), alpha fixed at 2
  alpha-power       C^a(A|B1..) >= sum_i C^a(A,B_i)
  tight-tripartite  N = 3 only: C^a >= C^a(A,B1) + (a/2) C^a(A,B2),
                    valid when C(A,B1) >= C(A,B2)
  tight-ordered     coefficient (a/2)^(i-1) on the i-th pair term, valid
                    when C(A,B_i) >= C(A|B_{i+1}..B_{N-1}) for all i <= N-2
  tight-split       N >= 4: the ordering holds up to index m and reverses
                    afterwards; coefficients run 1 .. (a/2)^(m-1), then
                    (a/2)^(m+1) on the middle block and (a/2)^m on the
                    last term. The largest admissible m is chosen when not
                    pinned explicitly.

Entanglement-of-formation families (alpha >= sqrt(2)) mirror these with
ratio t = alpha/sqrt(2) in place of alpha/2; their ordering conditions are
still stated on concurrences: eof-alpha-power, eof-tight-ordered,
eof-tight-split.

Negative-power upper bounds (alpha < 0; pairwise-zero terms are dropped):

  upper-mean        C^a(A|B1..) < mean of the retained C^a(A,B_i), strict
                    whenever every pair concurrence is comfortably nonzero
  upper-sum         the looser unit-coefficient prior form

A BoundReport's slack is oriented so that nonnegative means the bound
holds: lhs - rhs for lower bounds, rhs - lhs for upper bounds.
Applicability is three-valued: False when a stated condition fails, None
when a condition needs a tail concurrence that has no closed form (a
mixed reduction with two or more remaining parties), True otherwise.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .linalg import as_state_vector, num_qubits_of, reduced_state
from .measures import (
    concurrence_pure,
    eof_from_squared_concurrence,
    eof_pure,
    wootters_concurrence,
)

COMPARISON_ATOL = 1e-12
DROP_ATOL = 1e-12
STRICT_PAIR_FLOOR = 1e-6
STRICT_SLACK_FLOOR = 1e-14

ALPHA_MIN_CONCURRENCE = 2.0
ALPHA_MIN_EOF = math.sqrt(2.0)


class BoundId(str, Enum):
    CKW = "ckw"
    ALPHA_POWER = "alpha-power"
    TIGHT_TRIPARTITE = "tight-tripartite"
    TIGHT_ORDERED = "tight-ordered"
    TIGHT_SPLIT = "tight-split"
    UPPER_MEAN = "upper-mean"
    UPPER_SUM = "upper-sum"
    EOF_ALPHA_POWER = "eof-alpha-power"
    EOF_TIGHT_ORDERED = "eof-tight-ordered"
    EOF_TIGHT_SPLIT = "eof-tight-split"


CONCURRENCE_LOWER = frozenset({
    BoundId.CKW, BoundId.ALPHA_POWER, BoundId.TIGHT_TRIPARTITE,
    BoundId.TIGHT_ORDERED, BoundId.TIGHT_SPLIT,
})
EOF_LOWER = frozenset({
    BoundId.EOF_ALPHA_POWER, BoundId.EOF_TIGHT_ORDERED, BoundId.EOF_TIGHT_SPLIT,
})
NEGATIVE_UPPER = frozenset({BoundId.UPPER_MEAN, BoundId.UPPER_SUM})
SPLIT_KINDS = frozenset({BoundId.TIGHT_SPLIT, BoundId.EOF_TIGHT_SPLIT})


@dataclass(frozen=True)
class BoundKind:
    """A bound family instantiated at a power alpha (and split index m)."""

    id: BoundId
    alpha: float
    m: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "id", BoundId(self.id))
        object.__setattr__(self, "alpha", float(self.alpha))
        if self.id == BoundId.CKW and abs(self.alpha - 2.0) > 1e-12:
            raise ValueError("ckw is the squared bound; alpha must be 2")
        if self.id in CONCURRENCE_LOWER and self.alpha < ALPHA_MIN_CONCURRENCE - 1e-12:
            raise ValueError(f"{self.id.value} requires alpha >= 2, got {self.alpha}")
        if self.id in EOF_LOWER and self.alpha < ALPHA_MIN_EOF - 1e-12:
            raise ValueError(f"{self.id.value} requires alpha >= sqrt(2), got {self.alpha}")
        if self.id in NEGATIVE_UPPER and self.alpha >= 0.0:
            raise ValueError(f"{self.id.value} requires alpha < 0, got {self.alpha}")
        if self.m is not None:
            if self.id not in SPLIT_KINDS:
                raise ValueError(f"{self.id.value} does not take a split index m")
            if int(self.m) < 1:
                raise ValueError("split index m must be >= 1")
            object.__setattr__(self, "m", int(self.m))


@dataclass(frozen=True)
class PartitionSpec:
    """Focus qubit plus the ordered remaining single-qubit parties."""

    focus: int
    rest: tuple

    def __post_init__(self):
        object.__setattr__(self, "focus", int(self.focus))
        object.__setattr__(self, "rest", tuple(int(q) for q in self.rest))

    @classmethod
    def default(cls, num_qubits: int) -> "PartitionSpec":
        return cls(0, tuple(range(1, num_qubits)))

    def validate(self, num_qubits: int) -> None:
        parties = (self.focus,) + self.rest
        if sorted(parties) != list(range(num_qubits)):
            raise ValueError("partition must list every qubit exactly once")
        if len(self.rest) < 2:
            raise ValueError("at least three parties are required")


@dataclass(frozen=True)
class PairwiseProfile:
    """Measure values a monogamy bound consumes.

    c_pair[i] and e_pair[i] refer to the pair (A, B_{i+1}); c_tail[i] is
    C(A|B_{i+2}..B_{N-1}). Tail entries are exact only when a single party
    remains (a two-qubit reduction); deeper tails of mixed reductions have
    no closed form and are stored as None.
    """

    num_parties: int
    c_focus_rest: float
    c_pair: tuple
    c_tail: tuple
    e_focus_rest: float
    e_pair: tuple


@dataclass(frozen=True)
class ConditionCheck:
    """One ordering condition C(A,B_i) vs C(A|B_{i+1}..), i starting at 1."""

    index: int
    pair_value: float
    tail_value: float | None
    relation: str
    satisfied: bool | None


@dataclass(frozen=True)
class BoundReport:
    """Outcome of evaluating one bound on one profile.

    slack is lhs - rhs for lower bounds and rhs - lhs for upper bounds, so
    a nonnegative slack always means the bound holds. strict marks upper
    bounds whose inequality is expected to be strictly positive. Fields
    are populated diagnostically even when applicable is False; they are
    NaN only if the power itself is undefined.
    """

    kind: BoundKind
    direction: str
    lhs: float
    rhs: float
    slack: float
    applicable: bool | None
    conditions: tuple = ()
    dropped_pairs: tuple = ()
    strict: bool = False
    m_used: int | None = None
    note: str = ""


def profile(psi, partition: PartitionSpec | None = None) -> PairwiseProfile:
    """Measure everything the bound evaluators need from a pure state."""
    vec = as_state_vector(psi)
    n = num_qubits_of(vec.shape[0])
    if n < 3:
        raise ValueError("monogamy profiles need at least three qubits")
    part = partition if partition is not None else PartitionSpec.default(n)
    part.validate(n)

    focus = part.focus
    c_fr = concurrence_pure(vec, (focus,))
    e_fr = eof_pure(vec, (focus,))
    c_pair = []
    for b in part.rest:
        c_pair.append(wootters_concurrence(reduced_state(vec, (focus, b))))
    e_pair = tuple(eof_from_squared_concurrence(c * c) for c in c_pair)
    # only the last tail (one remaining party) is a two-qubit reduction
    c_tail = tuple([None] * (n - 3) + [c_pair[-1]])
    return PairwiseProfile(n, c_fr, tuple(c_pair), c_tail, e_fr, e_pair)


def bound_coefficients(kind_id, alpha: float, num_parties: int,
                       m: int | None = None) -> np.ndarray:
    """Per-pair coefficient vector of a bound's right-hand side.

    For upper-mean this is the no-drop case 1/(N-1); evaluation recomputes
    the mean over retained terms when zeros are dropped.
    """
    kind_id = BoundId(kind_id)
    k = num_parties - 1
    if k < 2:
        raise ValueError("at least three parties are required")
    if kind_id in (BoundId.CKW, BoundId.ALPHA_POWER, BoundId.UPPER_SUM,
                   BoundId.EOF_ALPHA_POWER):
        return np.ones(k)
    if kind_id == BoundId.UPPER_MEAN:
        return np.full(k, 1.0 / k)
    if kind_id == BoundId.TIGHT_TRIPARTITE:
        if k != 2:
            raise ValueError("tight-tripartite applies to three parties only")
        return np.array([1.0, alpha / 2.0])
    ratio = alpha / 2.0 if kind_id in CONCURRENCE_LOWER else alpha / math.sqrt(2.0)
    if kind_id in (BoundId.TIGHT_ORDERED, BoundId.EOF_TIGHT_ORDERED):
        return ratio ** np.arange(k)
    # split kinds: 1 .. ratio^(m-1), middle block at ratio^(m+1), last at ratio^m
    if m is None:
        raise ValueError("split kinds need a split index m")
    if not 1 <= m <= num_parties - 3:
        raise ValueError(f"split index m must be 1..{num_parties - 3}")
    coeffs = np.empty(k)
    coeffs[:m] = ratio ** np.arange(m)
    coeffs[m:k - 1] = ratio ** (m + 1)
    coeffs[k - 1] = ratio ** m
    return coeffs


def _conditions(prof: PairwiseProfile, relations) -> tuple:
    checks = []
    for i, rel in relations:
        pair = prof.c_pair[i - 1]
        tail = prof.c_tail[i - 1]
        if tail is None:
            ok = None
        elif rel == ">=":
            ok = bool(pair >= tail - COMPARISON_ATOL)
        else:
            ok = bool(pair <= tail + COMPARISON_ATOL)
        checks.append(ConditionCheck(i, pair, tail, rel, ok))
    return tuple(checks)


def _applicability(checks) -> bool | None:
    if any(c.satisfied is False for c in checks):
        return False
    if any(c.satisfied is None for c in checks):
        return None
    return True


def _split_relations(num_parties: int, m: int):
    ups = [(i, ">=") for i in range(1, m + 1)]
    downs = [(j, "<=") for j in range(m + 1, num_parties - 1)]
    return ups + downs


def _resolve_conditions(prof: PairwiseProfile, kind: BoundKind):
    """Ordering conditions and the split index actually used."""
    n = prof.num_parties
    if kind.id in (BoundId.CKW, BoundId.ALPHA_POWER, BoundId.EOF_ALPHA_POWER):
        return (), None
    if kind.id == BoundId.TIGHT_TRIPARTITE:
        if n != 3:
            raise ValueError("tight-tripartite applies to three parties only")
        return _conditions(prof, [(1, ">=")]), None
    if kind.id in (BoundId.TIGHT_ORDERED, BoundId.EOF_TIGHT_ORDERED):
        return _conditions(prof, [(i, ">=") for i in range(1, n - 1)]), None
    if n < 4:
        raise ValueError("split kinds need at least four parties")
    if kind.m is not None:
        if kind.m > n - 3:
            raise ValueError(f"split index m must be 1..{n - 3}")
        return _conditions(prof, _split_relations(n, kind.m)), kind.m
    # prefer the largest m whose decidable conditions do not fail
    fallback = None
    for m in range(n - 3, 0, -1):
        checks = _conditions(prof, _split_relations(n, m))
        if _applicability(checks) is not False:
            return checks, m
        if fallback is None:
            fallback = (checks, m)
    return fallback


def evaluate(prof: PairwiseProfile, kind: BoundKind) -> BoundReport:
    """Evaluate one bound against a profile, reporting slack and verdict."""
    if kind.id in NEGATIVE_UPPER:
        return _evaluate_upper(prof, kind)
    if kind.id in EOF_LOWER:
        values = np.asarray(prof.e_pair)
        lhs_base = prof.e_focus_rest
    else:
        values = np.asarray(prof.c_pair)
        lhs_base = prof.c_focus_rest
    checks, m_used = _resolve_conditions(prof, kind)
    coeffs = bound_coefficients(kind.id, kind.alpha, prof.num_parties, m_used)
    lhs = float(lhs_base ** kind.alpha)
    rhs = float(coeffs @ values ** kind.alpha)
    return BoundReport(
        kind=kind, direction="lower", lhs=lhs, rhs=rhs, slack=lhs - rhs,
        applicable=_applicability(checks), conditions=checks, m_used=m_used,
    )


def _evaluate_upper(prof: PairwiseProfile, kind: BoundKind) -> BoundReport:
    nan = float("nan")
    retained = [i for i, c in enumerate(prof.c_pair) if c > DROP_ATOL]
    dropped = tuple(i for i in range(len(prof.c_pair)) if i not in retained)
    if not retained:
        return BoundReport(kind, "upper", nan, nan, nan, False, dropped_pairs=dropped,
                           note="every pairwise concurrence is zero")
    if prof.c_focus_rest <= DROP_ATOL:
        return BoundReport(kind, "upper", nan, nan, nan, False, dropped_pairs=dropped,
                           note="focus-rest concurrence is zero; negative power undefined")
    lhs = float(prof.c_focus_rest ** kind.alpha)
    powers = np.asarray([prof.c_pair[i] for i in retained]) ** kind.alpha
    rhs = float(powers.sum())
    if kind.id == BoundId.UPPER_MEAN:
        rhs /= len(retained)
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        return BoundReport(kind, "upper", lhs, rhs, nan, False, dropped_pairs=dropped,
                           note="negative power overflow; bound not verifiable numerically")
    strict = not dropped and min(prof.c_pair) > STRICT_PAIR_FLOOR
    return BoundReport(kind, "upper", lhs, rhs, rhs - lhs, True,
                       dropped_pairs=dropped, strict=strict)


def eval_lower_bound(prof: PairwiseProfile, kind: BoundKind) -> BoundReport:
    """Concurrence lower bounds (ckw, alpha-power, tight-*)."""
    if kind.id not in CONCURRENCE_LOWER:
        raise ValueError(f"{kind.id.value} is not a concurrence lower bound")
    return evaluate(prof, kind)


def eval_eof_bound(prof: PairwiseProfile, kind: BoundKind) -> BoundReport:
    """Entanglement-of-formation lower bounds (eof-*)."""
    if kind.id not in EOF_LOWER:
        raise ValueError(f"{kind.id.value} is not an EoF bound")
    return evaluate(prof, kind)


def eval_upper_bound(prof: PairwiseProfile, kind: BoundKind) -> BoundReport:
    """Negative-power upper bounds (upper-mean, upper-sum)."""
    if kind.id not in NEGATIVE_UPPER:
        raise ValueError(f"{kind.id.value} is not a negative-power upper bound")
    return evaluate(prof, kind)


@dataclass(frozen=True)
class AlphaSweep:
    """Residual curves y = lhs - rhs over an alpha grid for two bounds.

    y1 belongs to the tightened bound, y2 to the baseline. For lower
    bounds a tighter right-hand side pushes y1 below y2; for the
    negative-power upper bounds the tighter (smaller) right-hand side
    pulls y1 above y2. Both curves meet where the coefficient families
    coincide (alpha = 2, or alpha = sqrt(2) for EoF kinds).
    """

    alphas: tuple
    y1: tuple
    y2: tuple
    tightened: BoundId
    baseline: BoundId
    applicable_tightened: bool | None
    applicable_baseline: bool | None

    def to_csv(self) -> str:
        lines = ["alpha,y1,y2"]
        for a, y1, y2 in zip(self.alphas, self.y1, self.y2):
            lines.append(f"{a:.17g},{y1:.17g},{y2:.17g}")
        return "\n".join(lines) + "\n"


def residual_sweep(prof: PairwiseProfile, tightened, baseline, alphas,
                   m: int | None = None) -> AlphaSweep:
    """Evaluate a tightened/baseline bound pair across an alpha grid.

    Every grid point must be valid for both bound families. Ordering
    conditions do not involve alpha, so applicability is constant along
    the sweep and reported once per bound.
    """
    grid = tuple(float(a) for a in alphas)
    if not grid:
        raise ValueError("empty alpha grid")
    tight_id, base_id = BoundId(tightened), BoundId(baseline)
    y1, y2 = [], []
    app1 = app2 = None
    for idx, a in enumerate(grid):
        kt = BoundKind(tight_id, a, m if tight_id in SPLIT_KINDS else None)
        kb = BoundKind(base_id, a, m if base_id in SPLIT_KINDS else None)
        rt, rb = evaluate(prof, kt), evaluate(prof, kb)
        y1.append(rt.lhs - rt.rhs)
        y2.append(rb.lhs - rb.rhs)
        if idx == 0:
            app1, app2 = rt.applicable, rb.applicable
    return AlphaSweep(grid, tuple(y1), tuple(y2), tight_id, base_id, app1, app2)
