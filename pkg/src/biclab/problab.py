"""Base-2 log-space evaluation of the G(n, 1/2) counting formulas.

f(k) = C(n,k) 2^-C(k,2)              expected independent k-sets
g(k) = C(n,k+2)(2^(k+1)-1) 2^-C(k+2,2)  expected induced complete bipartite (k+2)-sets
k0(n) = largest k with f(k) >= 1

plus the second-moment pair contributions f_i, g_i, h_i, the Poisson
prediction for the four joint events on X = #independent k-sets and
Y = #induced complete bipartite (k+2)-sets, and the divisor sum used for
sparse G(n, p).

Binomials are evaluated from exact integers (``math.comb`` followed by the
correctly rounded ``math.log2`` of a big int) whenever the smaller index is
at most ``EXACT_K``; only larger binomials fall back to ``lgamma``.
"""

from __future__ import annotations

import csv
import io
import json
import math
import warnings
from dataclasses import asdict, dataclass, field

EXACT_K = 4096
NEG_INF = -math.inf


def log2_binom(n: int, k: int) -> float:
    if k < 0 or k > n:
        return NEG_INF
    k = min(k, n - k)
    if k <= EXACT_K:
        return math.log2(math.comb(n, k))
    return (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / math.log(2)


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def _log2_pow2_minus_1(e: int) -> float:
    """log2(2**e - 1) for e >= 1."""
    return math.log2((1 << e) - 1)


def log2_f(n: int, k: int) -> float:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return log2_binom(n, k) - _c2(k)


def log2_g(n: int, k: int) -> float:
    if not 0 <= k + 2 <= n or k < 0:
        raise ValueError(f"need 0 <= k and k + 2 <= n, got n={n}, k={k}")
    return log2_binom(n, k + 2) + _log2_pow2_minus_1(k + 1) - _c2(k + 2)


def k0_of_n(n: int) -> int:
    """Largest k with C(n, k) >= 2**C(k, 2), decided in exact integers."""
    if n < 2:
        raise ValueError("k0 needs n >= 2")
    k = 1
    while k + 1 <= n and math.comb(n, k + 1) >= 1 << _c2(k + 1):
        k += 1
    return k


@dataclass(frozen=True)
class EventProbs:
    p11: float
    p10: float
    p01: float
    p00: float

    def as_dict(self) -> dict[str, float]:
        return {"E11": self.p11, "E10": self.p10, "E01": self.p01, "E00": self.p00}


def event_probabilities(lam: float, mu: float) -> EventProbs:
    """Independent-Poisson prediction for (X>0, Y>0) with E X = lam, E Y = mu.

    p00 = e^(-lam-mu), p10 = e^-mu - p00, p01 = e^-lam - p00 and
    p11 = 1 - e^-lam - e^-mu + p00, evaluated in factored form
    (e.g. p11 = (1 - e^-lam)(1 - e^-mu)) so every component stays in [0, 1].
    """
    if not (lam >= 0 and mu >= 0) or math.isinf(lam) or math.isinf(mu):
        raise ValueError("lambda and mu must be finite and non-negative")
    ex, ey = math.exp(-lam), math.exp(-mu)
    qx, qy = -math.expm1(-lam), -math.expm1(-mu)
    return EventProbs(p11=qx * qy, p10=qx * ey, p01=ex * qy, p00=ex * ey)


@dataclass(frozen=True)
class RegimeReport:
    n: int
    k0: int
    log2_f_k0: float
    log2_f_k0_plus_1: float
    k: int              # k0 in regimes I/II, k0 + 1 in regime III
    lam: float          # f(k)
    mu: float           # g(k), 0 when k + 2 > n
    regime: str
    T: float
    event_probs: EventProbs

    def to_dict(self) -> dict:
        d = asdict(self)
        d["event_probs"] = self.event_probs.as_dict()
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def classify(log2_f_k0: float, log2_f_k0_plus_1: float, T: float = 10.0) -> str:
    """II if f(k0) <= T, else III if f(k0+1) >= 1/T, else I."""
    if T <= 1:
        raise ValueError("threshold T must exceed 1")
    lt = math.log2(T)
    if log2_f_k0 <= lt:
        return "II"
    if log2_f_k0_plus_1 >= -lt:
        return "III"
    return "I"


def regime_classify(n: int, T: float = 10.0) -> RegimeReport:
    k0 = k0_of_n(n)
    lf0 = log2_f(n, k0)
    lf1 = log2_f(n, k0 + 1) if k0 + 1 <= n else NEG_INF
    regime = classify(lf0, lf1, T)
    k = k0 + 1 if regime == "III" else k0
    lam = 2.0 ** log2_f(n, k)
    mu = 2.0 ** log2_g(n, k) if k + 2 <= n else 0.0
    return RegimeReport(n, k0, lf0, lf1, k, lam, mu, regime, T, event_probabilities(lam, mu))


# pair contributions to the second moments

def moment_term_f(n: int, k: int, i: int) -> float:
    if not 2 <= i <= k - 1:
        raise ValueError(f"f_i needs 2 <= i <= k-1, got i={i}, k={k}")
    return log2_binom(n, k) + log2_binom(k, i) + log2_binom(n - k, k - i) - 2 * _c2(k) + _c2(i)


def moment_term_g(n: int, k: int, i: int) -> float:
    if not 2 <= i <= k + 1:
        raise ValueError(f"g_i needs 2 <= i <= k+1, got i={i}, k={k}")
    return (log2_g(n, k) + log2_binom(k + 2, i) + log2_binom(n - k - 2, k + 2 - i)
            + (k + 2 - i) - _c2(k + 2) + _c2(i))


def moment_term_h(n: int, k: int, i: int) -> float:
    if not 2 <= i <= k:
        raise ValueError(f"h_i needs 2 <= i <= k, got i={i}, k={k}")
    return (log2_binom(n, k) + log2_binom(k, i) + log2_binom(n - k, k + 2 - i)
            + _log2_pow2_minus_1(k + 2 - i) - _c2(k) - _c2(k + 2) + _c2(i))


@dataclass(frozen=True)
class MomentRow:
    i: int
    case: int
    log2_term: float
    log2_bound: float

    @property
    def margin(self) -> float:
        return self.log2_term - self.log2_bound


@dataclass(frozen=True)
class MomentTable:
    """Signed log2 margins term - bound; margin <= 0 means the bound holds."""

    kind: str
    n: int
    k: int
    rows: tuple[MomentRow, ...] = field(default_factory=tuple)

    @property
    def terms(self) -> list[tuple[int, float]]:
        seen = {}
        for r in self.rows:
            seen.setdefault(r.i, r.log2_term)
        return sorted(seen.items())

    @property
    def bound_margins(self) -> list[tuple[int, float]]:
        return [(r.i, r.margin) for r in self.rows]

    @property
    def max_margin(self) -> float:
        return max(r.margin for r in self.rows)

    def violations(self) -> list[MomentRow]:
        return [r for r in self.rows if r.margin > 0]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "log2_term", "log2_bound", "margin"])
        for r in self.rows:
            w.writerow([r.i, repr(r.log2_term), repr(r.log2_bound), repr(r.margin)])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "k": self.k,
                "rows": [{"i": r.i, "case": r.case, "log2_term": r.log2_term,
                          "log2_bound": r.log2_bound, "margin": r.margin} for r in self.rows]}


def _check_k(n: int, k: int | None) -> int:
    if k is None:
        k = k0_of_n(n)
        if k < 9:
            raise ValueError(f"k0({n}) = {k} < 9; the moment checks need a larger n")
    return k


def lemma21_check(n: int, k: int | None = None) -> MomentTable:
    """f_i against f(k)^2 n^-0.3i (2 <= i <= 2k/3) and f(k) n^-0.3j (i = k-j, 1 <= j <= k/3)."""
    k = _check_k(n, k)
    lf, ln = log2_f(n, k), math.log2(n)
    rows = []
    for i in range(2, k):
        term = moment_term_f(n, k, i)
        if 3 * i <= 2 * k:
            rows.append(MomentRow(i, 1, term, 2 * lf - 0.3 * i * ln))
        j = k - i
        if 1 <= j and 3 * j <= k:
            rows.append(MomentRow(i, 2, term, lf - 0.3 * j * ln))
    return MomentTable("f", n, k, tuple(rows))


def lemma22_check(n: int, k: int | None = None) -> MomentTable:
    """g_i against g(k)^2 n^-0.3i (2 <= i <= 2k/3+2) and g(k) n^-0.3j (i = k+2-j, 1 <= j <= k/3)."""
    k = _check_k(n, k)
    lg, ln = log2_g(n, k), math.log2(n)
    rows = []
    for i in range(2, k + 2):
        term = moment_term_g(n, k, i)
        if 3 * (i - 2) <= 2 * k:
            rows.append(MomentRow(i, 1, term, 2 * lg - 0.3 * i * ln))
        j = k + 2 - i
        if 1 <= j and 3 * j <= k:
            rows.append(MomentRow(i, 2, term, lg - 0.3 * j * ln))
    return MomentTable("g", n, k, tuple(rows))


def cross_term_check(n: int, k: int | None = None) -> MomentTable:
    """h_i against f(k)^2 n^-0.3i (2 <= i <= 2k/3) and f(k) n^-0.3(j+2) (i = k-j, 0 <= j <= k/3)."""
    k = _check_k(n, k)
    lf, ln = log2_f(n, k), math.log2(n)
    rows = []
    for i in range(2, k + 1):
        term = moment_term_h(n, k, i)
        if 3 * i <= 2 * k:
            rows.append(MomentRow(i, 1, term, 2 * lf - 0.3 * i * ln))
        j = k - i
        if 0 <= j and 3 * j <= k:
            rows.append(MomentRow(i, 2, term, lf - 0.3 * (j + 2) * ln))
    return MomentTable("h", n, k, tuple(rows))


def entropy(x: float) -> float:
    """Binary entropy in bits, H(0) = H(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("entropy needs 0 <= x <= 1")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


# divisor sum for sparse G(n, p)

def log2_sum(values) -> float:
    values = [v for v in values if v != NEG_INF]
    if not values:
        return NEG_INF
    top = max(values)
    return top + math.log2(math.fsum(2.0 ** (v - top) for v in values))


def lemma31_terms(n: int, p: float, m: int) -> list[tuple[int, float]]:
    """(d, log2 of C(n,d) C(n-d,m/d) p^m) for divisors 2 <= d <= sqrt(m)."""
    if m < 1 or not 0 < p <= 1:
        raise ValueError("need m >= 1 and 0 < p <= 1")
    lp = math.log2(p)
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append((d, log2_binom(n, d) + log2_binom(n - d, m // d) + m * lp))
        d += 1
    return out


def lemma31_sum(n: int, p: float, m: int, odd_surrogate: bool = False) -> float:
    """log2 of the divisor sum; -inf when it is empty.

    With ``odd_surrogate`` an odd m is instead bounded by
    C(n, (m+1)/2) p^(m+1).
    """
    if not n * p / 16 <= m <= n * p / 4:
        warnings.warn(f"m={m} lies outside [pn/16, pn/4] = [{n * p / 16:g}, {n * p / 4:g}]", stacklevel=2)
    if odd_surrogate and m % 2 == 1:
        return log2_binom(n, (m + 1) // 2) + (m + 1) * math.log2(p)
    return log2_sum(t for _, t in lemma31_terms(n, p, m))


@dataclass(frozen=True)
class Lemma31Row:
    m: int
    log2_sum: float
    b: float
    log2_d2_term: float
    log2_max_other: float   # -inf when d = 2 is the only divisor in range

    @property
    def log2_dominance(self) -> float:
        return self.log2_d2_term - self.log2_max_other


def lemma31_check(n: int, p: float, C: float = 10.0) -> tuple[float, list[Lemma31Row]]:
    """b(m) = -log2(sum) / (m log2(1/p)) over even m in [pn/16, pn/4];
    returns the minimum and the per-m table."""
    if not 0 < p <= 0.1:
        raise ValueError("lemma31_check needs 0 < p <= 0.1")
    if n * p < C * math.log2(n):
        raise ValueError(f"need np >= C log2 n ({n * p:g} < {C * math.log2(n):g})")
    lo, hi = max(4, math.ceil(n * p / 16)), math.floor(n * p / 4)
    rows = []
    for m in range(lo + lo % 2, hi + 1, 2):
        terms = dict(lemma31_terms(n, p, m))
        s = log2_sum(terms.values())
        others = [t for d, t in terms.items() if d != 2]
        rows.append(Lemma31Row(m, s, -s / (m * math.log2(1 / p)), terms[2],
                               max(others) if others else NEG_INF))
    if not rows:
        raise ValueError("no even m in [pn/16, pn/4]")
    return min(r.b for r in rows), rows
