"""The generating-function machinery behind the overpartition identity.

This module builds, as executable objects, the sequence R_j(a, q) of
bounded-part generating functions via its recursion

    R_j = R_{j-1} / (1 - q^j)  +  a q^{j-k+1} R_{j-k} / (1 - q^j),

checks the termwise content of the functional equation
(1 - x) F = (1 + a x^k q) F(x -> xq) for F = sum_j R_j x^j, expands the
closed product solution for F, and takes the formal coefficientwise limit
R_infty, which must reproduce the infinite product
(-aq; q^k)_inf / (q; q)_inf.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import b_part_allowed, _check_ki, _count_by_dp
from .series import (
    BivariateSeries,
    Monomial,
    QSeries,
    euler_product,
    finite_pochhammer,
    pochhammer_inf,
)


class StabilizationError(ValueError):
    """Raised when a formal limit cannot be certified at the given depth."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness  # (a_degree, q_degree) or None


def geometric_inverse(j: int, q_order: int) -> QSeries:
    """1 / (1 - q^j) = 1 + q^j + q^{2j} + ..., truncated."""
    if j < 1:
        raise ValueError("j must be positive")
    c = [0] * (q_order + 1)
    for e in range(0, q_order + 1, j):
        c[e] = 1
    return QSeries(tuple(c))


def max_overline_count(k: int, q_order: int) -> int:
    """Largest m whose minimum admissible weight m + k*m*(m-1)/2 fits in q_order.

    Overlined values are pairwise >= k apart, so m overlines weigh at least
    1 + (1+k) + ... + (1+(m-1)k).  a-degrees above this bound carry only
    zero coefficients below the truncation order.
    """
    m = 0
    while (m + 1) + k * m * (m + 1) // 2 <= q_order:
        m += 1
    return m


@dataclass
class RSequence:
    """terms[j] = R_j(a, q) for j = 0..j_max, at a shared truncation."""

    k: int
    q_order: int
    a_order: int
    terms: list

    @property
    def j_max(self) -> int:
        return len(self.terms) - 1


def build_R(k: int, j_max: int, q_order: int, a_order: int | None = None) -> RSequence:
    """Run the recursion from R_0 = 1 (with R_j = 0 for -k < j < 0).

    a_order defaults to the exact overline-count bound for this truncation.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if j_max < 0:
        raise ValueError("j_max must be non-negative")
    if a_order is None:
        a_order = max_overline_count(k, q_order)
    terms = [BivariateSeries.one(a_order, q_order)]
    for j in range(1, j_max + 1):
        t = terms[j - 1]
        if j - k >= 0:
            t = t + terms[j - k].shift(1, j - k + 1)
        terms.append(t.mul_qseries(geometric_inverse(j, q_order)))
    return RSequence(k, q_order, a_order, terms)


def initial_R(k: int, j: int, q_order: int, a_order: int) -> BivariateSeries:
    """The closed initial condition R_j = 1 / (q;q)_j for 0 <= j < k."""
    if not 0 <= j < k:
        raise ValueError("closed initial condition only holds for 0 <= j < k")
    inv = finite_pochhammer(q_order, j).invert_unit()
    return BivariateSeries.from_qseries(inv, a_order)


@dataclass
class FunctionalEquationResult:
    ok: bool
    witness: tuple | None = None  # (j, a_degree, q_degree)


def check_functional_equation(rs: RSequence) -> FunctionalEquationResult:
    """Verify R_j - R_{j-1} = q^j R_j + a q^{j-k+1} R_{j-k} for 1 <= j <= j_max.

    This is the x^j coefficient of (1-x)F = (1 + a x^k q) F(x -> xq).
    Returns the first failing (j, a-degree, q-degree) triple on failure.
    """
    k = rs.k
    for j in range(1, rs.j_max + 1):
        lhs = rs.terms[j] - rs.terms[j - 1]
        rhs = rs.terms[j].shift(0, j)
        if j - k >= 0:
            rhs = rhs + rs.terms[j - k].shift(1, j - k + 1)
        if lhs != rhs:
            for m in range(rs.a_order + 1):
                for n in range(rs.q_order + 1):
                    if lhs.coeffs[m][n] != rhs.coeffs[m][n]:
                        return FunctionalEquationResult(False, (j, m, n))
    return FunctionalEquationResult(True)


def closed_product_F_coefficients(
    k: int, j_top: int, q_order: int, a_order: int | None = None
) -> list:
    """x^0..x^{j_top} coefficients of prod_{t>=0} (1 + a x^k q^{tk+1}) / (1 - x q^t).

    Expanding the closed product solution of the functional equation; the
    returned coefficients must equal the recursion's terms.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if a_order is None:
        a_order = max_overline_count(k, q_order)
    zero = BivariateSeries.zero(a_order, q_order)
    xc = [BivariateSeries.one(a_order, q_order)] + [zero] * j_top
    # numerator: each factor shifts the x-degree by k and multiplies by a q^{tk+1}
    t = 0
    while t * k + 1 <= q_order:
        new = list(xc)
        for d in range(k, j_top + 1):
            new[d] = xc[d] + xc[d - k].shift(1, t * k + 1)
        xc = new
        t += 1
    # denominator: 1/(1 - x q^t) contributes x^s q^{ts} for every s >= 0
    for t in range(0, q_order + 1):
        new = []
        for d in range(j_top + 1):
            acc = xc[d]
            for s in range(1, d + 1):
                if t * s > q_order:
                    break
                acc = acc + xc[d - s].shift(0, t * s)
            new.append(acc)
        xc = new
    return xc


def closed_product_F_coefficient(k: int, j: int, q_order: int, a_order: int | None = None):
    return closed_product_F_coefficients(k, j, q_order, a_order)[j]


@dataclass
class FormalLimit:
    """The coefficientwise limit of a series sequence, with certification data.

    stabilization_index[d] is the least j from which the coefficient of q^d
    (at every a-degree) stayed constant through j_max.
    """

    limit: BivariateSeries
    stabilization_index: dict = field(default_factory=dict)


def appell_limit(rs: RSequence) -> FormalLimit:
    """The formal evaluation of lim_{x->1} (1-x) F(a,x,q) as terms[j] stabilize.

    Requires j_max >= q_order + 1 and refuses to certify a limit whose
    coefficients were still moving at the final index.
    """
    if rs.j_max < rs.q_order + 1:
        raise StabilizationError(
            f"not stabilized: j_max={rs.j_max} < q_order+1={rs.q_order + 1}"
        )
    last = rs.terms[-1]
    prev = rs.terms[-2]
    for m in range(rs.a_order + 1):
        for d in range(rs.q_order + 1):
            if last.coeffs[m][d] != prev.coeffs[m][d]:
                raise StabilizationError(
                    f"not stabilized: coefficient of a^{m} q^{d} changed at j={rs.j_max}",
                    witness=(m, d),
                )
    index: dict = {}
    for d in range(rs.q_order + 1):
        idx = 0
        for m in range(rs.a_order + 1):
            final = last.coeffs[m][d]
            j = rs.j_max
            while j > 0 and rs.terms[j - 1].coeffs[m][d] == final:
                j -= 1
            idx = max(idx, j)
        index[d] = idx
    return FormalLimit(limit=last, stabilization_index=index)


def theorem_product(k: int, q_order: int, a_order: int | None = None) -> BivariateSeries:
    """The product side (-aq; q^k)_inf / (q; q)_inf of the overpartition identity."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if a_order is None:
        a_order = max_overline_count(k, q_order)
    numer = pochhammer_inf(Monomial(1, 1, 1), k, q_order, a_order)
    return numer.mul_qseries(euler_product(q_order).invert_unit())


def pj_series(rs: RSequence, j: int) -> BivariateSeries:
    """P_j built independently as a sum over the largest overline position.

    An admissible configuration with parts <= j either has no overline above
    j-k+1 (counted by R_j), or its largest overline b lies in
    {j-k+2, ..., j}; removing that overline forbids plain parts in [b, j]
    and overlines above b-k, leaving exactly the configurations of R_{b-1}.
    Hence P_j = R_j + sum_b a q^b R_{b-1}.
    """
    out = rs.terms[j]
    for b in range(max(1, j - rs.k + 2), j + 1):
        out = out + rs.terms[b - 1].shift(1, b)
    return out


def congruence_product_series(k: int, i: int, q_order: int) -> QSeries:
    """Generating function of the congruence-condition count B_{i,k}.

    The product over allowed parts p of 1/(1 - q^p), expanded by the same
    unbounded-knapsack recurrence that backs the direct counter.
    """
    _check_ki(k, i)
    allowed = [p for p in range(1, q_order + 1) if b_part_allowed(p, k, i)]
    return QSeries(tuple(_count_by_dp(q_order, allowed)))
