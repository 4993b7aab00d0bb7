"""Exact checks of the spectral facts behind the k = 2 and k = 3 counts.

For k = 3 the adjacency matrix A of the transition digraph (size n(n-1))
satisfies

    A^4 + A^3 + (n-3) A^2 - A - (n-2) I = (n-2)(n-3) J

and its spectrum is n-2 (once), 1, -1 and the two roots p, q of
x^2 + x + (n-2). The roots p, q are complex, so they are never formed:
every statement about them goes through p + q = -1 and pq = n - 2.

Multiplicities are read off as nullities of A - lambda*I. That is only
valid when A is diagonalizable; it is, because
(x - (n-2))(x - 1)(x + 1)(x^2 + x + n - 2) annihilates A and has distinct
roots for n >= 4. Both facts are checked here rather than assumed
(:func:`verify_annihilating_polynomial`, :func:`roots_distinct`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from . import digraph
from .counting import laplacian_cofactor
from .errors import ParameterError
from .exactmat import ExactMatrix, eval_poly, poly_mul, powers, rank, trace

CASES = ("ab,ab", "ab,ba", "ab,ac", "ab,ca", "ab,bc", "ab,cb", "ab,cd")

# witnesses with a, b, c, d = 1, 2, 3, 4
WITNESS = {
    "ab,ab": ((1, 2), (1, 2)),
    "ab,ba": ((1, 2), (2, 1)),
    "ab,ac": ((1, 2), (1, 3)),
    "ab,ca": ((1, 2), (3, 1)),
    "ab,bc": ((1, 2), (2, 3)),
    "ab,cb": ((1, 2), (3, 2)),
    "ab,cd": ((1, 2), (3, 4)),
}


@dataclass
class CheckResult:
    name: str
    params: Dict[str, Any]
    passed: bool
    counterexample: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "params": self.params,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(v):
    # big integers as decimal strings
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _label(p) -> str:
    return "".join(str(s) for s in p)


def _first_mismatch(got: ExactMatrix, want: ExactMatrix, vertices) -> Optional[Dict[str, Any]]:
    for i in range(got.rows):
        for j in range(got.cols):
            if got[i, j] != want[i, j]:
                return {
                    "row": _label(vertices[i]),
                    "col": _label(vertices[j]),
                    "expected": str(want[i, j]),
                    "got": str(got[i, j]),
                }
    return None


def _need(n: int, lo: int, what: str) -> None:
    if n < lo:
        raise ParameterError(f"{what} needs n >= {lo}, got n={n}")


def _k3(n: int):
    d = digraph.build(n, 3)
    return d, digraph.adjacency_matrix(d)


# -- k = 2 ------------------------------------------------------------------

def verify_theorem1_laplacian(n: int) -> CheckResult:
    """L(P(n,2)) == nI - J, and |V| * cof(L) == n^(n-1)."""
    _need(n, 3, "thm1")
    d = digraph.build(n, 2)
    L = digraph.laplacian_matrix(d)
    want = ExactMatrix.scalar(n, n) - ExactMatrix.ones(n)
    bad = _first_mismatch(L, want, d.vertices)
    cof = laplacian_cofactor(L)
    product = d.num_vertices * cof
    details = {"cofactor": cof, "eigenvalue_product": product, "expected_product": n ** (n - 1)}
    if bad is None and product != n ** (n - 1):
        bad = {"row": None, "col": None, "expected": str(n ** (n - 1)), "got": str(product)}
    return CheckResult("thm1", {"n": n}, bad is None, bad, details)


# -- k = 3 ------------------------------------------------------------------

def lemma2_coefficients(n: int) -> List[int]:
    """Coefficients, lowest degree first, of x^4 + x^3 + (n-3)x^2 - x - (n-2)."""
    return [-(n - 2), -1, n - 3, 1, 1]


def verify_lemma2(n: int) -> CheckResult:
    _need(n, 4, "lemma2")
    d, A = _k3(n)
    lhs = eval_poly(lemma2_coefficients(n), A)
    rhs = ExactMatrix.ones(d.num_vertices) * ((n - 2) * (n - 3))
    bad = _first_mismatch(lhs, rhs, d.vertices)
    return CheckResult("lemma2", {"n": n}, bad is None, bad)


def walk_table(n: int) -> Dict[str, Tuple[int, int, int, int, int]]:
    """Expected (A, A^2, A^3, A^4, A^4 + A^3 + (n-3)A^2 - A) entries for each case."""
    return {
        "ab,ab": (0, 0, n - 2, (n - 2) * (n - 3), (n - 2) ** 2),
        "ab,ba": (0, 0, 0, (n - 2) * (n - 3), (n - 2) * (n - 3)),
        "ab,ac": (0, 0, n - 3, (n - 3) ** 2, (n - 2) * (n - 3)),
        "ab,ca": (0, 1, n - 3, (n - 3) * (n - 4), (n - 2) * (n - 3)),
        "ab,bc": (1, 0, 0, (n - 3) ** 2 + (n - 2), (n - 2) * (n - 3)),
        "ab,cb": (0, 0, n - 3, (n - 3) ** 2, (n - 2) * (n - 3)),
        "ab,cd": (0, 1, n - 4, (n - 3) + (n - 4) ** 2, (n - 2) * (n - 3)),
    }


def classify_pair(u, v) -> str:
    """Which of the seven cases the ordered vertex pair (u, v) of P(n,3)'s digraph falls in."""
    a, b = u
    x, y = v

    def role(s):
        return "a" if s == a else "b" if s == b else None

    rx, ry = role(x), role(y)
    if rx and ry:
        return "ab,ab" if rx == "a" else "ab,ba"
    if rx == "a":
        return "ab,ac"
    if ry == "a":
        return "ab,ca"
    if rx == "b":
        return "ab,bc"
    if ry == "b":
        return "ab,cb"
    return "ab,cd"


@dataclass
class WalkTableResult(CheckResult):
    cases: Dict[str, bool] = field(default_factory=dict)
    witness: Dict[str, Tuple[int, ...]] = field(default_factory=dict)


def verify_walk_table(n: int) -> WalkTableResult:
    """Compare entries of A..A^4 with the seven-case table, by witness and by a full sweep.

    The witness pass reads one representative pair per case (a,b,c,d = 1,2,3,4).
    The sweep classifies every ordered vertex pair and checks all of them.
    """
    _need(n, 4, "walk-table")
    d, A = _k3(n)
    _, A1, A2, A3, A4 = powers(A, 4)
    combo = A4 + A3 + A2 * (n - 3) - A1
    mats = (A1, A2, A3, A4, combo)
    table = walk_table(n)
    idx = d.index

    witness = {}
    cases = {c: True for c in CASES}
    for c, (u, v) in WITNESS.items():
        i, j = idx[u], idx[v]
        got = tuple(M[i, j] for M in mats)
        witness[c] = got
        if got != table[c]:
            cases[c] = False

    bad = None
    seen = {c: 0 for c in CASES}
    for i, u in enumerate(d.vertices):
        for j, v in enumerate(d.vertices):
            c = classify_pair(u, v)
            seen[c] += 1
            got = tuple(M[i, j] for M in mats)
            if got != table[c]:
                cases[c] = False
                if bad is None:
                    bad = {"row": _label(u), "col": _label(v), "case": c,
                           "expected": str(table[c]), "got": str(got)}
    passed = all(cases.values())
    if bad is None and not passed:
        c = next(c for c, ok in cases.items() if not ok)
        u, v = WITNESS[c]
        bad = {"row": _label(u), "col": _label(v), "case": c,
               "expected": str(table[c]), "got": str(witness[c])}
    return WalkTableResult(
        "walk-table", {"n": n}, passed, bad,
        {"pairs_per_case": seen}, cases=cases, witness=witness,
    )


def roots_distinct(n: int) -> bool:
    """n-2, 1, -1 and the roots of x^2 + x + (n-2) are pairwise distinct."""
    quad = lambda x: x * x + x + (n - 2)  # noqa: E731
    simple = {n - 2, 1, -1}
    return (
        len(simple) == 3
        and all(quad(x) != 0 for x in simple)
        and 1 - 4 * (n - 2) != 0
    )


def annihilating_coefficients(n: int) -> List[int]:
    """(x - (n-2))(x - 1)(x + 1)(x^2 + x + n - 2), lowest degree first."""
    out = [-(n - 2), 1]
    for f in ([-1, 1], [1, 1], [n - 2, 1, 1]):
        out = poly_mul(out, f)
    return out


def verify_annihilating_polynomial(n: int) -> CheckResult:
    _need(n, 4, "annihilator")
    d, A = _k3(n)
    got = eval_poly(annihilating_coefficients(n), A)
    bad = _first_mismatch(got, ExactMatrix.zeros(d.num_vertices), d.vertices)
    return CheckResult("annihilator", {"n": n}, bad is None, bad,
                       {"roots_distinct": roots_distinct(n)})


@dataclass
class MultiplicityReport:
    n: int
    s1: int
    s2: int
    s3: int
    t1: int
    t2: int
    t3: int

    @property
    def size(self) -> int:
        return 1 + self.s1 + self.s2 + 2 * self.s3

    def expected(self) -> Dict[str, int]:
        n = self.n
        return {
            "s1": (n - 1) * (n - 2) // 2,
            "s2": n * (n - 3) // 2,
            "s3": n - 1,
            "t1": 0,
            "t2": 0,
            "t3": n * (n - 1) * (n - 2),
        }

    def trace_system_holds(self) -> bool:
        """Traces of A, A^2, A^3 recomputed from the spectrum via power sums of p, q."""
        n = self.n
        # Newton's identities with e1 = p+q = -1, e2 = pq = n-2
        e1, e2 = -1, n - 2
        p1 = e1
        p2 = e1 * p1 - 2 * e2
        p3 = e1 * p2 - e2 * p1
        if (p1, p2, p3) != (-1, -2 * n + 5, 3 * n - 7):
            return False
        top = n - 2
        return (
            top + self.s1 - self.s2 + self.s3 * p1 == self.t1
            and top ** 2 + self.s1 + self.s2 + self.s3 * p2 == self.t2
            and top ** 3 + self.s1 - self.s2 + self.s3 * p3 == self.t3
        )

    def check(self) -> CheckResult:
        n = self.n
        got = {"s1": self.s1, "s2": self.s2, "s3": self.s3,
               "t1": self.t1, "t2": self.t2, "t3": self.t3}
        want = self.expected()
        bad = None
        for key in want:
            if got[key] != want[key]:
                bad = {"row": key, "col": None, "expected": str(want[key]), "got": str(got[key])}
                break
        if bad is None and self.size != n * (n - 1):
            bad = {"row": "size", "col": None, "expected": str(n * (n - 1)), "got": str(self.size)}
        if bad is None and not self.trace_system_holds():
            bad = {"row": "trace-system", "col": None, "expected": "consistent", "got": "inconsistent"}
        if bad is None and not roots_distinct(n):
            bad = {"row": "roots-distinct", "col": None, "expected": "true", "got": "false"}
        return CheckResult("multiplicities", {"n": n}, bad is None, bad, dict(got))


def multiplicities(n: int) -> MultiplicityReport:
    """Eigenvalue multiplicities of A for P(n,3) from ranks, plus traces of A, A^2, A^3."""
    _need(n, 4, "multiplicities")
    d, A = _k3(n)
    N = d.num_vertices
    I = ExactMatrix.identity(N)
    _, A1, A2, A3 = powers(A, 3)
    s1 = N - rank(A - I)
    s2 = N - rank(A + I)
    pair_nullity = N - rank(A2 + A + I * (n - 2))
    if pair_nullity % 2:
        raise ArithmeticError(f"odd nullity {pair_nullity} for a conjugate root pair at n={n}")
    return MultiplicityReport(n, s1, s2, pair_nullity // 2, trace(A1), trace(A2), trace(A3))


def laplacian_product_k3(n: int) -> int:
    """Product of the nonzero Laplacian eigenvalues of P(n,3)'s digraph, from the spectrum."""
    return (
        (n - 3) ** ((n - 1) * (n - 2) // 2)
        * (n - 1) ** (n * (n - 3) // 2)
        * (n * (n - 2)) ** (n - 1)
    )


def verify_theorem2_product(n: int) -> CheckResult:
    """Spectral product for k = 3 against |V| * cof(L), all integer."""
    _need(n, 4, "thm2")
    d = digraph.build(n, 3)
    # (n-2-p)(n-2-q) = (n-2)^2 - (p+q)(n-2) + pq with p+q = -1, pq = n-2
    pair = (n - 2) ** 2 + (n - 2) + (n - 2)
    if pair != n * (n - 2):
        return CheckResult("thm2", {"n": n}, False,
                           {"row": "pair", "col": None, "expected": str(n * (n - 2)), "got": str(pair)})
    spectral = laplacian_product_k3(n)
    cof = laplacian_cofactor(digraph.laplacian_matrix(d))
    via_cofactor = d.num_vertices * cof
    bad = None
    if spectral != via_cofactor:
        bad = {"row": None, "col": None, "expected": str(spectral), "got": str(via_cofactor)}
    return CheckResult("thm2", {"n": n}, bad is None, bad,
                       {"spectral_product": spectral, "cofactor": cof,
                        "vertices_times_cofactor": via_cofactor})


CHECKS = {
    "thm1": (3, verify_theorem1_laplacian),
    "lemma2": (4, verify_lemma2),
    "walk-table": (4, verify_walk_table),
    "multiplicities": (4, lambda n: multiplicities(n).check()),
    "annihilator": (4, verify_annihilating_polynomial),
    "thm2": (4, verify_theorem2_product),
}


def run_checks(n: int, which: str = "all") -> List[CheckResult]:
    """Run one named check, or every check whose minimum n is met (``which="all"``)."""
    if which == "all":
        chosen = [name for name, (lo, _) in CHECKS.items() if n >= lo]
        if not chosen:
            raise ParameterError(f"no checks apply at n={n}; need n >= 3")
    elif which in CHECKS:
        chosen = [which]
    else:
        raise ParameterError(f"unknown check {which!r}; choose from {', '.join(CHECKS)}, all")
    return [CHECKS[name][1](n) for name in chosen]
