"""Counting and constructing universal cycles for k-permutations.

Universal cycles for P(n,k) are in bijection with Eulerian tours of the
transition digraph, tours being taken up to rotation of the arc sequence.
Three independent routes to the count live here:

* closed forms for k = 1, 2, 3;
* the BEST-style product ``cof(L) * prod_v (outdeg(v) - 1)!`` where
  ``cof(L)`` is a principal cofactor of the Laplacian (it equals the
  product of the nonzero Laplacian eigenvalues divided by |V|);
* exhaustive backtracking over Eulerian trails that start with the arc
  labelled ``1 2 ... k``.
"""

from __future__ import annotations

import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Any, Dict, Iterator, List, Optional, Tuple

from . import digraph, exactmat, perm
from .errors import BudgetExceeded, ParameterError

DEFAULT_MAX_VERTICES = 5000


@dataclass(frozen=True)
class TourBudget:
    max_arcs: int = 40
    max_count: int = 10**8

    def __post_init__(self):
        if self.max_arcs <= 0 or self.max_count <= 0:
            raise ParameterError("budget caps must be positive")


# -- closed forms -----------------------------------------------------------

def count_closed_form(n: int, k: int) -> int:
    if k == 1:
        if n < 2:
            raise ParameterError(f"k=1 closed form needs n >= 2, got n={n}")
        return factorial(n - 1)
    if k == 2:
        if n < 3:
            raise ParameterError(f"k=2 closed form needs n >= 3, got n={n}")
        return n ** (n - 2) * factorial(n - 2) ** n
    if k == 3:
        if n < 4:
            raise ParameterError(f"k=3 closed form needs n >= 4, got n={n}")
        half = (n - 1) * (n - 2) // 2
        return (
            (n - 3) ** half
            * (n - 2) ** (n - 1)
            * (n - 1) ** (half - 2)
            * n ** (n - 2)
            * factorial(n - 3) ** (n * (n - 1))
        )
    raise ParameterError(f"no closed form implemented for k={k}; use matrix_tree")


# -- Matrix-Tree / BEST -----------------------------------------------------

def _checked_digraph(n: int, k: int, max_vertices: int) -> digraph.TransitionDigraph:
    if k == 1:
        raise ParameterError("k=1 has no transition digraph; use the closed form (n-1)!")
    if not 2 <= k < n:
        digraph.build(n, k)  # raises with the supported range
    nv = perm.num_kperms(n, k - 1)
    if nv > max_vertices:
        raise BudgetExceeded(f"|V| = {nv} exceeds the vertex cap {max_vertices}")
    return digraph.build(n, k)


def laplacian_cofactor(L: exactmat.ExactMatrix, i: int = 0) -> int:
    """Principal cofactor of ``L``: determinant with row ``i`` and column ``i`` removed."""
    return exactmat.determinant(L.minor_matrix(i, i))


def all_cofactors(n: int, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> List[int]:
    """Every principal cofactor of the Laplacian of P(n,k); all equal for a balanced digraph."""
    L = digraph.laplacian_matrix(_checked_digraph(n, k, max_vertices))
    return [laplacian_cofactor(L, i) for i in range(L.rows)]


def count_matrix_tree(n: int, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    d = _checked_digraph(n, k, max_vertices)
    cof = laplacian_cofactor(digraph.laplacian_matrix(d))
    result = cof
    for deg in d.degrees().out_degree:
        result *= factorial(deg - 1)
    return result


# -- brute force ------------------------------------------------------------

def _check_arc_budget(n: int, k: int, budget: TourBudget) -> None:
    m = perm.num_kperms(n, k)
    if m > budget.max_arcs:
        raise BudgetExceeded(
            f"P({n},{k}) has {m} arcs, over the brute-force cap of {budget.max_arcs}",
            lower_bound=0,
        )


def _count_from(n: int, k: int, second: Optional[int], cap: int) -> int:
    """Count Eulerian trails starting with arc 0 (and with arc ``second`` next, if given).

    Stops and raises BudgetExceeded once the count passes ``cap``.
    """
    d = digraph.build(n, k)
    m = d.num_arcs
    head = [v for _, v in d.arcs]
    out = d.out_arcs
    used = [False] * m
    used[0] = True
    count = 0
    if sys.getrecursionlimit() < m + 100:
        sys.setrecursionlimit(m + 100)

    def dfs(v: int, depth: int) -> None:
        nonlocal count
        if depth == m:
            # a trail using every arc of a balanced digraph closes up by itself
            count += 1
            if count > cap:
                raise BudgetExceeded(f"more than {cap} tours", lower_bound=count)
            return
        for a in out[v]:
            if not used[a]:
                used[a] = True
                dfs(head[a], depth + 1)
                used[a] = False

    if second is None:
        dfs(head[0], 1)
    else:
        used[second] = True
        dfs(head[second], 2)
    return count


def _count_worker(args) -> Tuple[int, bool]:
    n, k, second, cap = args
    try:
        return _count_from(n, k, second, cap), False
    except BudgetExceeded as exc:
        return exc.lower_bound, True


def count_bruteforce(n: int, k: int, budget: TourBudget = TourBudget(), workers: int = 1) -> int:
    """Count universal cycles by exhaustive backtracking.

    With ``workers > 1`` the search is split over the second arc of the trail
    and run in separate processes; the subtotals add up to the sequential count.
    """
    if k == 1:
        total = 0
        for total, _ in enumerate(enumerate_all(n, 1, budget), start=1):
            pass
        return total
    if not 1 <= k < n:
        digraph.build(n, k)
    _check_arc_budget(n, k, budget)
    if workers <= 1:
        return _count_from(n, k, None, budget.max_count)

    d = digraph.build(n, k)
    seconds = d.out_arcs[d.arcs[0][1]]
    jobs = [(n, k, a, budget.max_count) for a in seconds]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_count_worker, jobs))
    total = sum(c for c, _ in results)
    if total > budget.max_count or any(hit for _, hit in results):
        raise BudgetExceeded(f"more than {budget.max_count} tours", lower_bound=total)
    return total


def enumerate_all(n: int, k: int, budget: TourBudget = TourBudget()) -> Iterator[Tuple[int, ...]]:
    """Yield every universal cycle for P(n,k) once, in canonical rotation, in lexicographic order.

    The canonical rotation always begins with ``1 2 ... k`` (the least window
    occurs exactly once), so a depth-first search that starts from the arc
    ``1 2 ... k`` and tries successors by increasing last symbol already
    produces cycles in sorted order. Raises BudgetExceeded after ``max_count``
    cycles have been yielded.
    """
    if k == 1:
        if n < 1:
            raise ParameterError(f"need n >= 1, got {n}")
        if n > budget.max_arcs:
            raise BudgetExceeded(f"n = {n} over the cap of {budget.max_arcs}", lower_bound=0)
        emitted = 0
        for rest in permutations(range(2, n + 1)):
            if emitted == budget.max_count:
                raise BudgetExceeded(f"more than {budget.max_count} cycles", lower_bound=emitted)
            emitted += 1
            yield (1,) + rest
        return
    if not 2 <= k < n:
        digraph.build(n, k)
    _check_arc_budget(n, k, budget)

    d = digraph.build(n, k)
    m = d.num_arcs
    head = [v for _, v in d.arcs]
    last = [lab[-1] for lab in d.arc_labels]
    out = d.out_arcs
    used = [False] * m
    used[0] = True
    symbols = [last[0]]
    taken: List[int] = []
    # frames are [vertex, next index into out[vertex]]
    stack = [[head[0], 0]]
    emitted = 0
    cut = m - k + 1
    while stack:
        top = stack[-1]
        v, pos = top
        choices = out[v]
        if len(symbols) < m:
            while pos < len(choices) and used[choices[pos]]:
                pos += 1
            if pos < len(choices):
                a = choices[pos]
                top[1] = pos + 1
                used[a] = True
                taken.append(a)
                symbols.append(last[a])
                stack.append([head[a], 0])
                continue
        else:
            if emitted == budget.max_count:
                raise BudgetExceeded(f"more than {budget.max_count} cycles", lower_bound=emitted)
            emitted += 1
            yield tuple(symbols[cut:] + symbols[:cut])
        stack.pop()
        if taken:
            used[taken.pop()] = False
            symbols.pop()


# -- construction -----------------------------------------------------------

def generate_cycle(n: int, k: int, seed: Optional[int] = None) -> Tuple[int, ...]:
    """One universal cycle for P(n,k) by Hierholzer's algorithm, in canonical rotation.

    ``seed`` shuffles the order in which each vertex's out-arcs are tried;
    ``None`` keeps lexicographic order.
    """
    if not 1 <= k < n:
        raise ParameterError(f"universal cycles for P(n,k) need 1 <= k < n, got n={n}, k={k}")
    if k == 1:
        return tuple(range(1, n + 1))
    d = digraph.build(n, k)
    head = [v for _, v in d.arcs]
    out = [list(x) for x in d.out_arcs]
    if seed is not None:
        rng = random.Random(seed)
        for arcs in out:
            rng.shuffle(arcs)
    nxt = [0] * d.num_vertices
    stack: List[Tuple[int, Optional[int]]] = [(d.arcs[0][0], None)]
    circuit: List[int] = []
    while stack:
        v, via = stack[-1]
        if nxt[v] < len(out[v]):
            a = out[v][nxt[v]]
            nxt[v] += 1
            stack.append((head[a], a))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    return perm.canonical_rotation(d.arc_labels[a][-1] for a in circuit)


# -- report -----------------------------------------------------------------

METHODS = ("closed", "matrix-tree", "bruteforce", "all")


@dataclass(frozen=True)
class CountReport:
    n: int
    k: int
    closed_form: Optional[int] = None
    matrix_tree: Optional[int] = None
    brute_force: Optional[int] = None

    @property
    def pairs(self) -> Dict[str, bool]:
        """Agreement flag for every pair of populated counts."""
        have = [(name, getattr(self, name)) for name in ("closed_form", "matrix_tree", "brute_force")]
        have = [(name, v) for name, v in have if v is not None]
        return {f"{x}={y}": vx == vy for (x, vx), (y, vy) in combinations(have, 2)}

    @property
    def agree(self) -> bool:
        return all(self.pairs.values())

    def to_json(self) -> Dict[str, Any]:
        def dec(v):
            return None if v is None else str(v)

        return {
            "n": self.n,
            "k": self.k,
            "closed_form": dec(self.closed_form),
            "matrix_tree": dec(self.matrix_tree),
            "brute_force": dec(self.brute_force),
            "agree": self.agree,
            "pairs": self.pairs,
        }


def count_report(
    n: int,
    k: int,
    method: str = "all",
    budget: TourBudget = TourBudget(),
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> CountReport:
    """Run the requested counting routes.

    ``method="all"`` runs whatever applies to (n, k): the closed form for
    k <= 3, Matrix-Tree for k >= 2, and brute force only when it fits the
    budget. Brute force is skipped without running when the Matrix-Tree
    count already exceeds ``budget.max_count``.
    """
    if method not in METHODS:
        raise ParameterError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if not 1 <= k < n:
        raise ParameterError(f"universal cycles for P(n,k) need 1 <= k < n, got n={n}, k={k}")
    closed = tree = brute = None
    if method == "closed":
        closed = count_closed_form(n, k)
    elif method == "matrix-tree":
        tree = count_matrix_tree(n, k, max_vertices)
    elif method == "bruteforce":
        brute = count_bruteforce(n, k, budget)
    else:
        if k <= 3:
            closed = count_closed_form(n, k)
        if k >= 2:
            tree = count_matrix_tree(n, k, max_vertices)
        expected = tree if tree is not None else closed
        if expected is None or expected <= budget.max_count:
            try:
                brute = count_bruteforce(n, k, budget)
            except BudgetExceeded:
                brute = None
    return CountReport(n, k, closed, tree, brute)
