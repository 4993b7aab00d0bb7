"""Transition digraph of P(n,k).

Vertices are the (k-1)-permutations of [n] in lexicographic order, so a
vertex index is the lexicographic rank of its label. There is one arc per
k-permutation ``i_1 ... i_k``, running from ``i_1 ... i_{k-1}`` to
``i_2 ... i_k``. Arc ids are lexicographic ranks of their labels as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

from . import perm
from .errors import ParameterError
from .exactmat import ExactMatrix


@dataclass(frozen=True)
class DegreeProfile:
    out_degree: Tuple[int, ...]
    in_degree: Tuple[int, ...]

    @property
    def balanced(self) -> bool:
        return self.out_degree == self.in_degree


@dataclass(frozen=True)
class TransitionDigraph:
    n: int
    k: int
    vertices: Tuple[perm.KPerm, ...]
    arcs: Tuple[Tuple[int, int], ...]
    arc_labels: Tuple[perm.KPerm, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @cached_property
    def index(self) -> Dict[perm.KPerm, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_arcs(self) -> Tuple[Tuple[int, ...], ...]:
        """Arc ids leaving each vertex, ascending (i.e. by last symbol of the label)."""
        out: List[List[int]] = [[] for _ in self.vertices]
        for a, (u, _) in enumerate(self.arcs):
            out[u].append(a)
        return tuple(tuple(x) for x in out)

    def degrees(self) -> DegreeProfile:
        out = [0] * self.num_vertices
        inn = [0] * self.num_vertices
        for u, v in self.arcs:
            out[u] += 1
            inn[v] += 1
        return DegreeProfile(tuple(out), tuple(inn))


def build(n: int, k: int) -> TransitionDigraph:
    """Build the transition digraph of P(n,k), for 2 <= k < n."""
    if not 2 <= k < n:
        raise ParameterError(
            f"transition digraph needs 2 <= k < n, got n={n}, k={k}; "
            "universal cycles for k-permutations exist exactly when k < n "
            "(k = 1 is counted directly without a digraph)"
        )
    vertices = tuple(perm.all_kperms(n, k - 1))
    index = {v: i for i, v in enumerate(vertices)}
    arcs = []
    labels = []
    for w in perm.all_kperms(n, k):
        arcs.append((index[w[:-1]], index[w[1:]]))
        labels.append(w)
    return TransitionDigraph(n, k, vertices, tuple(arcs), tuple(labels))


def adjacency_matrix(d: TransitionDigraph) -> ExactMatrix:
    m = d.num_vertices
    rows = [[0] * m for _ in range(m)]
    for u, v in d.arcs:
        rows[u][v] = 1
    return ExactMatrix(rows)


def laplacian_matrix(d: TransitionDigraph) -> ExactMatrix:
    """L = T - A with T the diagonal matrix of out-degrees."""
    m = d.num_vertices
    rows = [[0] * m for _ in range(m)]
    for u, v in d.arcs:
        rows[u][v] -= 1
        rows[u][u] += 1
    return ExactMatrix(rows)


def is_balanced(d: TransitionDigraph) -> bool:
    return d.degrees().balanced


def _reaches_all(adj: List[List[int]], start: int) -> bool:
    seen = [False] * len(adj)
    seen[start] = True
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    return all(seen)


def is_strongly_connected(d: TransitionDigraph) -> bool:
    """Every vertex reachable from vertex 0 and vertex 0 reachable from every vertex."""
    if d.num_vertices == 0:
        return True
    fwd: List[List[int]] = [[] for _ in d.vertices]
    back: List[List[int]] = [[] for _ in d.vertices]
    for u, v in d.arcs:
        fwd[u].append(v)
        back[v].append(u)
    return _reaches_all(fwd, 0) and _reaches_all(back, 0)


def _digits(p) -> str:
    return "".join(str(s) for s in p)


def dump(d: TransitionDigraph) -> str:
    """Arc list, one ``u -> v : label`` line per arc, in lexicographic label order."""
    lines = [
        f"{_digits(d.vertices[u])} -> {_digits(d.vertices[v])} : {_digits(lab)}"
        for (u, v), lab in zip(d.arcs, d.arc_labels)
    ]
    return "\n".join(lines)
