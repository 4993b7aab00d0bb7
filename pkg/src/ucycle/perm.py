"""k-permutations of [n], lexicographic ranking, and the universal-cycle check.

Symbols are 1-based (``1..n``); ranks are 0-based. A k-permutation is a plain
tuple of ints and a cyclic sequence is a plain tuple read with wrap-around.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import perm as falling
from typing import Iterator, Optional, Sequence, Tuple

from .errors import ParameterError, PermutationError

KPerm = Tuple[int, ...]


def num_kperms(n: int, k: int) -> int:
    """|P(n,k)| = n!/(n-k)!"""
    if n < 1 or not 0 <= k <= n:
        raise ParameterError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    return falling(n, k)


def check_kperm(p: Sequence[int], n: int) -> KPerm:
    """Return ``p`` as a tuple, raising PermutationError if it is not a k-permutation of [n]."""
    if n < 1:
        raise ParameterError(f"alphabet size must be >= 1, got {n}")
    p = tuple(p)
    if not 1 <= len(p) <= n:
        raise PermutationError(f"length {len(p)} not in 1..{n}")
    for s in p:
        if not isinstance(s, int) or not 1 <= s <= n:
            raise PermutationError(f"symbol {s!r} outside 1..{n}")
    if len(set(p)) != len(p):
        raise PermutationError(f"repeated symbol in {p}")
    return p


def all_kperms(n: int, k: int) -> Iterator[KPerm]:
    """All k-permutations of [n] in lexicographic order."""
    return permutations(range(1, n + 1), k)


def rank(p: Sequence[int], n: int) -> int:
    """Zero-based lexicographic rank of ``p`` among the k-permutations of [n]."""
    p = check_kperm(p, n)
    k = len(p)
    used = [False] * (n + 1)
    r = 0
    for i, s in enumerate(p):
        smaller = sum(1 for t in range(1, s) if not used[t])
        r += smaller * falling(n - i - 1, k - i - 1)
        used[s] = True
    return r


def unrank(r: int, n: int, k: int) -> KPerm:
    """Inverse of :func:`rank`."""
    total = num_kperms(n, k)
    if not 0 <= r < total:
        raise ParameterError(f"rank {r} out of range 0..{total - 1} for P({n},{k})")
    free = list(range(1, n + 1))
    out = []
    for i in range(k):
        block = falling(n - i - 1, k - i - 1)
        j, r = divmod(r, block)
        out.append(free.pop(j))
    return tuple(out)


@dataclass(frozen=True)
class CycleCheck:
    """Verdict of :func:`is_universal_cycle`; truthy iff the cycle is universal."""

    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_universal_cycle(c: Sequence[int], n: int, k: int) -> CycleCheck:
    """Check that every k-permutation of [n] occurs exactly once as a cyclic window of ``c``.

    Never raises on bad input; the first violation found is described in
    ``reason``. Windows are reported by their starting position (0-based).
    """
    try:
        expected = num_kperms(n, k)
    except ParameterError as exc:
        return CycleCheck(False, str(exc))
    if k < 1:
        return CycleCheck(False, "k must be >= 1")
    c = tuple(c)
    if len(c) != expected:
        return CycleCheck(False, f"wrong length: {len(c)} != {expected}")
    m = len(c)
    seen = {}
    for i in range(m):
        w = tuple(c[(i + j) % m] for j in range(k))
        bad = [s for s in w if not isinstance(s, int) or not 1 <= s <= n]
        if bad:
            return CycleCheck(False, f"window {w} at position {i} has symbol {bad[0]!r} outside 1..{n}")
        if len(set(w)) != k:
            return CycleCheck(False, f"window {w} at position {i} has a duplicate symbol")
        if w in seen:
            return CycleCheck(False, f"window {w} repeated at positions {seen[w]}/{i}")
        seen[w] = i
    return CycleCheck(True)


def canonical_rotation(c: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least rotation of ``c``."""
    c = tuple(c)
    if not c:
        raise PermutationError("empty sequence has no rotation")
    return min(c[i:] + c[:i] for i in range(len(c)))


def format_cycle(c: Sequence[int]) -> str:
    return " ".join(str(s) for s in c)


def parse_cycle(line: str) -> Tuple[int, ...]:
    """Parse one line of the cycle text format (space separated decimal symbols)."""
    try:
        return tuple(int(tok) for tok in line.split())
    except ValueError as exc:
        raise PermutationError(f"not a cycle line: {line!r}") from exc
