"""Vector partition counts over two rank-n weight multisets.

``kostant_p`` counts expressions of a weight as a nonnegative integer
combination of the type C positive roots e_i - e_j, e_i + e_j (i < j) and
2 e_i. ``kostant_p_exotic`` counts over the same multiset with the long
roots 2 e_i replaced by e_i. Counts are exact Python ints (arbitrary
precision).

Algorithm: recursion over a fixed summand order, memoized on
(summand index, residual). Every summand has nonnegative prefix sums, so a
residual with a negative prefix sum is unreachable and prunes the branch;
the same fact bounds the per-summand coefficient, so the recursion
terminates. The memo is shared per (rank, multiset) pair, guarded by a
lock, and clears itself when it outgrows the configured cap.
"""

from __future__ import annotations

import itertools
import threading

from .rootdata import check_weight, root_data

_cache_cap = 1 << 19
_registry = {}
_registry_lock = threading.Lock()


def configure_cache(max_entries: int) -> None:
    """Cap the number of memo entries kept per counter (eviction: clear)."""
    global _cache_cap
    if max_entries < 1:
        max_entries = 1
    _cache_cap = max_entries
    with _registry_lock:
        for counter in _registry.values():
            counter.cap = max_entries


def _prefix_ok(vec) -> bool:
    running = 0
    for c in vec:
        running += c
        if running < 0:
            return False
    return True


class _Counter:
    __slots__ = ("summands", "memo", "lock", "cap")

    def __init__(self, summands):
        self.summands = summands
        self.memo = {}
        self.lock = threading.Lock()
        self.cap = _cache_cap

    def count(self, target) -> int:
        if not _prefix_ok(target):
            return 0
        return self._count(0, tuple(target))

    def _count(self, k: int, residual) -> int:
        if not any(residual):
            return 1
        if k == len(self.summands):
            return 0
        key = (k, residual)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        total = 0
        s = self.summands[k]
        r = residual
        while True:
            total += self._count(k + 1, r)
            r = tuple(a - b for a, b in zip(r, s))
            if not _prefix_ok(r):
                break
        with self.lock:
            if len(self.memo) >= self.cap:
                self.memo.clear()
            self.memo[key] = total
        return total


def _counter(n: int, exotic: bool) -> _Counter:
    key = (n, exotic)
    with _registry_lock:
        counter = _registry.get(key)
        if counter is None:
            data = root_data(n)
            summands = data.exotic_weights if exotic else data.positive_roots
            counter = _Counter(summands)
            _registry[key] = counter
    return counter


def kostant_p(mu) -> int:
    """Partition count of mu over the type C positive roots."""
    mu = check_weight(mu)
    return _counter(len(mu), exotic=False).count(mu)


def kostant_p_exotic(mu) -> int:
    """Partition count of mu with the long roots 2 e_i replaced by e_i."""
    mu = check_weight(mu)
    return _counter(len(mu), exotic=True).count(mu)


def subset_identity_check(mu) -> bool:
    """Check p_exotic(mu) = sum over subsets S of p(mu - sum_{i in S} e_i).

    The identity holds because the two generating products differ by the
    factor prod_i (1 + e^{e_i}). Exposed so the CLI can demonstrate it.
    """
    mu = check_weight(mu)
    n = len(mu)
    total = 0
    for picks in itertools.product((0, 1), repeat=n):
        total += kostant_p(tuple(c - p for c, p in zip(mu, picks)))
    return total == kostant_p_exotic(mu)
