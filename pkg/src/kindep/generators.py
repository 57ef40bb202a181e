"""Deterministic hypergraph generators for corpus construction.

Random instances must reproduce bit-exactly across platforms and Python
versions for the same (n, m, s, seed), so nothing here touches
`random.Random` (whose sampling helpers are CPython implementation
details).  Instead we draw raw 64-bit words from NumPy's PCG64 stream,
reduce them by rejection sampling, pick m distinct subset *ranks* with
Floyd's algorithm, and unrank each into an s-subset in lexicographic
(combinatorial number system) order.  Every step is integer arithmetic
on a fixed word stream.
"""

from __future__ import annotations

from math import comb

import numpy as np

from kindep.hypergraph import Hypergraph, HypergraphError


class WordStream:
    """Buffered 64-bit words from a seeded PCG64 bit generator."""

    _CHUNK = 64

    def __init__(self, seed: int | np.random.SeedSequence) -> None:
        if not isinstance(seed, np.random.SeedSequence):
            seed = np.random.SeedSequence(seed)
        self._bits = np.random.PCG64(seed)
        self._buf: list[int] = []

    def next_word(self) -> int:
        if not self._buf:
            raw = self._bits.random_raw(self._CHUNK)
            self._buf = [int(w) for w in raw[::-1]]
        return self._buf.pop()

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection on the top of a
        power-of-two range; unbiased and stream-deterministic."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        if bound == 1:
            return 0
        span = bound.bit_length()
        words_needed = (span + 63) // 64
        limit = 1 << (64 * words_needed)
        cutoff = limit - limit % bound
        while True:
            value = 0
            for _ in range(words_needed):
                value = (value << 64) | self.next_word()
            if value < cutoff:
                return value % bound


def _unrank_subset(rank: int, n: int, s: int) -> tuple[int, ...]:
    """The `rank`-th s-subset of {0..n-1} in lexicographic order."""
    out = []
    x = 0
    for slot in range(s, 0, -1):
        # advance x until the block of subsets starting with x covers rank
        while True:
            block = comb(n - x - 1, slot - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def gen_complete(n: int, s: int) -> Hypergraph:
    """Complete s-uniform hypergraph: all C(n, s) subsets as edges."""
    if s > n:
        raise HypergraphError(f"uniformity {s} exceeds vertex count {n}")
    edges = tuple(_unrank_subset(r, n, s) for r in range(comb(n, s)))
    return Hypergraph(n, s, edges)


def gen_random_uniform(n: int, m: int, s: int, seed: int) -> Hypergraph:
    """m distinct s-subsets of {0..n-1}, uniform without replacement.

    Floyd's sampling draws m distinct ranks out of C(n, s) with exactly m
    randbelow calls, independent of how sparse or dense the instance is.
    """
    if s > n:
        raise HypergraphError(f"uniformity {s} exceeds vertex count {n}")
    total = comb(n, s)
    if m > total:
        raise HypergraphError(f"requested {m} edges but only {total} {s}-subsets exist")
    if m < 0:
        raise HypergraphError(f"edge count must be nonnegative, got {m}")
    stream = WordStream(seed)
    chosen: set[int] = set()
    for j in range(total - m, total):
        r = stream.randbelow(j + 1)
        chosen.add(r if r not in chosen else j)
    edges = tuple(_unrank_subset(r, n, s) for r in sorted(chosen))
    return Hypergraph(n, s, edges)
