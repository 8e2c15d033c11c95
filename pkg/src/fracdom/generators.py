"""Instance generators: named constructions and seeded random digraphs.

Randomness comes from SplitMix64, a fixed platform-independent 64-bit
generator: the k-th word of a stream is ``mix64(seed + (k+1)*GOLDEN)``
where GOLDEN is the 64-bit golden-ratio increment and mix64 the usual
finalizer.  Every random decision is addressed by an explicit stream
index (the lexicographic pair index for pair orientations), so a given
(arguments, seed) always yields the identical instance, independent of
platform or evaluation order.
"""

from __future__ import annotations

from .digraph import Digraph
from .errors import BadParameter

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_word(seed: int, index: int) -> int:
    """index-th 64-bit word of the stream addressed by seed."""
    return mix64((seed + (index + 1) * GOLDEN) & MASK64)


def derive_seed(seed: int, index: int) -> int:
    """Independent sub-seed for trial/batch member `index`."""
    return stream_word(seed, index)


def rotational_tournament(r: int) -> Digraph:
    """Tournament on 2r-1 vertices where each vertex beats the next r-1.

    Vertex i has out-neighbors {(i+k) mod (2r-1) : 1 <= k <= r-1}, so
    every in-degree and out-degree equals r-1 (the tournament is
    Eulerian).  Raises BadParameter for r < 2.
    """
    if r < 2:
        raise BadParameter(f"rotational tournament needs r >= 2, got {r}")
    n = 2 * r - 1
    out = [0] * n
    inn = [0] * n
    for i in range(n):
        for k in range(1, r):
            j = (i + k) % n
            out[i] |= 1 << j
            inn[j] |= 1 << i
    return Digraph._from_masks(n, out, inn)


def directed_cycle(n: int) -> Digraph:
    """Cyclically oriented n-cycle: arcs i -> (i+1) mod n.  Needs n >= 3."""
    if n < 3:
        raise BadParameter(f"directed cycle needs n >= 3, got {n}")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def random_tournament(n: int, seed: int) -> Digraph:
    """Uniform random tournament: each pair oriented by one stream bit."""
    if n < 1:
        raise BadParameter(f"tournament needs n >= 1, got {n}")
    out = [0] * n
    inn = [0] * n
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            if stream_word(seed, t) & 1:
                out[i] |= 1 << j
                inn[j] |= 1 << i
            else:
                out[j] |= 1 << i
                inn[i] |= 1 << j
            t += 1
    return Digraph._from_masks(n, out, inn)


def random_digraph(n: int, arc_prob, seed: int) -> Digraph:
    """Random simple digraph: each pair gets an arc with probability
    arc_prob (an exact rational in [0,1]), then a fair orientation.

    One 64-bit word per pair: the top 63 bits decide presence by the
    exact comparison (word >> 1) * den < num << 63, the low bit decides
    orientation.
    """
    if n < 0:
        raise BadParameter(f"vertex count must be nonnegative, got {n}")
    num, den = int(arc_prob.numerator), int(arc_prob.denominator)
    if num < 0 or num > den:
        raise BadParameter(f"arc probability {arc_prob} outside [0, 1]")
    threshold_num = num << 63
    out = [0] * n
    inn = [0] * n
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            w = stream_word(seed, t)
            t += 1
            if (w >> 1) * den < threshold_num:
                if w & 1:
                    out[i] |= 1 << j
                    inn[j] |= 1 << i
                else:
                    out[j] |= 1 << i
                    inn[i] |= 1 << j
    return Digraph._from_masks(n, out, inn)


def disjoint_union(parts) -> Digraph:
    """Vertex-relabeled disjoint union; part k is shifted by the sizes
    of parts 0..k-1 and no arcs run between parts."""
    out = []
    inn = []
    offset = 0
    for g in parts:
        out.extend(m << offset for m in g.out_adj)
        inn.extend(m << offset for m in g.in_adj)
        offset += g.n
    return Digraph._from_masks(offset, out, inn)
