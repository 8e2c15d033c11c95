"""Immutable bitmask digraphs and vertex-weight helpers.

Vertices are dense integers 0..n-1.  A vertex set is a plain Python int
used as a bitmask (bit v set <=> v in the set), so all neighborhood
algebra is word-parallel big-int arithmetic.  Digraphs are simple (at
most one arc between any two vertices, in either direction) and
loopless; both invariants are enforced at construction and preserved by
every operation.  Digraph instances are immutable and safe to share.
"""

from __future__ import annotations

from .errors import BadParameter, DuplicateOrAntiparallel, LoopArc, OutOfRange
from .rational import RZERO


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices) -> int:
    """Bitmask of an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    """Sorted list of the vertices in a bitmask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def iter_bits(mask: int):
    """Yield the set bits of a mask in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def popcount(mask: int) -> int:
    return mask.bit_count()


class Digraph:
    """A simple loopless digraph with bitmask adjacency.

    out_adj[v] / in_adj[v] are the open out-/in-neighborhoods of v as
    bitmasks.  Construction validates every arc: loops raise LoopArc,
    repeats or antiparallel pairs raise DuplicateOrAntiparallel, and
    out-of-range endpoints raise OutOfRange.
    """

    __slots__ = ("n", "out_adj", "in_adj", "full_mask")

    def __init__(self, n: int, arcs=()):
        if n < 0:
            raise BadParameter(f"vertex count must be nonnegative, got {n}")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"arc ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise LoopArc(f"loop arc ({u}, {v})")
            if (out[u] >> v) & 1 or (out[v] >> u) & 1:
                raise DuplicateOrAntiparallel(
                    f"arc ({u}, {v}) repeats or reverses an existing arc"
                )
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.out_adj = tuple(out)
        self.in_adj = tuple(inn)
        self.full_mask = (1 << n) - 1

    @classmethod
    def _from_masks(cls, n: int, out_adj, in_adj) -> "Digraph":
        # Trusted fast path for operations that preserve the invariants.
        g = object.__new__(cls)
        g.n = n
        g.out_adj = tuple(out_adj)
        g.in_adj = tuple(in_adj)
        g.full_mask = (1 << n) - 1
        return g

    # -- per-vertex neighborhoods -------------------------------------

    def out_mask(self, v: int) -> int:
        """Open out-neighborhood N+(v)."""
        return self.out_adj[v]

    def in_mask(self, v: int) -> int:
        """Open in-neighborhood N-(v)."""
        return self.in_adj[v]

    def closed_out_mask(self, v: int) -> int:
        """Closed out-neighborhood N+[v] = N+(v) with v itself."""
        return self.out_adj[v] | (1 << v)

    def closed_in_mask(self, v: int) -> int:
        """Closed in-neighborhood N-[v]."""
        return self.in_adj[v] | (1 << v)

    def und_mask(self, v: int) -> int:
        """Neighbors of v in the underlying undirected graph."""
        return self.out_adj[v] | self.in_adj[v]

    def indep_mask(self, v: int) -> int:
        """Vertices independent of v (no arc to or from v, v excluded)."""
        return self.full_mask & ~(self.und_mask(v) | (1 << v))

    # -- set neighborhoods --------------------------------------------

    def out_closed(self, members: int) -> int:
        """Closed out-neighborhood N+[S] of a vertex-set bitmask."""
        self._check_set(members)
        m = members
        s = members
        while s:
            b = s & -s
            m |= self.out_adj[b.bit_length() - 1]
            s ^= b
        return m

    def in_closed(self, members: int) -> int:
        """Closed in-neighborhood N-[S] of a vertex-set bitmask."""
        self._check_set(members)
        m = members
        s = members
        while s:
            b = s & -s
            m |= self.in_adj[b.bit_length() - 1]
            s ^= b
        return m

    def _check_set(self, members: int):
        if members < 0 or members & ~self.full_mask:
            raise OutOfRange(f"vertex set {members:#x} not within 0..{self.n - 1}")

    # -- structure ------------------------------------------------------

    def arcs(self):
        """All arcs (u, v) in lexicographic order."""
        for u in range(self.n):
            m = self.out_adj[u]
            while m:
                b = m & -m
                yield u, b.bit_length() - 1
                m ^= b

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_adj)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out_adj[u] >> v) & 1)

    def max_out_degree(self) -> int:
        return max((m.bit_count() for m in self.out_adj), default=0)

    def induced_subgraph(self, members: int) -> tuple["Digraph", tuple[int, ...]]:
        """Subgraph on a vertex-set bitmask, plus the relabeling map.

        Returns (H, verts) where verts[i] is the original label of the
        subgraph's vertex i; arcs of H are exactly the arcs of this
        graph with both ends in the set.
        """
        self._check_set(members)
        verts = vertices_of(members)
        index = {u: i for i, u in enumerate(verts)}
        out = []
        inn = []
        for u in verts:
            om = self.out_adj[u] & members
            im = self.in_adj[u] & members
            out.append(mask_of(index[w] for w in iter_bits(om)))
            inn.append(mask_of(index[w] for w in iter_bits(im)))
        return Digraph._from_masks(len(verts), out, inn), tuple(verts)

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.out_adj == other.out_adj
        )

    def __hash__(self):
        return hash((self.n, self.out_adj))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


def weight_sum(weights, members: int):
    """Exact sum of weights[v] over the vertices of a bitmask."""
    total = RZERO
    while members:
        b = members & -members
        total += weights[b.bit_length() - 1]
        members ^= b
    return total


def check_weights(weights, n: int):
    """Validate a vertex weighting: length n, every entry nonnegative."""
    if len(weights) != n:
        raise BadParameter(f"expected {n} weights, got {len(weights)}")
    for v, w in enumerate(weights):
        if w < 0:
            raise BadParameter(f"negative weight {w} at vertex {v}")
