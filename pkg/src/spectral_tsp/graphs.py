"""Graphs, Cayley constructions, and spectral Hamiltonicity screens.

A Hamiltonian cycle in a graph G is a zero-cost tour of the complement's
adjacency matrix and a cost-n tour of G's hop-distance matrix.  Feeding
either matrix to the symmetric tour bound therefore yields necessary
conditions:

    G Hamiltonian  =>  phi(complement adjacency) <= 0
    G traceable    =>  phi(complement adjacency) <= 1
    G Hamiltonian  =>  phi(hop distances) <= n        (G connected)

A bound value above the threshold certifies non-Hamiltonicity (verdict
"excluded"); at or below it the screen says nothing ("not_excluded").
Exact combinatorial oracles (backtracking, small n only) live here too so
the screens can be validated against ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import phi_symmetric, tsp_coefficients
from .errors import (
    Disconnected,
    IdentityInConnectionSet,
    InputFormatError,
    InvalidDimension,
    InvalidMatrix,
    NotInverseClosed,
    TooLarge,
)
from .linalg import DEFAULT_TOL

ORACLE_CAP = 12


@dataclass
class Graph:
    """Simple undirected graph stored as a dense 0/1 adjacency matrix."""

    adjacency: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.adjacency)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise InvalidMatrix(f"adjacency must be square, got shape {A.shape}")
        A = A.astype(np.int8)
        if not np.isin(A, (0, 1)).all():
            raise InvalidMatrix("adjacency entries must be 0 or 1")
        if not np.array_equal(A, A.T):
            raise InvalidMatrix("adjacency must be symmetric")
        if np.any(np.diagonal(A)):
            raise InvalidMatrix("self-loops are not allowed")
        self.adjacency = A

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2


def from_edges(n: int, edges) -> Graph:
    """Graph on vertices 0..n-1 with the given (u, v) edges."""
    if n < 1:
        raise InvalidDimension("graphs need at least one vertex")
    A = np.zeros((n, n), dtype=np.int8)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidDimension(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise InvalidMatrix(f"self-loop at vertex {u}")
        A[u, v] = A[v, u] = 1
    return Graph(A)


def complement(g: Graph) -> Graph:
    A = 1 - g.adjacency
    np.fill_diagonal(A, 0)
    return Graph(A)


def is_connected(g: Graph) -> bool:
    n = g.n
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in np.flatnonzero(g.adjacency[u]):
                if not seen[v]:
                    seen[v] = True
                    nxt.append(int(v))
        frontier = nxt
    return bool(seen.all())


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances by breadth-first search.  Raises Disconnected."""
    n = g.n
    D = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        D[s, s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in np.flatnonzero(g.adjacency[u]):
                    if D[s, v] < 0:
                        D[s, v] = d
                        nxt.append(int(v))
            frontier = nxt
    if (D < 0).any():
        raise Disconnected("hop distances are only defined for connected graphs")
    return D.astype(float)


def is_regular(g: Graph) -> bool:
    d = g.degrees
    return bool((d == d[0]).all())


def is_transmission_regular(g: Graph) -> bool:
    """True iff every vertex has the same total hop distance to all others."""
    t = distance_matrix(g).sum(axis=1)
    return bool(np.all(t == t[0]))


# ---------------------------------------------------------------------------
# stock graphs


def complete_graph(n: int) -> Graph:
    return Graph(np.ones((n, n), dtype=np.int8) - np.eye(n, dtype=np.int8))


def complete_bipartite(a: int, b: int) -> Graph:
    n = a + b
    A = np.zeros((n, n), dtype=np.int8)
    A[:a, a:] = 1
    A[a:, :a] = 1
    return Graph(A)


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidDimension("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def bow_tie() -> Graph:
    """Two triangles glued at a single vertex (5 vertices, 6 edges)."""
    return from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def disjoint_cliques(sizes) -> Graph:
    """Disjoint union of complete graphs.

    Accepts either an iterable of clique sizes or a single integer n,
    shorthand for two cliques of n vertices each.
    """
    if isinstance(sizes, (int, np.integer)):
        sizes = (sizes, sizes)
    sizes = tuple(int(s) for s in sizes)
    if not sizes or min(sizes) < 1:
        raise InvalidDimension("clique sizes must be positive")
    n = sum(sizes)
    A = np.zeros((n, n), dtype=np.int8)
    at = 0
    for s in sizes:
        A[at : at + s, at : at + s] = 1
        at += s
    np.fill_diagonal(A, 0)
    return Graph(A)


# ---------------------------------------------------------------------------
# groups and Cayley graphs


@dataclass
class GroupTable:
    """A finite group as an explicit multiplication table.

    mult[a, b] is the index of the product a o b; `inverse` and `identity`
    are stored alongside.  validate() checks the table really is a group
    (latin square, identity, inverses, associativity) in O(order^3).
    """

    mult: np.ndarray
    identity: int = 0
    inverse: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        M = np.asarray(self.mult, dtype=np.int64)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise InvalidMatrix("multiplication table must be square")
        self.mult = M
        if self.inverse is None:
            n = M.shape[0]
            inv = np.full(n, -1, dtype=np.int64)
            for a in range(n):
                hits = np.flatnonzero(M[a] == self.identity)
                if len(hits) != 1:
                    raise InvalidMatrix(f"element {a} has no unique inverse")
                inv[a] = hits[0]
            self.inverse = inv
        else:
            self.inverse = np.asarray(self.inverse, dtype=np.int64)

    @property
    def order(self) -> int:
        return self.mult.shape[0]

    def validate(self) -> None:
        M, n, e = self.mult, self.order, self.identity
        if M.min() < 0 or M.max() >= n:
            raise InvalidMatrix("table entries out of range")
        ident = np.arange(n)
        for axis, what in ((1, "row"), (0, "column")):
            if not np.all(np.sort(M, axis=axis) == (ident[None, :] if axis == 1 else ident[:, None])):
                raise InvalidMatrix(f"multiplication table {what}s are not permutations")
        if not (np.array_equal(M[e], ident) and np.array_equal(M[:, e], ident)):
            raise InvalidMatrix("identity element does not act as identity")
        if not (np.all(M[ident, self.inverse] == e) and np.all(M[self.inverse, ident] == e)):
            raise InvalidMatrix("inverse table is wrong")
        # associativity: (a o b) o c == a o (b o c), fully vectorized
        if not np.array_equal(M[M, :], M[:, M]):
            raise InvalidMatrix("multiplication table is not associative")


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise InvalidDimension("groups need at least one element")
    idx = np.arange(n)
    return GroupTable(mult=(idx[:, None] + idx[None, :]) % n, identity=0, inverse=(-idx) % n)


def dihedral_group(m: int) -> GroupTable:
    """Symmetries of a regular m-gon, order 2m.

    Element epsilon * m + k encodes s^epsilon r^k (rotation by k, optionally
    composed with a fixed reflection s), with s r s = r^-1.
    """
    if m < 1:
        raise InvalidDimension("dihedral groups need m >= 1")
    n = 2 * m
    M = np.zeros((n, n), dtype=np.int64)
    for g in range(n):
        e1, k1 = divmod(g, m)
        for h in range(n):
            e2, k2 = divmod(h, m)
            sign = -1 if e2 else 1
            M[g, h] = ((e1 ^ e2) * m) + (sign * k1 + k2) % m
    return GroupTable(mult=M, identity=0)


def cayley_graph(table: GroupTable, connection) -> Graph:
    """Cayley graph: g ~ h iff h o g^-1 lies in the connection set.

    The connection set must exclude the identity (no self-loops) and be
    closed under inversion (so adjacency is symmetric).
    """
    S = set(int(s) for s in connection)
    n = table.order
    for s in S:
        if not 0 <= s < n:
            raise InvalidDimension(f"connection element {s} out of range")
    if table.identity in S:
        raise IdentityInConnectionSet("connection set contains the identity")
    if any(int(table.inverse[s]) not in S for s in S):
        raise NotInverseClosed("connection set is not closed under inversion")
    A = np.zeros((n, n), dtype=np.int8)
    for g in range(n):
        for h in range(n):
            if g != h and int(table.mult[h, table.inverse[g]]) in S:
                A[g, h] = 1
    return Graph(A)


def dihedral_reflection_cayley(m: int) -> Graph:
    """Cayley graph of the dihedral group generated by all its reflections."""
    if m < 2:
        raise InvalidDimension("need m >= 2 for a nontrivial reflection set")
    return cayley_graph(dihedral_group(m), range(m, 2 * m))


# ---------------------------------------------------------------------------
# spectral screens


def complement_phi(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """The tour bound applied to the complement's adjacency matrix."""
    return phi_symmetric(complement(g).adjacency.astype(float), tol)


def complement_phi_regular(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Fast path for regular graphs: n plus the coefficient pairing against
    the adjacency spectrum of G with one copy of the valency removed."""
    if not is_regular(g):
        raise InvalidMatrix("fast path requires a regular graph")
    n = g.n
    lam = np.sort(np.linalg.eigvalsh(g.adjacency.astype(float)))[::-1]
    return float(n + tsp_coefficients(n) @ lam[1:])


def distance_phi(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """The tour bound applied to the hop-distance matrix (connected graphs)."""
    return phi_symmetric(distance_matrix(g), tol)


def distance_phi_transmission_regular(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Fast path for transmission-regular graphs: pair the coefficients
    (ascending) against the non-Perron distance eigenvalues (ascending),
    negated."""
    if not is_transmission_regular(g):
        raise InvalidMatrix("fast path requires a transmission-regular graph")
    D = distance_matrix(g)
    kappa = np.sort(np.linalg.eigvalsh(D))  # ascending; Perron value is last
    return float(-(tsp_coefficients(g.n) @ kappa[: g.n - 1]))


@dataclass
class ScreenResult:
    """Outcome of one spectral screen.

    verdict is "excluded" when the bound value exceeds the threshold by more
    than tol * max(1, |threshold|), else "not_excluded"; `saturated` flags
    values within that margin of the threshold (the tight families).
    """

    value: float
    threshold: float
    verdict: str
    saturated: bool


def _screen(value: float, threshold: float, tol: float) -> ScreenResult:
    margin = tol * max(1.0, abs(threshold))
    return ScreenResult(
        value=value,
        threshold=threshold,
        verdict="excluded" if value > threshold + margin else "not_excluded",
        saturated=abs(value - threshold) <= margin,
    )


def hamiltonian_screen(g: Graph, tol: float = DEFAULT_TOL) -> ScreenResult:
    """Excludes Hamiltonicity when the complement bound rises above 0."""
    if g.n < 3:
        raise InvalidDimension("Hamiltonian cycles need at least 3 vertices")
    return _screen(complement_phi(g, tol), 0.0, tol)


def traceable_screen(g: Graph, tol: float = DEFAULT_TOL) -> ScreenResult:
    """Excludes Hamiltonian paths when the complement bound rises above 1."""
    if g.n < 3:
        raise InvalidDimension("screen needs at least 3 vertices")
    return _screen(complement_phi(g, tol), 1.0, tol)


def distance_hamiltonian_screen(g: Graph, tol: float = DEFAULT_TOL) -> ScreenResult:
    """Excludes Hamiltonicity when the hop-distance bound rises above n."""
    if g.n < 3:
        raise InvalidDimension("Hamiltonian cycles need at least 3 vertices")
    return _screen(distance_phi(g, tol), float(g.n), tol)


# ---------------------------------------------------------------------------
# exact oracles (exponential; small n only)


def _adjacency_lists(g: Graph) -> list[list[int]]:
    return [list(map(int, np.flatnonzero(g.adjacency[u]))) for u in range(g.n)]


def is_hamiltonian(g: Graph) -> bool:
    """Exact Hamiltonian-cycle test by backtracking.  Capped at 12 vertices."""
    n = g.n
    if n > ORACLE_CAP:
        raise TooLarge(f"oracle is capped at {ORACLE_CAP} vertices, got {n}")
    if n < 3 or (g.degrees < 2).any() or not is_connected(g):
        return False
    adj = _adjacency_lists(g)

    def extend(u: int, visited: int, depth: int) -> bool:
        if depth == n:
            return g.adjacency[u, 0] == 1
        for v in adj[u]:
            if not visited & (1 << v):
                if extend(v, visited | (1 << v), depth + 1):
                    return True
        return False

    return extend(0, 1, 1)


def is_traceable(g: Graph) -> bool:
    """Exact Hamiltonian-path test by backtracking.  Capped at 12 vertices."""
    n = g.n
    if n > ORACLE_CAP:
        raise TooLarge(f"oracle is capped at {ORACLE_CAP} vertices, got {n}")
    if n == 1:
        return True
    if not is_connected(g):
        return False
    adj = _adjacency_lists(g)

    def extend(u: int, visited: int, depth: int) -> bool:
        if depth == n:
            return True
        for v in adj[u]:
            if not visited & (1 << v):
                if extend(v, visited | (1 << v), depth + 1):
                    return True
        return False

    return any(extend(s, 1 << s, 1) for s in range(n))


# ---------------------------------------------------------------------------
# text formats


def graph_from_text(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph from edge-list or adjacency-matrix text.

    Edge list: first non-comment line is the vertex count, each further line
    one "u v" pair, 0-based.  Adjacency matrix: n whitespace-separated rows
    of n entries each, 0/1.  Blank lines and '#' comments are ignored.  With
    fmt="auto", a single leading integer selects the edge-list form.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputFormatError("empty graph description")

    if fmt == "auto":
        fmt = "edges" if len(lines[0].split()) == 1 else "adjacency"

    if fmt == "edges":
        head = lines[0].split()
        if len(head) != 1 or not head[0].isdigit():
            raise InputFormatError(f"expected a vertex count on the first line, got {lines[0]!r}")
        n = int(head[0])
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise InputFormatError(f"expected 'u v', got {line!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise InputFormatError(f"non-integer edge endpoint in {line!r}") from None
        try:
            return from_edges(n, edges)
        except (InvalidDimension, InvalidMatrix) as exc:
            raise InputFormatError(str(exc)) from None

    if fmt == "adjacency":
        try:
            rows = [[int(tok) for tok in line.split()] for line in lines]
        except ValueError:
            raise InputFormatError("adjacency matrix entries must be integers") from None
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InputFormatError("adjacency matrix must be square")
        try:
            return Graph(np.array(rows, dtype=np.int8))
        except InvalidMatrix as exc:
            raise InputFormatError(str(exc)) from None

    raise InputFormatError(f"unknown graph format {fmt!r}")
