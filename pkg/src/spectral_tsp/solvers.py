"""Exact and heuristic tour solvers used to certify the bounds.

Two independent exact routes (exhaustive enumeration and dynamic
programming over subsets) plus a 2-opt local search for sizes where
exactness is out of reach.  Everything is deterministic: enumeration
breaks ties toward the lexicographically smallest city order, the DP by
first index, and the heuristic draws any tie-breaking from an explicit
seed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .bounds import check_distance_matrix
from .errors import InvalidTour, NotSymmetric, TooLarge
from .instances import SplitMix64
from .linalg import DEFAULT_TOL, is_symmetric

BRUTE_FORCE_CAP = 12
HELD_KARP_CAP = 20

_CHUNK = 40320  # permutations evaluated per numpy batch


@dataclass
class Tour:
    """A closed tour: visiting order (starting at city 0) and its length."""

    order: list[int]
    length: float


def tour_length(D, order) -> float:
    """Length of the closed tour visiting `order` and returning to its start."""
    A = check_distance_matrix(D)
    n = A.shape[0]
    p = np.asarray(order, dtype=int)
    if p.shape != (n,) or not np.array_equal(np.sort(p), np.arange(n)):
        raise InvalidTour(f"order must be a permutation of 0..{n - 1}")
    return float(A[p, np.roll(p, -1)].sum())


def _chunk_lengths(A: np.ndarray, tails: np.ndarray) -> np.ndarray:
    """Lengths of the closed tours 0 -> tails[i, 0] -> ... -> tails[i, -1] -> 0."""
    total = A[0, tails[:, 0]] + A[tails[:, -1], 0]
    for k in range(tails.shape[1] - 1):
        total = total + A[tails[:, k], tails[:, k + 1]]
    return total


def brute_force(D, tol: float = DEFAULT_TOL) -> Tour:
    """Exact minimum by enumerating every tour.  Hard cap at 12 cities.

    City 0 is pinned first so each cyclic order appears once; for symmetric
    distances each direction of traversal is enumerated once as well (the
    orientation with the smaller second city is kept).  Among tours of
    exactly minimal length the lexicographically smallest order wins, which
    makes the result reproducible bit for bit.
    """
    A = check_distance_matrix(D, tol)
    n = A.shape[0]
    if n > BRUTE_FORCE_CAP:
        raise TooLarge(f"brute force is capped at {BRUTE_FORCE_CAP} cities, got {n}")
    symmetric = is_symmetric(A, tol)

    best_len = np.inf
    best_tail: tuple[int, ...] | None = None
    perms = itertools.permutations(range(1, n))
    while True:
        if symmetric:
            batch = [p for p in itertools.islice(perms, 2 * _CHUNK) if p[0] < p[-1]]
        else:
            batch = list(itertools.islice(perms, _CHUNK))
        if not batch:
            break
        tails = np.array(batch, dtype=np.int8)
        lengths = _chunk_lengths(A, tails)
        low_len = float(lengths.min())
        if low_len > best_len:
            continue
        # exact ties resolve to the lexicographically smallest order
        low = min(batch[j] for j in np.flatnonzero(lengths == low_len))
        if low_len < best_len or best_tail is None or low < best_tail:
            best_len = low_len
            best_tail = low

    order = [0, *best_tail]
    return Tour(order=order, length=tour_length(A, order))


def held_karp(D, tol: float = DEFAULT_TOL) -> Tour:
    """Exact minimum by dynamic programming over subsets.  Cap at 20 cities.

    Standard table: for every subset of cities 1..n-1 and every last city j
    in it, the cheapest path from 0 through the subset ending at j.  Runs in
    O(2^n n^2) time and O(2^n n) memory; ties resolve to the smallest city
    index at every argmin, so the order returned is deterministic (though
    not necessarily the same one brute_force picks among equals).
    """
    A = check_distance_matrix(D, tol)
    n = A.shape[0]
    if n > HELD_KARP_CAP:
        raise TooLarge(f"held_karp is capped at {HELD_KARP_CAP} cities, got {n}")
    m = n - 1
    Dsub = A[1:, 1:]  # distances among cities 1..n-1
    dp = np.full((1 << m, m), np.inf)
    parent = np.full((1 << m, m), -1, dtype=np.int8)
    dp[[1 << j for j in range(m)], range(m)] = A[0, 1:]

    for mask in range(3, 1 << m):
        if mask & (mask - 1) == 0:
            continue  # single-city masks were seeded above
        members = []
        rest = mask
        while rest:
            low = rest & -rest
            members.append(low.bit_length() - 1)
            rest ^= low
        js = np.array(members)
        prev = dp[[mask ^ (1 << j) for j in members], :]
        cand = prev + Dsub.T[js]
        k = np.argmin(cand, axis=1)
        dp[mask, js] = cand[np.arange(len(js)), k]
        parent[mask, js] = k

    full = (1 << m) - 1
    closing = dp[full] + A[1:, 0]
    j = int(np.argmin(closing))
    length = float(closing[j])

    tail = []
    mask = full
    while j >= 0:
        tail.append(j + 1)
        j2 = int(parent[mask, j])
        mask ^= 1 << j
        j = j2
    order = [0, *reversed(tail)]
    return Tour(order=order, length=tour_length(A, order))


def _nearest_neighbour(A: np.ndarray, rng: SplitMix64) -> list[int]:
    n = A.shape[0]
    order = [0]
    unvisited = set(range(1, n))
    while unvisited:
        here = order[-1]
        cand = sorted(unvisited)
        dists = A[here, cand]
        lo = dists.min()
        near = [c for c, d in zip(cand, dists) if d == lo]
        pick = near[0] if len(near) == 1 else near[rng.next_u64() % len(near)]
        order.append(pick)
        unvisited.remove(pick)
    return order


def two_opt(D, seed: int = 0, tol: float = DEFAULT_TOL) -> Tour:
    """2-opt local search from a nearest-neighbour start (symmetric only).

    Starts at city 0, greedily visits the nearest unvisited city (exact
    distance ties are broken by a SplitMix64 draw from `seed`), then applies
    first-improvement segment reversals until no reversal shortens the tour
    by more than 1e-12.  The result is a local optimum: never longer than
    its greedy start, and of course never shorter than the true minimum.
    """
    A = check_distance_matrix(D, tol)
    if not is_symmetric(A, tol):
        raise NotSymmetric("2-opt reversals only preserve tour structure for symmetric distances")
    n = A.shape[0]
    rng = SplitMix64(seed)
    order = _nearest_neighbour(A, rng)

    improved = True
    while improved:
        improved = False
        for i in range(1, n - 1):
            a, b = order[i - 1], order[i]
            for j in range(i + 2, n + 1):
                c, d = order[j - 1], order[j % n]
                delta = A[a, c] + A[b, d] - A[a, b] - A[c, d]
                if delta < -1e-12:
                    order[i:j] = reversed(order[i:j])
                    improved = True
                    a, b = order[i - 1], order[i]
    return Tour(order=order, length=tour_length(A, order))
