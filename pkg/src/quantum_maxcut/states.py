"""Product and tensor-product-of-few-qubit candidate states and their energies.

All evaluators are exact closed forms; the state-vector oracle is only used
in tests to cross-check them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import (
    WeightedGraph,
    match_forest_decompose,
    two_color_forest,
    spanning_tree,
)
from .sdp import GramSolution, rank3_round


def product_energy(g: WeightedGraph, bloch) -> float:
    """Energy of the product state with one unit Bloch vector per vertex:
    sum over edges of (w/2)(1 - v_u . v_v)."""
    bloch = np.asarray(bloch, dtype=float)
    if bloch.shape != (g.n, 3):
        raise ValueError(f"expected {g.n} Bloch vectors in R^3")
    norms = np.linalg.norm(bloch, axis=1)
    if np.any(np.abs(norms - 1.0) > 1e-8):
        raise ValueError("Bloch vectors must be unit length")
    total = 0.0
    for u, v, w in g.edges:
        total += 0.5 * w * (1.0 - float(bloch[u] @ bloch[v]))
    return total


def cut_value(g: WeightedGraph, bits) -> float:
    """Total weight of edges cut by the bit string; equals product_energy
    with Bloch vectors +-z."""
    if len(bits) != g.n:
        raise ValueError("bit string length must equal vertex count")
    return float(sum(w for u, v, w in g.edges if bits[u] != bits[v]))


def tree_coloring_state(g: WeightedGraph) -> tuple[tuple[int, ...], float]:
    """2-coloring of a spanning tree; cuts all |V|-1 tree edges."""
    tree = spanning_tree(g)
    bits = two_color_forest(g, tree)
    return bits, cut_value(g, bits)


@dataclass(frozen=True)
class PairProductState:
    """Singlets on a partial matching plus a computational basis bit per
    unmatched vertex."""

    pairs: tuple[tuple[int, int], ...]
    bits: dict[int, int]  # unmatched vertex -> bit

    def __post_init__(self):
        seen = set()
        for a, b in self.pairs:
            if a == b or a in seen or b in seen:
                raise ValueError("pairs must be vertex-disjoint")
            seen.update((a, b))
        if seen & set(self.bits):
            raise ValueError("a vertex cannot be both paired and assigned a bit")

    def covered(self) -> set[int]:
        return {x for p in self.pairs for x in p} | set(self.bits)


def _check_cover(g, state):
    if state.covered() != set(range(g.n)):
        raise ValueError("pairs and bits must cover every vertex exactly once")


def pair_product_energy(g: WeightedGraph, state: PairProductState) -> float:
    """Exact energy of a pair-product state.

    Per edge of weight w: a singlet pair contributes 2w; an edge touching a
    paired vertex (but not itself a pair) contributes w/2, because the
    singlet's maximally mixed marginal kills every Pauli cross-term; an edge
    between unmatched vertices contributes w if the bits differ, else 0.
    """
    _check_cover(g, state)
    pair_set = {(min(a, b), max(a, b)) for a, b in state.pairs}
    matched = {x for p in state.pairs for x in p}
    total = 0.0
    for u, v, w in g.edges:
        if (u, v) in pair_set:
            total += 2.0 * w
        elif u in matched or v in matched:
            total += 0.5 * w
        elif state.bits[u] != state.bits[v]:
            total += w
    return total


def match_singlet_state(g: WeightedGraph) -> tuple[PairProductState, float]:
    """Singlets on the doubly-maximal matching, bits elsewhere by local search.

    The bits are chosen by flip-while-improving on the subgraph induced by
    the unmatched vertices, so they cut at least half of its weight and the
    returned value is at least (3/2) * matching weight + W/2, deterministically.
    """
    decomp = match_forest_decompose(g)
    pairs = tuple((u, v) for u, v, _ in decomp.matching)
    unmatched = list(decomp.unmatched)
    uset = set(unmatched)
    adj = {v: [(u, w) for u, w in g.adjacency[v] if u in uset] for v in unmatched}
    bits = {v: 0 for v in unmatched}
    improved = True
    while improved:
        improved = False
        for v in unmatched:
            cut_now = sum(w for u, w in adj[v] if bits[u] != bits[v])
            cut_flip = sum(w for u, w in adj[v] if bits[u] == bits[v])
            if cut_flip > cut_now:
                bits[v] = 1 - bits[v]
                improved = True
    state = PairProductState(pairs=pairs, bits=bits)
    return state, pair_product_energy(g, state)


def product_statevector(bloch) -> np.ndarray:
    """State vector of the product state given by unit Bloch vectors."""
    bloch = np.asarray(bloch, dtype=float)
    psi = np.ones(1, dtype=complex)
    for x, y, z in bloch:
        theta = np.arccos(np.clip(z, -1.0, 1.0))
        phi = np.arctan2(y, x)
        qubit = np.array([np.cos(theta / 2),
                          np.exp(1j * phi) * np.sin(theta / 2)])
        psi = np.kron(psi, qubit)
    return psi


def pair_product_statevector(g: WeightedGraph, state: PairProductState) -> np.ndarray:
    """State vector of a pair-product state (for oracle cross-checks)."""
    _check_cover(g, state)
    n = g.n
    t = np.zeros([2] * n, dtype=complex)
    pairs = state.pairs
    k = len(pairs)
    amp = (1.0 / np.sqrt(2.0)) ** k
    base = [0] * n
    for v, b in state.bits.items():
        base[v] = int(b)
    for m in range(2 ** k):
        bits = list(base)
        sign = 1.0
        for i, (a, b) in enumerate(pairs):
            lo, hi = min(a, b), max(a, b)
            if (m >> i) & 1:
                bits[lo], bits[hi] = 1, 0  # the -|10> branch of the singlet
                sign = -sign
            else:
                bits[lo], bits[hi] = 0, 1
        t[tuple(bits)] += sign * amp
    return t.reshape(-1)


def local_search_product_state(g: WeightedGraph, starts: int = 50, seed: int = 0,
                               max_sweeps: int = 2000,
                               tol: float = 1e-12) -> tuple[np.ndarray, float]:
    """Multi-start local search for the best product state.

    Each start runs coordinate ascent over Bloch vectors,
    v_i <- -normalize(sum_j w_ij v_j), until the sweep improvement drops
    below tol; its fixed points are exactly the first-order stationary
    points of the product energy on the sphere. Serves as the desk-scale
    ground truth for the best product-state value.
    """
    adj = np.zeros((g.n, g.n))
    for u, v, w in g.edges:
        adj[u, v] = w
        adj[v, u] = w
    rng = np.random.default_rng(seed)
    best_bloch, best_val = None, -1.0
    for _ in range(starts):
        vecs = rng.standard_normal((g.n, 3))
        vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
        prev = product_energy(g, vecs)
        for _ in range(max_sweeps):
            for i in range(g.n):
                s = -(adj[i] @ vecs)
                ns = np.linalg.norm(s)
                if ns > 0:
                    vecs[i] = s / ns
            val = product_energy(g, vecs)
            if abs(val - prev) <= tol * max(1.0, abs(val)):
                prev = val
                break
            prev = val
        if prev > best_val:
            best_val, best_bloch = prev, vecs.copy()
    return best_bloch, float(best_val)


@dataclass
class CandidateReport:
    """Best few-qubit candidate found for a graph; energy is recomputed from
    the payload by the closed-form evaluators."""

    label: str    # "tree-coloring" | "match-singlet" | "rank3-product"
    energy: float
    payload: dict
    candidates: dict[str, float]
    rounding_failed: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "energy": self.energy,
            "payload": self.payload,
            "candidates": self.candidates,
            "rounding_failed": self.rounding_failed,
        }


def best_few_qubit_candidate(g: WeightedGraph, sol: GramSolution,
                             seed: int = 0, attempts: int = 200) -> CandidateReport:
    """Maximum-energy candidate among the forest 2-coloring basis state, the
    matching/singlet state, and the rank-3 rounded product state.

    If the rank-3 rounding flags failure that candidate is skipped and the
    flag is propagated in the report.
    """
    decomp = match_forest_decompose(g)
    forest_bits = two_color_forest(g, decomp.forest)
    entries = []
    entries.append(("tree-coloring", cut_value(g, forest_bits),
                    {"bits": list(forest_bits)}))
    pair_state, pair_val = match_singlet_state(g)
    entries.append(("match-singlet", pair_val,
                    {"pairs": [list(p) for p in pair_state.pairs],
                     "bits": {str(k): v for k, v in pair_state.bits.items()}}))
    rounding = rank3_round(g, sol, seed=seed, attempts=attempts)
    if not rounding.failed:
        entries.append(("rank3-product", product_energy(g, rounding.bloch),
                        {"bloch": rounding.bloch.tolist()}))
    label, energy_val, payload = max(entries, key=lambda e: e[1])
    return CandidateReport(label=label, energy=float(energy_val), payload=payload,
                           candidates={lab: float(val) for lab, val, _ in entries},
                           rounding_failed=rounding.failed)
