"""Exact chromatic invariants: chi, criticality, b-fold and fractional chromatic numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graphs import Graph, delete_vertex, maximal_independent_sets
from .lp import solve_cover_lp

__all__ = [
    "Coloring",
    "FractionalCertificate",
    "chromatic_number",
    "is_critical",
    "b_fold_chromatic",
    "fractional_chromatic",
    "fractional_value",
    "classify_chi_f_window",
    "coloring_is_proper",
    "certificate_is_valid",
]

# Multiples of den(chi_f) tried when searching for a b with chi_b = b * chi_f.
_ACHIEVING_CAP = 8


@dataclass(frozen=True)
class Coloring:
    """A b-fold coloring: every vertex holds exactly b colors below colors_used."""

    b: int
    colors_used: int
    assignment: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class FractionalCertificate:
    """Optimal fractional cover: positive weights on maximal independent sets."""

    weights: tuple[tuple[frozenset[int], Fraction], ...]
    total: Fraction


def _adj_masks(G: Graph) -> list[int]:
    return [sum(1 << u for u in G.adj[v]) for v in range(G.n)]


def _twin_prev(masks: list[int]) -> list[int]:
    """Chain vertices with equal closed neighborhoods (mutually adjacent twins)."""
    prev = [-1] * len(masks)
    last: dict[int, int] = {}
    for v in range(len(masks)):
        key = masks[v] | (1 << v)
        if key in last:
            prev[v] = last[key]
        last[key] = v
    return prev


def _greedy_clique(masks: list[int]) -> list[int]:
    """Deterministic greedy clique; only used as a chromatic lower bound."""
    clique: list[int] = []
    cand = (1 << len(masks)) - 1
    while cand:
        best, best_deg = -1, -1
        mm = cand
        while mm:
            bit = mm & -mm
            mm ^= bit
            v = bit.bit_length() - 1
            d = (masks[v] & cand).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        clique.append(best)
        cand &= masks[best]
    return clique


def _k_color(masks: list[int], k: int) -> list[int] | None:
    """One k-coloring as a color list, or None.

    Backtracking in saturation order (fewest available colors first, then
    most uncolored neighbors, then lowest index), trying the lowest
    available color first.  Two symmetry breaks keep the search exact but
    small: a brand-new color may only be the next unused one, and vertices
    with equal closed neighborhoods take strictly increasing colors.
    """
    n = len(masks)
    if n == 0:
        return []
    if k <= 0:
        return None
    twin = _twin_prev(masks)
    full = (1 << k) - 1
    avail = [full] * n
    n_avail = [k] * n
    unc_deg = [m.bit_count() for m in masks]
    color = [-1] * n
    max_used = -1

    def search(remaining: int) -> bool:
        nonlocal max_used
        if remaining == 0:
            return True
        v, v_key = -1, None
        for u in range(n):
            if color[u] >= 0:
                continue
            t = twin[u]
            if t >= 0 and color[t] < 0:
                continue
            key = (n_avail[u], -unc_deg[u], u)
            if v_key is None or key < v_key:
                v, v_key = u, key
        cand = avail[v] & ((1 << min(k, max_used + 2)) - 1)
        if twin[v] >= 0:
            cand &= ~((1 << (color[twin[v]] + 1)) - 1)
        while cand:
            bit = cand & -cand
            cand ^= bit
            c = bit.bit_length() - 1
            old_max = max_used
            if c > max_used:
                max_used = c
            color[v] = c
            touched: list[int] = []
            removed: list[int] = []
            wiped = False
            mm = masks[v]
            while mm:
                nb = mm & -mm
                mm ^= nb
                u = nb.bit_length() - 1
                if color[u] < 0:
                    touched.append(u)
                    unc_deg[u] -= 1
                    if avail[u] & bit:
                        avail[u] ^= bit
                        n_avail[u] -= 1
                        removed.append(u)
                        if n_avail[u] == 0:
                            wiped = True
            if not wiped and search(remaining - 1):
                return True
            for u in removed:
                avail[u] |= bit
                n_avail[u] += 1
            for u in touched:
                unc_deg[u] += 1
            color[v] = -1
            max_used = old_max
        return False

    return list(color) if search(n) else None


def _component_lists(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for v0 in range(G.n):
        if seen[v0]:
            continue
        seen[v0] = True
        stack, comp = [v0], [v0]
        while stack:
            v = stack.pop()
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
                    comp.append(u)
        comps.append(sorted(comp))
    return comps


def _colorable(G: Graph, k: int) -> list[int] | None:
    """k-colorability with one witness, solved per connected component."""
    if G.n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * G.n
    for comp in _component_lists(G):
        pos = {v: i for i, v in enumerate(comp)}
        masks = [
            sum(1 << pos[u] for u in G.adj[v] if u in pos) for v in comp
        ]
        sub = _k_color(masks, k)
        if sub is None:
            return None
        for v, c in zip(comp, sub):
            color[v] = c
    return color


@lru_cache(maxsize=None)
def chromatic_number(G: Graph) -> tuple[int, Coloring | None]:
    """Exact chromatic number with a deterministic witness.

    Iterative deepening on k starting from a greedy clique lower bound;
    each k is decided by the exact backtracking in :func:`_k_color`.
    """
    if G.n == 0:
        return 0, None
    lower = max(1, len(_greedy_clique(_adj_masks(G))))
    for k in range(lower, G.n + 1):
        colors = _colorable(G, k)
        if colors is not None:
            witness = Coloring(
                b=1,
                colors_used=k,
                assignment=tuple(frozenset([c]) for c in colors),
            )
            return k, witness
    raise RuntimeError("unreachable: n colors always suffice")


def is_critical(G: Graph) -> tuple[bool, int, list[int]]:
    """Whether every single-vertex deletion drops the chromatic number.

    Returns (critical, chi, failing vertices); a vertex fails when deleting
    it leaves the chromatic number unchanged.
    """
    if G.n == 0:
        raise ValueError("criticality needs at least one vertex")
    chi, _ = chromatic_number(G)
    failing = []
    for v in range(G.n):
        H = delete_vertex(G, v)
        if _colorable(H, chi - 1) is None:
            failing.append(v)
    return not failing, chi, failing


def _ceil_frac(num: int, den: int) -> int:
    return -(-num // den)


def _greedy_multicover(sets, member, b: int, n: int) -> list[int]:
    deficits = [b] * n
    chosen: list[int] = []
    while max(deficits) > 0:
        best, best_cov = -1, -1
        for i, s in enumerate(sets):
            cov = sum(1 for v in s if deficits[v] > 0)
            if cov > best_cov:
                best, best_cov = i, cov
        chosen.append(best)
        for v in sets[best]:
            if deficits[v]:
                deficits[v] -= 1
    return chosen


def _multicover_decision(sets, member, b, n, budget, alpha):
    """A multiset of <= budget independent sets covering every vertex b times, or None."""
    fail: set[tuple] = set()

    def dfs(deficits: tuple[int, ...], k: int):
        total = sum(deficits)
        if total == 0:
            return []
        if k == 0 or max(deficits) > k or total > k * alpha:
            return None
        key = (deficits, k)
        if key in fail:
            return None
        v = min(
            (u for u in range(n) if deficits[u] > 0),
            key=lambda u: (len(member[u]), u),
        )
        for i in member[v]:
            nd = list(deficits)
            for u in sets[i]:
                if nd[u]:
                    nd[u] -= 1
            found = dfs(tuple(nd), k - 1)
            if found is not None:
                return [i] + found
        fail.add(key)
        return None

    return dfs(tuple([b] * n), budget)


def _coloring_from_sets(G: Graph, b: int, chosen, sets) -> Coloring:
    chosen = sorted(chosen)
    assignment = []
    for v in range(G.n):
        cols = [ci for ci, si in enumerate(chosen) if v in sets[si]][:b]
        if len(cols) < b:
            raise RuntimeError("multicover witness fails to cover a vertex")
        assignment.append(frozenset(cols))
    return Coloring(b=b, colors_used=len(chosen), assignment=tuple(assignment))


# LP instances stay small only when the column list does; beyond this many
# maximal independent sets the combinatorial lower bounds stand alone.
_LP_COLUMN_LIMIT = 64


@lru_cache(maxsize=None)
def _cover_lp(G: Graph) -> tuple[Fraction, tuple[Fraction, ...]]:
    sets = maximal_independent_sets(G)
    value, weights = solve_cover_lp(G.n, sets)
    return value, tuple(weights)


def b_fold_chromatic(G: Graph, b: int) -> tuple[int, Coloring]:
    """Exact b-fold chromatic number with a witness.

    Minimizes the size of a multiset of maximal independent sets covering
    every vertex at least b times (any optimal b-fold coloring can be put
    in that form), by branch and bound between combinatorial lower bounds
    and a deterministic greedy incumbent.
    """
    if G.n < 1:
        raise ValueError("b-fold chromatic number needs at least one vertex")
    if b < 1:
        raise ValueError("fold count must be >= 1")
    sets = maximal_independent_sets(G)
    member = [[i for i, s in enumerate(sets) if v in s] for v in range(G.n)]
    alpha = max(len(s) for s in sets)
    lb = max(b, _ceil_frac(b * G.n, alpha))
    lb = max(lb, b * len(_greedy_clique(_adj_masks(G))))
    if len(sets) <= _LP_COLUMN_LIMIT:
        value, _ = _cover_lp(G)
        lb = max(lb, _ceil_frac(b * value.numerator, value.denominator))
    chosen = _greedy_multicover(sets, member, b, G.n)
    for d in range(lb, len(chosen)):
        sel = _multicover_decision(sets, member, b, G.n, d, alpha)
        if sel is not None:
            chosen = sel
            break
    return len(chosen), _coloring_from_sets(G, b, chosen, sets)


def fractional_chromatic(G: Graph) -> tuple[Fraction, FractionalCertificate, int]:
    """Exact fractional chromatic number, optimal certificate, and an achieving b.

    The value comes from the exact rational covering LP over all maximal
    independent sets.  The returned b is the smallest multiple of the
    value's denominator with chi_b = b * chi_f (such a b always exists;
    no minimality over all b is claimed).
    """
    value, cert = fractional_value(G)
    den = value.denominator
    for mult in range(1, _ACHIEVING_CAP + 1):
        bb = den * mult
        achieved, _ = b_fold_chromatic(G, bb)
        if achieved == value * bb:
            return value, cert, bb
    raise RuntimeError("no multiple of den(chi_f) below the cap achieves the ratio")


def fractional_value(G: Graph) -> tuple[Fraction, FractionalCertificate]:
    """Exact fractional chromatic number and certificate, skipping the b search.

    Same value and certificate as fractional_chromatic, without materializing
    a fold count that attains the ratio (which can be expensive).
    """
    if G.n == 0:
        raise ValueError("fractional chromatic number needs at least one vertex")
    sets = maximal_independent_sets(G)
    value, weights = _cover_lp(G)
    cert = FractionalCertificate(
        weights=tuple((s, w) for s, w in zip(sets, weights) if w),
        total=value,
    )
    return value, cert


def classify_chi_f_window(G: Graph) -> bool:
    """True when chi - 1 < chi_f <= chi (exact rational comparison)."""
    if G.n == 0:
        raise ValueError("window classification needs at least one vertex")
    chi, _ = chromatic_number(G)
    value, _ = _cover_lp(G)
    return chi - 1 < value <= chi


def coloring_is_proper(G: Graph, col: Coloring) -> bool:
    """Validate a b-fold coloring against its graph."""
    if len(col.assignment) != G.n or col.b < 1 or col.colors_used < 0:
        return False
    for cs in col.assignment:
        if len(cs) != col.b:
            return False
        if any(c < 0 or c >= col.colors_used for c in cs):
            return False
    return all(not col.assignment[u] & col.assignment[v] for u, v in G.edges())


def certificate_is_valid(G: Graph, cert: FractionalCertificate) -> bool:
    """Validate a fractional cover certificate: independence, coverage, total."""
    if sum((w for _, w in cert.weights), Fraction(0)) != cert.total:
        return False
    if any(w <= 0 for _, w in cert.weights):
        return False
    for s, _ in cert.weights:
        if any(u in G.adj[v] for u in s for v in s):
            return False
    for v in range(G.n):
        if sum((w for s, w in cert.weights if v in s), Fraction(0)) < 1:
            return False
    return True
