"""Dictionary between irreducible components of cover-ideal powers and
critical induced subgraphs of graph expansions, plus the derived checks:
persistence of associated primes and the critical-expansion search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .coloring import chromatic_number, is_critical, b_fold_chromatic
from .graphs import (
    Graph,
    expand,
    induced_subgraph,
    maximal_independent_sets,
    power_expansion,
)
from .ideals import (
    IrreducibleIdeal,
    associated_primes,
    contains_in_power,
    cover_ideal,
    irreducible_decomposition,
    power,
)

__all__ = [
    "ComponentCorrespondence",
    "ConjectureWitness",
    "PersistenceFinding",
    "SweepReport",
    "component_to_Y",
    "verify_correspondence",
    "converse_correspondence",
    "persistence_check",
    "persistence_sweep",
    "conjecture_search",
    "probe_expansion",
    "technical_lemma_check",
]


@dataclass(frozen=True)
class ComponentCorrespondence:
    """One irreducible component of J^s with its shadow set and criticality data."""

    component: IrreducibleIdeal
    s: int
    Y: frozenset[int]
    chi: int
    verified_critical: bool


@dataclass(frozen=True)
class ConjectureWitness:
    """Result of probing one expansion candidate W."""

    W: frozenset[int]
    is_maximal_independent: bool
    expanded_chi: int
    expanded_critical: bool


def component_to_Y(component: IrreducibleIdeal, s: int) -> frozenset[int]:
    """Shadow set in the s-th expansion matching a component of J^s.

    A variable with exponent a contributes its first s - a + 1 shadows;
    shadow (i, j) sits at index i*s + (j - 1).
    """
    if s < 1:
        raise ValueError("expansion order must be >= 1")
    for v, e in component.exps:
        if not 1 <= e <= s:
            raise ValueError(f"exponent {e} at variable {v} outside 1..{s}")
    return frozenset(
        i * s + j for i, a in component.exps for j in range(s - a + 1)
    )


def verify_correspondence(G: Graph, s: int) -> list[ComponentCorrespondence]:
    """Check every component of J(G)^s against its critical-subgraph reading.

    For each irreducible component, the induced subgraph of the s-th
    expansion on its shadow set must be critically (s+1)-chromatic.
    """
    Gs = power_expansion(G, s)
    decomp = irreducible_decomposition(power(cover_ideal(G), s))
    out = []
    for comp in decomp:
        Y = component_to_Y(comp, s)
        H = induced_subgraph(Gs, Y)
        critical, chi, _ = is_critical(H)
        out.append(
            ComponentCorrespondence(
                component=comp,
                s=s,
                Y=Y,
                chi=chi,
                verified_critical=critical and chi == s + 1,
            )
        )
    return out


def converse_correspondence(G: Graph, s: int) -> list[IrreducibleIdeal]:
    """Critical canonical shadow sets whose component is absent from J(G)^s.

    Enumerates every candidate exponent vector (support with exponents in
    1..s), keeps those whose shadow set induces a critically (s+1)-chromatic
    subgraph of the s-th expansion, and returns the ones missing from the
    decomposition.  An empty list is the expected outcome.
    """
    Gs = power_expansion(G, s)
    decomp = set(irreducible_decomposition(power(cover_ideal(G), s)))
    missing = []
    for r in range(1, G.n + 1):
        for support in combinations(range(G.n), r):
            for exps in product(range(1, s + 1), repeat=r):
                size = sum(s - a + 1 for a in exps)
                if size <= s:
                    continue
                comp = IrreducibleIdeal(G.n, tuple(zip(support, exps)))
                H = induced_subgraph(Gs, component_to_Y(comp, s))
                chi, _ = chromatic_number(H)
                if chi != s + 1:
                    continue
                critical, _, _ = is_critical(H)
                if critical and comp not in decomp:
                    missing.append(comp)
    return missing


def persistence_check(G: Graph, s: int) -> tuple[bool, list[frozenset[int]]]:
    """Whether every associated prime of J^s persists into J^(s+1)."""
    if s < 1:
        raise ValueError("power must be >= 1")
    J = cover_ideal(G)
    ass_s = associated_primes(power(J, s))
    ass_next = set(associated_primes(power(J, s + 1)))
    missing = [p for p in ass_s if p not in ass_next]
    return not missing, missing


@dataclass(frozen=True)
class PersistenceFinding:
    """A persistence failure: primes of J^s absent from J^(s+1)."""

    graph_index: int
    s: int
    missing: tuple[frozenset[int], ...]
    ass_s: tuple[frozenset[int], ...]
    ass_next: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class SweepReport:
    graphs_checked: int
    s_max: int
    checks_run: int
    findings: tuple[PersistenceFinding, ...]


def persistence_sweep(graphs, s_max: int) -> SweepReport:
    """Run persistence_check for s = 1..s_max over a family of graphs."""
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    findings = []
    checks = 0
    graphs = list(graphs)
    for gi, G in enumerate(graphs):
        J = cover_ideal(G)
        for s in range(1, s_max + 1):
            checks += 1
            holds, missing = persistence_check(G, s)
            if not holds:
                findings.append(
                    PersistenceFinding(
                        graph_index=gi,
                        s=s,
                        missing=tuple(missing),
                        ass_s=tuple(associated_primes(power(J, s))),
                        ass_next=tuple(associated_primes(power(J, s + 1))),
                    )
                )
    return SweepReport(
        graphs_checked=len(graphs),
        s_max=s_max,
        checks_run=checks,
        findings=tuple(findings),
    )


def probe_expansion(G: Graph, W) -> ConjectureWitness:
    """Expand G at W and report the chromatic number and criticality.

    When G is critical and W is a maximal independent set whose expansion
    reaches chi(G) + 1, the expansion must come out critical; hitting the
    contrary is an internal error, not a finding.
    """
    W = frozenset(W)
    H = expand(G, W)
    h_chi, _ = chromatic_number(H)
    h_critical, _, _ = is_critical(H)
    maximal = W in set(maximal_independent_sets(G))
    g_chi, _ = chromatic_number(G)
    if maximal and h_chi == g_chi + 1 and not h_critical:
        g_critical, _, _ = is_critical(G)
        if g_critical:
            raise RuntimeError(
                "maximal-independent expansion reached chi+1 but is not critical"
            )
    return ConjectureWitness(
        W=W,
        is_maximal_independent=maximal,
        expanded_chi=h_chi,
        expanded_critical=h_critical,
    )


def conjecture_search(G: Graph, mode: str = "maximal_independent_only"):
    """Search for W whose expansion is critically (chi+1)-chromatic.

    Candidates run through the maximal independent sets in canonical order;
    mode "all_subsets" continues with every remaining vertex subset ordered
    by size then lexicographically.  Returns (found, witness, exhausted).
    """
    if mode not in ("maximal_independent_only", "all_subsets"):
        raise ValueError(f"unknown search mode {mode!r}")
    critical, chi, _ = is_critical(G)
    if not critical:
        raise ValueError("conjecture search expects a critical graph")
    target = chi + 1
    mis = maximal_independent_sets(G)
    candidates = list(mis)
    if mode == "all_subsets":
        seen = set(mis)
        candidates += [
            W
            for r in range(G.n + 1)
            for c in combinations(range(G.n), r)
            if (W := frozenset(c)) not in seen
        ]
    mis_set = set(mis)
    for W in candidates:
        H = expand(G, W)
        h_chi, _ = chromatic_number(H)
        if h_chi != target:
            continue
        h_critical, _, _ = is_critical(H)
        if h_critical:
            witness = ConjectureWitness(
                W=W,
                is_maximal_independent=W in mis_set,
                expanded_chi=h_chi,
                expanded_critical=True,
            )
            return True, witness, False
    return False, None, True


def technical_lemma_check(G: Graph, W, b: int) -> bool:
    """Membership identity linking expansion colorings to ideal powers.

    With G' the expansion of G at W and d its b-fold chromatic number, the
    monomial (x_0...x_{n-1})^(d-b) divided by the W-product to the b-th
    power must lie in J(G)^d.  This is the algebraic step that the
    conjecture check rests on in the independent-set case.
    """
    if b < 1:
        raise ValueError("fold count must be >= 1")
    W = frozenset(W)
    J = cover_ideal(G)
    H = expand(G, W)
    d, _ = b_fold_chromatic(H, b)
    exps = tuple(d - b - (b if v in W else 0) for v in range(G.n))
    if any(e < 0 for e in exps):
        raise RuntimeError("negative exponent in the technical-lemma monomial")
    return contains_in_power(J, d, exps)
