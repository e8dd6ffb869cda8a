"""Incremental Laplacian centrality: recompute only nodes a delta can touch.

A snapshot transition is an :class:`EdgeDelta` (edges to add, edges to
remove). Centrality is local: a node's value depends only on its own
degree/strength and its neighbors', so after a delta only the endpoints of
changed edges plus their first-order neighbors can change value. The
neighborhoods are gathered on the union graph (adds applied, removes not
yet), which is what catches nodes reachable only through a removed edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from lapstream.centrality import CentralityMap, Variant, evaluate_nodes, lap_cent
from lapstream.errors import DeltaError, LapstreamError, MissingEdgeError
from lapstream.graph import Edge, Graph


@dataclass
class EdgeDelta:
    """Edge additions and removals taking one snapshot to the next.

    Adds are upserts: re-adding an existing edge replaces its weight.
    An edge in both lists nets to removal (adds are applied first). No
    self-loops in adds; each pair at most once per list.
    """

    adds: list[Edge] = field(default_factory=list)
    removes: list[tuple[int, int]] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not self.adds and not self.removes

    @property
    def num_changes(self) -> int:
        return len(self.adds) + len(self.removes)


@dataclass
class AffectedSets:
    """Nodes a delta names (touched) and all nodes needing recomputation."""

    touched: set[int]
    recompute: set[int]


def apply_delta(g: Graph, delta: EdgeDelta) -> None:
    """Apply adds then removes to ``g``; raises on inconsistent removes.

    On error the graph may be partially mutated; callers treat that run
    as aborted.
    """
    for e in delta.adds:
        g.add_edge(e.u, e.v, e.weight)
    for u, v in delta.removes:
        g.remove_edge(u, v)


def affected_nodes(g: Graph, delta: EdgeDelta) -> AffectedSets:
    """Apply ``delta`` to ``g`` and return which nodes must be recomputed.

    touched: endpoints of every added or removed edge. recompute: touched
    plus their neighbors in the union graph (after adds, before removes).
    On return ``g`` reflects the full delta.
    """
    touched: set[int] = set()
    for e in delta.adds:
        g.add_edge(e.u, e.v, e.weight)
        touched.add(e.u)
        touched.add(e.v)
    for u, v in delta.removes:
        # checked up front so neighborhood gathering never hits unknown nodes
        if not g.has_edge(u, v):
            raise MissingEdgeError(f"cannot remove absent edge ({u}, {v})")
        touched.add(u)
        touched.add(v)

    adj = g.adjacency()
    recompute = set(touched)
    for x in touched:
        recompute.update(adj[x])

    for u, v in delta.removes:
        g.remove_edge(u, v)
    return AffectedSets(touched, recompute)


def _add_remove(
    g: Graph,
    delta: EdgeDelta,
    prev: CentralityMap,
    variant: Variant,
    in_place: bool,
) -> tuple[CentralityMap, int, Graph]:
    sets = affected_nodes(g, delta)
    values = prev.values if in_place else dict(prev.values)
    if sets.recompute:
        values.update(evaluate_nodes(g, sets.recompute, variant))
    cmap = CentralityMap(values, len(sets.recompute))
    return cmap, cmap.computed_count, g


def lap_cent_add_remove(
    g: Graph,
    delta: EdgeDelta,
    prev: CentralityMap,
    in_place: bool = False,
) -> tuple[CentralityMap, int, Graph]:
    """One unweighted incremental step.

    ``prev`` must be the batch-equivalent map of ``g`` before the delta.
    Returns the updated map (equal, node for node, to a full recomputation
    of the post-delta graph), the number of centralities recomputed, and
    the mutated graph. By default ``prev`` is left untouched so callers
    can keep per-step history; ``in_place=True`` updates it instead.
    """
    return _add_remove(g, delta, prev, "unweighted", in_place)


def lap_cent_weighted_add_remove(
    g: Graph,
    delta: EdgeDelta,
    prev: CentralityMap,
    in_place: bool = False,
) -> tuple[CentralityMap, int, Graph]:
    """One weighted incremental step; see :func:`lap_cent_add_remove`."""
    return _add_remove(g, delta, prev, "weighted", in_place)


def run_evolving(
    initial: Graph,
    deltas: Sequence[EdgeDelta] | Iterable[EdgeDelta],
    mode: str = "dynamic",
    variant: Variant = "unweighted",
    in_place: bool = False,
) -> list[CentralityMap]:
    """Drive a whole evolving run; ``initial`` is mutated in place.

    Step 0 is always a full computation on the initial graph. In dynamic
    mode each further step recomputes only the affected set; in batch
    mode the snapshot is materialized and fully recomputed. Both modes
    produce identical per-step maps. A delta that cannot be applied
    aborts with :class:`DeltaError` carrying the step index.

    With ``in_place=True`` every returned map shares one values dict, so
    only the final entry reflects a single consistent step; use the
    default copy-on-write mode when per-step history matters.
    """
    if mode not in ("batch", "dynamic"):
        raise ValueError(f"unknown mode {mode!r}")
    g = initial
    results = [lap_cent(g, variant)]
    for step, delta in enumerate(deltas, start=1):
        try:
            if mode == "dynamic":
                cmap, _, g = _add_remove(g, delta, results[-1], variant, in_place)
                results.append(cmap)
            else:
                apply_delta(g, delta)
                results.append(lap_cent(g, variant))
        except LapstreamError as exc:
            raise DeltaError(step, exc) from exc
    return results
