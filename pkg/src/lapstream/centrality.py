"""Batch Laplacian centrality, Laplacian energy, and the node-deletion oracle.

A node's Laplacian centrality is the drop in graph Laplacian energy caused
by deleting the node and its incident edges. The per-node closed forms are

    unweighted:  d^2 + d + 2 * sum(degrees of neighbors)
    weighted:    s^2 - sub + 2 * cw      (s = weighted degree)

with ``cw`` and ``sub`` as computed by :func:`cw`. Values are returned
non-normalized; divide by the graph energy via :func:`normalize` to get
values in (0, 1] (guaranteed only for non-negative weights).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Literal

from lapstream import kernels
from lapstream.errors import UnknownNodeError, ZeroEnergyError
from lapstream.graph import Graph

Variant = Literal["unweighted", "weighted"]

THREADS_ENV = "LAPSTREAM_THREADS"


@dataclass
class CentralityMap:
    """Non-normalized centrality per node, plus how many were computed.

    ``computed_count`` is the number of per-node evaluations the producing
    call actually performed: the full node count for batch calls, the
    affected-set size for incremental ones.
    """

    values: dict[int, float]
    computed_count: int


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def evaluate_nodes(g: Graph, nodes: Iterable[int], variant: Variant) -> dict[int, float]:
    """Run the per-node kernel over ``nodes`` on the current graph state.

    Honors LAPSTREAM_THREADS (default 1): the node list is split into
    contiguous chunks evaluated on a thread pool and merged in chunk
    order, so the result is identical to the sequential evaluation.
    """
    adj = g.adjacency()
    if variant == "weighted":
        strength = g.strengths()
        run = lambda chunk: kernels.weighted_values(adj, strength, chunk)
    elif variant == "unweighted":
        run = lambda chunk: kernels.unweighted_values(adj, chunk)
    else:
        raise ValueError(f"unknown variant {variant!r}")

    node_list = list(nodes)
    workers = _worker_count()
    if workers <= 1 or len(node_list) < 2 * workers:
        return run(node_list)
    size = -(-len(node_list) // workers)
    chunks = [node_list[i : i + size] for i in range(0, len(node_list), size)]
    out: dict[int, float] = {}
    with ThreadPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(run, chunks):
            out.update(part)
    return out


def lap_cent_unweighted(g: Graph) -> CentralityMap:
    """Batch centrality of every node, ignoring weights."""
    return CentralityMap(evaluate_nodes(g, g.nodes(), "unweighted"), g.num_nodes)


def lap_cent_weighted(g: Graph) -> CentralityMap:
    """Batch centrality of every node on weighted degrees."""
    return CentralityMap(evaluate_nodes(g, g.nodes(), "weighted"), g.num_nodes)


def lap_cent(g: Graph, variant: Variant) -> CentralityMap:
    if variant == "weighted":
        return lap_cent_weighted(g)
    if variant == "unweighted":
        return lap_cent_unweighted(g)
    raise ValueError(f"unknown variant {variant!r}")


def cw(g: Graph, v: int, strengths: dict[int, float] | None = None) -> tuple[float, float]:
    """Centrality weight terms of node ``v`` for the weighted formula.

    Returns ``(cw, sub)`` where ``cw = sum(w^2)`` over incident edges and
    ``sub = sum((s_j - w)^2 - s_j^2)`` over neighbors j. ``strengths``
    must cover all neighbors of v; defaults to the graph's own table.
    """
    if strengths is None:
        strengths = g.strengths()
    total_cw = 0.0
    total_sub = 0.0
    for j, w in g.neighbors(v):
        s = strengths[j]
        rem = s - w
        total_cw += w * w
        total_sub += rem * rem - s * s
    return total_cw, total_sub


def laplacian_energy(g: Graph, variant: Variant) -> float:
    """Graph Laplacian energy (sum of squared Laplacian eigenvalues).

    Closed forms: sum(d^2 + d) unweighted; sum(s^2) + 2*sum(w^2 over
    edges) weighted, i.e. the trace of the squared Laplacian. The two
    agree on unit-weight graphs.
    """
    adj = g.adjacency()
    if variant == "unweighted":
        total = 0
        for row in adj.values():
            d = len(row)
            total += d * d + d
        return total
    if variant == "weighted":
        strength = g.strengths()
        total = 0.0
        for v, row in adj.items():
            s = strength[v]
            total += s * s
            for w in row.values():
                total += w * w
        return total
    raise ValueError(f"unknown variant {variant!r}")


def normalize(cmap: CentralityMap, energy: float) -> CentralityMap:
    """Divide every value by the graph energy; values land in (0, 1] for
    connected graphs with non-negative weights."""
    if energy == 0:
        raise ZeroEnergyError("graph has zero Laplacian energy (no edges)")
    return CentralityMap(
        {v: value / energy for v, value in cmap.values.items()},
        cmap.computed_count,
    )


def delta_energy_oracle(g: Graph, v: int, variant: Variant) -> float:
    """Centrality of ``v`` computed the definitional way: delete the node,
    re-evaluate the energy, return the drop.

    Independent of the per-node closed forms; exists to validate them.
    """
    if not g.has_node(v):
        raise UnknownNodeError(f"node {v} not in graph")
    reduced = g.copy()
    # isolating v == deleting v: a degree-0 node contributes nothing to energy
    for j, _ in list(reduced.neighbors(v)):
        reduced.remove_edge(v, j)
    return laplacian_energy(g, variant) - laplacian_energy(reduced, variant)


def write_centralities(cmap: CentralityMap, stream) -> None:
    """Dump ``node,centrality`` lines, ascending node id, 12 significant digits."""
    for v in sorted(cmap.values):
        stream.write(f"{v},{cmap.values[v]:.12g}\n")
