"""Synthetic preferential-attachment graphs and evolving streams.

Used by the benchmark suite to produce desk-scale workloads with a known
shape: a scale-free base graph and per-step churn that is a small fraction
of the edge count. Fully deterministic under a seed.
"""

from __future__ import annotations

import random

from lapstream.graph import Edge, Graph
from lapstream.incremental import EdgeDelta
from lapstream.ingest import SnapshotStream


def preferential_attachment_graph(num_nodes: int, attach: int, seed: int = 0) -> Graph:
    """Barabasi-Albert style graph: each new node links to ``attach``
    distinct existing nodes chosen proportionally to degree."""
    if num_nodes < attach + 1:
        raise ValueError("need num_nodes > attach")
    rng = random.Random(seed)
    g = Graph()
    # seed clique keeps early attachment well-defined
    for u in range(attach + 1):
        for v in range(u + 1, attach + 1):
            g.add_edge(u, v)
    endpoints = [u for e in g.edges() for u in (e.u, e.v)]
    for new in range(attach + 1, num_nodes):
        targets: set[int] = set()
        while len(targets) < attach:
            targets.add(rng.choice(endpoints))
        for t in targets:
            g.add_edge(new, t)
            endpoints.append(new)
            endpoints.append(t)
    return g


def churn_stream(
    num_nodes: int,
    attach: int,
    steps: int,
    adds_per_step: int,
    removes_per_step: int,
    seed: int = 0,
    weighted: bool = False,
) -> SnapshotStream:
    """Evolving stream over a preferential-attachment base graph.

    Each delta removes ``removes_per_step`` uniformly random existing
    edges and adds ``adds_per_step`` new edges between uniformly random
    node pairs (uniform, not preferential: edge-uniform removal already
    biases touched endpoints toward hubs).
    """
    rng = random.Random(seed)
    g = preferential_attachment_graph(num_nodes, attach, seed=seed)
    if weighted:
        reweighted = Graph()
        for e in g.edges():
            reweighted.add_edge(e.u, e.v, float(rng.randint(1, 5)))
        g = reweighted
    initial = g.copy()

    deltas: list[EdgeDelta] = []
    for _ in range(steps):
        edge_list = list(g.edges())
        removes: list[tuple[int, int]] = []
        picked: set[tuple[int, int]] = set()
        while len(removes) < removes_per_step and len(picked) < len(edge_list):
            e = edge_list[rng.randrange(len(edge_list))]
            pair = (e.u, e.v)
            if pair in picked:
                continue
            picked.add(pair)
            removes.append(pair)
        adds: list[Edge] = []
        added: set[tuple[int, int]] = set()
        while len(adds) < adds_per_step:
            u = rng.randrange(num_nodes)
            v = rng.randrange(num_nodes)
            if u == v:
                continue
            pair = (u, v) if u < v else (v, u)
            # only brand-new edges: keeps adds and removes disjoint, so the
            # apply order (adds first) cannot interact with this step's removes
            if pair in added or g.has_edge(u, v):
                continue
            added.add(pair)
            w = float(rng.randint(1, 5)) if weighted else 1.0
            adds.append(Edge(pair[0], pair[1], w))
        delta = EdgeDelta(adds=adds, removes=removes)
        deltas.append(delta)
        for u, v in removes:
            g.remove_edge(u, v)
        for e in adds:
            g.add_edge(e.u, e.v, e.weight)
    labels = [str(i) for i in range(steps + 1)]
    return SnapshotStream(initial, deltas, labels)
