"""Pure-Python centrality kernels; fallback when the compiled core is absent.

Must stay operation-for-operation identical to ``_kernels_c.pyx`` so both
backends produce bitwise-equal results.
"""

BACKEND_NAME = "python"


def unweighted_values(adj, nodes):
    """Energy drop d^2 + d + 2*sum(neighbor degrees) for each node in ``nodes``."""
    out = {}
    for v in nodes:
        nbrs = adj[v]
        loc = len(nbrs)
        nei = 0
        for j in nbrs:
            nei += len(adj[j])
        out[v] = loc * loc + loc + 2 * nei
    return out


def weighted_values(adj, strength, nodes):
    """Energy drop s^2 - sub + 2*cw for each node, on weighted degrees."""
    out = {}
    for v in nodes:
        loc = strength[v]
        cw = 0.0
        sub = 0.0
        for j, w in adj[v].items():
            s = strength[j]
            rem = s - w
            cw += w * w
            sub += rem * rem - s * s
        out[v] = loc * loc - sub + 2.0 * cw
    return out
