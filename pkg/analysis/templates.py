"""Labelled Coxeter diagrams of the finite and irreducible affine types.

Diagram nodes are integers; every edge has a 'label' (3 for a plain edge).
Rank 1 and rank 2 are decided directly by the classifiers and have no entry here.
"""
from functools import lru_cache

import networkx as nx

from utils.graph_utils import label_signature


def _path(labels):
    graph = nx.Graph()
    graph.add_node(0)
    for i, label in enumerate(labels):
        graph.add_edge(i, i + 1, label=label)
    return graph


def _cycle(n):
    graph = nx.cycle_graph(n)
    nx.set_edge_attributes(graph, 3, "label")
    return graph


def _star(arms):
    """A centre node 0 with simply-laced arms of the given lengths."""
    graph = nx.Graph()
    graph.add_node(0)
    node = 1
    for length in arms:
        previous = 0
        for _ in range(length):
            graph.add_edge(previous, node, label=3)
            previous = node
            node += 1
    return graph


def _forked(n, tail_label=None):
    """Two leaves on node 2, a path 2..n-1, optionally closing with tail_label."""
    graph = nx.Graph()
    graph.add_edge(0, 2, label=3)
    graph.add_edge(1, 2, label=3)
    for i in range(2, n - 1):
        graph.add_edge(i, i + 1, label=3)
    if tail_label is not None:
        graph.edges[n - 2, n - 1]["label"] = tail_label
    return graph


def _double_fork(n):
    """Forks at both ends of a path (the D-tilde shape on n nodes)."""
    graph = nx.Graph()
    graph.add_edge(0, 2, label=3)
    graph.add_edge(1, 2, label=3)
    for i in range(2, n - 3):
        graph.add_edge(i, i + 1, label=3)
    graph.add_edge(n - 3, n - 2, label=3)
    graph.add_edge(n - 3, n - 1, label=3)
    return graph


@lru_cache(maxsize=None)
def finite_templates(n):
    """Connected finite-type diagrams on n >= 3 nodes as (name, graph) pairs."""
    templates = [(f"A{n}", _path([3] * (n - 1))), (f"B{n}", _path([3] * (n - 2) + [4]))]
    if n >= 4:
        templates.append((f"D{n}", _star((n - 3, 1, 1))))
    exceptional = {
        3: [("H3", _path([5, 3]))],
        4: [("F4", _path([3, 4, 3])), ("H4", _path([5, 3, 3]))],
        6: [("E6", _star((2, 2, 1)))],
        7: [("E7", _star((3, 2, 1)))],
        8: [("E8", _star((4, 2, 1)))],
    }
    templates.extend(exceptional.get(n, []))
    return tuple(templates)


@lru_cache(maxsize=None)
def affine_templates(n):
    """Irreducible affine diagrams on n >= 3 nodes (rank n) as (name, graph) pairs."""
    rank = n - 1
    templates = [(f"~A{rank}", _cycle(n)), (f"~C{rank}", _path([4] + [3] * (n - 3) + [4]))]
    if n >= 4:
        templates.append((f"~B{rank}", _forked(n, tail_label=4)))
    if n >= 5:
        templates.append((f"~D{rank}", _double_fork(n)))
    exceptional = {
        3: [("~G2", _path([3, 6]))],
        5: [("~F4", _path([3, 3, 4, 3]))],
        7: [("~E6", _star((2, 2, 2)))],
        8: [("~E7", _star((3, 3, 1)))],
        9: [("~E8", _star((5, 2, 1)))],
    }
    templates.extend(exceptional.get(n, []))
    return tuple(templates)


@lru_cache(maxsize=None)
def _signatures(kind, n):
    source = finite_templates(n) if kind == "finite" else affine_templates(n)
    return {label_signature(graph) for _, graph in source}


def candidate_templates(kind, graph):
    """Templates of the given kind that can possibly match graph."""
    n = graph.number_of_nodes()
    if label_signature(graph) not in _signatures(kind, n):
        return ()
    return finite_templates(n) if kind == "finite" else affine_templates(n)
