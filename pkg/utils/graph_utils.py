from collections import Counter

import networkx as nx
from networkx.algorithms import isomorphism

_label_match = isomorphism.categorical_edge_match("label", None)


def labelled_graph(vertices, labelled_edges):
    """Build a graph whose edges carry a 'label' attribute."""
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    for u, v, label in labelled_edges:
        graph.add_edge(u, v, label=label)
    return graph


def label_signature(graph):
    """Isomorphism invariant: sizes plus sorted (degree, label multiset) data."""
    labels = Counter(str(d.get("label")) for _, _, d in graph.edges(data=True))
    degrees = Counter(d for _, d in graph.degree())
    return (
        graph.number_of_nodes(),
        graph.number_of_edges(),
        tuple(sorted(labels.items())),
        tuple(sorted(degrees.items())),
    )


def are_isomorphic_labelled_graphs(first, second):
    """Exact labelled-graph isomorphism (VF2 with an edge-label match)."""
    if label_signature(first) != label_signature(second):
        return False
    return nx.is_isomorphic(first, second, edge_match=_label_match)


def labelled_isomorphisms(first, second):
    """Iterate vertex bijections first -> second preserving edges and labels."""
    if label_signature(first) != label_signature(second):
        return iter(())
    matcher = isomorphism.GraphMatcher(first, second, edge_match=_label_match)
    return matcher.isomorphisms_iter()


def ordered_components(graph, key):
    """Connected components as tuples sorted by key, listed in key order."""
    components = [tuple(sorted(c, key=key)) for c in nx.connected_components(graph)]
    return sorted(components, key=lambda c: key(c[0]))
