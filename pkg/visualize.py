from __future__ import annotations
import warnings
import numpy
from graphviz import Digraph
import matplotlib.pyplot as plt
from incidence import IncidenceStructure
from perm_group import ConjugacyClass


def plot_sweep_margins(margins: "dict[str, list[tuple[int, int]]]", filename: str, view=False):
    """
    Plots the decimal digit margin of each bound inequality against s, as returned by
    arithmetic_bounds.sweep_margins.

    Parameters:
    - margins (dict[str, list[tuple[int, int]]]): Inequality name to (s, digits(rhs) - digits(lhs)) pairs.
    - filename (str): The filename (including path and extension) to save the plot.
    - view (bool): Flag to indicate whether to display the plot interactively. Default is False.

    Returns:
    - None
    """

    if plt is None:  # pragma: no cover
        warnings.warn(
            "This display is not available due to a missing optional dependency (matplotlib)")
        return

    for name, points in sorted(margins.items()):
        values = numpy.array(points)
        plt.plot(values[:, 0], values[:, 1], '-', label=name)

    plt.axhline(0, color='r', linestyle='-.')
    plt.title("Bound inequalities along t = s")
    plt.xlabel("s")
    plt.ylabel("Digit margin")
    plt.grid()
    plt.legend(loc="best")

    plt.savefig(filename)
    if view:  # pragma: no cover
        plt.show()

    plt.close()


def plot_class_sizes(classes: "list[ConjugacyClass]", filename: str, ylog=True, view=False):
    """
    Bar chart of a class equation: the size of each conjugacy class, with the order of its representative.

    Parameters:
    - classes (list[ConjugacyClass]): The classes, as returned by PermGroup.conjugacy_classes.
    - filename (str): The filename (including path and extension) to save the plot.
    - ylog (bool): Flag to indicate whether to use a logarithmic scale on the y-axis. Default is True.
    - view (bool): Flag to indicate whether to display the plot interactively. Default is False.

    Returns:
    - None
    """
    if plt is None:  # pragma: no cover
        warnings.warn(
            "This display is not available due to a missing optional dependency (matplotlib)")
        return

    sizes = [c.size for c in classes]
    labels = [str(c.representative.order()) for c in classes]

    plt.bar(range(len(sizes)), sizes, tick_label=labels)

    plt.xlabel("Element order")
    plt.ylabel("Class size")
    plt.title(f"Class equation ({sum(sizes)} elements)")
    if ylog:
        plt.gca().set_yscale('log')

    plt.savefig(filename)
    if view:  # pragma: no cover
        plt.show()

    plt.close()


def plot_incidence(S: IncidenceStructure, filename: str):
    """
    Visualizes the bipartite incidence graph of a small structure and saves it as an image file. Points are
    drawn on one rank and lines on the other.

    Parameters:
    - S (IncidenceStructure): The structure.
    - filename (str): The filename (including path and extension) to save the visualization.

    Returns:
    - None
    """

    dot = Digraph(format='png')
    dot.attr(dpi='300', concentrate='true', rankdir='LR')

    with dot.subgraph() as subgraph:
        subgraph.attr(rank='same')
        for p in range(S.point_count):
            subgraph.node(f"p{p}", label=str(p), shape='circle', style='filled', fillcolor='lightblue')

    with dot.subgraph() as subgraph:
        subgraph.attr(rank='same')
        for i in range(S.line_count):
            subgraph.node(f"l{i}", label=f"L{i}", shape='box', style='filled', fillcolor='lightpink')

    for i, line in enumerate(S.lines):
        for p in line:
            dot.edge(f"p{p}", f"l{i}", arrowhead='none')

    dot.render(filename, view=False)
