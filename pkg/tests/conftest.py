"""Shared small graphs and helpers for the test suite."""

from __future__ import annotations

from mexlab.graphs import Graph, Pattern, complete, cycle


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


def bowtie() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def diamond() -> Graph:
    return complete(4).remove_edges([(0, 1)])


def paw() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def k4_minus_edge() -> Graph:
    return diamond()
