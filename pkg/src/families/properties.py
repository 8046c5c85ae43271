"""
Structural and spectral properties shared by every member of Γ(n, d).

    P1  diameter is d
    P2  domination number is (d + 1) / 3
    P3  n - d + 1 pendant vertices
    P4  every two pendant vertices are at distance 2 mod 3
    P5  1 is a Laplacian eigenvalue with multiplicity n - d
"""

import logging
from dataclasses import dataclass
from itertools import combinations

from src.domination.dominating import tree_domination_number
from src.families.specs import GammaSpec
from src.graph.core import Graph, bfs_distances, pendant_vertices, tree_diameter
from src.spectral.inertia import inertia_at

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PropertyReport:
    """Measured values plus the five property verdicts."""

    n: int
    diameter: int
    gamma: int
    pendant_count: int
    pendant_distance_residues: frozenset[int]
    one_multiplicity: int
    p1: bool
    p2: bool
    p3: bool
    p4: bool
    p5: bool

    @property
    def all_hold(self) -> bool:
        return self.p1 and self.p2 and self.p3 and self.p4 and self.p5

    def failed(self) -> list[str]:
        verdicts = {"P1": self.p1, "P2": self.p2, "P3": self.p3, "P4": self.p4, "P5": self.p5}
        return [name for name, ok in verdicts.items() if not ok]


def check_properties(tree: Graph, spec: GammaSpec | None = None) -> PropertyReport:
    """
    Measure a tree against P1 to P5.

    P1 compares the diameter with spec.d when a spec is given; without one it
    only asks that the diameter be 2 mod 3. P2 and P5 use the literal
    formulas, so they fail (rather than raise) when (d + 1) / 3 is not an
    integer.
    """
    d = tree_diameter(tree)
    n = tree.n
    gamma = tree_domination_number(tree)
    pendants = sorted(pendant_vertices(tree))

    residues: set[int] = set()
    for u, v in combinations(pendants, 2):
        dist = bfs_distances(tree, u)[v]
        assert dist is not None
        residues.add(dist % 3)

    one_multiplicity = inertia_at(tree, 1).equal

    return PropertyReport(
        n=n,
        diameter=d,
        gamma=gamma,
        pendant_count=len(pendants),
        pendant_distance_residues=frozenset(residues),
        one_multiplicity=one_multiplicity,
        p1=d == spec.d if spec is not None else d % 3 == 2,
        p2=3 * gamma == d + 1,
        p3=len(pendants) == n - d + 1,
        p4=residues <= {2},
        p5=one_multiplicity == n - d,
    )
