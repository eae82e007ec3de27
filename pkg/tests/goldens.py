"""Golden codes shipped in tests/goldens and helpers to load them."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from crcodes.cr_engine import Code
from crcodes.data import load_matrix
from crcodes.graph_core import Graph, complement, syndrome_graph

GOLDEN_DIR = Path(__file__).parent / "goldens"


@dataclass(frozen=True)
class Golden:
    path: Path
    matrix: str
    complement: bool
    array: str
    method: str
    seed: int

    def graph(self) -> Graph:
        g = syndrome_graph(load_matrix(self.matrix))
        return complement(g) if self.complement else g

    def code(self, g: Graph | None = None) -> Code:
        return Code.from_text(g or self.graph(), self.path.read_text())


def goldens() -> list[Golden]:
    out = []
    for p in sorted(GOLDEN_DIR.glob("*.C")):
        head = dict(tok.split("=", 1) for tok in p.read_text().splitlines()[0].lstrip("#").split() if "=" in tok)
        out.append(Golden(p, head["matrix"], head["complement"] == "yes", head["array"], head["method"], int(head["seed"])))
    return out


# heuristic outcomes per (matrix, quotient, seed): moves used, code size, induced components
HEURISTIC = {
    ("cayley81_n15_a", "((2,28),(8,22))", 0): (2003859, 18, "1xcycle(12), 1xcycle(6)"),
    ("cayley81_n15_a", "((2,28),(8,22))", 1): (45134, 18, "1xcycle(12), 1xcycle(6)"),
    ("cayley81_n15_b", "((2,28),(8,22))", 0): (4009170, 18, "1xcycle(6), 3xcycle(4)"),
    ("cayley81_n15_b", "((2,28),(8,22))", 1): (1013089, 18, "1xcycle(6), 3xcycle(4)"),
    ("cayley81_n19", "((3,35),(10,28))", 0): (502697, 18, "1xcomponent(6), 3xclique(4)"),
    ("cayley81_n19", "((3,35),(10,28))", 1): (4930, 18, "1xcomponent(6), 3xclique(4)"),
    ("cayley81_n19", "((13,25),(20,18))", 0): (8126, 36, "1xcomponent(36)"),
    ("cayley81_n19", "((13,25),(20,18))", 1): (506899, 36, "1xcomponent(36)"),
}
