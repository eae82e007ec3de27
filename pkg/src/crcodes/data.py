"""Bundled check matrices and codes (the ``fixtures`` directory)."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .cr_engine import Code
from .gf_space import CheckMatrix
from .graph_core import Graph


@dataclass(frozen=True)
class Fixture:
    name: str
    path: Path
    description: str

    @property
    def kind(self) -> str:
        return "code" if self.path.suffix == ".C" else "matrix"


def fixture_dir() -> Path:
    return Path(str(resources.files("crcodes") / "fixtures"))


def _describe(path: Path) -> str:
    first = path.read_text().splitlines()[0]
    # "# q=3  description" -> "description"
    return first.lstrip("#").strip().split(None, 1)[-1] if first.startswith("#") else ""


def fixtures() -> dict[str, Fixture]:
    out = {}
    for p in sorted(fixture_dir().iterdir()):
        if p.suffix in (".H", ".C"):
            out[p.name] = Fixture(p.name, p, _describe(p))
    return out


def fixture_path(name: str) -> Path:
    """Path of a bundled file; ``name`` may omit the ``.H`` suffix."""
    d = fixture_dir()
    for cand in (name, name + ".H"):
        if (d / cand).is_file():
            return d / cand
    raise FileNotFoundError(f"no bundled fixture named {name!r}")


def resolve(path_or_name: str) -> Path:
    """A file path if it exists, otherwise a bundled fixture."""
    p = Path(path_or_name)
    if p.is_file():
        return p
    try:
        return fixture_path(p.name if p.parent.name == "fixtures" else path_or_name)
    except FileNotFoundError:
        raise FileNotFoundError(f"{path_or_name}: no such file or bundled fixture") from None


def load_matrix(name: str) -> CheckMatrix:
    return CheckMatrix.load(resolve(name))


def load_code(name: str, graph: Graph) -> Code:
    return Code.from_text(graph, resolve(name).read_text())
