"""Published first/last Laplacian eigenvalues of small complete hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hypergraph import complete_hypergraph
from .projection import build_projection
from .spectra import Spectrum, spectrum

EXACT_TOL = 1e-9

F = Fraction


@dataclass(frozen=True)
class Cell:
    n: int
    r: int
    s: int
    which: str  # "lambda1" or "lambdaMax"
    value: Fraction | float
    tol: float

    @property
    def label(self) -> str:
        sym = "l1" if self.which == "lambda1" else "lmax"
        return f"K_{self.n}^{self.r} {sym}^({self.s})"


def _exact(n, r, s, which, value):
    return Cell(n, r, s, which, value, EXACT_TOL)


# Decimal cells carry half a unit in their last printed digit.
CELLS: tuple[Cell, ...] = (
    _exact(6, 3, 2, "lambda1", F(3, 4)), _exact(6, 3, 1, "lambda1", F(6, 5)),
    _exact(6, 3, 1, "lambdaMax", F(6, 5)), _exact(6, 3, 2, "lambdaMax", F(3, 2)),

    _exact(7, 3, 2, "lambda1", F(7, 10)), _exact(7, 3, 1, "lambda1", F(7, 6)),
    _exact(7, 3, 1, "lambdaMax", F(7, 6)), _exact(7, 3, 2, "lambdaMax", F(3, 2)),

    _exact(6, 4, 3, "lambda1", F(1, 3)), _exact(6, 4, 2, "lambda1", F(5, 6)),
    _exact(6, 4, 1, "lambda1", F(6, 5)), _exact(6, 4, 1, "lambdaMax", F(6, 5)),
    _exact(6, 4, 2, "lambdaMax", F(3, 2)), Cell(6, 4, 3, "lambdaMax", 1.76759, 5e-6),

    _exact(7, 4, 3, "lambda1", F(3, 8)), _exact(7, 4, 2, "lambda1", F(9, 10)),
    _exact(7, 4, 1, "lambda1", F(7, 6)), _exact(7, 4, 1, "lambdaMax", F(7, 6)),
    _exact(7, 4, 2, "lambdaMax", F(7, 5)), _exact(7, 4, 3, "lambdaMax", F(7, 4)),

    Cell(6, 5, 4, "lambda1", 0.1464, 5e-5), _exact(6, 5, 3, "lambda1", F(1, 2)),
    _exact(6, 5, 2, "lambda1", F(5, 6)), _exact(6, 5, 1, "lambda1", F(6, 5)),
    _exact(6, 5, 1, "lambdaMax", F(6, 5)), _exact(6, 5, 2, "lambdaMax", F(3, 2)),
    _exact(6, 5, 3, "lambdaMax", F(3, 2)), Cell(6, 5, 4, "lambdaMax", 1.809, 5e-4),

    Cell(7, 5, 4, "lambda1", 0.1977, 5e-5), _exact(7, 5, 3, "lambda1", F(5, 8)),
    _exact(7, 5, 2, "lambda1", F(9, 10)), _exact(7, 5, 1, "lambda1", F(7, 6)),
    _exact(7, 5, 1, "lambdaMax", F(7, 6)), _exact(7, 5, 2, "lambdaMax", F(7, 5)),
    _exact(7, 5, 3, "lambdaMax", F(3, 2)), Cell(7, 5, 4, "lambdaMax", 1.809, 5e-4),
)

HYPERGRAPHS = ((6, 3), (7, 3), (6, 4), (7, 4), (6, 5), (7, 5))


@lru_cache(maxsize=None)
def complete_spectrum(n: int, r: int, s: int) -> Spectrum:
    return spectrum(build_projection(complete_hypergraph(n, r), s))


@dataclass(frozen=True)
class CellResult:
    cell: Cell
    computed: float

    @property
    def error(self) -> float:
        return abs(self.computed - float(self.cell.value))

    @property
    def passed(self) -> bool:
        return self.error <= self.cell.tol

    @property
    def nearest_fraction(self) -> Fraction:
        return Fraction(self.computed).limit_denominator(20)


def evaluate(cells=CELLS) -> list[CellResult]:
    out = []
    for c in cells:
        sp = complete_spectrum(c.n, c.r, c.s)
        out.append(CellResult(c, sp.lambda1 if c.which == "lambda1" else sp.lambda_max))
    return out
