"""Reference parameter sets for the four published delay-curve figures.

Each entry fixes one lambda family (coefficients, drive shift, case and
branch), the friction value quoted alongside it, and the lambda values
drawn in the figure.  Lambda values are kept as strings so output file
names reproduce the quoted decimals exactly.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FigureSpec:
    fig_id: int
    a1: float
    b1: float
    epsilon: float
    case: str
    branch: str
    rho_caption: float
    lambdas: tuple[str, ...]
    xi0: float = 0.0
    grid: tuple[float, float, int] = (-15.0, 15.0, 4001)


FIGURES: dict[int, FigureSpec] = {
    1: FigureSpec(1, 3.0, 0.7, 2.2772, "I", "+", 0.90326, ("0.125", "0.2", "0.5", "10")),
    2: FigureSpec(2, 3.0, 0.7, 1.0351, "I", "-", 2.39335, ("0.01", "0.1", "0.5", "10")),
    3: FigureSpec(3, 0.7, 3.0, 0.5313, "II", "+", 1.51635, ("0.77", "0.9", "2", "10")),
    4: FigureSpec(4, 0.7, 3.0, -0.5313, "II", "-", 0.435766, ("0.53", "0.6", "1", "10")),
}
