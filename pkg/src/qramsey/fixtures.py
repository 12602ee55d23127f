"""Observable sets and caption/body claims for the reproduced figures.

Each fixture pairs a vertex list with claims in the claims-file syntax of
:mod:`qramsey.audit`. Where a caption and the surrounding discussion name
different triangles, both are recorded under separate tags.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FigureFixture:
    key: str
    title: str
    vertices: tuple
    claims: str


FIGURES = (
    FigureFixture(
        "fig1a", "p_x, p_y, l_x",
        ("p_x", "p_y", "l_x"),
        "claim fig1a.caption bicolored\n",
    ),
    FigureFixture(
        "fig1b", "l_x, l_y, l_z",
        ("l_x", "l_y", "l_z"),
        "claim fig1b.caption all green\n",
    ),
    FigureFixture(
        "fig1c", "p_x, p_y, x, y",
        ("p_x", "p_y", "x", "y"),
        "claim fig1c.caption none\n",
    ),
    FigureFixture(
        "fig2a", "p_x, p_y, p_z, z, y",
        ("p_x", "p_y", "p_z", "z", "y"),
        "claim fig2a.caption mono red p_x p_y p_z\n"
        "claim fig2a.caption mono red p_x p_y z\n"
        "claim fig2a.caption mono red p_x p_z y\n"
        "claim fig2a.caption mono red p_y z y\n",
    ),
    FigureFixture(
        "fig2b", "p_x, p_y, p_z, l_y, l_z",
        ("p_x", "p_y", "p_z", "l_y", "l_z"),
        "claim fig2b.caption mono red p_x p_y l_y\n"
        "claim fig2b.caption mono any p_x p_z l_z\n",
    ),
    FigureFixture(
        "fig2c", "p_x, p_y, l_x, l_y, l_z",
        ("p_x", "p_y", "l_x", "l_y", "l_z"),
        "claim fig2c.caption mono green p_x l_x l_y\n"
        "claim fig2c.caption mono green l_x l_y l_z\n",
    ),
    FigureFixture(
        "fig3a", "p_x, p_y, l_x, l_y, x",
        ("p_x", "p_y", "l_x", "l_y", "x"),
        "claim fig3a.caption mono green p_x l_x x\n"
        "claim fig3a.text mono green p_x l_y x\n"
        "claim fig3a.text quad red p_x p_y l_x x\n",
    ),
    FigureFixture(
        "fig3b", "p_x, p_y, l_x, l_y, H (central field)",
        ("p_x", "p_y", "l_x", "l_y", "H_central"),
        "claim fig3b.caption none\n",
    ),
    FigureFixture(
        "fig3c", "r, p_r, l_z, H, L^2",
        ("r", "p_r", "l_z", "H_central", "L2"),
        "claim fig3c.caption mono red r p_r L2\n"
        "claim fig3c.caption mono red p_r l_z L2\n"
        "claim fig3c.caption mono green r l_x p_r\n"
        "claim fig3c.text mono red p_r l_z L2\n"
        "claim fig3c.text mono green r p_r H_central\n"
        "claim fig3c.text mono red r L2 l_z\n",
    ),
    FigureFixture(
        "fig4", "p_x, p_y, p_z, x, y, z",
        ("p_x", "p_y", "p_z", "x", "y", "z"),
        "claim fig4.caption none green\n"
        "claim fig4.caption mono red p_x p_y p_z\n"
        "claim fig4.caption mono red p_y p_z x\n"
        "claim fig4.caption mono red p_z x y\n"
        "claim fig4.text mono red p_x y z\n"
        "claim fig4.caption mono red x y z\n",
    ),
)

# The same claim as fig3b under a Hamiltonian that commutes with nothing else.
FIG3B_GENERIC = FigureFixture(
    "fig3b_generic", "p_x, p_y, l_x, l_y, H (generic potential)",
    ("p_x", "p_y", "l_x", "l_y", "H_generic"),
    "claim fig3b.text none\n",
)

FIGURES_BY_KEY = {f.key: f for f in FIGURES + (FIG3B_GENERIC,)}

SYMBOLIC_BASIS = ("x", "y", "z", "p_x", "p_y", "p_z", "l_x", "l_y", "l_z", "L2")
