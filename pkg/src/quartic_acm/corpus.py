"""Deterministic example corpus: point schemes, quartics and lattices used
throughout the tests and handy as CLI inputs."""

from __future__ import annotations

import json
from pathlib import Path

from .schemes import make_cube_points, make_twisted_cubic_points

FERMAT_QUARTIC = "x0^4 + x1^4 + x2^4 + x3^4"

# the three split quadrics whose complete intersection is the cube scheme
CUBE_QUADRICS = [
    "x0^2 - x0*x3",
    "x1^2 - x1*x3",
    "x2^2 - x2*x3",
]


def _points_entry(scheme, description):
    return {
        "description": description,
        "points": [[str(c) for c in pt] for pt in scheme.points],
    }


def corpus_files():
    cube = make_cube_points()
    tc8 = make_twisted_cubic_points(list(range(8)))
    return {
        "cube.json": _points_entry(
            cube,
            "the 8 points (a,b,c,1), a,b,c in {0,1}: complete intersection "
            "of three split quadrics; h-vector (1,3,3,1)",
        ),
        "tc8.json": _points_entry(
            tc8,
            "8 points (1,t,t^2,t^3) on the twisted cubic at t = 0..7; "
            "aG but not cut out by quadrics",
        ),
        "fermat.json": {
            "description": "Fermat quartic, smooth away from small primes",
            "f": FERMAT_QUARTIC,
        },
        "cube_quadrics.json": {
            "description": "six quadrics with q1*q2 + q3*q4 + q5*q6 vanishing "
            "on the cube scheme",
            "quadrics": CUBE_QUADRICS + ["x0*x1", "0", "0"],
        },
        "lattice_rank1.json": {
            "description": "Picard rank 1: classes are multiples of h",
            "gram": [[4]],
            "h": [1],
        },
        "lattice_rank2_elliptic.json": {
            "description": "rank 2 with an elliptic quartic class D: D^2=0, Dh=4",
            "gram": [[4, 4], [4, 0]],
            "h": [1, 0],
        },
        "lattice_rank2_quintic.json": {
            "description": "rank 2 with a genus-2 quintic class D: D^2=2, Dh=5",
            "gram": [[4, 5], [5, 2]],
            "h": [1, 0],
        },
        "lattice_rank2_sextic.json": {
            "description": "rank 2 with a genus-3 sextic class D: D^2=4, Dh=6",
            "gram": [[4, 6], [6, 4]],
            "h": [1, 0],
        },
    }


def corpus_generate(target_dir):
    """Write the corpus files; returns the list of paths written."""
    target = Path(target_dir)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name, payload in corpus_files().items():
        path = target / name
        path.write_text(json.dumps(payload, indent=2) + "\n")
        written.append(path)
    return written
