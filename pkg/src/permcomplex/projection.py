"""Projection from the permutohedron to the cube, snake detection, and
the machine checks tying the two diagonals together.

The face rule sends F(U_1|...|U_p) on [m] to the cube cell in I^{m-1}
with interval coordinates {i : i, i+1 share a block} and +1 coordinates
{i : i+1 sits in an earlier block than i}.  Dimension is preserved
exactly when every block is a run of consecutive integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chains import FormalChain
from .cubes import CubeCell
from .diagonals import cai_diagonal, su_diagonal
from .permutohedron import PartitionFace, PermComplex, build_perm_complex, full_permutohedron
from .simplicial import SimplicialComplex, from_facets
from .sumatrix import OrderedMatrix


def rho_face(F: PartitionFace) -> CubeCell:
    """Image cell of a face, even when the dimension drops."""
    block_of = {}
    for j, block in enumerate(F.blocks):
        for i in block:
            block_of[i] = j
    sigma, tau = [], []
    for i in range(1, F.m):
        if block_of[i] == block_of[i + 1]:
            sigma.append(i)
        elif block_of[i + 1] < block_of[i]:
            tau.append(i)
    return CubeCell(F.m - 1, tuple(sigma), tuple(tau))


def preserves_dimension(F: PartitionFace) -> bool:
    """Equivalent (and tested equal) to every block being an integer
    interval."""
    return rho_face(F).dim == F.dim


def blocks_are_intervals(F: PartitionFace) -> bool:
    return all(b[-1] - b[0] + 1 == len(b) for b in F.blocks)


def rho_sign(F: PartitionFace) -> int:
    """Orientation of the image cell relative to the cube's product
    orientation: the Koszul sign of sorting the interval blocks into
    their natural order, a block of size s contributing degree s - 1.
    Solved from the boundary-commutation equations and verified through
    m = 6."""
    degs = [len(b) - 1 for b in F.blocks]
    mins = [b[0] for b in F.blocks]
    e = sum(degs[j] * degs[k]
            for j in range(len(F.blocks))
            for k in range(j + 1, len(F.blocks))
            if mins[j] > mins[k])
    return -1 if e % 2 else 1


def rho_chain(chain: FormalChain) -> FormalChain:
    """Induced chain map: faces whose dimension drops are sent to zero,
    the rest to their image cell with the orientation sign."""
    result = FormalChain()
    for F, coeff in chain:
        if preserves_dimension(F):
            result.add_term(rho_face(F), coeff * rho_sign(F))
    return result


# ---------------------------------------------------------------------------
# snakes

@dataclass(frozen=True)
class SnakeStructure:
    values: tuple       # the consecutive run of entries, in order
    nodes: tuple        # values where the direction turns
    segments: tuple     # ("row"|"col", values) pieces, alternating
    continuous: bool


def _snake_run(M: OrderedMatrix, lo: int, hi: int, first: str):
    pos = M.positions()
    values = list(range(lo, hi + 1))
    if any(v not in pos for v in values):
        return None
    if lo == hi:
        seg = ((first, (lo,)),)
        return SnakeStructure((lo,), (lo,), seg, _continuous(M, [lo]))
    segments = []
    nodes = [lo]
    orient = first
    start = lo
    v = lo
    while v < hi:
        axis = 0 if orient == "row" else 1
        if pos[v + 1][axis] != pos[v][axis]:
            if v == start:  # segments must have at least two elements
                return None
            nodes.append(v)
            segments.append((orient, tuple(range(start, v + 1))))
            orient = "col" if orient == "row" else "row"
            start = v
        else:
            v += 1
    segments.append((orient, tuple(range(start, hi + 1))))
    nodes.append(hi)
    return SnakeStructure(tuple(values), tuple(nodes), tuple(segments),
                          _continuous(M, values))


def _continuous(M: OrderedMatrix, values) -> bool:
    """Same-row elements in consecutive columns and same-column elements
    in consecutive rows."""
    pos = M.positions()
    rows, cols = {}, {}
    for v in values:
        i, j = pos[v]
        rows.setdefault(i, []).append(j)
        cols.setdefault(j, []).append(i)
    for js in rows.values():
        js.sort()
        if js != list(range(js[0], js[-1] + 1)):
            return False
    for is_ in cols.values():
        is_.sort()
        if is_ != list(range(is_[0], is_[-1] + 1)):
            return False
    return True


def snake_run(M: OrderedMatrix, lo: int, hi: int):
    """SnakeStructure for the entries lo..hi, or None if they do not form
    a snake."""
    for first in ("row", "col"):
        snake = _snake_run(M, lo, hi, first)
        if snake is not None:
            return snake
    return None


def detect_snake(M: OrderedMatrix):
    """The snake formed by ALL nonzero entries, or None.  The returned
    structure's `continuous` flag records whether the run segments occupy
    consecutive rows and columns."""
    m = M.q + M.p - 1
    return snake_run(M, 1, m)


# ---------------------------------------------------------------------------
# verification

def verify_su_cai(m: int) -> dict:
    """Check (rho (x) rho) Delta_SU = Delta_C(rho) on every face of
    Perm^{m-1}; discrepancies are reported, not raised."""
    mismatches = []
    checked = 0
    for faces in full_permutohedron(m).by_dim.values():
        for F in faces:
            lhs = FormalChain()
            for (left, right), sign in su_diagonal(F):
                if preserves_dimension(left) and preserves_dimension(right):
                    lhs.add_term((rho_face(left), rho_face(right)),
                                 sign * rho_sign(left) * rho_sign(right))
            rhs = FormalChain()
            if preserves_dimension(F):
                rhs = rho_sign(F) * cai_diagonal(rho_face(F))
            checked += 1
            if lhs != rhs:
                mismatches.append({"face": repr(F),
                                   "lhs": repr(lhs), "rhs": repr(rhs)})
    return {"m": m, "faces_checked": checked, "mismatches": mismatches,
            "passed": not mismatches}


def L_of_K(K: SimplicialComplex) -> SimplicialComplex:
    """The complex on [m-1] describing the image of Perm(K) under the
    projection: J belongs iff each maximal run {j..j+k} of J extends to a
    simplex {j..j+k+1} of K."""
    if K.m < 2:
        raise ValueError("L(K) needs m >= 2")
    members = []
    universe = range(1, K.m)
    for r in range(1, K.m):
        for J in itertools.combinations(universe, r):
            if all(tuple(range(run[0], run[-1] + 2)) in K.simplices
                   for run in _maximal_runs(J)):
                members.append(J)
    return from_facets(K.m - 1, members, include_all_vertices=False)


def _maximal_runs(J):
    runs = []
    for i in J:
        if runs and i == runs[-1][-1] + 1:
            runs[-1].append(i)
        else:
            runs.append([i])
    return runs


def _cell_closure(cells) -> set:
    closure = set()
    for c in cells:
        for sub in _subsets(c.sigma):
            removed = [i for i in c.sigma if i not in sub]
            for extra in _subsets(removed):
                closure.add(CubeCell(c.m, sub, tuple(sorted(c.tau + extra))))
    return closure


def _subsets(t):
    for k in range(len(t) + 1):
        yield from itertools.combinations(t, k)


def verify_image(K: SimplicialComplex) -> dict:
    """Check that the closure of {rho(F) : F in Perm(K)} is exactly the
    real moment-angle complex of L(K)."""
    X = build_perm_complex(K)
    image = _cell_closure(rho_face(F) for F in X.all())
    L = L_of_K(K)
    expected = {c for c in _all_cube_cells(K.m - 1) if c.sigma in L.simplices}
    report = {
        "m": K.m,
        "L": [list(s) for s in L.simplices_sorted() if s],
        "image_cells": len(image),
        "expected_cells": len(expected),
        "passed": image == expected,
        "missing": sorted(map(repr, expected - image)),
        "extra": sorted(map(repr, image - expected)),
        "notes": [],
    }
    # Known prose/formula mismatch in the source example for m = 4: the
    # face rule sends F(13|24) to the vertex (-1, 1, -1) and F(24|13) to
    # (1, -1, 1), the swap of what the worked example narrates.
    swapped = PartitionFace(4, ((1, 3), (2, 4))) if K.m == 4 else None
    if swapped is not None and swapped in X:
        report["notes"].append(
            "F(13|24) maps to (-1, 1, -1) and F(24|13) to (1, -1, 1) under "
            "the face rule; the worked quadrilateral example lists these "
            "two images the other way around (suspected typo).")
    return report


def _all_cube_cells(m: int):
    from .cubes import all_cells
    return all_cells(m)
