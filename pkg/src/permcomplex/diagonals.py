"""Cellular diagonals: the Saneblidze-Umble diagonal on the permutohedron
and the Cai diagonal on the cube, with the cup products they induce.

Tensor terms are stored as FormalChain over (left, right) label pairs.
The boundary on tensors is d(a (x) b) = da (x) b + (-1)^dim(a) a (x) db;
the comultiplicative extension interleaves per-block factors with the
matching Koszul sign, which is what makes the chain-map identities close.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .chains import FormalChain, tensor
from .cubes import CubeCell, CubeCochain, cup_whitney_basis, inversion_count, pair
from .permutohedron import PartitionFace, PermComplex, boundary
from .sumatrix import columns_partition, csgn, enumerate_configurations, rows_partition


@lru_cache(maxsize=None)
def _top_cell_terms(m: int) -> tuple:
    """Terms of the diagonal of the top cell of Perm^{m-1}: (sign, left
    blocks, right blocks), in canonical (q ascending, matrix lex) order."""
    terms = []
    for q in range(1, m + 1):
        p = m - q + 1
        for record in enumerate_configurations(q, p):
            left = columns_partition(record.matrix)
            right = rows_partition(record.matrix)
            terms.append((csgn(record), left.blocks, right.blocks))
    return tuple(terms)


def su_top_diagonal(m: int) -> FormalChain:
    """The double sum over configuration matrices for the top cell."""
    result = FormalChain()
    for sign, left, right in _top_cell_terms(m):
        result.add_term((PartitionFace(m, left), PartitionFace(m, right)), sign)
    return result


def _relabel(blocks: tuple, values: tuple) -> tuple:
    """Order-preservingly rename 1..n inside `blocks` to `values`."""
    return tuple(tuple(values[i - 1] for i in block) for block in blocks)


def su_diagonal(F: PartitionFace) -> FormalChain:
    """Comultiplicative extension: apply the top-cell diagonal inside each
    block and interleave the per-block tensor factors."""
    per_block = []
    for block in F.blocks:
        n = len(block)
        terms = [(sign, _relabel(left, block), _relabel(right, block))
                 for sign, left, right in _top_cell_terms(n)]
        per_block.append(terms)

    result = FormalChain()
    for choice in itertools.product(*per_block):
        sign = 1
        for s, _, _ in choice:
            sign *= s
        # Koszul interchange: move each right factor past the left factors
        # of the later blocks
        exponent = 0
        for j in range(len(choice)):
            deg_right_j = len(F.blocks[j]) - len(choice[j][2])
            for k in range(j + 1, len(choice)):
                deg_left_k = len(F.blocks[k]) - len(choice[k][1])
                exponent += deg_right_j * deg_left_k
        if exponent % 2:
            sign = -sign
        left_blocks = tuple(b for _, left, _ in choice for b in left)
        right_blocks = tuple(b for _, _, right in choice for b in right)
        result.add_term(
            (PartitionFace(F.m, left_blocks), PartitionFace(F.m, right_blocks)),
            sign)
    return result


def cai_diagonal(c: CubeCell) -> FormalChain:
    """Diagonal of a cube cell, dual to the Whitney product."""
    result = FormalChain()
    sigma = c.sigma
    for r in range(len(sigma) + 1):
        for sub in itertools.combinations(sigma, r):
            rest = tuple(x for x in sigma if x not in sub)
            sign = -1 if inversion_count(sub, rest) % 2 else 1
            left = CubeCell(c.m, sub, c.tau)
            right = CubeCell(c.m, rest, tuple(sorted(set(sub) | set(c.tau))))
            result.add_term((left, right), sign)
    return result


# ---------------------------------------------------------------------------
# chain-level identities

def tensor_boundary(chain: FormalChain, boundary_fn) -> FormalChain:
    """Boundary of a chain of (left, right) pairs."""
    result = FormalChain()
    for (a, b), coeff in chain:
        for a2, c2 in boundary_fn(a):
            result.add_term((a2, b), coeff * c2)
        sign = -1 if a.dim % 2 else 1
        for b2, c2 in boundary_fn(b):
            result.add_term((a, b2), coeff * sign * c2)
    return result


def chain_map_defect(cell, diagonal_fn, boundary_fn) -> FormalChain:
    """diagonal(boundary) - boundary(diagonal); zero iff the diagonal is a
    chain map at this cell."""
    lhs = FormalChain()
    for c2, coeff in boundary_fn(cell):
        for label, c3 in diagonal_fn(c2):
            lhs.add_term(label, coeff * c3)
    rhs = tensor_boundary(diagonal_fn(cell), boundary_fn)
    return lhs - rhs


def counit_defect(cell, diagonal_fn) -> FormalChain:
    """Collapse each tensor factor through the augmentation (vertices to 1);
    both collapses must return the original cell."""
    left_collapse = FormalChain()
    right_collapse = FormalChain()
    for (a, b), coeff in diagonal_fn(cell):
        if a.dim == 0:
            left_collapse.add_term(b, coeff)
        if b.dim == 0:
            right_collapse.add_term(a, coeff)
    original = FormalChain.basis(cell)
    return (left_collapse - original) + (right_collapse - original)


# ---------------------------------------------------------------------------
# cup products

def cup_su(a: FormalChain, b: FormalChain, X: PermComplex,
           deg_a: int, deg_b: int) -> FormalChain:
    """Product of cochains on a permutohedral complex via the diagonal:
    <a cup b, F> = <a (x) b, su_diagonal(F)>.

    Cochains are FormalChains over face labels (interpreted as duals);
    their degrees must be supplied since a chain does not know its grading.
    """
    result = FormalChain()
    for F in X.faces(deg_a + deg_b):
        value = 0
        for (left, right), sign in su_diagonal(F):
            if left.dim == deg_a and right.dim == deg_b:
                value += sign * a[left] * b[right]
        if value:
            result.add_term(F, value)
    return result


def perm_cochain_differential(a: FormalChain, X: PermComplex, deg: int) -> FormalChain:
    """Transpose of the cellular boundary of X on a degree-`deg` cochain."""
    result = FormalChain()
    for F in X.faces(deg + 1):
        value = sum(coeff * a[G] for G, coeff in boundary(F))
        if value:
            result.add_term(F, value)
    return result


def cup_whitney_pairing_check(a: CubeCochain, b: CubeCochain, c: CubeCell) -> bool:
    """<a cup b, c> = <a (x) b, cai_diagonal(c)> for basis elements."""
    product = cup_whitney_basis(a, b)
    lhs = 0 if product is None else product[0] * pair(product[1], c)
    rhs = sum(sign * pair(a, left) * pair(b, right)
              for (left, right), sign in cai_diagonal(c))
    return lhs == rhs
