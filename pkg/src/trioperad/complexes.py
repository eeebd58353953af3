"""The two weight-graded chain complexes certifying the operads' duality.

For a fixed weight w, level n of either complex is spanned by a
coefficient cell of arity n tensored with n basis factors from the
*other* family's free algebra, with factor weights composing w:

* ``simplex`` family: coefficient = simplex cell of {1..n}, factors =
  planar trees.  Face i merges factors i, i+1 with a product read off the
  membership of i and i+1 in the coefficient subset (mid / prec / succ /
  star), and collapses the subset accordingly.  The two mixed-membership
  rows admit two orientations (which of i, i+1 selects prec); only one
  makes d^2 = 0 -- at n = 3 the seven coefficient cells then reproduce
  exactly the seven tree-algebra relations -- and
  ``simplex_convention_sweep`` pins it.
* ``tree`` family: coefficient = planar tree with n+1 leaves, factors =
  simplex cells.  The n factors sit in the n gaps between consecutive
  leaves, so face i removes the leaf between factors i and i+1 -- leaf
  i+1 -- and multiplies the factors with left / right / mid according to
  that leaf's orientation.

The differential is the alternating face sum d = -sum_i (-1)^i d_i.
The leaf-index/orientation convention for the tree family is pinned by
``face_convention_sweep``, which rebuilds small complexes under every
candidate convention and shows the pinned one is the only candidate with
d^2 = 0 and the right homology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cells import (
    LeafOrientation,
    PlanarTree,
    SubsetCell,
    compositions,
    enumerate_planar_trees,
    enumerate_subset_cells,
    leaf_orientation,
    remove_leaf,
)
from .dendriform import DEND_OPS
from .linear import LinComb, rank
from .trialgebra import left_cell, mid_cell, right_cell

SIMPLEX_FAMILY = "simplex"
TREE_FAMILY = "tree"

# Pinned by face_convention_sweep: face i reads leaf i+1 (1-based), and
# orientations map left->left, right->right, middle->mid.
TREE_FACE_LEAF_OFFSET = 1
TREE_FACE_OPS = {
    LeafOrientation.LEFT: left_cell,
    LeafOrientation.RIGHT: right_cell,
    LeafOrientation.MIDDLE: mid_cell,
}
_MIRRORED_OPS = {
    LeafOrientation.LEFT: right_cell,
    LeafOrientation.RIGHT: left_cell,
    LeafOrientation.MIDDLE: mid_cell,
}


# Both tables agree on the unmixed rows: mid when i and i+1 are both in
# the subset, star when neither is.  They differ on which mixed row gets
# prec.  Only SIMPLEX_FACE_TABLE satisfies d^2 = 0 (the sweep shows the
# mirrored table fails already at weight 3).
SIMPLEX_FACE_TABLE = {
    (True, True): "mid",
    (True, False): "prec",
    (False, True): "succ",
    (False, False): "star",
}
_MIRRORED_SIMPLEX_TABLE = {
    (True, True): "mid",
    (True, False): "succ",
    (False, True): "prec",
    (False, False): "star",
}


def simplex_face_product(i: int, cell: SubsetCell, table=None) -> str:
    """Which product merges factors i, i+1 over a simplex coefficient."""
    ops = SIMPLEX_FACE_TABLE if table is None else table
    return ops[(i in cell.elements, (i + 1) in cell.elements)]


def collapse_vertex(cell: SubsetCell, i: int) -> SubsetCell:
    """Identify vertices i and i+1; duplicates collapse (set image)."""
    elems = sorted({e if e <= i else e - 1 for e in cell.elements})
    return SubsetCell(cell.arity - 1, tuple(elems))


def face_map_simplex_coeff(
    i: int, cell: SubsetCell, factors: tuple, *, product_table=None
) -> LinComb:
    """i-th face of (cell; factors) in the simplex-coefficient complex."""
    n = cell.arity
    if not 1 <= i <= n - 1:
        raise ValueError(f"face index {i} out of range 1..{n - 1}")
    product = DEND_OPS[simplex_face_product(i, cell, product_table)](
        factors[i - 1], factors[i]
    )
    new_cell = collapse_vertex(cell, i)
    return LinComb(
        ((new_cell, factors[: i - 1] + (t,) + factors[i + 1 :]), c)
        for t, c in product
    )


def face_map_tree_coeff(
    i: int,
    tree: PlanarTree,
    factors: tuple,
    *,
    leaf_offset: int = TREE_FACE_LEAF_OFFSET,
    orientation_ops=None,
) -> LinComb:
    """i-th face of (tree; factors) in the tree-coefficient complex."""
    n = tree.leaves - 1
    if not 1 <= i <= n - 1:
        raise ValueError(f"face index {i} out of range 1..{n - 1}")
    ops = TREE_FACE_OPS if orientation_ops is None else orientation_ops
    leaf = i + leaf_offset
    cell_op = ops[leaf_orientation(tree, leaf)]
    new_tree = remove_leaf(tree, leaf)
    merged = cell_op(factors[i - 1], factors[i])
    return LinComb.single((new_tree, factors[: i - 1] + (merged,) + factors[i + 1 :]))


@dataclass
class GradedComplex:
    """Bases and boundary maps of one weight-graded complex.

    ``levels[n]`` lists the basis elements (coefficient, factor tuple) of
    level n; ``diff[n]`` gives, per basis element, its boundary as a
    sparse {index at level n-1: integer coefficient} row.
    """

    family: str
    weight: int
    levels: dict[int, list] = field(default_factory=dict)
    diff: dict[int, list[dict[int, int]]] = field(default_factory=dict)
    d_squared_zero: bool = True
    d_squared_failure: dict | None = None

    def dims(self) -> dict[int, int]:
        return {n: len(basis) for n, basis in self.levels.items()}


def _factor_basis(family: str, weight: int):
    # factors come from the free algebra of the dual family
    if family == SIMPLEX_FAMILY:
        return enumerate_planar_trees(weight + 1)
    return enumerate_subset_cells(weight)


def _coefficient_cells(family: str, n: int):
    if family == SIMPLEX_FAMILY:
        return enumerate_subset_cells(n)
    return enumerate_planar_trees(n + 1)


def _level_basis(family: str, weight: int, n: int) -> list:
    coeffs = _coefficient_cells(family, n)
    out = []
    for comp in compositions(weight, n):
        factor_lists = [_factor_basis(family, w) for w in comp]
        for coeff_cell in coeffs:
            for factors in itertools.product(*factor_lists):
                out.append((coeff_cell, factors))
    return out


def _boundary_of(family: str, elem, **face_kwargs) -> LinComb:
    coeff_cell, factors = elem
    n = len(factors)
    total = LinComb()
    face = face_map_simplex_coeff if family == SIMPLEX_FAMILY else face_map_tree_coeff
    for i in range(1, n):
        sign = -((-1) ** i)  # d = -sum_i (-1)^i d_i
        total = total + sign * face(i, coeff_cell, factors, **face_kwargs)
    return total


def build_complex(family: str, weight: int, **face_kwargs) -> GradedComplex:
    """Assemble bases and boundary matrices for weight ``weight`` and
    verify d^2 = 0 across all levels."""
    if family not in (SIMPLEX_FAMILY, TREE_FAMILY):
        raise ValueError(f"unknown family {family!r}")
    if weight < 1:
        raise ValueError("weight must be >= 1")
    gc = GradedComplex(family=family, weight=weight)
    index: dict[int, dict] = {}
    for n in range(1, weight + 1):
        basis = _level_basis(family, weight, n)
        gc.levels[n] = basis
        index[n] = {elem: k for k, elem in enumerate(basis)}
    for n in range(2, weight + 1):
        rows = []
        for elem in gc.levels[n]:
            image = _boundary_of(family, elem, **face_kwargs)
            rows.append({index[n - 1][b]: int(c) for b, c in image})
        gc.diff[n] = rows
    for n in range(3, weight + 1):
        lower = gc.diff[n - 1]
        for k, row in enumerate(gc.diff[n]):
            acc: dict[int, int] = {}
            for j, c in row.items():
                for jj, cc in lower[j].items():
                    acc[jj] = acc.get(jj, 0) + c * cc
            if any(acc.values()):
                gc.d_squared_zero = False
                if gc.d_squared_failure is None:
                    coeff_cell, factors = gc.levels[n][k]
                    gc.d_squared_failure = {
                        "level": n,
                        "element": str(coeff_cell)
                        + " ; "
                        + ",".join(str(f) for f in factors),
                    }
    return gc


def homology_ranks(gc: GradedComplex) -> dict:
    """Dimensions, boundary ranks and Betti numbers per level."""
    dims = gc.dims()
    ranks = {n: 0 for n in dims}
    for n, rows in gc.diff.items():
        ranks[n] = rank(rows)
    betti = {}
    for n in dims:
        betti[n] = dims[n] - ranks.get(n, 0) - ranks.get(n + 1, 0)
    return {"dims": dims, "ranks": ranks, "betti": betti}


def expected_betti(weight: int) -> dict[int, int]:
    """One-dimensional homology in level 1 at weight 1; zero elsewhere."""
    return {n: 1 if (n == 1 and weight == 1) else 0 for n in range(1, weight + 1)}


def face_convention_sweep(max_weight: int = 3) -> dict:
    """Rebuild the tree-coefficient complexes under every candidate
    leaf-index/orientation convention and report which ones satisfy both
    d^2 = 0 and the expected homology for all weights <= max_weight.

    The four candidates are leaf offset 0/1 (face i reads leaf i or
    leaf i+1) crossed with the natural or mirrored orientation map.
    """
    candidates = []
    for offset in (0, 1):
        for ops_name, ops in (("natural", TREE_FACE_OPS), ("mirrored", _MIRRORED_OPS)):
            ok = True
            detail = []
            for w in range(1, max_weight + 1):
                gc = build_complex(
                    TREE_FAMILY, w, leaf_offset=offset, orientation_ops=ops
                )
                hom = homology_ranks(gc)
                good = gc.d_squared_zero and hom["betti"] == expected_betti(w)
                detail.append(
                    {
                        "weight": w,
                        "d_squared_zero": gc.d_squared_zero,
                        "betti": hom["betti"],
                    }
                )
                ok = ok and good
            candidates.append(
                {
                    "leaf_offset": offset,
                    "orientation_map": ops_name,
                    "passes": ok,
                    "detail": detail,
                }
            )
    passing = [
        (c["leaf_offset"], c["orientation_map"]) for c in candidates if c["passes"]
    ]
    return {
        "max_weight": max_weight,
        "candidates": candidates,
        "passing": passing,
        "unique": len(passing) == 1,
        "pinned": (TREE_FACE_LEAF_OFFSET, "natural"),
        "pinned_is_unique_pass": passing == [(TREE_FACE_LEAF_OFFSET, "natural")],
    }


def simplex_convention_sweep(max_weight: int = 3) -> dict:
    """Rebuild the simplex-coefficient complexes under both orientations
    of the mixed rows of the face-product table and report which one
    satisfies d^2 = 0 and the expected homology for weights <= max_weight.
    """
    candidates = []
    for name, table in (
        ("pinned", SIMPLEX_FACE_TABLE),
        ("mirrored", _MIRRORED_SIMPLEX_TABLE),
    ):
        ok = True
        detail = []
        for w in range(1, max_weight + 1):
            gc = build_complex(SIMPLEX_FAMILY, w, product_table=table)
            hom = homology_ranks(gc)
            good = gc.d_squared_zero and hom["betti"] == expected_betti(w)
            detail.append(
                {
                    "weight": w,
                    "d_squared_zero": gc.d_squared_zero,
                    "betti": hom["betti"],
                }
            )
            ok = ok and good
        candidates.append({"table": name, "passes": ok, "detail": detail})
    passing = [c["table"] for c in candidates if c["passes"]]
    return {
        "max_weight": max_weight,
        "candidates": candidates,
        "passing": passing,
        "unique": len(passing) == 1,
        "pinned_is_unique_pass": passing == ["pinned"],
    }
