"""Weight-graded chain complexes: faces, d^2 = 0, homology, conventions."""

import pytest

from trioperad.cells import LEAF, graft, parse_subset_cell as cell, parse_tree
from trioperad.complexes import (
    SIMPLEX_FACE_TABLE,
    SIMPLEX_FAMILY,
    TREE_FACE_LEAF_OFFSET,
    TREE_FAMILY,
    build_complex,
    collapse_vertex,
    expected_betti,
    face_convention_sweep,
    face_map_simplex_coeff,
    face_map_tree_coeff,
    homology_ranks,
    simplex_convention_sweep,
    simplex_face_product,
)
from trioperad.linear import LinComb

A = parse_tree("(|,|)")

# dims frozen from the free-algebra bookkeeping
SIMPLEX_DIMS = {
    3: {1: 11, 2: 18, 3: 7},
    5: {1: 197, 2: 468, 3: 420, 4: 180, 5: 31},
}
TREE_DIMS = {
    3: {1: 7, 2: 18, 3: 11},
    5: {1: 31, 2: 216, 3: 528, 4: 540, 5: 197},
}


# ------------------------------------------------------------- face rules


def test_simplex_face_table_pinned():
    # mid when both endpoints are in the subset, star when neither;
    # the mixed rows are the orientation pinned by simplex_convention_sweep
    assert SIMPLEX_FACE_TABLE[(True, True)] == "mid"
    assert SIMPLEX_FACE_TABLE[(False, False)] == "star"
    assert SIMPLEX_FACE_TABLE[(True, False)] == "prec"
    assert SIMPLEX_FACE_TABLE[(False, True)] == "succ"


def test_simplex_face_product_reads_membership():
    assert simplex_face_product(1, cell("{1,2}@3")) == "mid"
    assert simplex_face_product(2, cell("{1}@3")) == "star"
    assert simplex_face_product(1, cell("{1}@3")) == "prec"
    assert simplex_face_product(1, cell("{2}@3")) == "succ"


def test_collapse_vertex():
    assert collapse_vertex(cell("{1,2}@2"), 1) == cell("{1}@1")
    assert collapse_vertex(cell("{1,3}@3"), 2) == cell("{1,2}@2")
    assert collapse_vertex(cell("{2,3}@3"), 2) == cell("{2}@2")


def test_face_map_simplex_mid_row_pinned():
    # X = {1,2}@2 with two 2-leaf factors: the mid product, one term
    out = face_map_simplex_coeff(1, cell("{1,2}@2"), (A, A))
    assert out == LinComb.single((cell("{1}@1"), (parse_tree("(|,|,|)"),)))


def test_face_map_simplex_multi_term():
    # neither endpoint in X: star, which fans into three trees
    out = face_map_simplex_coeff(2, cell("{1}@3"), (A, A, A))
    assert len(out) == 3
    for (new_cell, factors), c in out:
        assert c == 1
        assert new_cell == cell("{1}@2")
        assert len(factors) == 2
        assert factors[0] == A


def test_face_map_simplex_range():
    with pytest.raises(ValueError):
        face_map_simplex_coeff(2, cell("{1}@2"), (A, A))


def test_face_map_tree_middle_leaf_pinned():
    # corolla coefficient, face 1 reads leaf 2 (middle) -> mid product
    corolla = parse_tree("(|,|,|)")
    out = face_map_tree_coeff(1, corolla, (cell("{1}@1"), cell("{1}@1")))
    assert out == LinComb.single((A, (cell("{1,2}@2"),)))


def test_face_map_tree_left_leaf():
    # coefficient (|,(|,|)): leaf 2 is left-oriented -> left product
    t = parse_tree("(|,(|,|))")
    out = face_map_tree_coeff(1, t, (cell("{1}@1"), cell("{1}@1")))
    assert out == LinComb.single((A, (cell("{1}@2"),)))


def test_tree_face_leaf_offset_pinned():
    assert TREE_FACE_LEAF_OFFSET == 1


# -------------------------------------------------------------- complexes


def test_weight_one_trivial():
    for family in (SIMPLEX_FAMILY, TREE_FAMILY):
        gc = build_complex(family, 1)
        assert gc.dims() == {1: 1}
        assert gc.d_squared_zero
        assert homology_ranks(gc)["betti"] == {1: 1}


def test_weight_two_isomorphism():
    for family in (SIMPLEX_FAMILY, TREE_FAMILY):
        gc = build_complex(family, 2)
        hom = homology_ranks(gc)
        assert hom["dims"] == {1: 3, 2: 3}
        assert hom["ranks"][2] == 3  # d_2 is an isomorphism
        assert hom["betti"] == {1: 0, 2: 0}


@pytest.mark.parametrize("family,frozen", [(SIMPLEX_FAMILY, SIMPLEX_DIMS), (TREE_FAMILY, TREE_DIMS)])
def test_dims_frozen(family, frozen):
    for w, want in frozen.items():
        assert build_complex(family, w).dims() == want


@pytest.mark.parametrize("family", [SIMPLEX_FAMILY, TREE_FAMILY])
def test_d_squared_and_betti_through_weight_four(family):
    for w in range(1, 5):
        gc = build_complex(family, w)
        assert gc.d_squared_zero, gc.d_squared_failure
        assert homology_ranks(gc)["betti"] == expected_betti(w)


def test_differential_preserves_weight_and_drops_level():
    gc = build_complex(SIMPLEX_FAMILY, 3)
    for n, rows in gc.diff.items():
        lower = gc.levels[n - 1]
        for k, row in enumerate(rows):
            _, factors = gc.levels[n][k]
            weight = sum(t.leaves - 1 for t in factors)
            for j in row:
                _, lfactors = lower[j]
                assert len(lfactors) == n - 1
                assert sum(t.leaves - 1 for t in lfactors) == weight


def test_build_complex_rejects_bad_input():
    with pytest.raises(ValueError):
        build_complex("octahedron", 2)
    with pytest.raises(ValueError):
        build_complex(SIMPLEX_FAMILY, 0)


def test_expected_betti():
    assert expected_betti(1) == {1: 1}
    assert expected_betti(3) == {1: 0, 2: 0, 3: 0}


# ------------------------------------------------------------ conventions


def test_tree_convention_sweep_unique():
    sweep = face_convention_sweep(3)
    assert sweep["unique"]
    assert sweep["pinned_is_unique_pass"]
    assert sweep["passing"] == [(1, "natural")]


def test_simplex_convention_sweep_unique():
    sweep = simplex_convention_sweep(3)
    assert sweep["unique"]
    assert sweep["pinned_is_unique_pass"]
    # the mirrored table already breaks d^2 = 0 at weight 3
    mirrored = next(c for c in sweep["candidates"] if c["table"] == "mirrored")
    assert not mirrored["detail"][2]["d_squared_zero"]
