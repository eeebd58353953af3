"""Cell combinatorics for the three polytope families.

Three kinds of basis cells appear throughout the package:

* ``SubsetCell`` -- a cell of the simplex with vertex set {1..n}, written
  ``{1,3}@4``; the nonempty subsets of {1..n} are the cells of the
  (n-1)-simplex.
* ``PlanarTree`` -- a planar rooted tree whose internal vertices all have
  at least two children, written ``(|,(|,|))``; trees with n+1 leaves are
  the cells of the Stasheff polytope attached to arity n.
* ``CubeCell`` -- a word over {0,1,*}, written ``0*1``; words of length
  n-1 are the cells of the (n-1)-cube.

The string forms above are the interchange grammar used by the CLI and the
parsers in this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


# =====================================================================
# simplex cells
# =====================================================================


@dataclass(frozen=True)
class SubsetCell:
    """Nonempty subset of {1..arity}, a cell of the (arity-1)-simplex."""

    arity: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("arity must be >= 1")
        elems = tuple(self.elements)
        if not elems:
            raise ValueError("cell must be a nonempty subset")
        if list(elems) != sorted(set(elems)):
            raise ValueError("elements must be strictly increasing")
        if elems[0] < 1 or elems[-1] > self.arity:
            raise ValueError(f"elements must lie in 1..{self.arity}")
        object.__setattr__(self, "elements", elems)

    @property
    def degree(self) -> int:
        return len(self.elements) - 1

    @property
    def bitmask(self) -> int:
        return sum(1 << (e - 1) for e in self.elements)

    def shifted(self, offset: int, arity: int) -> "SubsetCell":
        """Same subset pushed up by ``offset`` inside a larger vertex set."""
        return SubsetCell(arity, tuple(e + offset for e in self.elements))

    def literal(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}@" + str(self.arity)

    def __str__(self) -> str:
        return self.literal()


def parse_subset_cell(text: str) -> SubsetCell:
    """Parse ``{1,3}@4`` (grammar: '{' int (',' int)* '}' '@' int)."""
    s = text.strip()
    if not s.startswith("{") or "}@" not in s:
        raise ValueError(f"bad cell literal {text!r} (grammar: {{i,j,...}}@n)")
    body, _, arity_part = s[1:].partition("}@")
    try:
        elems = tuple(int(p) for p in body.split(","))
        arity = int(arity_part)
    except ValueError:
        raise ValueError(f"bad cell literal {text!r} (grammar: {{i,j,...}}@n)") from None
    return SubsetCell(arity, elems)


def enumerate_subset_cells(n: int) -> list[SubsetCell]:
    """All 2^n - 1 cells of the (n-1)-simplex, in ascending bitmask order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for mask in range(1, 1 << n):
        elems = tuple(e for e in range(1, n + 1) if mask & (1 << (e - 1)))
        out.append(SubsetCell(n, elems))
    return out


# =====================================================================
# planar trees
# =====================================================================


class PlanarTree:
    """Planar rooted tree; every internal vertex has >= 2 children.

    The one-leaf tree is ``LEAF`` (children == ()); everything else is a
    node built by ``graft``.  Instances are immutable and hashable.
    """

    __slots__ = ("children", "leaves", "vertices", "_hash")

    def __init__(self, children: tuple["PlanarTree", ...] = ()):
        children = tuple(children)
        if len(children) == 1:
            raise ValueError("internal vertices need >= 2 children")
        self.children = children
        if children:
            self.leaves = sum(c.leaves for c in children)
            self.vertices = 1 + sum(c.vertices for c in children)
        else:
            self.leaves = 1
            self.vertices = 0
        self._hash = hash(("tree",) + children)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def degree(self) -> int:
        """Cell degree in the Stasheff polytope: binary trees are vertices."""
        return self.leaves - 1 - self.vertices

    def literal(self) -> str:
        if self.is_leaf:
            return "|"
        return "(" + ",".join(c.literal() for c in self.children) + ")"

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"PlanarTree[{self.literal()}]"

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        return (
            self is other
            or (isinstance(other, PlanarTree) and self.children == other.children)
        )


LEAF = PlanarTree()


def graft(parts: "list[PlanarTree] | tuple[PlanarTree, ...]") -> PlanarTree:
    """Join >= 2 trees under a new root."""
    parts = tuple(parts)
    if len(parts) < 2:
        raise ValueError("graft needs at least two trees")
    return PlanarTree(parts)


def decompose(t: PlanarTree) -> tuple[PlanarTree, ...]:
    """Children of the root; inverse of graft.  The leaf does not decompose."""
    if t.is_leaf:
        raise ValueError("the one-leaf tree has no root decomposition")
    return t.children


def parse_tree(text: str) -> PlanarTree:
    """Parse the grammar  tree := '|' | '(' tree (',' tree)+ ')'."""
    s = text.strip()
    tree, pos = _parse_tree_at(s, 0)
    if pos != len(s):
        raise ValueError(f"trailing input at position {pos} in tree literal {text!r}")
    return tree


def _parse_tree_at(s: str, pos: int) -> tuple[PlanarTree, int]:
    if pos >= len(s):
        raise ValueError("unexpected end of tree literal (grammar: '|' or '(t,t,...)')")
    if s[pos] == "|":
        return LEAF, pos + 1
    if s[pos] != "(":
        raise ValueError(
            f"unexpected {s[pos]!r} at position {pos} (grammar: '|' or '(t,t,...)')"
        )
    pos += 1
    children = []
    while True:
        child, pos = _parse_tree_at(s, pos)
        children.append(child)
        if pos >= len(s):
            raise ValueError("unterminated '(' in tree literal")
        if s[pos] == ",":
            pos += 1
            continue
        if s[pos] == ")":
            pos += 1
            break
        raise ValueError(f"expected ',' or ')' at position {pos} in tree literal")
    if len(children) < 2:
        raise ValueError("internal vertices need >= 2 children")
    return PlanarTree(tuple(children)), pos


@lru_cache(maxsize=None)
def _trees_with_leaves(leaf_count: int) -> tuple[PlanarTree, ...]:
    if leaf_count == 1:
        return (LEAF,)
    out = []
    for k in range(2, leaf_count + 1):
        for comp in compositions(leaf_count, k):
            for combo in itertools.product(*(_trees_with_leaves(c) for c in comp)):
                out.append(PlanarTree(combo))
    return tuple(out)


def enumerate_planar_trees(leaf_count: int) -> list[PlanarTree]:
    """All planar trees with the given number of leaves.

    Order is recursive-lexicographic: by root arity, then by the leaf
    composition of the children (lexicographic), then recursively.
    Counts are the super-Catalan numbers 1, 1, 3, 11, 45, 197, ...
    """
    if leaf_count < 1:
        raise ValueError("leaf_count must be >= 1")
    return list(_trees_with_leaves(leaf_count))


def compositions(total: int, parts: int):
    """Yield all ordered tuples of ``parts`` positive ints summing to total."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


# =====================================================================
# leaf bookkeeping on trees
# =====================================================================


class LeafOrientation(Enum):
    LEFT = "left"
    RIGHT = "right"
    MIDDLE = "middle"


def leaf_orientation(t: PlanarTree, i: int) -> LeafOrientation:
    """Orientation of leaf i (1-based, left to right).

    A leaf is LEFT if it is the first child of its parent, RIGHT if the
    last, MIDDLE otherwise.
    """
    if t.is_leaf:
        raise ValueError("the one-leaf tree has no oriented leaves")
    if not 1 <= i <= t.leaves:
        raise ValueError(f"leaf index {i} out of range 1..{t.leaves}")
    acc = 0
    for idx, child in enumerate(t.children):
        if i <= acc + child.leaves:
            if child.is_leaf:
                if idx == 0:
                    return LeafOrientation.LEFT
                if idx == len(t.children) - 1:
                    return LeafOrientation.RIGHT
                return LeafOrientation.MIDDLE
            return leaf_orientation(child, i - acc)
        acc += child.leaves
    raise AssertionError("unreachable")


def remove_leaf(t: PlanarTree, i: int) -> PlanarTree:
    """Delete leaf i; a vertex left with a single child is contracted away."""
    if t.is_leaf:
        raise ValueError("cannot remove the only leaf")
    if not 1 <= i <= t.leaves:
        raise ValueError(f"leaf index {i} out of range 1..{t.leaves}")
    acc = 0
    for idx, child in enumerate(t.children):
        if i <= acc + child.leaves:
            if child.is_leaf:
                rest = t.children[:idx] + t.children[idx + 1 :]
                if len(rest) == 1:
                    return rest[0]
                return PlanarTree(rest)
            new_child = remove_leaf(child, i - acc)
            return PlanarTree(t.children[:idx] + (new_child,) + t.children[idx + 1 :])
        acc += child.leaves
    raise AssertionError("unreachable")


# =====================================================================
# cube cells
# =====================================================================


@dataclass(frozen=True)
class CubeCell:
    """Word over {0,1,*}; words of length n-1 are the cells of an (n-1)-cube."""

    word: str

    def __post_init__(self) -> None:
        if any(ch not in "01*" for ch in self.word):
            raise ValueError(f"cube word may only contain 0, 1, * (got {self.word!r})")

    @property
    def arity(self) -> int:
        return len(self.word) + 1

    @property
    def degree(self) -> int:
        return self.word.count("*")

    def literal(self) -> str:
        return self.word

    def __str__(self) -> str:
        return self.word


def parse_cube_cell(text: str) -> CubeCell:
    """Parse a raw word over {0,1,*}; the empty word is the arity-1 cell."""
    return CubeCell(text.strip())


def enumerate_cube_cells(n: int) -> list[CubeCell]:
    """All 3^(n-1) cells of the (n-1)-cube, words in product order over 0,1,*."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [CubeCell("".join(w)) for w in itertools.product("01*", repeat=n - 1)]
