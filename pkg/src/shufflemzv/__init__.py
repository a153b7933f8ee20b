"""Exact shuffle-product engine and restricted decomposition formulas for multiple zeta values."""

from .algebra import (
    LinComb,
    ShuffleTooLarge,
    ZetaExpansion,
    concat,
    equal,
    shuffle,
    shuffle_blocks,
    shuffle_brute,
    shuffle_pivot,
    zeta_image,
)
from .words import (
    BlockWord,
    Composition,
    Letter,
    X0,
    X1,
    composition_to_word,
    from_blocks,
    is_admissible,
    parse_composition,
    parse_word,
    to_blocks,
    word_to_composition,
)

__all__ = [
    "BlockWord",
    "Composition",
    "Letter",
    "LinComb",
    "ShuffleTooLarge",
    "X0",
    "X1",
    "ZetaExpansion",
    "composition_to_word",
    "concat",
    "equal",
    "from_blocks",
    "is_admissible",
    "parse_composition",
    "parse_word",
    "shuffle",
    "shuffle_blocks",
    "shuffle_brute",
    "shuffle_pivot",
    "to_blocks",
    "word_to_composition",
    "zeta_image",
]
