"""Reference trees used throughout the test suite and shipped with the CLI.

Each entry is the tree text format; N padding is implicit. Orders are
ascending label lists (N appended as greatest when absent).
"""

from __future__ import annotations

from pathlib import Path

from .trees import Tree, parse_tree

TREES: dict[str, str] = {
    # leaf-distribution comparison
    "T_1": "X(X(X,Y),X(X,Y))",
    "T_2": "Y(Y(X,Y),Y(X,Y))",
    "T_3": "Z(Z(X,X),Z(Y,Y))",
    # topology comparison
    "T_4": "X(X(X))",
    "T_5": "X(Y(Y))",
    "T_6": "X(Z(Z,Z),Z(Z,Z))",
    # perturbation comparison
    "T_7": "Z(X,Y(Z(X,Y)))",
    "T_8": "Z(X,Y(Z(X,Z)))",
    "T_9": "X(Y,Z(X(X,X)))",
    "T_10": "Z(Z,Y(Z(X,Y)))",
    "T_11": "X(Z(X,Y(Z(X,Y))))",
    # completion examples
    "T_12": "X(Y,Z(Y,Z))",
    "T_13": "Y(Y)",
    # lock-mark examples
    "T_14": "X(Y,Z(X,Y))",
    "T_15": "X*(Y,Z*(Y,X))",
    "T_16": "X*(Z*(X,Y),Y)",
    # developmental trees
    "T_A": "W(X(W(W,W),W(W,W)),Z(Z(S,S),Z(Z,Z)))",
    "T_S": "X(X(W(X,X),W(X,X)),X(W(W,W),W(W,W)))",
    # one equivalence class, four embeddings
    "EQ_1": "X(Y,Z(X,Y))",
    "EQ_2": "X(Y,Z(Y,X))",
    "EQ_3": "X(Z(X,Y),Y)",
    "EQ_4": "X(Z(Y,X),Y)",
}

ORDERS: dict[str, list[str]] = {
    "NXYZ": ["Z", "Y", "X", "N"],
    "ZXWS": ["Z", "X", "W", "S"],
}

# (pair) -> (D_BM, D_LR, largest common forest, D_BU, largest common subtree, D_ST)
TABLE: dict[tuple[str, str], tuple[int, int, int, str, int, str]] = {
    ("T_1", "T_2"): (3, 3, 4, "3/7", 1, "6/7"),
    ("T_1", "T_3"): (5, 5, 4, "3/7", 1, "6/7"),
    ("T_2", "T_3"): (5, 5, 4, "3/7", 1, "6/7"),
    ("T_4", "T_5"): (2, 2, 0, "1", 0, "1"),
    ("T_4", "T_6"): (6, 6, 0, "1", 0, "1"),
    ("T_5", "T_6"): (6, 6, 0, "1", 0, "1"),
    ("T_7", "T_8"): (1, 1, 2, "2/3", 1, "5/6"),
    ("T_7", "T_9"): (5, 5, 3, "1/2", 1, "5/6"),
    ("T_7", "T_10"): (1, 8, 4, "1/3", 4, "1/3"),
    ("T_7", "T_11"): (9, 9, 6, "1/7", 6, "1/7"),
    ("T_8", "T_9"): (5, 5, 2, "2/3", 1, "5/6"),
    ("T_8", "T_10"): (2, 8, 2, "2/3", 1, "5/6"),
    ("T_8", "T_11"): (8, 8, 2, "5/7", 1, "6/7"),
    ("T_9", "T_10"): (5, 7, 2, "2/3", 1, "5/6"),
    ("T_9", "T_11"): (7, 7, 3, "4/7", 1, "6/7"),
    ("T_10", "T_11"): (9, 10, 4, "3/7", 4, "3/7"),
}


def tree(name: str) -> Tree:
    return parse_tree(TREES[name])


def write_fixtures(directory) -> list[Path]:
    """Write every tree as ``<name>.tree`` and every order as ``<name>.order``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in TREES.items():
        path = directory / f"{name}.tree"
        path.write_text(text + "\n", encoding="utf-8")
        written.append(path)
    for name, order in ORDERS.items():
        path = directory / f"{name}.order"
        path.write_text("\n".join(order) + "\n", encoding="utf-8")
        written.append(path)
    return written
