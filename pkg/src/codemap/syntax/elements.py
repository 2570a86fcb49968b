"""Code elements: expression, statement and method spans over a stream."""

from __future__ import annotations

from dataclasses import dataclass

from .normalize import EnrichedTokenStream
from .tree import SyntaxTree

STATEMENT_KINDS = {"decl_stmt", "expr_stmt", "if_stmt", "loop", "return_stmt"}

GRANULARITIES = ("expression", "statement", "method")


@dataclass(frozen=True)
class CodeElement:
    granularity: str  # expression | statement | method
    start: int
    end: int
    token_indices: tuple[int, ...]
    label: str

    def __post_init__(self):
        if self.granularity not in GRANULARITIES:
            raise ValueError(f"bad granularity: {self.granularity}")
        if not self.token_indices:
            raise ValueError("element owns no tokens")
        if any(b <= a for a, b in zip(self.token_indices,
                                      self.token_indices[1:])):
            raise ValueError("token indices must be strictly increasing")


def extract_elements(tree: SyntaxTree,
                     stream: EnrichedTokenStream) -> list[CodeElement]:
    """One element per expr, statement and method node, in pre-order.

    Each element owns the contiguous token range its node produced,
    including the node's own structural keywords.  Nodes that produced no
    tokens are skipped.
    """
    if stream.tokens and not stream.node_ranges:
        raise ValueError("stream carries no node ranges; it was not "
                         "produced by normalize() on this tree")
    elements: list[CodeElement] = []
    for node in tree.root.walk():
        if node.kind == "expr":
            granularity, label = "expression", "expr"
        elif node.kind in STATEMENT_KINDS:
            granularity, label = "statement", node.kind
        elif node.kind == "func_decl":
            granularity = "method"
            label = node.meta.get("signature", node.meta.get("name", "?"))
        else:
            continue
        lo, hi = stream.node_ranges.get(id(node), (0, 0))
        if hi <= lo:
            continue
        elements.append(CodeElement(granularity, node.start, node.end,
                                    tuple(range(lo, hi)), label))
    return elements


def write_elements(elements, path, comments=()) -> None:
    """Element TSV: granularity, span, inclusive token range, label."""
    lines = [f"# {c}" for c in comments]
    for e in elements:
        lines.append("\t".join((e.granularity, str(e.start), str(e.end),
                                str(e.token_indices[0]),
                                str(e.token_indices[-1]), e.label)))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + ("\n" if lines else ""))


def read_elements(path) -> list[CodeElement]:
    elements: list[CodeElement] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 6:
                raise ValueError(f"{path}:{lineno}: expected 6 fields, "
                                 f"got {len(parts)}")
            granularity, start, end, first, last, label = parts
            elements.append(CodeElement(
                granularity, int(start), int(end),
                tuple(range(int(first), int(last) + 1)), label))
    return elements
