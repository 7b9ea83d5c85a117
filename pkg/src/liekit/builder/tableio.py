"""The `lie-structure v1` text format.

    # lie-structure v1 <name> dim=<d>
    i j k num den

One line per stored bracket component: [e_i, e_j] has component
(num/den) e_k, with 0-based indices, i < j, lines sorted by (i, j, k).
Import rebuilds a StructureTable (labels regenerate as e_<index>) and the
caller decides whether to re-verify.
"""

from __future__ import annotations

from fractions import Fraction

from .tables import StructureTable

HEADER_PREFIX = "# lie-structure v1 "


class FormatError(ValueError):
    pass


def dump_table(table: StructureTable) -> str:
    lines = [f"{HEADER_PREFIX}{table.name} dim={table.dim}"]
    rows = []
    for (i, j), comps in table.brackets.items():
        for k, c in comps:
            rows.append((i, j, k, c.numerator, c.denominator))
    rows.sort()
    lines.extend(f"{i} {j} {k} {num} {den}" for i, j, k, num, den in rows)
    return "\n".join(lines) + "\n"


def load_table(text: str) -> StructureTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise FormatError("missing 'lie-structure v1' header")
    head = lines[0][len(HEADER_PREFIX):].rsplit(" dim=", 1)
    if len(head) != 2:
        raise FormatError("malformed header")
    name = head[0].strip()
    try:
        dim = int(head[1])
    except ValueError as e:
        raise FormatError("malformed dim") from e
    brackets: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 5:
            raise FormatError(f"malformed line: {ln!r}")
        i, j, k, num, den = (int(p) for p in parts)
        if not (0 <= i < j < dim) or not (0 <= k < dim):
            raise FormatError(f"indices out of range: {ln!r}")
        if den <= 0:
            raise FormatError(f"denominator must be positive: {ln!r}")
        brackets.setdefault((i, j), []).append((k, Fraction(num, den)))
    labels = tuple(f"e_{i}" for i in range(dim))
    return StructureTable(dim, name, labels,
                          {k: tuple(v) for k, v in brackets.items()})
