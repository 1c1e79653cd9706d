"""Text and DOT rendering of schemes and paintings."""

from __future__ import annotations

from .diagram_core import CartanScheme, Marks, compute_marks
from .painted import CompactDiagram, PaintedDiagram


def _bond_text(aij: int, aji: int, toward_right: bool) -> str:
    """Bond between consecutive chain nodes; arrows point at the short root."""
    if aij == -1 and aji == -1:
        return "---"
    mult = max(-aij, -aji)
    if aij == aji:
        return f"={mult}="
    right_is_short = aji < aij  # entry(right, left) more negative
    if not toward_right:
        right_is_short = not right_is_short
    return f"={mult}=>" if right_is_short else f"<={mult}="


def _node_token(node: int, color: str | None, mark: int | None) -> str:
    head = "#" if color == "black" else "o"
    return f"{head}{node}" + (f"[{mark}]" if mark is not None else "")


def ascii_diagram(scheme: CartanScheme, color=None, marks: Marks | None = None) -> str:
    """One-line chain with branch and cycle annotations.

    '#' marks black nodes, 'o' white ones; '[k]' is the mark.  Arrows on
    multiple bonds point at the shorter root.
    """
    color_map = {}
    if color is not None:
        seq = color if not isinstance(color, dict) else [color[v] for v in scheme.nodes]
        color_map = dict(zip(scheme.nodes, seq))
    mark_map = marks.as_dict() if marks is not None else {}

    degrees = {v: len(scheme.neighbors(v)) for v in scheme.nodes}
    is_cycle = scheme.n >= 3 and all(d == 2 for d in degrees.values())
    if is_cycle:
        start = min(scheme.nodes)
        chain = [start, min(scheme.neighbors(start))]
        while len(chain) < scheme.n:
            nxt = [v for v in scheme.neighbors(chain[-1]) if v != chain[-2]]
            chain.append(nxt[0])
        closing = f"cycle closes: {chain[-1]} --- {chain[0]}"
    else:
        chain = _longest_path(scheme)
        closing = ""

    def token(v: int) -> str:
        return _node_token(v, color_map.get(v), mark_map.get(v))

    def run_text(run: list[int], with_first_token: bool) -> str:
        parts = [token(run[0])] if with_first_token else []
        for prev, cur in zip(run, run[1:]):
            parts.append(_bond_text(scheme.entry(prev, cur), scheme.entry(cur, prev), True))
            parts.append(token(cur))
        return " ".join(parts)

    rendered = set(chain)
    lines = [run_text(chain, True)]
    for v in chain:
        for w in sorted(scheme.neighbors(v)):
            if w in rendered:
                continue
            branch = [v, w]
            rendered.add(w)
            while True:
                nxt = [x for x in sorted(scheme.neighbors(branch[-1])) if x not in rendered]
                if len(nxt) != 1:
                    break
                branch.append(nxt[0])
                rendered.add(nxt[0])
            lines.append(f"  branch at {v}: {run_text(branch, False)}")
    for v in scheme.nodes:
        # safety net for shapes outside the catalog
        if v not in rendered:
            lines.append(f"  node {token(v)} with edges to {sorted(scheme.neighbors(v))}")
            rendered.add(v)
    if closing:
        lines.append(f"  {closing}")
    return "\n".join(lines)


def _longest_path(scheme: CartanScheme) -> list[int]:
    def farthest(start: int) -> list[int]:
        best = [start]
        stack = [[start]]
        while stack:
            path = stack.pop()
            extended = False
            for w in sorted(scheme.neighbors(path[-1])):
                if w not in path:
                    stack.append(path + [w])
                    extended = True
            if not extended and (len(path), path) > (len(best), best):
                best = path
        return best

    first = farthest(min(scheme.nodes))
    return farthest(first[-1])


def to_dot(obj: CartanScheme | PaintedDiagram | CompactDiagram) -> str:
    """DOT export: black nodes filled, multiplicity as parallel edges,
    node labels carry the marks."""
    if isinstance(obj, PaintedDiagram):
        scheme, color, marks = obj.scheme, obj.color, obj.marks
    elif isinstance(obj, CompactDiagram):
        scheme, color, marks = obj.scheme, None, None
    else:
        scheme, color = obj, None
        marks = compute_marks(scheme) if scheme.kind == "affine" else None
    mark_map = marks.as_dict() if marks is not None else {}
    lines = [
        "digraph scheme {",
        "  rankdir=LR;",
        '  node [shape=circle, fontsize=10];',
    ]
    for i, v in enumerate(scheme.nodes):
        label = str(v) if v not in mark_map else f"{v} (a={mark_map[v]})"
        attrs = [f'label="{label}"']
        if color is not None and color[i] == "black":
            attrs += ["style=filled", "fillcolor=black", "fontcolor=white"]
        lines.append(f'  n{v} [{", ".join(attrs)}];')
    for i, j, aij, aji in scheme.bonds():
        mult = max(-aij, -aji)
        if aij == aji:
            src, dst, head = i, j, "none"
        elif aij < aji:
            src, dst, head = j, i, "normal"  # arrow into the short root i
        else:
            src, dst, head = i, j, "normal"
        for _ in range(mult):
            lines.append(f"  n{src} -> n{dst} [arrowhead={head}];")
    lines.append("}")
    return "\n".join(lines)
