"""Text renderings of generated graphs: ``u v kind`` edge lists and Graphviz DOT."""

from __future__ import annotations

from . import sierpinski
from .sierpinski import EdgeKind
from .triangle import TriangleGraph


def sierpinski_edgelist(n: int, cap: int = sierpinski.ENUM_CAP) -> str:
    lines = [f"{u} {v} {kind.value}" for u, v, kind in sierpinski.edges(n, cap)]
    return "".join(line + "\n" for line in lines)


def sierpinski_dot(n: int, cap: int = sierpinski.ENUM_CAP) -> str:
    out = [f"graph S{n} {{"]
    for s in sierpinski.vertices(n, cap):
        out.append(f'  "{s}";')
    for u, v, kind in sierpinski.edges(n, cap):
        style = "solid" if kind is EdgeKind.CLIQUE else "dashed"
        out.append(f'  "{u}" -- "{v}" [style={style}];')
    out.append("}")
    return "\n".join(out) + "\n"


def triangle_edgelist(g: TriangleGraph) -> str:
    # every edge of the triangle graph is the image of a clique edge
    return "".join(f"{u} {v} {EdgeKind.CLIQUE.value}\n" for u, v in g.edges())


def triangle_dot(g: TriangleGraph) -> str:
    out = [f"graph ST{g.n} {{"]
    for v in g.vertices:
        attrs = " [shape=box, label=\"p:{}\"]".format(v.corner) if v.is_primitive else ""
        out.append(f'  "{v}"{attrs};')
    for u, v in g.edges():
        out.append(f'  "{u}" -- "{v}";')
    out.append("}")
    return "\n".join(out) + "\n"
