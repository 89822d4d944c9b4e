"""Free amalgams over a common part and their truncated completions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .completion import CompletionTrace, complete, geodesic_closure
from .graph import GraphError, IncidenceGraph, Verdict, girth, is_connected, is_embedding


class AmalgamError(GraphError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass
class AmalgamSpec:
    A: IncidenceGraph
    B: IncidenceGraph
    C: IncidenceGraph
    emb_b: Mapping
    emb_c: Mapping

    @classmethod
    def identity(cls, A: IncidenceGraph, B: IncidenceGraph, C: IncidenceGraph) -> "AmalgamSpec":
        """A spec where A's vertex ids are reused verbatim in B and C."""
        ident = {v: v for v in A.vertices}
        return cls(A, B, C, ident, dict(ident))

    def validate(self) -> None:
        if not (self.A.n == self.B.n == self.C.n):
            raise AmalgamError("GONALITY_MISMATCH", "A, B and C must share n")
        for side, emb, X in (("B", self.emb_b, self.B), ("C", self.emb_c, self.C)):
            if not is_embedding(emb, self.A, X):
                raise AmalgamError("NOT_EMBEDDING", f"map A -> {side} is not an injective part-preserving embedding")
            image = set(emb.values())
            if X.induced(image).num_edges != self.A.num_edges:
                raise AmalgamError("NOT_EMBEDDING", f"image of A in {side} has extra edges")


def _ids(spec: AmalgamSpec):
    """Carrier maps B -> amalgam and C -> amalgam."""
    inv_b = {w: v for v, w in spec.emb_b.items()}
    inv_c = {w: v for v, w in spec.emb_c.items()}
    to_b = {x: f"a.{inv_b[x]}" if x in inv_b else f"b.{x}" for x in spec.B.vertices}
    to_c = {x: f"a.{inv_c[x]}" if x in inv_c else f"c.{x}" for x in spec.C.vertices}
    return to_b, to_c


def free_amalgam(spec: AmalgamSpec) -> IncidenceGraph:
    """Pushout of B <- A -> C with no edges between the two new parts."""
    spec.validate()
    to_b, to_c = _ids(spec)
    parts = {}
    for X, to in ((spec.B, to_b), (spec.C, to_c)):
        for x, y in to.items():
            parts[y] = X.part(x)
    edges = {tuple(sorted((to_b[a], to_b[b]))) for a, b in spec.B.edges}
    edges |= {tuple(sorted((to_c[a], to_c[b]))) for a, b in spec.C.edges}
    return IncidenceGraph(spec.A.n, parts, sorted(edges))


def amalgam_images(spec: AmalgamSpec) -> tuple[frozenset, frozenset, frozenset]:
    """Vertex sets of the copies of A, B and C inside the free amalgam."""
    to_b, to_c = _ids(spec)
    return (frozenset(f"a.{v}" for v in spec.A.vertices), frozenset(to_b.values()), frozenset(to_c.values()))


@dataclass
class AmalgamResult:
    graph: IncidenceGraph
    trace: CompletionTrace
    flags: dict = field(default_factory=dict)


def canonical_amalgam(spec: AmalgamSpec, stages: int = 3, budget: int = 10**6) -> AmalgamResult:
    """Truncated completion of the free amalgam, with recorded precondition checks."""
    from .polygon import check_nondegenerate, is_open_over

    spec.validate()
    flags = {}
    for side, emb, X in (("B", spec.emb_b, spec.B), ("C", spec.emb_c, spec.C)):
        image = frozenset(emb.values())
        if not is_open_over(frozenset(X.vertices) - image, image, X).open:
            raise AmalgamError("NOT_OPEN_OVER", f"{side} is not open over the image of A")
        flags[f"A_GEODESICALLY_CLOSED_IN_{side}"] = geodesic_closure(X, image) == image
    g = free_amalgam(spec)
    a_img, b_img, c_img = amalgam_images(spec)
    for side, img in (("B", b_img), ("C", c_img)):
        if not is_open_over(frozenset(g.vertices) - img, img, g).open:
            raise AssertionError(f"amalgam is not open over {side}")
        flags[f"OPEN_OVER_{side}"] = True
    flags["DISCONNECTED"] = not is_connected(g)
    flags["GIRTH_OK"] = girth(g) >= 2 * g.n
    flags["NONDEGENERATE"] = check_nondegenerate(g, budget).verdict is Verdict.YES
    if not flags["GIRTH_OK"]:
        raise AmalgamError("GIRTH_VIOLATION", "the free amalgam has a cycle shorter than 2n")
    trace = complete(g, stages)
    flags["COMPLETE"] = trace.complete
    return AmalgamResult(g, trace, flags)


def is_free_amalgam_inside(g: IncidenceGraph, A, B, C) -> bool:
    """No edge of g joins B - A to C - A."""
    A, B, C = frozenset(A), frozenset(B), frozenset(C)
    if A != B & C:
        raise GraphError("A must equal the intersection of B and C")
    for v in (A | B | C):
        if v not in g:
            raise GraphError(f"{v} is not a vertex of the graph")
    only_c = C - A
    return not any(w in only_c for v in B - A for w in g.neighbors(v))


__all__ = [
    "AmalgamSpec", "AmalgamError", "AmalgamResult", "free_amalgam", "amalgam_images", "canonical_amalgam",
    "is_free_amalgam_inside",
]
