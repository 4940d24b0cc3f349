"""Finite simplicial complexes with labeled vertices and S_n vertex actions:
hypergraph matching complexes, p-cycle complexes via inflation, Quillen
complexes of symmetric groups, order complexes, links.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .permutations import (
    compose,
    conjugate_perm,
    identity,
    prime_order_elements,
)


@dataclass(frozen=True)
class CyclicGroupLabel:
    """Order-p cyclic subgroup generated by a p-cycle, keyed by its canonical
    generator: the lexicographically least power, written starting at the
    smallest moved point."""

    generator: tuple

    @property
    def support(self):
        return tuple(sorted(self.generator))

    def sort_key(self):
        return self.generator

    def to_json(self):
        return {"cycle": list(self.generator)}


@dataclass(frozen=True)
class SubgroupLabel:
    """Elementary abelian p-subgroup keyed by its sorted nonidentity elements
    (as permutation tuples); generators are a greedy canonical generating set."""

    elements: tuple
    generators: tuple = field(compare=False)

    @property
    def rank(self):
        return len(self.generators)

    def sort_key(self):
        return (len(self.elements), self.elements)

    def to_json(self):
        return {"generators": [list(g) for g in self.generators]}


def _label_json(label):
    if isinstance(label, (CyclicGroupLabel, SubgroupLabel)):
        return label.to_json()
    if isinstance(label, tuple):
        return [_label_json(x) for x in label]
    return label


def _freeze_label(obj):
    """Hashable default decoding of a JSON vertex label."""
    if isinstance(obj, list):
        return tuple(_freeze_label(x) for x in obj)
    if isinstance(obj, dict):
        return tuple(sorted((k, _freeze_label(v)) for k, v in obj.items()))
    return obj


class SnAction:
    """Simplicial action of S_n on a complex, given by a map on vertex labels."""

    __slots__ = ("n", "relabel")

    def __init__(self, n: int, relabel):
        self.n = n
        self.relabel = relabel  # relabel(sigma) -> (label -> label)

    def vertex_permutation(self, cx: "SimplicialComplex", sigma) -> tuple:
        mapper = self.relabel(sigma)
        return tuple(cx.vertex_index[mapper(lab)] for lab in cx.vertex_labels)


class SimplicialComplex:
    """Abstract complex on an ordered vertex list; stores every face
    (including the empty face) as a strictly increasing index tuple."""

    def __init__(self, vertex_labels, faces, name: str = "complex"):
        self.name = name
        self.vertex_labels = list(vertex_labels)
        self.vertex_index = {lab: i for i, lab in enumerate(self.vertex_labels)}
        if len(self.vertex_index) != len(self.vertex_labels):
            raise ValueError("vertex labels must be distinct")
        by_dim: dict[int, set] = {-1: {()}}
        for f in faces:
            f = tuple(f)
            if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
                raise ValueError(f"face {f} is not strictly increasing")
            by_dim.setdefault(len(f) - 1, set()).add(f)
        self.faces_by_dim = {
            d: sorted(by_dim[d]) for d in sorted(by_dim)
        }
        self._face_set = {f for fs in self.faces_by_dim.values() for f in fs}
        self._check_closed()
        self.action: SnAction | None = None
        self.base: SimplicialComplex | None = None
        self.deflation: tuple | None = None

    def _check_closed(self):
        for faces in self.faces_by_dim.values():
            for f in faces:
                for j in range(len(f)):
                    if f[:j] + f[j + 1 :] not in self._face_set:
                        raise ValueError(f"complex not closed under subsets at {f}")

    @classmethod
    def from_facets(cls, vertex_labels, facets, name: str = "complex"):
        seen = set()
        stack = [tuple(f) for f in facets]
        while stack:
            f = stack.pop()
            if f in seen:
                continue
            seen.add(f)
            for j in range(len(f)):
                stack.append(f[:j] + f[j + 1 :])
        return cls(vertex_labels, seen, name)

    @property
    def dim(self) -> int:
        return max(self.faces_by_dim)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    def faces(self, d: int) -> list[tuple]:
        return self.faces_by_dim.get(d, [])

    def all_faces(self):
        for d in sorted(self.faces_by_dim):
            yield from self.faces_by_dim[d]

    def has_face(self, f) -> bool:
        return tuple(f) in self._face_set

    def f_vector(self) -> tuple:
        return tuple(
            len(self.faces_by_dim[d]) for d in sorted(self.faces_by_dim)
        )

    def facets(self) -> list[tuple]:
        out = []
        for d, faces in self.faces_by_dim.items():
            bigger = self.faces_by_dim.get(d + 1, [])
            covered = {g[:j] + g[j + 1 :] for g in bigger for j in range(len(g))}
            out.extend(f for f in faces if f not in covered)
        return sorted(out, key=lambda f: (len(f), f))

    def face_image(self, perm: tuple, face: tuple):
        """Image face under a vertex permutation, with orientation sign."""
        image = sorted(perm[v] for v in face)
        sign = _sort_parity([perm[v] for v in face])
        return tuple(image), sign

    # -- text serialization --------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.dim} {self.n_vertices}"]
        for f in self.facets():
            lines.append(" ".join(str(v) for v in f))
        labels = json.dumps([_label_json(lab) for lab in self.vertex_labels])
        return "\n".join(lines) + "\n" + labels + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "complex", label_decoder=None):
        lines = text.strip().split("\n")
        _, nv = lines[0].split()
        decoder = label_decoder or _freeze_label
        labels = [decoder(l) for l in json.loads(lines[-1])]
        facets = []
        for line in lines[1:-1]:
            line = line.strip()
            facets.append(tuple(int(x) for x in line.split()) if line else ())
        return cls.from_facets(labels[: int(nv)], facets, name)

    def __repr__(self):
        return (f"SimplicialComplex({self.name}, dim={self.dim}, "
                f"f={self.f_vector()})")


def _sort_parity(values) -> int:
    """Parity sign of the permutation sorting `values` (assumed distinct)."""
    values = list(values)
    sign = 1
    for i in range(len(values)):
        m = min(range(i, len(values)), key=values.__getitem__)
        if m != i:
            values[i], values[m] = values[m], values[i]
            sign = -sign
    return sign


def _faces_from_masks(masks: list[int]) -> list[tuple]:
    """All index sets with pairwise disjoint bitmasks (includes the empty set)."""
    faces = [()]

    def extend(prefix, used, start):
        for j in range(start, len(masks)):
            if used & masks[j] == 0:
                face = prefix + (j,)
                faces.append(face)
                extend(face, used | masks[j], j + 1)

    extend((), 0, 0)
    return faces


def attach_matching_action(cx: SimplicialComplex, n: int):
    cx.action = SnAction(
        n, lambda sigma: lambda pset: tuple(sorted(sigma[x] for x in pset))
    )


def matching_complex(p: int, n: int) -> SimplicialComplex:
    """Faces are collections of pairwise disjoint p-subsets of {0..n-1}."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    vertices = [tuple(c) for c in combinations(range(n), p)]
    masks = [sum(1 << x for x in v) for v in vertices]
    cx = SimplicialComplex(
        vertices, _faces_from_masks(masks), name=f"matching(p={p},n={n})"
    )
    attach_matching_action(cx, n)
    return cx


def inflation(cx: SimplicialComplex, multiplicities) -> SimplicialComplex:
    """Replace vertex x_i by m_i copies (x_i, j); every version of a face is a
    face.  The deflating map (new vertex -> base vertex) is recorded."""
    if isinstance(multiplicities, int):
        multiplicities = [multiplicities] * cx.n_vertices
    mult = list(multiplicities)
    if len(mult) != cx.n_vertices or any(m < 1 for m in mult):
        raise ValueError("need one multiplicity >= 1 per vertex")
    labels = []
    copies: list[list[int]] = []
    for i, lab in enumerate(cx.vertex_labels):
        copies.append([])
        for j in range(mult[i]):
            copies[i].append(len(labels))
            labels.append((lab, j))
    faces = []
    for f in cx.all_faces():
        chosen = [()]
        for v in f:
            chosen = [c + (w,) for c in chosen for w in copies[v]]
        faces.extend(tuple(sorted(c)) for c in chosen)
    out = SimplicialComplex(labels, faces, name=f"inflated({cx.name})")
    out.base = cx
    out.deflation = tuple(cx.vertex_index[lab] for lab, _ in labels)
    return out


def _canonical_cycle(cycle: tuple) -> tuple:
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def _cyclic_subgroup_key(cycle: tuple) -> tuple:
    """Least power of the cycle, each written from its smallest element."""
    p = len(cycle)
    best = None
    for k in range(1, p):
        power = tuple(cycle[(i * k) % p] for i in range(p))
        power = _canonical_cycle(power)
        if best is None or power < best:
            best = power
    return best


def pcycle_complex(p: int, n: int) -> SimplicialComplex:
    """Vertices are the order-p cyclic subgroups of S_n generated by a
    p-cycle; faces are sets of them with pairwise disjoint supports.  This is
    the (p-2)!-fold inflation of the matching complex, with subgroup labels."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    labels = []
    for support in combinations(range(n), p):
        keys = set()
        for rest in permutations(support[1:]):
            keys.add(_cyclic_subgroup_key((support[0],) + rest))
        labels.extend(CyclicGroupLabel(k) for k in sorted(keys))
    labels.sort(key=lambda lab: lab.sort_key())
    masks = [sum(1 << x for x in lab.support) for lab in labels]
    cx = SimplicialComplex(
        labels, _faces_from_masks(masks), name=f"pcycle(p={p},n={n})"
    )
    attach_pcycle_action(cx, n)
    base = matching_complex(p, n)
    cx.base = base
    cx.deflation = tuple(base.vertex_index[lab.support] for lab in labels)
    return cx


def attach_pcycle_action(cx: SimplicialComplex, n: int):
    def relabel(sigma):
        def apply(lab):
            moved = tuple(sigma[x] for x in lab.generator)
            return CyclicGroupLabel(_cyclic_subgroup_key(moved))

        return apply

    cx.action = SnAction(n, relabel)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


_QUILLEN_DEFAULT_LIMIT = {2: 6, 3: 9, 5: 7}


def _perm_order_p_powers(g: tuple, p: int) -> list[tuple]:
    out = []
    cur = g
    for _ in range(p - 1):
        out.append(cur)
        cur = compose(cur, g)
    return out


def enumerate_elementary_abelian(p: int, n: int) -> list[SubgroupLabel]:
    """All nontrivial elementary abelian p-subgroups of S_n, BFS by rank."""
    gens_of_order_p = list(prime_order_elements(n, p))
    ident = identity(n)
    # rank 1
    seen: dict[tuple, SubgroupLabel] = {}
    for g in gens_of_order_p:
        elements = tuple(sorted(_perm_order_p_powers(g, p)))
        if elements not in seen:
            seen[elements] = SubgroupLabel(elements, (min(elements),))
    frontier = list(seen.values())
    result = list(frontier)
    while frontier:
        new: dict[tuple, SubgroupLabel] = {}
        for sub in frontier:
            members = set(sub.elements)
            for g in gens_of_order_p:
                if g in members:
                    continue
                if any(
                    compose(g, h) != compose(h, g) for h in sub.generators
                ):
                    continue
                elements = set(sub.elements)
                elements.update(
                    compose(h, gp)
                    for h in sub.elements + (ident,)
                    for gp in _perm_order_p_powers(g, p)
                )
                elements.discard(ident)
                key = tuple(sorted(elements))
                # |<H, g>| = p |H| when g commutes with and avoids H
                assert len(key) == (len(sub.elements) + 1) * p - 1
                if key not in new:
                    new[key] = SubgroupLabel(key, sub.generators + (g,))
        # canonical generators: rebuild greedily so the label does not depend
        # on which extension found the subgroup first
        frontier = [
            SubgroupLabel(key, _greedy_generators(key, p, ident))
            for key in sorted(new)
        ]
        result.extend(frontier)
    return sorted(result, key=lambda s: s.sort_key())


def _greedy_generators(elements: tuple, p: int, ident: tuple) -> tuple:
    gens: tuple = ()
    span = {ident}
    for g in elements:
        if g in span:
            continue
        gens = gens + (g,)
        span = {compose(a, b) for a in span for b in _perm_order_p_powers(g, p) + [ident]}
    return gens


def subgroup_from_generators(generators, p: int) -> SubgroupLabel:
    """Rebuild a canonical SubgroupLabel from commuting order-p generators."""
    gens = tuple(tuple(g) for g in generators)
    ident = identity(len(gens[0]))
    span = {ident}
    for g in gens:
        span = {
            compose(a, b) for a in span for b in _perm_order_p_powers(g, p) + [ident]
        }
    span.discard(ident)
    elements = tuple(sorted(span))
    return SubgroupLabel(elements, _greedy_generators(elements, p, ident))


def quillen_complex(p: int, n: int, allow_large: bool = False) -> SimplicialComplex:
    """Order complex of the poset of nontrivial elementary abelian
    p-subgroups of S_n, with the conjugation action."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    limit = _QUILLEN_DEFAULT_LIMIT.get(p, p + 2)
    if n > limit and not allow_large:
        raise ValueError(
            f"quillen_complex(p={p}) refuses n={n} > {limit}; "
            "pass allow_large=True to override"
        )
    subgroups = enumerate_elementary_abelian(p, n)
    poset = Poset(
        subgroups,
        lambda a, b: len(a.elements) < len(b.elements)
        and set(a.elements) <= set(b.elements),
    )
    cx = order_complex(poset, name=f"quillen(p={p},n={n})")
    attach_quillen_action(cx, n)
    return cx


def attach_quillen_action(cx: SimplicialComplex, n: int):
    def relabel(sigma):
        def apply(lab):
            elements = tuple(
                sorted(conjugate_perm(sigma, h) for h in lab.elements)
            )
            gens = tuple(conjugate_perm(sigma, h) for h in lab.generators)
            return SubgroupLabel(elements, gens)

        return apply

    cx.action = SnAction(n, relabel)


class Poset:
    """Finite poset: ordered element list plus a strict comparison."""

    def __init__(self, elements, less):
        self.elements = list(elements)
        self.less = less

    def __len__(self):
        return len(self.elements)


def face_poset(cx: SimplicialComplex) -> Poset:
    """Poset of nonempty faces ordered by inclusion."""
    elements = [f for f in cx.all_faces() if f]
    return Poset(elements, lambda a, b: len(a) < len(b) and set(a) <= set(b))


def order_complex(poset: Poset, name: str = "order complex") -> SimplicialComplex:
    """Chains of the poset as faces.  Vertices are sorted so that the index
    order is a linear extension; chains then have increasing indices."""
    elems = poset.elements
    m = len(elems)
    order = sorted(range(m), key=lambda i: (_rank_key(elems[i]), i))
    labels = [elems[i] for i in order]
    above = [[] for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            if poset.less(labels[a], labels[b]):
                above[a].append(b)
            elif poset.less(labels[b], labels[a]):
                raise ValueError(
                    "element sort order is not a linear extension of the poset"
                )
    faces = [()]

    def grow(chain):
        faces.append(chain)
        for j in above[chain[-1]]:
            grow(chain + (j,))

    for k in range(m):
        grow((k,))
    return SimplicialComplex(labels, faces, name=name)


def _rank_key(element):
    if isinstance(element, SubgroupLabel):
        return (len(element.elements), element.elements)
    if isinstance(element, tuple):
        return (len(element), element)
    return (0, element)


def barycentric_subdivision(cx: SimplicialComplex) -> SimplicialComplex:
    """Order complex of the face poset, inheriting the vertex action."""
    out = order_complex(face_poset(cx), name=f"subdivision({cx.name})")
    if cx.action is not None:
        base_action = cx.action

        def relabel(sigma):
            perm = base_action.vertex_permutation(cx, sigma)

            def apply(face):
                return tuple(sorted(perm[v] for v in face))

            return apply

        out.action = SnAction(base_action.n, relabel)
    return out


def link(cx: SimplicialComplex, face) -> SimplicialComplex:
    """Subcomplex of faces disjoint from `face` whose union with it is a face."""
    face = tuple(face)
    if not cx.has_face(face):
        raise ValueError(f"{face} is not a face")
    if not face:
        out = SimplicialComplex(cx.vertex_labels, cx.all_faces(), name=cx.name)
        out.action = cx.action
        return out
    fset = set(face)
    kept = []
    for g in cx.all_faces():
        if fset.isdisjoint(g) and cx.has_face(tuple(sorted(g + face))):
            kept.append(g)
    used = sorted({v for g in kept for v in g})
    reindex = {v: i for i, v in enumerate(used)}
    labels = [cx.vertex_labels[v] for v in used]
    faces = [tuple(reindex[v] for v in g) for g in kept]
    return SimplicialComplex(labels, faces, name=f"link({cx.name},{face})")
