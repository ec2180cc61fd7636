"""Coloring sphere vertices by homology classes of their double-cover lifts.

The model: the connect sum of r >= 2 copies of S^1 x S^2 is built from a
2r-holed 3-sphere by gluing boundary sphere 2i-1 to boundary sphere 2i
(i = 1..r); the glued spheres g_1..g_r generate H_2 with Z/2 coefficients.
Every essential sphere in the holed piece survives as a vertex of the
glued sphere graph, keeping its partition description and its nested-pair
adjacency, and its class is the mod-2 sum of g_{ceil(j/2)} over one block.

A connected double cover corresponds to a nonzero phi in GF(2)^r: take
two sheets (copies of the holed sphere) and glue the sheet-s copy of
boundary 2i-1 to the sheet-(s xor phi_i) copy of boundary 2i.  The cover
then has 2r glued spheres G_{i,s}, s the sheet of the copy of 2i-1, and
its H_2 is spanned by them modulo one relation per sheet (the boundary of
each sheet bounds).  A sphere vertex lifts once per sheet; the color f_a
assigns to each cover the set of the two lift classes.  Two disjoint
spheres must get different colors; this module verifies that exhaustively
and counts the color space the construction draws from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphcore import Graph
from .kneser import TwoBlockPartition, spherelike_partitions

__all__ = [
    "CutSystemModel",
    "DoubleCover",
    "GF2Vector",
    "GF2Quotient",
    "SphereColor",
    "ProperColoringReport",
    "CountReport",
    "LiftClassSet",
    "glued_sphere_graph",
    "homology_class",
    "enumerate_double_covers",
    "cover_h2",
    "lift_classes",
    "sphere_color",
    "sheet_swap",
    "class_label",
    "verify_coloring_proper",
    "homology_only_violations",
    "count_colors",
    "used_color_count",
]

MAX_R_ENUMERATE = 12

# a lift class set is a frozenset of canonical class bitmasks (1 or 2 of them)
LiftClassSet = frozenset


@dataclass(frozen=True)
class CutSystemModel:
    """Cut system with r glued spheres; boundary label pairing (2i-1, 2i)."""

    r: int

    def __post_init__(self):
        if not 2 <= self.r <= MAX_R_ENUMERATE:
            raise ValueError(f"r must be in 2..{MAX_R_ENUMERATE}, got {self.r}")

    @property
    def n_boundary(self) -> int:
        return 2 * self.r


@dataclass(frozen=True)
class GF2Vector:
    """Vector over GF(2) in a labeled basis, stored as a bitmask."""

    dim: int
    bits: int

    def __post_init__(self):
        if self.bits >> self.dim:
            raise ValueError(f"bits {self.bits:#x} out of range for dim {self.dim}")

    def __xor__(self, other: "GF2Vector") -> "GF2Vector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return GF2Vector(self.dim, self.bits ^ other.bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self):
        if not self.bits:
            return "0"
        return "+".join(f"g{i + 1}" for i in range(self.dim) if self.bits >> i & 1)


@dataclass(frozen=True)
class DoubleCover:
    """Connected double cover, indexed by nonzero phi in GF(2)^r."""

    r: int
    phi: tuple[int, ...]

    def __post_init__(self):
        if len(self.phi) != self.r:
            raise ValueError(f"phi has length {len(self.phi)}, expected {self.r}")
        if any(x not in (0, 1) for x in self.phi):
            raise ValueError(f"phi entries must be 0 or 1, got {self.phi}")
        if not any(self.phi):
            raise ValueError("phi = 0 gives the disconnected (trivial) cover")

    @property
    def bitstring(self) -> str:
        return "".join(map(str, self.phi))


def enumerate_double_covers(r: int) -> list[DoubleCover]:
    """All 2^r - 1 connected double covers, ascending by phi as a binary
    number with phi_1 the most significant bit."""
    if not 1 <= r <= MAX_R_ENUMERATE:
        raise ValueError(f"r must be in 1..{MAX_R_ENUMERATE}, got {r}")
    return [
        DoubleCover(r, tuple(m >> (r - i) & 1 for i in range(1, r + 1)))
        for m in range(1, 1 << r)
    ]


def _gen(i: int, s: int) -> int:
    # generator index of G_{i,s} in the cover basis, i is 1-based
    return 2 * (i - 1) + s


def class_label(bits: int, r: int) -> str:
    """Human-readable form of a cover class bitmask, "G1,0+G2,1" style."""
    if not bits:
        return "0"
    names = []
    for idx in range(2 * r):
        if bits >> idx & 1:
            names.append(f"G{idx // 2 + 1},{idx % 2}")
    return "+".join(names)


def _gf2_rref(vectors, dim: int) -> tuple[int, ...]:
    # reduced row echelon form over GF(2); rows keep mutually exclusive pivots
    rows: list[int] = []
    for v in vectors:
        if v >> dim:
            raise ValueError("relation out of range for declared dimension")
        for row in rows:
            if v & (row & -row):
                v ^= row
        if v:
            pivot = v & -v
            rows = [row ^ v if row & pivot else row for row in rows]
            rows.append(v)
    rows.sort(key=lambda row: row & -row)
    return tuple(rows)


@dataclass(frozen=True)
class GF2Quotient:
    """GF(2) space on 2r generators modulo a list of relations."""

    dim: int
    relations: tuple[int, ...]
    rows: tuple[int, ...]

    @classmethod
    def from_relations(cls, dim: int, relations) -> "GF2Quotient":
        relations = tuple(relations)
        return cls(dim, relations, _gf2_rref(relations, dim))

    @property
    def rank(self) -> int:
        return self.dim - len(self.rows)

    def canonical(self, bits: int) -> int:
        """Canonical coset representative: reduce by the echelon rows."""
        for row in self.rows:
            if bits & (row & -row):
                bits ^= row
        return bits


def sheet_relation(model: CutSystemModel, cover: DoubleCover, s: int) -> int:
    """Boundary relation of sheet s: sum over i of G_{i,s} + G_{i, s xor phi_i}."""
    bits = 0
    for i in range(1, model.r + 1):
        bits ^= 1 << _gen(i, s)
        bits ^= 1 << _gen(i, s ^ cover.phi[i - 1])
    return bits


def cover_h2(model: CutSystemModel, cover: DoubleCover) -> GF2Quotient:
    """H_2 of the double cover: 2r glued-sphere generators, one relation
    per sheet (the two relations coincide, so the rank is always 2r - 1)."""
    if cover.r != model.r:
        raise ValueError(f"cover has r={cover.r}, model has r={model.r}")
    rel = (sheet_relation(model, cover, 0), sheet_relation(model, cover, 1))
    return GF2Quotient.from_relations(2 * model.r, rel)


def homology_class(model: CutSystemModel, p: TwoBlockPartition) -> GF2Vector:
    """Class of the glued image of sphere p: sum of g_{ceil(j/2)} over a block.

    The complementary block gives the same class (the full sum hits every
    g_i twice), and the class is zero exactly when every pair (2i-1, 2i)
    sits inside one block, i.e. when the image separates.
    """
    if p.n != model.n_boundary:
        raise ValueError(f"partition is over {p.n} labels, model has {model.n_boundary}")
    bits = 0
    for j in p.block_a:
        bits ^= 1 << ((j - 1) // 2)
    return GF2Vector(model.r, bits)


def _sheet_lift_bits(model: CutSystemModel, cover: DoubleCover, p: TwoBlockPartition, s: int) -> int:
    # raw class of the sheet-s lift: sheet-s copies of the block_a boundaries
    bits = 0
    for j in p.block_a:
        i = (j + 1) // 2
        if j % 2:
            bits ^= 1 << _gen(i, s)
        else:
            bits ^= 1 << _gen(i, s ^ cover.phi[i - 1])
    return bits


def lift_classes(
    model: CutSystemModel,
    cover: DoubleCover,
    p: TwoBlockPartition,
    quotient: GF2Quotient | None = None,
) -> LiftClassSet:
    """Set of the (1 or 2) classes of the two lifts of p in the cover."""
    if quotient is None:
        quotient = cover_h2(model, cover)
    return frozenset(
        quotient.canonical(_sheet_lift_bits(model, cover, p, s)) for s in (0, 1)
    )


def _cut_lift_set(i: int, quotient: GF2Quotient) -> LiftClassSet:
    # the glued cut sphere g_i lifts to the two cover spheres G_{i,0}, G_{i,1}
    return frozenset(
        quotient.canonical(1 << _gen(i, s)) for s in (0, 1)
    )


@dataclass(frozen=True)
class SphereColor:
    """The color f_a: one LiftClassSet per connected double cover, in
    canonical cover order."""

    r: int
    entries: tuple[frozenset, ...]


def sphere_color(model: CutSystemModel, p: TwoBlockPartition) -> SphereColor:
    covers = enumerate_double_covers(model.r)
    return SphereColor(
        model.r,
        tuple(lift_classes(model, cover, p) for cover in covers),
    )


def sheet_swap(bits: int, r: int) -> int:
    """Deck transformation on a raw class: swap G_{i,0} with G_{i,1}."""
    out = 0
    for i in range(r):
        pair = bits >> (2 * i) & 3
        out |= ((pair >> 1) | ((pair & 1) << 1)) << (2 * i)
    return out


def glued_sphere_graph(model: CutSystemModel, include_cut_spheres: bool = False) -> Graph:
    """Sphere vertices of the glued manifold with nested-pair adjacency.

    Vertices and edges agree with sphere_graph_holed(2r): gluing keeps
    every vertex and every disjointness.  With ``include_cut_spheres`` the
    r cut spheres are appended as vertices g1..gr, adjacent to every
    partition vertex and to each other (all disjoint by construction).
    """
    from .spheres import sphere_graph_holed

    g = sphere_graph_holed(model.n_boundary)
    if not include_cut_spheres:
        return g
    labels = list(g.labels) + [f"g{i}" for i in range(1, model.r + 1)]
    edges = list(g.edges)
    base = g.n
    for a in range(model.r):
        for v in range(base + a):
            edges.append((v, base + a))
    return Graph(labels, edges)


def _color_tables(model: CutSystemModel, include_cut_spheres: bool):
    """Vertex labels, homology classes and per-cover lift sets, vertex order
    matching glued_sphere_graph."""
    covers = enumerate_double_covers(model.r)
    quotients = [cover_h2(model, cover) for cover in covers]
    parts = spherelike_partitions(model.n_boundary)
    labels: list[str] = []
    hom: list[int] = []
    tables: list[tuple] = []
    for p in parts:
        labels.append(p.label)
        hom.append(homology_class(model, p).bits)
        tables.append(
            tuple(
                frozenset(
                    q.canonical(_sheet_lift_bits(model, cover, p, s)) for s in (0, 1)
                )
                for cover, q in zip(covers, quotients)
            )
        )
    if include_cut_spheres:
        for i in range(1, model.r + 1):
            labels.append(f"g{i}")
            hom.append(1 << (i - 1))
            tables.append(tuple(_cut_lift_set(i, q) for q in quotients))
    return covers, labels, hom, tables


@dataclass(frozen=True)
class ProperColoringReport:
    r: int
    vertices: int
    edges: int
    violations: tuple
    homologous_pairs: tuple
    ok: bool

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "vertices": self.vertices,
            "edges": self.edges,
            "violations": [list(v) for v in self.violations],
            "homologous_pairs": [
                {"a": a, "b": b, "witness_phi": w} for a, b, w in self.homologous_pairs
            ],
            "ok": self.ok,
        }


def verify_coloring_proper(
    model: CutSystemModel, include_cut_spheres: bool = False
) -> ProperColoringReport:
    """Check that f gives different colors to every adjacent (disjoint) pair.

    For each adjacent pair with equal mod-2 homology the report records the
    first cover (in canonical order) whose lift sets split the pair; pairs
    with different homology are split in every cover, since the covering
    projection sends a lift class of a to the class of a.
    """
    if model.r < 3:
        raise ValueError(
            "verify_coloring_proper needs r >= 3; r = 2 is handled by the farey module"
        )
    g = glued_sphere_graph(model, include_cut_spheres)
    covers, labels, hom, tables = _color_tables(model, include_cut_spheres)
    assert list(g.labels) == labels
    violations = []
    homologous = []
    for i, j in g.sorted_edges:
        if tables[i] == tables[j]:
            violations.append((labels[i], labels[j]))
            continue
        if hom[i] == hom[j]:
            witness = next(
                covers[t].bitstring
                for t in range(len(covers))
                if tables[i][t] != tables[j][t]
            )
            homologous.append((labels[i], labels[j], witness))
    return ProperColoringReport(
        model.r,
        g.n,
        g.m,
        tuple(violations),
        tuple(homologous),
        not violations,
    )


def homology_only_violations(model: CutSystemModel) -> list[tuple[str, str, str]]:
    """Negative control: color by homology class alone, ignoring covers.

    Returns the adjacent pairs that collide, with the shared class; for
    r >= 3 this list is nonempty, which is what forces the covers into
    the construction.
    """
    g = glued_sphere_graph(model)
    parts = spherelike_partitions(model.n_boundary)
    hom = [homology_class(model, p) for p in parts]
    out = []
    for i, j in g.sorted_edges:
        if hom[i].bits == hom[j].bits:
            out.append((parts[i].label, parts[j].label, str(hom[i])))
    return out


@dataclass(frozen=True)
class CountReport:
    r: int
    rank_mode: str
    t: int
    m: int
    per_cover: int
    x: int
    log2_f: float
    bound_9r2r: int
    ok: bool
    note: str


def count_colors(r: int, rank_mode: str = "paper") -> CountReport:
    """Size of the color space: t = 2^r - 1 covers, per cover the sets of
    size 1 or 2 drawn from 2^m classes, f ranging over x^t functions.

    rank_mode "paper" takes the declared per-cover rank m = 4r - 2 and
    checks log2 |F| <= 9 r 2^r; rank_mode "computed" takes m = 2r - 1,
    the rank cover_h2 actually produces.  The modes disagree; the note
    field says so.
    """
    if not 2 <= r <= 16:
        raise ValueError(f"r must be in 2..16, got {r}")
    if rank_mode not in ("paper", "computed"):
        raise ValueError(f"rank_mode must be 'paper' or 'computed', got {rank_mode!r}")
    t = 2**r - 1
    m = 4 * r - 2 if rank_mode == "paper" else 2 * r - 1
    per_cover = 2**m + math.comb(2**m, 2)
    x = t * per_cover
    log2_f = t * math.log2(x)
    bound = 9 * r * 2**r
    ok = log2_f <= bound
    if rank_mode == "paper" and not ok:
        raise RuntimeError(
            f"count bound failed at r={r}: log2_f={log2_f} > {bound}"
        )
    note = (
        f"rank modes disagree: paper mode uses m=4r-2={4 * r - 2}, "
        f"computed cover homology gives m=2r-1={2 * r - 1}"
    )
    return CountReport(r, rank_mode, t, m, per_cover, x, log2_f, bound, ok, note)


def used_color_count(model: CutSystemModel) -> int:
    """Number of distinct f values over the sphere vertices (r <= 5)."""
    if model.r > 5:
        raise ValueError(f"used_color_count is exhaustive; r <= 5 required, got {model.r}")
    _, _, _, tables = _color_tables(model, include_cut_spheres=False)
    return len(set(tables))
