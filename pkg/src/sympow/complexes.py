"""Builders for the chain complexes as based free modules with sparse matrices.

Every complex is stored chain-style: ``boundaries[i]`` is the matrix of the
map from degree i to degree i-1, columns indexed by the degree-i basis in
canonical order (column-major storage by source basis).

Cases:

* ``wedge``: the truncated complex of the symmetric powers of a wedge of
  n circles; degree-i basis is the i-subsets of e1..en.
* ``surface-cover``: the universal-cover complex of the k-th symmetric
  power of a genus-g surface; degree-i basis is all monomials of internal
  degree i and weight <= k.
* ``quotient-Q``: the multiplication-by-lam complex
  C_0 -> C_1 -> .. -> C_min(k,2g) on the exterior modules over the surface
  ring, stored reversed so boundaries lower the stored index; stored index
  j corresponds to cochain position (top - j).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable

from .dga import (
    DgaContext,
    DgaElement,
    Monomial,
    boundary,
    dga_mul,
    lambda_element,
    monomial_elem,
    monomial_sort_key,
    monomial_str,
    surface_context,
    wedge_context,
)
from .groupring import GroupRingElement, LaurentRing, UnitSpecialization, finite_quotient


@dataclass(frozen=True)
class BasedFreeModule:
    degree: int
    basis: tuple[Monomial, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


class SparseRingMatrix:
    """Sparse matrix with group-ring entries; rows = target, cols = source."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: LaurentRing, rows: int, cols: int,
                 entries: dict[tuple[int, int], GroupRingElement]):
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError("entry index out of range")
            if not v:
                raise ValueError("stored entries must be nonzero")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    def entry(self, r: int, c: int) -> GroupRingElement:
        return self.entries.get((r, c), self.ring.zero())

    def compose(self, other: SparseRingMatrix) -> SparseRingMatrix:
        """self @ other, for checking d o d = 0."""
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        acc: dict[tuple[int, int], GroupRingElement] = {}
        # group self's entries by column index for the middle sum
        self_by_col: dict[int, list[tuple[int, GroupRingElement]]] = {}
        for (r, c), v in self.entries.items():
            self_by_col.setdefault(c, []).append((r, v))
        for (m, c), v in other.entries.items():
            for r, w in self_by_col.get(m, ()):
                key = (r, c)
                cur = acc.get(key)
                cur = w * v if cur is None else cur + w * v
                if cur:
                    acc[key] = cur
                else:
                    acc.pop(key, None)
        return SparseRingMatrix(self.ring, self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self.entries

    def specialize(self, spec: UnitSpecialization) -> list[list[int]]:
        """Dense matrix of entrywise evaluations mod spec.prime."""
        M = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            M[r][c] = v.specialize(spec)
        return M

    def base_change(self, N: int) -> list[list[int]]:
        """Replace each entry by its finite-quotient block; ranks multiply by N^m."""
        bs = N ** self.ring.nvars
        M = [[0] * (self.cols * bs) for _ in range(self.rows * bs)]
        for (r, c), v in self.entries.items():
            block = finite_quotient(v, N)
            r0, c0 = r * bs, c * bs
            for a in range(bs):
                row = M[r0 + a]
                brow = block[a]
                for b in range(bs):
                    if brow[b]:
                        row[c0 + b] = brow[b]
        return M


@dataclass
class ChainComplex:
    case: str  # wedge | surface-cover | quotient-Q
    params: dict[str, int]
    ctx: DgaContext
    modules: list[BasedFreeModule]
    boundaries: list[SparseRingMatrix | None]  # boundaries[i]: degree i -> i-1; [0] is None

    @property
    def top_degree(self) -> int:
        return len(self.modules) - 1

    @property
    def ranks(self) -> list[int]:
        return [m.rank for m in self.modules]

    def boundary_matrix(self, i: int) -> SparseRingMatrix:
        if not 1 <= i <= self.top_degree:
            raise ValueError(f"degree {i} out of range 1..{self.top_degree}")
        return self.boundaries[i]


@dataclass
class IntegerChainComplex:
    """Base-changed complex: free Z-modules with integer boundary matrices."""

    case: str
    params: dict[str, int]
    ranks: list[int]
    boundaries: list[list[list[int]] | None]


@dataclass
class ModpChainComplex:
    """Specialized complex: F_p vector spaces with dense mod-p matrices."""

    case: str
    params: dict[str, int]
    prime: int
    ranks: list[int]
    boundaries: list[list[list[int]] | None]


def operator_matrix(src: tuple[Monomial, ...], tgt: tuple[Monomial, ...],
                    ring: LaurentRing, fn: Callable[[Monomial], DgaElement]) -> SparseRingMatrix:
    """Matrix of a monomial-wise operator in the given bases (column-major)."""
    index = {m: i for i, m in enumerate(tgt)}
    entries: dict[tuple[int, int], GroupRingElement] = {}
    for c, mono in enumerate(src):
        img = fn(mono)
        for m, coeff in sorted(img.terms.items(), key=lambda kv: index.get(kv[0], -1)):
            if m not in index:
                raise ValueError(f"operator image leaves the target basis: {m}")
            entries[(index[m], c)] = coeff
    return SparseRingMatrix(ring, len(tgt), len(src), entries)


def _exterior_basis(ctx: DgaContext, size: int) -> tuple[Monomial, ...]:
    masks = []
    for combo in itertools.combinations(range(ctx.ngens), size):
        mask = 0
        for i in combo:
            mask |= 1 << i
        masks.append((mask, 0))
    return tuple(sorted(masks, key=monomial_sort_key))


def build_wedge_complex(n: int, k: int) -> ChainComplex:
    """Truncated complex of Sym-powers of a wedge of n circles, degrees 0..k."""
    if n < 1:
        raise ValueError("arity must be >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"truncation k={k} out of range 0..{n} (no cells beyond degree n)")
    ctx = wedge_context(n)
    modules = [BasedFreeModule(i, _exterior_basis(ctx, i)) for i in range(k + 1)]
    boundaries: list[SparseRingMatrix | None] = [None]
    for i in range(1, k + 1):
        fn = lambda m: boundary(monomial_elem(ctx, m[0], 0))
        boundaries.append(operator_matrix(modules[i].basis, modules[i - 1].basis, ctx.ring, fn))
    return ChainComplex("wedge", {"n": n, "k": k}, ctx, modules, boundaries)


def cover_basis(g: int, k: int, degree: int) -> tuple[Monomial, ...]:
    """All monomials of internal degree ``degree`` and weight <= k."""
    ctx = surface_context(g)
    out = []
    for s in range(degree // 2 + 1):
        ext = degree - 2 * s
        if ext < 0 or ext > ctx.ngens or ext + s > k:
            continue
        for mono in _exterior_basis(ctx, ext):
            out.append((mono[0], s))
    return tuple(sorted(out, key=monomial_sort_key))


def build_cover_complex(g: int, k: int) -> ChainComplex:
    """Universal-cover complex of the k-th symmetric power of a genus-g surface.

    Degree-i basis: monomials of internal degree i and weight <= k; the top
    degree is derived from the enumeration (the last nonempty basis).
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    ctx = surface_context(g)
    bases = []
    degree = 0
    while True:
        basis = cover_basis(g, k, degree)
        if not basis:
            break
        bases.append(basis)
        degree += 1
    modules = [BasedFreeModule(i, b) for i, b in enumerate(bases)]
    boundaries: list[SparseRingMatrix | None] = [None]
    for i in range(1, len(modules)):
        fn = lambda m: boundary(monomial_elem(ctx, m[0], m[1]))
        boundaries.append(operator_matrix(modules[i].basis, modules[i - 1].basis, ctx.ring, fn))
    return ChainComplex("surface-cover", {"g": g, "k": k}, ctx, modules, boundaries)


def lambda_matrix(g: int, size: int) -> SparseRingMatrix:
    """Matrix of left multiplication by lam from exterior degree ``size`` to ``size + 1``."""
    ctx = surface_context(g)
    lam = lambda_element(g)
    src = _exterior_basis(ctx, size)
    tgt = _exterior_basis(ctx, size + 1)
    fn = lambda m: dga_mul(lam, monomial_elem(ctx, m[0], 0))
    return operator_matrix(src, tgt, ctx.ring, fn)


def exterior_boundary_matrix(g: int, size: int) -> SparseRingMatrix:
    """Boundary from exterior degree ``size`` to ``size - 1`` over the surface ring.

    This is the wedge complex on the 2g one-cells in the surface labeling
    (the gamma-free part of the cover complex).
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    ctx = surface_context(g)
    src = _exterior_basis(ctx, size)
    tgt = _exterior_basis(ctx, size - 1)
    fn = lambda m: boundary(monomial_elem(ctx, m[0], 0))
    return operator_matrix(src, tgt, ctx.ring, fn)


def build_Q_complex(g: int, k: int) -> ChainComplex:
    """The lam-multiplication complex C_0 -> C_1 -> .. -> C_top, top = min(k, 2g).

    Stored reversed (chain-style) so the homology engines consume it
    uniformly: stored index j holds exterior degree (top - j), and
    ``boundaries[j]`` is multiplication by lam from exterior degree
    (top - j) to (top - j + 1).
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    ctx = surface_context(g)
    top = min(k, 2 * g)
    modules = [BasedFreeModule(j, _exterior_basis(ctx, top - j)) for j in range(top + 1)]
    boundaries: list[SparseRingMatrix | None] = [None]
    for j in range(1, top + 1):
        boundaries.append(lambda_matrix(g, top - j))
    return ChainComplex("quotient-Q", {"g": g, "k": k, "top": top}, ctx, modules, boundaries)


def boundary_matrix(c: ChainComplex, i: int) -> SparseRingMatrix:
    return c.boundary_matrix(i)


def base_change(c: ChainComplex, N: int) -> IntegerChainComplex:
    """Integer chain complex of the (Z/N)^m-cover; ranks multiply by N^m."""
    if N < 1:
        raise ValueError("N must be >= 1")
    bs = N ** c.ctx.ring.nvars
    ranks = [m.rank * bs for m in c.modules]
    boundaries: list[list[list[int]] | None] = [None]
    for i in range(1, len(c.modules)):
        boundaries.append(c.boundaries[i].base_change(N))
    params = dict(c.params)
    params["N"] = N
    return IntegerChainComplex(c.case, params, ranks, boundaries)


def specialize_complex(c: ChainComplex, spec: UnitSpecialization) -> ModpChainComplex:
    """Entrywise specialization; shapes preserved."""
    boundaries: list[list[list[int]] | None] = [None]
    for i in range(1, len(c.modules)):
        boundaries.append(c.boundaries[i].specialize(spec))
    return ModpChainComplex(c.case, dict(c.params), spec.prime, c.ranks, boundaries)


# ---------------------------------------------------------------------------
# Export format: SYMPOW-COMPLEX v1 (text) and a JSON mirror.

def _header_params(c: ChainComplex) -> tuple[str, int, int]:
    tag = {"wedge": "wedge", "surface-cover": "cover", "quotient-Q": "q"}[c.case]
    gval = c.params.get("g", c.params.get("n"))
    return tag, gval, c.params["k"]


def export_text(c: ChainComplex) -> str:
    tag, gval, k = _header_params(c)
    lines = [f"SYMPOW-COMPLEX v1 case={tag} g={gval} k={k} degrees={c.top_degree + 1}"]
    for mod in c.modules:
        lines.append(f"MODULE {mod.degree} rank={mod.rank}")
        for mono in mod.basis:
            lines.append(monomial_str(c.ctx, mono))
    for i in range(1, len(c.modules)):
        mat = c.boundaries[i]
        lines.append(f"BOUNDARY {i} entries={len(mat.entries)}")
        for (r, col) in sorted(mat.entries, key=lambda rc: (rc[1], rc[0])):
            lines.append(f"{r} {col} {mat.entries[(r, col)].canonical_str()}")
    return "\n".join(lines) + "\n"


def export_json_dict(c: ChainComplex) -> dict:
    tag, gval, k = _header_params(c)
    return {
        "format": "SYMPOW-COMPLEX",
        "version": 1,
        "case": tag,
        "g": gval,
        "k": k,
        "degrees": c.top_degree + 1,
        "modules": [
            {
                "degree": mod.degree,
                "rank": mod.rank,
                "basis": [monomial_str(c.ctx, mono) for mono in mod.basis],
            }
            for mod in c.modules
        ],
        "boundaries": [
            {
                "degree": i,
                "entries": [
                    [r, col, c.boundaries[i].entries[(r, col)].canonical_str()]
                    for (r, col) in sorted(c.boundaries[i].entries, key=lambda rc: (rc[1], rc[0]))
                ],
            }
            for i in range(1, len(c.modules))
        ],
    }


def export_json(c: ChainComplex) -> str:
    return json.dumps(export_json_dict(c), indent=2) + "\n"
