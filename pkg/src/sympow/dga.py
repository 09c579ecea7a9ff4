"""The graded-commutative differential graded algebra of cover chains.

Two cases share the machinery:

* surface case (genus g): exterior generators e1 < .. < eg < f1 < .. < fg
  over the ring Z[x1^,..,yg^], plus a divided-power generator.  We write
  ``g^(s)`` for the divided power of the 2-cell class, so ``g^(s)`` has
  internal degree 2s and filtration weight s, and products obey
  g^(a) * g^(b) = binomial(a+b, a) * g^(a+b).
* wedge case (arity n): exterior generators e1 < .. < en over Z[z1^,..,zn^]
  and no divided powers.

A monomial is a pair ``(mask, s)``: ``mask`` is the bitmask of exterior
generators present (bit i = i-th generator in the order above) and ``s``
is the divided-power index.  The boundary is the derivation determined by

    d(e_i) = 1 - x_i,   d(f_i) = 1 - y_i,   d(g^(s)) = lam * g^(s-1)

(wedge case: d(e_i) = 1 - z_i), where ``lam`` is the degree-1 element
sum_i ((1 - y_i) e_i - (1 - x_i) f_i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groupring import GroupRingElement, LaurentRing, surface_ring, wedge_ring

Monomial = tuple[int, int]


@dataclass(frozen=True)
class DgaContext:
    """Which algebra we are in: surface (with divided powers) or wedge."""

    case: str  # "surface" | "wedge"
    size: int  # genus g, or wedge arity n
    ring: LaurentRing

    @property
    def ngens(self) -> int:
        """Number of exterior generators: 2g for a surface, n for a wedge."""
        return 2 * self.size if self.case == "surface" else self.size

    def gen_name(self, i: int) -> str:
        if self.case == "wedge":
            return f"e{i + 1}"
        g = self.size
        return f"e{i + 1}" if i < g else f"f{i - g + 1}"


def surface_context(g: int) -> DgaContext:
    return DgaContext("surface", g, surface_ring(g))


def wedge_context(n: int) -> DgaContext:
    return DgaContext("wedge", n, wedge_ring(n))


def monomial_degree(m: Monomial) -> int:
    mask, s = m
    return mask.bit_count() + 2 * s


def monomial_weight(m: Monomial) -> int:
    mask, s = m
    return mask.bit_count() + s


def monomial_sort_key(m: Monomial) -> tuple:
    """Exterior masks by (size, lexicographic index tuple), then gamma index."""
    mask, s = m
    bits = tuple(i for i in range(mask.bit_length()) if mask >> i & 1)
    return (len(bits), bits, s)


def monomial_str(ctx: DgaContext, m: Monomial) -> str:
    mask, s = m
    factors = [ctx.gen_name(i) for i in range(ctx.ngens) if mask >> i & 1]
    if s:
        factors.append(f"g^({s})")
    return "*".join(factors) if factors else "1"


class DgaElement:
    """Finite Z[pi]-linear combination of monomials, in canonical sparse form."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: DgaContext, terms: dict[Monomial, GroupRingElement]):
        self.ctx = ctx
        self.terms = terms

    def _check_ctx(self, other: DgaElement) -> None:
        if self.ctx != other.ctx:
            raise ValueError(f"case mismatch: {self.ctx.case}({self.ctx.size}) vs {other.ctx.case}({other.ctx.size})")

    def __add__(self, other: DgaElement) -> DgaElement:
        self._check_ctx(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            v = c if v is None else v + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return DgaElement(self.ctx, terms)

    def __neg__(self) -> DgaElement:
        return DgaElement(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: DgaElement) -> DgaElement:
        return self + (-other)

    def __mul__(self, other: DgaElement | GroupRingElement | int) -> DgaElement:
        if isinstance(other, DgaElement):
            return dga_mul(self, other)
        terms = {}
        for m, c in self.terms.items():
            v = c * other
            if v:
                terms[m] = v
        return DgaElement(self.ctx, terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DgaElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"DgaElement({self.canonical_str()!r})"

    def degrees(self) -> set[int]:
        return {monomial_degree(m) for m in self.terms}

    def weights(self) -> set[int]:
        return {monomial_weight(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero element)."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else 0

    def canonical_str(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda m: (monomial_weight(m), monomial_degree(m), monomial_sort_key(m)))
        return " + ".join(f"({self.terms[m].canonical_str()}) * {monomial_str(self.ctx, m)}" for m in keys)


def monomial_elem(ctx: DgaContext, mask: int = 0, gamma: int = 0,
                  coeff: GroupRingElement | int = 1) -> DgaElement:
    if gamma and ctx.case != "surface":
        raise ValueError("divided powers exist only in the surface case")
    if gamma < 0:
        raise ValueError("divided-power index must be >= 0")
    if mask >> ctx.ngens:
        raise ValueError("mask uses generators beyond the context")
    if isinstance(coeff, int):
        coeff = ctx.ring.one() * coeff
    if not coeff:
        return DgaElement(ctx, {})
    return DgaElement(ctx, {(mask, gamma): coeff})


def ext_gen(ctx: DgaContext, i: int) -> DgaElement:
    """The i-th exterior generator (0-based, in the fixed generator order)."""
    if not 0 <= i < ctx.ngens:
        raise ValueError("generator index out of range")
    return monomial_elem(ctx, 1 << i)


def gamma_power(ctx: DgaContext, s: int) -> DgaElement:
    return monomial_elem(ctx, 0, s)


# Single sources of the boundary convention and the divided-power rule;
# the convention-flip tests patch these.

def _ext_boundary_coeff(ctx: DgaContext, i: int) -> GroupRingElement:
    return ctx.ring.one() - ctx.ring.gen(i)


def _gamma_product_coeff(a: int, b: int) -> int:
    return math.comb(a + b, a)


def _lambda_coeff(ctx: DgaContext, i: int) -> GroupRingElement:
    """Coefficient of the i-th exterior generator in lam."""
    g = ctx.size
    if i < g:
        return ctx.ring.one() - ctx.ring.gen(g + i)  # (1 - y_{i+1}) e_{i+1}
    return ctx.ring.gen(i - g) - ctx.ring.one()  # -(1 - x_{i+1}) f_{i+1}


def _merge_sign(m1: int, m2: int) -> int:
    """Koszul sign of sorting the concatenation of two disjoint masks."""
    inv = 0
    m = m2
    while m:
        i = (m & -m).bit_length() - 1
        inv += (m1 >> (i + 1)).bit_count()
        m &= m - 1
    return -1 if inv & 1 else 1


def dga_mul(a: DgaElement, b: DgaElement) -> DgaElement:
    """Graded-commutative product; zero on repeated exterior generators."""
    a._check_ctx(b)
    ctx = a.ctx
    terms: dict[Monomial, GroupRingElement] = {}
    for (m1, s1), c1 in a.terms.items():
        for (m2, s2), c2 in b.terms.items():
            if m1 & m2:
                continue
            coeff = c1 * c2
            if s1 or s2:
                coeff = coeff * _gamma_product_coeff(s1, s2)
            sign = _merge_sign(m1, m2)
            if sign < 0:
                coeff = -coeff
            key = (m1 | m2, s1 + s2)
            v = terms.get(key)
            v = coeff if v is None else v + coeff
            if v:
                terms[key] = v
            else:
                terms.pop(key, None)
    return DgaElement(ctx, terms)


def boundary(a: DgaElement) -> DgaElement:
    """The boundary derivation; lowers degree by 1 and preserves weight."""
    ctx = a.ctx
    terms: dict[Monomial, GroupRingElement] = {}

    def accumulate(key: Monomial, coeff: GroupRingElement) -> None:
        v = terms.get(key)
        v = coeff if v is None else v + coeff
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)

    for (mask, s), c in a.terms.items():
        sign = 1
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            coeff = c * _ext_boundary_coeff(ctx, i)
            accumulate((mask ^ (1 << i), s), coeff if sign > 0 else -coeff)
            sign = -sign
            m &= m - 1
        if s >= 1:
            # d(g^(s)) = lam * g^(s-1), carried past the exterior part
            lead = -1 if mask.bit_count() & 1 else 1
            for i in range(ctx.ngens):
                if mask >> i & 1:
                    continue
                msign = _merge_sign(mask, 1 << i) * lead
                coeff = c * _lambda_coeff(ctx, i)
                accumulate((mask | (1 << i), s - 1), coeff if msign > 0 else -coeff)
    return DgaElement(ctx, terms)


def lambda_element(g: int) -> DgaElement:
    """lam = sum_i ((1 - y_i) e_i - (1 - x_i) f_i); the boundary of the lifted 2-cell."""
    ctx = surface_context(g)
    terms = {(1 << i, 0): _lambda_coeff(ctx, i) for i in range(ctx.ngens)}
    return DgaElement(ctx, terms)


def sigma_element(g: int, m: int) -> DgaElement:
    """m-th elementary symmetric polynomial in the products e_i f_i.

    sigma_0 is the unit; valid range is 0 <= m <= g.
    """
    if not 0 <= m <= g:
        raise ValueError(f"sigma index {m} out of range 0..{g}")
    ctx = surface_context(g)
    if m == 0:
        return monomial_elem(ctx, 0, 0)
    import itertools

    out = DgaElement(ctx, {})
    for combo in itertools.combinations(range(g), m):
        term = monomial_elem(ctx, 0, 0)
        for i in combo:
            term = dga_mul(term, dga_mul(ext_gen(ctx, i), ext_gen(ctx, g + i)))
        out = out + term
    return out
