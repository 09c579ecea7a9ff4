"""Homology engines: integer Smith normal form, generic rank over random
unit specializations, and combinatorial Betti counting.

Conventions.  Generic (fraction-field) quantities are approximated through
random unit specializations mod a large prime: matrix rank can only drop
under specialization, so ``generic_rank`` takes the maximum over trials;
homology dimension can only jump up, so ``generic_homology`` takes the
minimum.  Both are correct semicontinuous bounds and equal the exact
fraction-field values with probability >= 1 - deg/p per trial.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .complexes import ChainComplex, IntegerChainComplex, SparseRingMatrix
from .groupring import UnitSpecialization, random_specialization

DEFAULT_TRIALS = 5
FAST_PRIME = 1000003
VERIFY_PRIME = 2147483647


# ---------------------------------------------------------------------------
# Exact integer linear algebra


@dataclass(frozen=True)
class SnfResult:
    """Diagonal of the Smith normal form: d1 | d2 | .. with zeros trailing."""

    diagonal: tuple[int, ...]

    def nontrivial(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d not in (0, 1))

    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(M: list[list[int]]) -> SnfResult:
    """Classical SNF by unimodular row/column operations.

    Pivot selection: smallest absolute value, ties broken by sparsest
    row+column, which keeps coefficient growth tame on the sparse
    boundary matrices we feed it.
    """
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    size = min(rows, cols)
    if size == 0:
        return SnfResult(())

    def pick_pivot(t: int) -> tuple[int, int] | None:
        best = None
        where = None
        row_nnz = [sum(1 for x in A[i][t:] if x) for i in range(rows)]
        col_nnz = [sum(1 for i in range(t, rows) if A[i][j]) for j in range(cols)]
        for i in range(t, rows):
            if not row_nnz[i]:
                continue
            for j in range(t, cols):
                v = A[i][j]
                if v:
                    key = (abs(v), row_nnz[i] + col_nnz[j])
                    if best is None or key < best:
                        best = key
                        where = (i, j)
        return where

    t = 0
    while t < size:
        where = pick_pivot(t)
        if where is None:
            break
        pi, pj = where
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
            if any(A[i][t] for i in range(t + 1, rows)):
                continue
            # clear row t
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
            if any(A[t][j] for j in range(t + 1, cols)):
                continue
            break
        # pivot must divide the remaining submatrix
        v = A[t][t]
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if A[i][j] % v:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
            continue
        t += 1
    diag = [abs(A[i][i]) for i in range(size)]
    diag = sorted((d for d in diag if d)) + [0] * sum(1 for d in diag if not d)
    # safety net: the algorithm already guarantees the chain (each pivot divides
    # the remaining submatrix), but normalize to a fixpoint regardless
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if a and b and b % a:
                g = math.gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return SnfResult(tuple(diag))


def integer_rank(M: list[list[int]]) -> int:
    """Rank over Q via fraction-free (Bareiss) elimination."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [row[:] for row in M]
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                A[i][j] = (A[i][j] * A[r][c] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        if r == rows:
            break
    return r


def integer_matmul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    rows, mid = len(A), len(B)
    cols = len(B[0]) if mid else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Ai = A[i]
        Oi = out[i]
        for k in range(mid):
            a = Ai[k]
            if a:
                Bk = B[k]
                for j in range(cols):
                    if Bk[j]:
                        Oi[j] += a * Bk[j]
    return out


# ---------------------------------------------------------------------------
# Mod-p linear algebra (dense, small matrices)


def modp_rank(M: list[list[int]], p: int) -> int:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [[x % p for x in row] for row in M]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def modp_nullspace(M: list[list[int]], p: int, cols: int | None = None) -> list[list[int]]:
    """Basis of the kernel of M over F_p (column vectors as lists)."""
    rows = len(M)
    if cols is None:
        cols = len(M[0]) if rows else 0
    A = [[x % p for x in row] for row in M]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    pivot_set = set(pivots)
    basis = []
    for fc in range(cols):
        if fc in pivot_set:
            continue
        v = [0] * cols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-A[ri][fc]) % p
        basis.append(v)
    return basis


def modp_matvec(M: list[list[int]], v: list[int], p: int) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) % p for row in M]


def modp_rank_of_columns(columns: list[list[int]], p: int) -> int:
    if not columns:
        return 0
    rows = len(columns[0])
    M = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
    return modp_rank(M, p)


# ---------------------------------------------------------------------------
# Mod-2 linear algebra on column bitsets (fast enough for finite covers)


def mod2_columns(M: list[list[int]]) -> tuple[list[int], int]:
    """Columns of an integer matrix reduced mod 2, each column one bitset int."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    out = [0] * cols
    for i in range(rows):
        row = M[i]
        bit = 1 << i
        for j in range(cols):
            if row[j] & 1:
                out[j] |= bit
    return out, rows


def mod2_nullspace(columns: list[int], ncols: int) -> list[int]:
    """Kernel vectors over F_2, each as a bitset of source-column indices."""
    pivot_of_row: dict[int, tuple[int, int]] = {}
    kernel = []
    for j in range(ncols):
        c, combo = columns[j], 1 << j
        while c:
            r = c.bit_length() - 1
            if r in pivot_of_row:
                pc, pcombo = pivot_of_row[r]
                c ^= pc
                combo ^= pcombo
            else:
                pivot_of_row[r] = (c, combo)
                break
        else:
            kernel.append(combo)
    return kernel


def mod2_apply(columns: list[int], vector_bits: int) -> int:
    out = 0
    v = vector_bits
    while v:
        j = v.bit_length() - 1
        v ^= 1 << j
        out ^= columns[j]
    return out


def mod2_in_span(vectors: list[int], target: int) -> bool:
    pivots: dict[int, int] = {}
    for v in vectors:
        c = v
        while c:
            r = c.bit_length() - 1
            if r in pivots:
                c ^= pivots[r]
            else:
                pivots[r] = c
                break
    c = target
    while c:
        r = c.bit_length() - 1
        if r not in pivots:
            return False
        c ^= pivots[r]
    return True


# ---------------------------------------------------------------------------
# Reports


@dataclass
class DegreeEntry:
    degree: int
    rank: int
    torsion: tuple[int, ...] = ()


@dataclass
class HomologyReport:
    case: str
    params: dict
    method: str  # integer-snf | generic-rank | betti-count
    entries: list[DegreeEntry]
    prime: int | None = None
    trials: int | None = None
    seed: int | None = None

    @property
    def euler(self) -> int:
        return sum((-1) ** e.degree * e.rank for e in self.entries)

    def ranks(self) -> list[int]:
        return [e.rank for e in self.entries]

    def to_json_dict(self) -> dict:
        return {
            "case": self.case,
            "g": self.params.get("g", self.params.get("n")),
            "k": self.params.get("k"),
            "N": self.params.get("N"),
            "method": self.method,
            "prime": self.prime,
            "trials": self.trials,
            "seed": self.seed,
            "homology": [
                {"degree": e.degree, "rank": e.rank, "torsion": list(e.torsion)}
                for e in self.entries
            ],
            "euler": self.euler,
        }


@dataclass
class KernelBasis:
    """Mod-p vectors spanning ker d_k under one specialization."""

    degree: int
    prime: int
    columns: list[list[int]]

    @property
    def dim(self) -> int:
        return len(self.columns)


# ---------------------------------------------------------------------------
# Engines


def integer_free_ranks(ic: IntegerChainComplex) -> list[int]:
    """Free ranks of the homology of an integer complex, by exact Q-ranks only.

    Skips the Smith normal form (no torsion information): enough for Euler
    characteristics and rank-growth checks, and much faster on the larger
    finite covers.
    """
    n = len(ic.ranks)
    ranks = [0] * (n + 1)
    for i in range(1, n):
        ranks[i] = integer_rank(ic.boundaries[i])
    return [ic.ranks[i] - ranks[i] - ranks[i + 1] for i in range(n)]


def integer_homology(ic: IntegerChainComplex) -> HomologyReport:
    """Cellular homology of an integer complex: free ranks and torsion via SNF."""
    n = len(ic.ranks)
    for i in range(1, n - 1):
        lower, upper = ic.boundaries[i], ic.boundaries[i + 1]
        if lower and upper and lower[0] and upper[0]:
            prod = integer_matmul(lower, upper)
            if any(any(row) for row in prod):
                raise ValueError(f"boundary composite at degree {i + 1} is nonzero: builder bug")
    snfs: list[SnfResult | None] = [None] * (n + 1)
    for i in range(1, n):
        snfs[i] = smith_normal_form(ic.boundaries[i])
    entries = []
    for i in range(n):
        r_out = snfs[i].rank() if 1 <= i < n else 0
        r_in = snfs[i + 1].rank() if i + 1 < n else 0
        free = ic.ranks[i] - r_out - r_in
        torsion = snfs[i + 1].nontrivial() if i + 1 < n else ()
        entries.append(DegreeEntry(i, free, torsion))
    return HomologyReport(ic.case, dict(ic.params), "integer-snf", entries)


def _trial_specialization(ring, prime: int, seed: int, trial: int) -> UnitSpecialization:
    rng = random.Random(seed * 1000003 + trial)
    return random_specialization(ring, prime, rng)


def generic_rank(M: SparseRingMatrix, trials: int = DEFAULT_TRIALS, seed: int = 0,
                 prime: int = FAST_PRIME) -> int:
    """Max mod-p rank over seeded random unit specializations.

    A lower bound for, and with overwhelming probability equal to, the rank
    over the fraction field of the group ring.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    best = 0
    for t in range(trials):
        spec = _trial_specialization(M.ring, prime, seed, t)
        best = max(best, modp_rank(M.specialize(spec), prime))
    return best


def generic_homology(c: ChainComplex, trials: int = DEFAULT_TRIALS, seed: int = 0,
                     prime: int = FAST_PRIME, threads: int | None = None) -> HomologyReport:
    """Fraction-field homology dimensions via rank-nullity on specializations.

    Each trial uses one consistent specialization for every boundary; the
    per-degree results are aggregated by minimum over trials.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = len(c.modules)

    def one_trial(t: int) -> list[int]:
        spec = _trial_specialization(c.ctx.ring, prime, seed, t)
        ranks = [0] * (n + 1)
        for i in range(1, n):
            ranks[i] = modp_rank(c.boundaries[i].specialize(spec), prime)
        return [c.modules[i].rank - ranks[i] - ranks[i + 1] for i in range(n)]

    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_trial = list(pool.map(one_trial, range(trials)))
    else:
        per_trial = [one_trial(t) for t in range(trials)]
    dims = [min(tr[i] for tr in per_trial) for i in range(n)]
    entries = [DegreeEntry(i, dims[i]) for i in range(n)]
    return HomologyReport(c.case, dict(c.params), "generic-rank", entries,
                          prime=prime, trials=trials, seed=seed)


def kernel_basis(M: SparseRingMatrix, degree: int, spec: UnitSpecialization) -> KernelBasis:
    """Basis of ker(d_degree) under the given specialization."""
    cols = modp_nullspace(M.specialize(spec), spec.prime, cols=M.cols)
    return KernelBasis(degree, spec.prime, cols)


def betti_symmetric_power(g: int, k: int) -> list[int]:
    """Betti numbers of the k-th symmetric power of a genus-g surface.

    Counts cells of each internal degree with weight <= k (the differential
    of the base complex is trivial, so cells count homology).
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    top = 2 * k
    out = []
    for d in range(top + 1):
        total = 0
        for s in range(d // 2 + 1):
            j = d - 2 * s
            if j <= 2 * g and j + s <= k:
                total += math.comb(2 * g, j)
        out.append(total)
    return out


def euler_characteristic(g: int, k: int) -> int:
    """Alternating sum of the Betti numbers; equals (-1)^k * binom(2g-2, k)."""
    betti = betti_symmetric_power(g, k)
    return sum((-1) ** d * b for d, b in enumerate(betti))
