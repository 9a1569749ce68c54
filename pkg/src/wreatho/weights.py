"""Weight lattice Q^n for sl2^n, group actions, orbits and Kostant counting.

Weights are plain tuples of Fractions; the rank is the tuple length.  The
i-th simple root is 2*e_i, so mu <= lam iff every difference lam_i - mu_i is
a nonnegative even integer.

The acting group Gamma is a product of "blocks" on consecutive coordinates:
Young blocks S_{a} x S_{b} x ... (each size gets its own symmetric factor)
and cyclic blocks Z/m (rotation of m consecutive coordinates).  Stabilizers
of weights, and stabilizers of flip-subsets inside them, stay within the
same class: products of symmetric groups on position sets and rotation
subgroups of cyclic blocks.  That closure property is what GroupDesc below
encodes.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Weight = tuple  # tuple[Fraction, ...]
Perm = tuple  # tuple[int, ...]; p[i] is the image of coordinate i


# ---------------------------------------------------------------------------
# weights and the partial order


def parse_weight(text: str) -> Weight:
    """Parse "3,0,-1/2" into a tuple of Fractions."""
    parts = [p.strip() for p in text.split(",")]
    out = []
    for k, part in enumerate(parts):
        if not part:
            raise ValueError(
                f"malformed weight {text!r}: empty entry at position {k + 1}, "
                "expected a rational like 3 or -1/2"
            )
        try:
            out.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise ValueError(
                f"malformed weight {text!r}: bad entry {part!r} at position "
                f"{k + 1}, expected a rational like 3 or -1/2"
            ) from None
    return tuple(out)


def format_weight(lam: Weight) -> str:
    return ",".join(str(c) for c in lam)


def as_weight(coords: Iterable) -> Weight:
    lam = tuple(Fraction(c) for c in coords)
    if not lam:
        raise ValueError("rank must be >= 1")
    return lam


def check_same_rank(lam: Weight, mu: Weight) -> None:
    if len(lam) != len(mu):
        raise ValueError(f"rank mismatch: {len(lam)} vs {len(mu)}")


def is_even_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0 and x.numerator % 2 == 0


def leq(mu: Weight, lam: Weight) -> bool:
    """mu <= lam iff lam - mu lies in Z>=0 * {simple roots}."""
    check_same_rank(mu, lam)
    return all(is_even_nonneg_int(l - m) for m, l in zip(mu, lam))


def simple_roots(n: int) -> list[Weight]:
    """The simple roots of sl2^n: alpha_i = 2 e_i."""
    roots = []
    for i in range(n):
        v = [Fraction(0)] * n
        v[i] = Fraction(2)
        roots.append(tuple(v))
    return roots


def is_dominant_integral(lam: Weight) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in lam)


def flip_coord(c: Fraction) -> Fraction:
    """The rank-1 dot reflection c -> -c-2 (fixed point at -1)."""
    return -c - 2


def flip_subset(lam: Weight, t: frozenset | set) -> Weight:
    return tuple(flip_coord(c) if i in t else c for i, c in enumerate(lam))


def integral_flip_positions(lam: Weight) -> tuple[int, ...]:
    """I(lam): coordinates with a nontrivial Verma subquotient, lam_i in Z>=0."""
    return tuple(
        i for i, c in enumerate(lam) if c.denominator == 1 and c >= 0
    )


# ---------------------------------------------------------------------------
# signed permutations (the group S_n wr Z/2 with the twisted action)


@dataclass(frozen=True)
class SignedPermutation:
    """An element (sigma, w) of S_n wr (Z/2)^n.

    The twisted action is: flip coordinates in `flips` via c -> -c-2, then
    permute by `perm`.  Composition matches
    (sigma, w)(sigma', w') = (sigma sigma', sigma'^{-1}(w) . w').
    """

    perm: Perm
    flips: frozenset

    @staticmethod
    def identity(n: int) -> "SignedPermutation":
        return SignedPermutation(tuple(range(n)), frozenset())

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if len(self.perm) != len(other.perm):
            raise ValueError("rank mismatch")
        q_inv = perm_inverse(other.perm)
        moved = frozenset(q_inv[i] for i in self.flips)
        return SignedPermutation(
            perm_compose(self.perm, other.perm),
            moved ^ other.flips,
        )


def perm_compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_act(p: Perm, lam: Weight) -> Weight:
    """Coordinate permutation: (p . lam)_{p(i)} = lam_i."""
    out = [None] * len(lam)
    for i, c in enumerate(lam):
        out[p[i]] = c
    return tuple(out)


def dot_act(sw: SignedPermutation, lam: Weight) -> Weight:
    if len(sw.perm) != len(lam):
        raise ValueError("rank mismatch")
    flipped = flip_subset(lam, sw.flips)
    return perm_act(sw.perm, flipped)


# ---------------------------------------------------------------------------
# Gamma and structural subgroups


@dataclass(frozen=True)
class SymF:
    """Full symmetric group on a set of coordinate positions."""

    positions: tuple  # sorted tuple[int, ...], len >= 2

    @property
    def order(self) -> int:
        import math

        return math.factorial(len(self.positions))

    def elements(self) -> list[dict]:
        out = []
        for images in itertools.permutations(self.positions):
            out.append(dict(zip(self.positions, images)))
        return out

    def generators(self) -> list[dict]:
        ps = self.positions
        gens = []
        for a, b in zip(ps, ps[1:]):
            gens.append({a: b, b: a})
        return gens


@dataclass(frozen=True)
class CycF:
    """Cyclic rotation subgroup of order `order` on a block of positions.

    positions are in block order; the subgroup is generated by the rotation
    moving positions[t] to positions[(t + m/order) % m], m = len(positions).
    """

    positions: tuple
    order: int

    @property
    def step(self) -> int:
        return len(self.positions) // self.order

    def rotation(self, r: int) -> dict:
        m = len(self.positions)
        shift = (r * self.step) % m
        return {
            self.positions[t]: self.positions[(t + shift) % m]
            for t in range(m)
        }

    def elements(self) -> list[dict]:
        return [self.rotation(r) for r in range(self.order)]

    def generators(self) -> list[dict]:
        if self.order == 1:
            return []
        return [self.rotation(1)]


Factor = "SymF | CycF"


@dataclass(frozen=True)
class GroupDesc:
    """A product of SymF and CycF factors on disjoint position sets.

    Used both for Gamma itself and for every stabilizer that shows up.
    Factors of order one are never stored.
    """

    n: int
    factors: tuple

    @property
    def order(self) -> int:
        o = 1
        for f in self.factors:
            o *= f.order
        return o

    def is_trivial(self) -> bool:
        return not self.factors

    def generators(self) -> list[Perm]:
        gens = []
        for f in self.factors:
            for g in f.generators():
                gens.append(_mapping_to_perm(g, self.n))
        return gens

    def elements(self) -> list[Perm]:
        """All elements as permutation tuples.  Desk scale only."""
        perms = [tuple(range(self.n))]
        for f in self.factors:
            fac = [_mapping_to_perm(m, self.n) for m in f.elements()]
            perms = [perm_compose(p, q) for p in perms for q in fac]
        return perms

    def key(self) -> tuple:
        return tuple(
            ("S", f.positions) if isinstance(f, SymF) else ("C", f.positions, f.order)
            for f in self.factors
        )


def _mapping_to_perm(mapping: dict, n: int) -> Perm:
    return tuple(mapping.get(i, i) for i in range(n))


def group_desc(n: int, factors: Iterable) -> GroupDesc:
    kept = []
    for f in factors:
        if isinstance(f, SymF) and len(f.positions) < 2:
            continue
        if isinstance(f, CycF) and f.order < 2:
            continue
        kept.append(f)
    kept.sort(key=lambda f: f.positions[0])
    return GroupDesc(n, tuple(kept))


def is_subgroup(sub: GroupDesc, sup: GroupDesc) -> bool:
    """Structural containment: every sub-factor embeds in a sup-factor."""
    for f in sub.factors:
        parent = _parent_factor(f, sup)
        if parent is None:
            return False
    return True


def _parent_factor(f, sup: GroupDesc):
    """The sup-factor containing f, or None.

    SymF fits in a SymF with a superset of positions; CycF fits in a CycF on
    the identical block with order divisible by its own.
    """
    pos = set(f.positions)
    for g in sup.factors:
        gpos = set(g.positions)
        if isinstance(f, SymF) and isinstance(g, SymF) and pos <= gpos:
            return g
        if (
            isinstance(f, CycF)
            and isinstance(g, CycF)
            and f.positions == g.positions
            and g.order % f.order == 0
        ):
            return g
    return None


# ---------------------------------------------------------------------------
# GammaSpec parsing and construction


@dataclass(frozen=True)
class GammaSpec:
    """The acting group, as typed blocks on consecutive coordinates.

    blocks: tuple of ("S", sizes) or ("C", m) or ("1", m).  Text format:
    blocks separated by ";", each "S:a,b,c" / "C:m" / "1:m".
    """

    blocks: tuple

    @property
    def n(self) -> int:
        total = 0
        for kind, data in self.blocks:
            total += sum(data) if kind == "S" else data
        return total

    def group(self) -> GroupDesc:
        factors = []
        pos = 0
        for kind, data in self.blocks:
            if kind == "S":
                for size in data:
                    if size >= 2:
                        factors.append(SymF(tuple(range(pos, pos + size))))
                    pos += size
            elif kind == "C":
                if data >= 2:
                    factors.append(CycF(tuple(range(pos, pos + data)), data))
                pos += data
            else:  # trivial block
                pos += data
        return group_desc(self.n, factors)

    def block_spans(self) -> list[tuple[int, int]]:
        """Half-open coordinate spans, one per block."""
        spans = []
        pos = 0
        for kind, data in self.blocks:
            width = sum(data) if kind == "S" else data
            spans.append((pos, pos + width))
            pos += width
        return spans

    def __str__(self) -> str:
        parts = []
        for kind, data in self.blocks:
            if kind == "S":
                parts.append("S:" + ",".join(str(s) for s in data))
            else:
                parts.append(f"{kind}:{data}")
        return ";".join(parts)


def parse_gamma(text: str) -> GammaSpec:
    """Parse "S:2;C:3;1:2" into a GammaSpec."""
    blocks = []
    for raw in text.split(";"):
        raw = raw.strip()
        if not raw:
            raise ValueError(f"empty block in gamma spec {text!r}")
        if ":" not in raw:
            raise ValueError(f"malformed block {raw!r} (expected KIND:ARGS)")
        kind, args = raw.split(":", 1)
        kind = kind.strip()
        if kind == "S":
            sizes = tuple(int(a) for a in args.split(","))
            if not sizes or any(s < 1 for s in sizes):
                raise ValueError(f"bad Young sizes in {raw!r}")
            blocks.append(("S", sizes))
        elif kind in ("C", "1"):
            m = int(args)
            if m < 1:
                raise ValueError(f"bad block width in {raw!r}")
            blocks.append((kind, m))
        else:
            raise ValueError(f"unknown block kind {kind!r} in {raw!r}")
    return GammaSpec(tuple(blocks))


def gamma_act(p: Perm, lam: Weight) -> Weight:
    return perm_act(p, lam)


# ---------------------------------------------------------------------------
# orbits and stabilizers


def _min_rotation(values: tuple) -> tuple:
    m = len(values)
    return min(tuple(values[(t + r) % m] for t in range(m)) for r in range(m))


def canonical_orbit_rep(gamma: GammaSpec, lam: Weight) -> Weight:
    """Lexicographically minimal element of the Gamma-orbit of lam."""
    out = list(lam)
    pos = 0
    for kind, data in gamma.blocks:
        if kind == "S":
            for size in data:
                out[pos : pos + size] = sorted(out[pos : pos + size])
                pos += size
        elif kind == "C":
            out[pos : pos + data] = _min_rotation(tuple(out[pos : pos + data]))
            pos += data
        else:
            pos += data
    return tuple(out)


def orbit_of(gamma: GammaSpec, lam: Weight) -> list[Weight]:
    """The Gamma-orbit, sorted lexicographically."""
    orbit = {lam}
    frontier = [lam]
    gens = gamma.group().generators()
    while frontier:
        new = []
        for mu in frontier:
            for g in gens:
                nu = perm_act(g, mu)
                if nu not in orbit:
                    orbit.add(nu)
                    new.append(nu)
        frontier = new
    return sorted(orbit)


def stabilizer(gamma: GammaSpec, lam: Weight) -> GroupDesc:
    """Structural stabilizer of lam in Gamma.

    Young factors split into symmetric groups on equal-value position sets;
    cyclic blocks contribute the rotation subgroup fixing the value necklace.
    """
    if len(lam) != gamma.n:
        raise ValueError("rank mismatch")
    factors = []
    pos = 0
    for kind, data in gamma.blocks:
        if kind == "S":
            for size in data:
                span = range(pos, pos + size)
                by_value: dict = {}
                for i in span:
                    by_value.setdefault(lam[i], []).append(i)
                for value_class in by_value.values():
                    if len(value_class) >= 2:
                        factors.append(SymF(tuple(value_class)))
                pos += size
        elif kind == "C":
            block = tuple(range(pos, pos + data))
            values = tuple(lam[i] for i in block)
            d = _necklace_symmetry_order(values)
            if d >= 2:
                factors.append(CycF(block, d))
            pos += data
        else:
            pos += data
    return group_desc(gamma.n, factors)


def _necklace_symmetry_order(values: tuple) -> int:
    m = len(values)
    for period in range(1, m + 1):
        if m % period:
            continue
        if all(values[t] == values[(t + period) % m] for t in range(m)):
            return m // period
    return 1


def orbit_and_stabilizer(gamma: GammaSpec, lam: Weight):
    orb = orbit_of(gamma, lam)
    stab = stabilizer(gamma, lam)
    assert len(orb) * stab.order == gamma.group().order
    return orb, stab


def in_same_orbit(gamma: GammaSpec, lam: Weight, mu: Weight) -> bool:
    return canonical_orbit_rep(gamma, lam) == canonical_orbit_rep(gamma, mu)


# ---------------------------------------------------------------------------
# Kostant partition function


_KOSTANT_STATE: dict = {}
_KOSTANT_LOCK = threading.Lock()


def kostant_p(theta: Sequence, roots: Sequence[Weight]) -> int:
    """Number of ways to write theta as a Z>=0 combination of `roots`.

    The root multiset must lie in an open half-space (otherwise counts could
    be infinite); this is checked exactly and violations raise ValueError.
    The recursion state (residual, root index) does not depend on theta, so
    the memo table is shared (under a lock) across calls with the same root
    list.
    """
    theta = as_weight(theta)
    roots = tuple(as_weight(r) for r in roots)
    if any(all(c == 0 for c in r) for r in roots):
        raise ValueError("roots must be nonzero")
    for r in roots:
        check_same_rank(theta, r)
    with _KOSTANT_LOCK:
        if roots not in _KOSTANT_STATE:
            w = _separating_functional(list(roots))
            if w is None:
                raise ValueError("roots are not contained in an open half-space")
            _KOSTANT_STATE[roots] = (w, {})
        w, memo = _KOSTANT_STATE[roots]

    def count(residual: Weight, idx: int) -> int:
        if all(c == 0 for c in residual):
            return 1
        if idx == len(roots):
            return 0
        key = (residual, idx)
        if key in memo:
            return memo[key]
        total = 0
        root = roots[idx]
        height = _dot(w, residual)
        step = _dot(w, root)
        nmax = int(height / step) if step > 0 else 0
        cur = residual
        for k in range(nmax + 1):
            total += count(cur, idx + 1)
            cur = tuple(a - b for a, b in zip(cur, root))
        memo[key] = total
        return total

    if _dot(w, theta) < 0:
        return 0
    with _KOSTANT_LOCK:
        return count(theta, 0)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _separating_functional(roots: list[Weight]):
    """An exact w with w . r >= 1 for all roots, or None if none exists.

    The feasible set, restricted to the span of the roots, is pointed, so a
    vertex (cut out by dim-many tight constraints) exists whenever the set is
    nonempty; we enumerate candidate vertex systems and check them.
    """
    n = len(roots[0])
    basis = _row_space_basis(roots)
    dim = len(basis)
    if dim == 0:
        return None
    for subset in itertools.combinations(range(len(roots)), dim):
        # solve sum_j x_j basis_j . roots[s] = 1 for s in subset
        mat = [[_dot(basis[j], roots[s]) for j in range(dim)] for s in subset]
        rhs = [Fraction(1)] * dim
        sol = _solve_square(mat, rhs)
        if sol is None:
            continue
        w = tuple(
            sum((sol[j] * basis[j][i] for j in range(dim)), Fraction(0))
            for i in range(n)
        )
        if all(_dot(w, r) >= 1 for r in roots):
            return w
    return None


def _row_space_basis(rows: list[Weight]) -> list[Weight]:
    mat = [list(r) for r in rows]
    basis = []
    cols = len(mat[0])
    pivot_cols = []
    for row in mat:
        row = list(row)
        for b, pc in zip(basis, pivot_cols):
            if row[pc]:
                factor = row[pc] / b[pc]
                row = [x - factor * y for x, y in zip(row, b)]
        for c in range(cols):
            if row[c]:
                basis.append(row)
                pivot_cols.append(c)
                break
    return [tuple(b) for b in basis]


def _solve_square(mat, rhs):
    """Exact solve of a square system; None if singular."""
    k = len(mat)
    aug = [list(mat[i]) + [rhs[i]] for i in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]
