"""Classification of the simple finite-dimensional weight-semisimple modules
over the degree-zero part of the skew ring.

A simple is a triple (Gamma-orbit of a weight, stabilizer, stabilizer irrep);
its dimension and weight multiplicities follow from character theory alone,
so no module is ever materialized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import symchars
from .symchars import Irrep, dual_irrep, irrep_dim, irrep_sort_key, list_irreps
from .weights import (
    CycF,
    GammaSpec,
    GroupDesc,
    SymF,
    Weight,
    canonical_orbit_rep,
    group_desc,
    is_subgroup,
    stabilizer,
)


@dataclass(frozen=True)
class SimpleX:
    """A simple object: canonical orbit representative, stabilizer, irrep."""

    orbit_rep: Weight
    stab: GroupDesc
    irrep: Irrep

    def sort_key(self):
        return (self.orbit_rep, self.stab.key(), irrep_sort_key(self.stab, self.irrep))

    def __repr__(self):
        from .weights import format_weight

        labels = []
        for f, label in zip(self.stab.factors, self.irrep):
            if isinstance(f, SymF):
                labels.append(",".join(str(p) for p in label))
            else:
                labels.append(f"j={label}")
        irr = "(" + "|".join(labels) + ")" if labels else "(triv)"
        return f"X[{format_weight(self.orbit_rep)};{irr}]"


def validate_simplex(gamma: GammaSpec, x: SimpleX) -> None:
    if x.orbit_rep != canonical_orbit_rep(gamma, x.orbit_rep):
        raise ValueError(f"{x} orbit representative is not canonical")
    if x.stab != stabilizer(gamma, x.orbit_rep):
        raise ValueError(f"{x} carries the wrong stabilizer")
    if len(x.irrep) != len(x.stab.factors):
        raise ValueError(f"{x} irrep labels do not match the stabilizer")


def orbit_size(gamma: GammaSpec, x: SimpleX) -> int:
    return gamma.group().order // x.stab.order


def dim_m(gamma: GammaSpec, x: SimpleX) -> int:
    """dim of the underlying simple: [Gamma : stab] * dim(irrep)."""
    return orbit_size(gamma, x) * irrep_dim(x.stab, x.irrep)


def classify_X_over(gamma: GammaSpec, lam: Weight) -> list[SimpleX]:
    """All simples whose orbit contains lam: one per stabilizer irrep."""
    rep = canonical_orbit_rep(gamma, lam)
    stab = stabilizer(gamma, rep)
    out = [SimpleX(rep, stab, irr) for irr in list_irreps(stab)]
    out.sort(key=SimpleX.sort_key)
    return out


def weight_mult(gamma: GammaSpec, x: SimpleX, mu: Weight) -> int:
    """dim of the mu weight space: dim(irrep) on the orbit, 0 off it."""
    if canonical_orbit_rep(gamma, mu) == x.orbit_rep:
        return irrep_dim(x.stab, x.irrep)
    return 0


def duality_F(x: SimpleX) -> SimpleX:
    """Contragredient twist: same orbit and stabilizer, dual irrep."""
    return SimpleX(x.orbit_rep, x.stab, dual_irrep(x.stab, x.irrep))


def transport_irrep(
    gamma: GammaSpec, src_weight: Weight, src_stab: GroupDesc, irrep: Irrep
) -> SimpleX:
    """The SimpleX with canonical data matching (src_weight, irrep).

    Conjugating a stabilizer onto the canonical representative's stabilizer
    matches factors by enclosing Gamma-factor and weight value (symmetric
    case) or by block (cyclic case); partition labels and residues carry
    over unchanged.
    """
    rep = canonical_orbit_rep(gamma, src_weight)
    dst_stab = stabilizer(gamma, rep)
    if src_weight == rep:
        assert src_stab == dst_stab
        return SimpleX(rep, dst_stab, irrep)
    src_by_key = {}
    for f, label in zip(src_stab.factors, irrep):
        src_by_key[_factor_key(gamma, src_weight, f)] = label
    out = []
    for f in dst_stab.factors:
        key = _factor_key(gamma, rep, f)
        if key not in src_by_key:
            raise ValueError("stabilizers do not correspond")
        out.append(src_by_key[key])
    return SimpleX(rep, dst_stab, tuple(out))


def _factor_key(gamma: GammaSpec, weight: Weight, f) -> tuple:
    """Conjugation-invariant identity of a stabilizer factor."""
    span = _enclosing_span(gamma, f.positions[0])
    if isinstance(f, SymF):
        return ("S", span, weight[f.positions[0]], len(f.positions))
    return ("C", span, f.order)


def _enclosing_span(gamma: GammaSpec, position: int) -> tuple:
    pos = 0
    for kind, data in gamma.blocks:
        if kind == "S":
            for size in data:
                if pos <= position < pos + size:
                    return (pos, pos + size)
                pos += size
        else:
            width = data
            if pos <= position < pos + width:
                return (pos, pos + width)
            pos += width
    raise ValueError(f"position {position} outside spec")


class CObject:
    """A finitely supported multiset of simples with multiplicities."""

    def __init__(self, terms=None):
        self.terms: dict[SimpleX, int] = {}
        if terms:
            for x, m in dict(terms).items():
                self.add(x, m)

    def add(self, x: SimpleX, mult: int = 1) -> None:
        if mult < 0:
            raise ValueError("multiplicities are nonnegative")
        if mult:
            self.terms[x] = self.terms.get(x, 0) + mult

    def __getitem__(self, x: SimpleX) -> int:
        return self.terms.get(x, 0)

    def __eq__(self, other):
        return isinstance(other, CObject) and self.terms == other.terms

    def __iter__(self):
        return iter(sorted(self.terms, key=SimpleX.sort_key))

    def items(self):
        return [(x, self.terms[x]) for x in self]

    def total_dim(self, gamma: GammaSpec) -> int:
        return sum(m * dim_m(gamma, x) for x, m in self.terms.items())

    def __repr__(self):
        return " + ".join(
            (f"{m}*" if m != 1 else "") + repr(x) for x, m in self.items()
        ) or "0"


def decompose_induced(
    gamma: GammaSpec, lam: Weight, from_stab: GroupDesc, carried: Irrep
) -> CObject:
    """Decompose Ind_{from_stab}^{Stab(lam)}(carried) into simples over the
    orbit of lam."""
    stab = stabilizer(gamma, lam)
    if not is_subgroup(from_stab, stab):
        raise ValueError("from_stab is not contained in the weight stabilizer")
    out = CObject()
    for irr in list_irreps(stab):
        mult = symchars.induce_restrict_mult(from_stab, carried, stab, irr)
        if mult:
            out.add(transport_irrep(gamma, lam, stab, irr), mult)
    return out


# ---------------------------------------------------------------------------
# products across blocks


def concat_weights(lams: list[Weight]) -> Weight:
    return tuple(itertools.chain.from_iterable(lams))


def concat_gammas(gammas: list[GammaSpec]) -> GammaSpec:
    blocks = []
    for g in gammas:
        blocks.extend(g.blocks)
    return GammaSpec(tuple(blocks))


def concat_simplex(gammas: list[GammaSpec], xs: list[SimpleX]) -> SimpleX:
    """The product simple over the concatenated spec ("X = prod X_j")."""
    big = concat_gammas(gammas)
    rep = []
    factors = []
    labels = []
    offset = 0
    for g, x in zip(gammas, xs):
        rep.extend(x.orbit_rep)
        for f, label in zip(x.stab.factors, x.irrep):
            moved = tuple(p + offset for p in f.positions)
            if isinstance(f, SymF):
                factors.append(SymF(moved))
            else:
                factors.append(CycF(moved, f.order))
            labels.append(label)
        offset += g.n
    stab = group_desc(big.n, factors)
    order = sorted(range(len(factors)), key=lambda i: factors[i].positions[0])
    return SimpleX(tuple(rep), stab, tuple(labels[i] for i in order))


def simplex_to_json(gamma: GammaSpec, x: SimpleX) -> dict:
    from .weights import format_weight

    stab_parts = []
    irrep_parts = []
    for f, label in zip(x.stab.factors, x.irrep):
        if isinstance(f, SymF):
            stab_parts.append(f"S:{len(f.positions)}")
            irrep_parts.append(",".join(str(p) for p in label))
        else:
            stab_parts.append(f"C:{f.order}")
            irrep_parts.append(f"j={label}")
    return {
        "orbit_rep": [str(c) for c in x.orbit_rep],
        "stab": "|".join(stab_parts) if stab_parts else "1",
        "irrep": irrep_parts,
    }


def simplex_from_json(gamma: GammaSpec, data: dict) -> SimpleX:
    """Rebuild a SimpleX; the stabilizer is rederived from the orbit rep."""
    rep = tuple(Fraction(c) for c in data["orbit_rep"])
    rep = canonical_orbit_rep(gamma, rep)
    stab = stabilizer(gamma, rep)
    labels = []
    for f, text in zip(stab.factors, data["irrep"]):
        if isinstance(f, SymF):
            labels.append(tuple(int(p) for p in text.split(",")))
        else:
            labels.append(int(text.split("=")[1]))
    x = SimpleX(rep, stab, tuple(labels))
    validate_simplex(gamma, x)
    return x
