"""Component analysis of the transparent subring.

The number of components of the double of the suspended datum equals the
number of simple transparent objects, and components biject with the
ring homomorphisms K0(transparent subring) -> C.  Characters are found
by simultaneous diagonalization of the transparent fusion matrices:
exactly (group characters) when every transparent simple is invertible,
numerically via a seeded random linear combination otherwise.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .data import PremodularData, _is_transparent, classify_degeneracy, CentreKind
from .errors import DegenerateEigenproblem
from .fusion_ring import fpdim

__all__ = ["ComponentAnalysis", "ring_characters", "component_count"]

_CLUSTER_TOL = 1e-9     # eigenvalues closer than this are one cluster
_DISTINCT_TOL = 1e-6    # characters must be separated by this in sup metric
_DIM_MATCH_TOL = 1e-8   # tolerance for recognizing the FPdim character
_MAX_RETRIES = 8


@dataclass
class ComponentAnalysis:
    count: int
    labels: list[str]                       # transparent labels, ring order
    characters: list[dict[str, complex]]    # each maps transparent label -> value
    dim_index: int
    magnetic_index: int | None
    seed: int

    def to_json(self):
        return {
            "component_count": self.count,
            "characters": [
                {lab: [z.real, z.imag] for lab, z in chi.items()} for chi in self.characters
            ],
            "dim_index": self.dim_index,
            "magnetic_index": self.magnetic_index,
            "seed": self.seed,
        }


def _close(prod, gens, unit):
    """Exponent expression (one exponent per generator) for each element
    reachable from the generators."""
    expr = {unit: (0,) * len(gens)}
    frontier = [unit]
    while frontier:
        nxt = []
        for h in frontier:
            for i, g in enumerate(gens):
                e = list(expr[h])
                e[i] += 1
                t = prod[h][g]
                if t not in expr:
                    expr[t] = tuple(e)
                    nxt.append(t)
        frontier = nxt
    return expr


def _exact_group_characters(prod):
    """All homomorphisms to Q/Z of an abelian group given by a product
    table, as tuples of Fractions in [0,1) indexed like `prod`."""
    n = len(prod)
    unit = next(g for g in range(n) if all(prod[g][h] == h for h in range(n)))
    gens = []
    expr = _close(prod, gens, unit)
    for g in range(n):
        if g not in expr:
            gens.append(g)
            expr = _close(prod, gens, unit)
    orders = []
    for g in gens:
        k, cur = 1, g
        while cur != unit:
            cur = prod[cur][g]
            k += 1
        orders.append(k)
    chars = []
    seen = set()
    for ks in itertools.product(*(range(o) for o in orders)):
        val = [
            sum((Fraction(k * e, o) for k, e, o in zip(ks, expr[t], orders)), Fraction(0)) % 1
            for t in range(n)
        ]
        # multiplicativity must hold for the assignment to be well defined
        if all((val[a] + val[b]) % 1 == val[prod[a][b]] for a in range(n) for b in range(n)):
            key = tuple(val)
            if key not in seen:
                seen.add(key)
                chars.append(val)
    assert len(chars) == n, f"abelian group of order {n} must have exactly {n} characters"
    return chars


def _numeric_characters(mats, seed):
    """Simultaneous eigen-characters of commuting nonnegative matrices."""
    n = mats[0].shape[0]
    rng = np.random.default_rng(seed)
    for _ in range(_MAX_RETRIES):
        weights = rng.uniform(0.5, 1.5, size=len(mats))
        M = sum(w * m for w, m in zip(weights, mats))
        eigvals, eigvecs = np.linalg.eig(M)
        clusters: list[list[int]] = []
        for i, lam in enumerate(eigvals):
            for cl in clusters:
                if abs(lam - eigvals[cl[0]]) < _CLUSTER_TOL:
                    cl.append(i)
                    break
            else:
                clusters.append([i])
        if len(clusters) != n:
            continue
        chars = []
        good = True
        for cl in clusters:
            v = eigvecs[:, cl[0]]
            denom = np.vdot(v, v)
            chi = [complex(np.vdot(v, m @ v) / denom) for m in mats]
            # residual of the common-eigenvector property
            if any(np.linalg.norm(m @ v - c * v) > 1e-6 * (1 + abs(c)) for m, c in zip(mats, chi)):
                good = False
                break
            chars.append(chi)
        if not good:
            continue
        distinct = all(
            max(abs(x - y) for x, y in zip(c1, c2)) >= _DISTINCT_TOL
            for i, c1 in enumerate(chars)
            for c2 in chars[i + 1:]
        )
        if distinct:
            return chars
    raise DegenerateEigenproblem(
        f"could not separate {n} characters at {_DISTINCT_TOL} after {_MAX_RETRIES} retries"
    )


def ring_characters(data: PremodularData, seed: int = 0) -> ComponentAnalysis:
    """All ring homomorphisms of the transparent subring to C.

    Uses exact group characters when every transparent simple is
    invertible; otherwise a seeded random-combination eigensolve with
    cluster merging at 1e-9 and distinctness threshold 1e-6.  Characters
    are reported in lexicographic order of their value vectors; the
    FPdim character and (when slightly degenerate) the e -> -1 character
    are identified.
    """
    ring = data.ring
    idx = [b for b in range(ring.rank) if _is_transparent(data, b)]
    labels = [data.labels[b] for b in idx]
    n = len(idx)
    N = ring.mult

    group_like = True
    prod = [[None] * n for _ in range(n)]
    pos = {b: k for k, b in enumerate(idx)}
    for i, a in enumerate(idx):
        for j, b in enumerate(idx):
            nz = np.flatnonzero(N[a, b])
            if len(nz) == 1 and N[a, b, nz[0]] == 1 and int(nz[0]) in pos:
                prod[i][j] = pos[int(nz[0])]
            else:
                group_like = False
    char_values: list[list[complex]]
    if group_like:
        exact = _exact_group_characters(prod)
        char_values = [
            [cmath.exp(2j * cmath.pi * float(t)) if t else complex(1.0) for t in chi]
            for chi in exact
        ]
    else:
        mats = [N[a].T[np.ix_(idx, idx)].astype(float) for a in idx]
        char_values = _numeric_characters(mats, seed)

    char_values.sort(key=lambda chi: tuple((round(z.real, 9), round(z.imag, 9)) for z in chi))

    _, fp = fpdim(ring)
    fp_sub = fp[idx]
    dim_index = None
    for k, chi in enumerate(char_values):
        if max(abs(z - d) for z, d in zip(chi, fp_sub)) <= _DIM_MATCH_TOL:
            dim_index = k
            break
    if dim_index is None:
        raise DegenerateEigenproblem("no character matches the FPdim vector")

    magnetic_index = None
    cls = classify_degeneracy(data)
    if cls.kind is CentreKind.SLIGHTLY_DEGENERATE:
        e_pos = labels.index(cls.fermion)
        for k, chi in enumerate(char_values):
            if abs(chi[e_pos] + 1.0) <= _DISTINCT_TOL:
                magnetic_index = k
                break
        assert magnetic_index is not None, "slightly degenerate data must have an e -> -1 character"

    characters = [dict(zip(labels, chi)) for chi in char_values]
    return ComponentAnalysis(
        count=n,
        labels=labels,
        characters=characters,
        dim_index=dim_index,
        magnetic_index=magnetic_index,
        seed=seed,
    )


def component_count(data: PremodularData, seed: int = 0) -> int:
    """Number of transparent simples; asserted against the character count."""
    n = sum(1 for b in range(data.ring.rank) if _is_transparent(data, b))
    analysis = ring_characters(data, seed=seed)
    assert analysis.count == n == len(analysis.characters)
    return n
