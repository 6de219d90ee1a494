"""Affine pointed semigroups over the lattice they generate.

An input list of integer vectors is reduced to coordinates on M, the
group it generates, so the cone of the semigroup is full-dimensional by
construction.  On top of that sit the membership oracle, the saturation
residue set, certified conductor-type translates (gamma) with the derived
constant m_Q, per-facet lattice data with invariant factors, and the
constant N_Q (largest prime dividing any invariant factor).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .cones import Cone, is_pointed, parallelepiped_points, triangulate
from .errors import BudgetExhaustedError, EmptyInputError, NotPointedError
from .intlinalg import (
    IntMatrix,
    IntVector,
    dot,
    hermite_normal_form,
    kernel_basis,
    matrix,
    matrix_rank,
    smith_normal_form,
    solve_in_lattice,
    solve_in_row_lattice,
    vec_add,
    vec_sub,
)


@dataclass(frozen=True, eq=False)
class AffineSemigroup:
    """A pointed affine semigroup in coordinates on its own lattice.

    generators live in M-coordinates (rank = cone.dim); raw_generators and
    lattice_basis record the original ambient data.  The membership memo
    is a shared cache: concurrent readers may race benignly on it, every
    stored value is final.
    """

    raw_generators: IntMatrix
    lattice_basis: IntMatrix
    generators: IntMatrix
    cone: Cone
    grading: IntVector
    _memo: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def support_forms(self) -> IntMatrix:
        return self.cone.support_forms

    @property
    def zero(self) -> IntVector:
        return (0,) * self.dim


def build(raw_generators) -> AffineSemigroup:
    """Construct the semigroup, reducing to coordinates on its lattice.

    Zero generators are dropped (the identity is implicit).  Raises
    EmptyInputError when nothing is left and NotPointedError when the
    generated cone contains a line.
    """
    raws = matrix(raw_generators)
    gens_ambient = tuple(g for g in raws if any(g))
    if not gens_ambient:
        raise EmptyInputError("need at least one nonzero generator")
    H, _ = hermite_normal_form(gens_ambient)
    basis = tuple(r for r in H if any(r))
    n = len(basis)
    gens = tuple(solve_in_lattice(basis, g) for g in gens_ambient)
    cone = Cone.from_generators(gens, n)
    if not is_pointed(cone):
        raise NotPointedError("the cone generated by the input contains a line")
    grading = cone.grading
    assert all(dot(grading, g) > 0 for g in gens)
    return AffineSemigroup(raws, basis, gens, cone, grading)


def sat_member(S: AffineSemigroup, v) -> bool:
    """v in the saturation, i.e. in the cone, decided by form signs."""
    return all(dot(u, v) >= 0 for u in S.support_forms)


def member(S: AffineSemigroup, v) -> bool:
    """v in the semigroup, by memoized descent along the grading.

    v belongs iff v == 0 or v - g stays in the cone and belongs, for some
    generator g.  The grading is strictly positive on generators, so each
    step drops it and the walk terminates; the cone test keeps the
    explored set inside a bounded region.
    """
    v = tuple(int(e) for e in v)
    memo = S._memo
    cached = memo.get(v)
    if cached is not None:
        return cached
    if not sat_member(S, v):
        return False
    zero = S.zero
    gens = S.generators
    forms = S.support_forms
    stack = [v]
    while stack:
        u = stack[-1]
        if u in memo:
            stack.pop()
            continue
        if u == zero:
            memo[u] = True
            stack.pop()
            continue
        pending = []
        value = False
        for g in gens:
            c = vec_sub(u, g)
            if not all(dot(f, c) >= 0 for f in forms):
                continue
            known = memo.get(c)
            if known is True:
                value = True
                break
            if known is None:
                pending.append(c)
        if value:
            memo[u] = True
            stack.pop()
        elif pending:
            stack.extend(pending)
        else:
            memo[u] = False
            stack.pop()
    return memo[v]


def express(S: AffineSemigroup, v) -> tuple[int, ...] | None:
    """Nonnegative generator multiplicities summing to v, or None.

    Reconstructed by walking the membership memo downhill; the result is
    deterministic (first usable generator at each step).
    """
    v = tuple(int(e) for e in v)
    if not member(S, v):
        return None
    coeffs = [0] * len(S.generators)
    u = v
    while u != S.zero:
        for j, g in enumerate(S.generators):
            c = vec_sub(u, g)
            if sat_member(S, c) and member(S, c):
                coeffs[j] += 1
                u = c
                break
        else:  # pragma: no cover - contradicts member(v) being True
            raise AssertionError("membership walk lost its way")
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# saturation residues and gamma certificates


@dataclass(frozen=True)
class SaturationData:
    """The finite residue set B: every saturation point is q + rho with q a
    nonnegative sum of extreme-ray generators and rho in B."""

    residues: tuple[IntVector, ...]


def saturation_residues(S: AffineSemigroup) -> SaturationData:
    pts = set()
    rays = S.cone.extreme_rays
    for sub in triangulate(S.cone):
        chosen = [rays[i] for i in sub.ray_indices]
        pts.update(parallelepiped_points(sub, chosen))
    return SaturationData(tuple(sorted(pts)))


@dataclass(frozen=True)
class GammaCertificate:
    """A verified translate: gamma + (every saturation point) stays in the
    semigroup, witnessed residue by residue.

    facet_values are the support form values at gamma; m_q is their
    maximum and drives the nilpotence bound.  The minimum is kept around
    for reporting but certifies nothing.
    """

    gamma: IntVector
    gamma_coeffs: tuple[int, ...]
    facet_values: tuple[int, ...]
    m_q: int
    residue_witnesses: tuple[tuple[IntVector, tuple[int, ...]], ...]

    @property
    def min_facet_value(self) -> int:
        return min(self.facet_values)

    def recheck(self, S: AffineSemigroup) -> bool:
        """Re-verify the certificate by pure arithmetic on the witnesses."""

        def combo(coeffs):
            out = S.zero
            for c, g in zip(coeffs, S.generators):
                if c < 0:
                    return None
                out = vec_add(out, tuple(c * e for e in g))
            return out

        if combo(self.gamma_coeffs) != self.gamma:
            return False
        for rho, coeffs in self.residue_witnesses:
            if combo(coeffs) != vec_add(self.gamma, rho):
                return False
        return self.m_q == max(self.facet_values)


def _certificate(S, gamma, residues) -> GammaCertificate | None:
    if not member(S, gamma):
        return None
    witnesses = []
    for rho in sorted(residues, key=lambda r: (dot(S.grading, r), r)):
        pt = vec_add(gamma, rho)
        if not member(S, pt):
            return None
        witnesses.append((rho, express(S, pt)))
    values = tuple(dot(u, gamma) for u in S.support_forms)
    return GammaCertificate(
        gamma, express(S, gamma), values, max(values), tuple(witnesses)
    )


def verify_gamma(S: AffineSemigroup, gamma) -> GammaCertificate | None:
    """Certificate for gamma, or None if gamma does not work.

    Checking the finitely many residues suffices: any saturation point s
    splits as q + rho with q in the semigroup, so gamma + s =
    (gamma + rho) + q.  Conversely each rho is itself a saturation point.
    """
    gamma = tuple(int(e) for e in gamma)
    return _certificate(S, gamma, saturation_residues(S).residues)


def find_gamma(S: AffineSemigroup, budget: int = 10000) -> GammaCertificate:
    """Search the semigroup by grading level for the best certificate.

    Candidates are enumerated breadth-first over generator sums.  After
    the first hit the search keeps going, minimizing m_q, but stops early
    once the grading level alone rules out any improvement
    (max_i u_i(gamma) >= level / #facets).
    """
    residues = saturation_residues(S).residues
    r = len(S.support_forms)
    heap: list[tuple[int, IntVector]] = [(0, S.zero)]
    seen = {S.zero}
    best: GammaCertificate | None = None
    examined = 0
    level = 0
    while heap and examined < budget:
        level, gamma = heapq.heappop(heap)
        if best is not None and level >= r * best.m_q:
            break
        examined += 1
        cert = _certificate(S, gamma, residues)
        if cert is not None and (
            best is None or (cert.m_q, level, gamma) < (best.m_q, dot(S.grading, best.gamma), best.gamma)
        ):
            best = cert
        for g in S.generators:
            nxt = vec_add(gamma, g)
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (level + dot(S.grading, g), nxt))
    if best is None:
        raise BudgetExhaustedError(examined, level)
    return best


# ---------------------------------------------------------------------------
# facets


@dataclass(frozen=True)
class FacetData:
    """Lattice data of one facet of the cone.

    facet_gens generate the facet semigroup (a generator sum can only land
    on the facet if every summand does, since the form is nonnegative on
    all generators).  coord_matrix expresses them in the hyperplane basis;
    its Smith invariant factors measure the index of the facet semigroup's
    lattice inside the full hyperplane lattice.
    """

    index: int
    support_form: IntVector
    facet_gen_indices: tuple[int, ...]
    facet_gens: IntMatrix
    hyperplane_basis: IntMatrix
    coord_matrix: IntMatrix
    invariant_factors: tuple[int, ...]
    interior_element: IntVector


def facet_data(S: AffineSemigroup, i: int) -> FacetData:
    n = S.dim
    u = S.support_forms[i]
    idxs = S.cone.facet_generator_sets[i]
    fgens = tuple(S.generators[j] for j in idxs)
    if n == 1:
        return FacetData(i, u, idxs, fgens, (), (), (), S.zero)
    basis = kernel_basis((u,))
    assert len(basis) == n - 1
    coords = matrix([solve_in_lattice(basis, g) for g in fgens])
    assert len(fgens) >= n - 1 and matrix_rank(coords) == n - 1
    factors = smith_normal_form(coords).invariant_factors
    assert all(d > 0 for d in factors)
    interior = S.zero
    for g in fgens:
        interior = vec_add(interior, g)
    for j, other in enumerate(S.support_forms):
        if j != i:
            assert dot(other, interior) > 0
    return FacetData(i, u, idxs, fgens, basis, coords, factors, interior)


def all_facet_data(S: AffineSemigroup) -> tuple[FacetData, ...]:
    return tuple(facet_data(S, i) for i in range(len(S.support_forms)))


def facet_witness_combo(fd: FacetData, v) -> tuple[int, ...] | None:
    """Integer coefficients over facet_gens expressing v, or None."""
    if not fd.facet_gens:
        return () if not any(v) else None
    return solve_in_row_lattice(fd.facet_gens, v)


def n_q(S: AffineSemigroup, facets: tuple[FacetData, ...] | None = None) -> int:
    """Largest prime dividing any facet invariant factor; 0 if all are 1."""
    from .intlinalg import largest_prime_factor

    if facets is None:
        facets = all_facet_data(S)
    ds = [d for fd in facets for d in fd.invariant_factors if d > 1]
    if not ds:
        return 0
    return max(largest_prime_factor(d) for d in ds)
