"""Rational polyhedral cones with exact dual descriptions.

Machinery for full-dimensional cones over a lattice: inward facet normals
(support forms), pointedness, sign-pattern region tags relative to the
cone and its negative, placing triangulations into simplicial subcones,
and half-open fundamental parallelepipeds.  All arithmetic is exact; the
only rationals appearing are Fractions in barycentric solves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .intlinalg import (
    IntMatrix,
    IntVector,
    det,
    dot,
    int_matrix_inverse,
    kernel_basis,
    mat_vec,
    matrix,
    matrix_rank,
    primitive,
    smith_normal_form,
    solve_rational,
    transpose,
    vec_neg,
    vec_scale,
    vec_sub,
)


@dataclass(frozen=True)
class SimplicialSubcone:
    """A full-dimensional simplicial piece of a triangulated cone.

    ray_indices index into the parent cone's extreme_ray_reps; determinant
    is |det| of the chosen ray generators, which is also the lattice point
    count of the half-open fundamental parallelepiped.
    """

    ray_indices: tuple[int, ...]
    determinant: int


@dataclass(frozen=True)
class RegionTag:
    kind: str
    zero_facets: tuple[int, ...] = ()


@dataclass(frozen=True)
class Cone:
    dim: int
    generators: IntMatrix
    support_forms: IntMatrix
    extreme_ray_reps: tuple[int, ...]
    facet_generator_sets: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, generators, dim: int) -> "Cone":
        gens = matrix(generators)
        forms = support_forms(gens, dim)
        facet_sets = tuple(
            tuple(j for j, g in enumerate(gens) if dot(u, g) == 0) for u in forms
        )
        pointed = matrix_rank(forms) == dim if forms else dim == 0
        reps: tuple[int, ...] = ()
        if pointed:
            reps = _extreme_ray_reps(gens, forms, dim)
        return cls(dim, gens, forms, reps, facet_sets)

    @property
    def grading(self) -> IntVector:
        """The functional sum(u_i); strictly positive on a pointed cone."""
        return tuple(
            sum(u[j] for u in self.support_forms) for j in range(self.dim)
        )

    @property
    def extreme_rays(self) -> IntMatrix:
        return tuple(self.generators[i] for i in self.extreme_ray_reps)


def _extreme_ray_reps(gens, forms, n):
    # a generator spans an extreme ray iff the forms vanishing on it have
    # rank n-1; among generators on the same ray keep the one minimizing
    # (grading value, lex), rays ordered by first appearance
    grading = tuple(sum(u[j] for u in forms) for j in range(n))
    order: list[IntVector] = []
    best: dict[IntVector, int] = {}
    for idx, g in enumerate(gens):
        active = [u for u in forms if dot(u, g) == 0]
        rk = matrix_rank(active) if active else 0
        if rk != n - 1:
            continue
        key = primitive(g)
        if key not in best:
            order.append(key)
            best[key] = idx
        else:
            cur = gens[best[key]]
            if (dot(grading, g), g) < (dot(grading, cur), cur):
                best[key] = idx
    return tuple(best[k] for k in order)


# ---------------------------------------------------------------------------
# dual description


def support_forms(generators, n: int) -> IntMatrix:
    """Irredundant primitive inward facet normals of cone(generators).

    Incremental halfspace processing: the dual of the first k generators
    is kept as (lineality basis, rays); each new generator g restricts it
    to {u : u(g) >= 0}.  Rays are pruned to extreme ones after every step
    using the active-constraint rank criterion, so the final ray set is
    exactly the facet normals, sorted for determinism.
    """
    gens = matrix(generators)
    if not gens:
        raise ValueError("no generators")
    if any(not any(g) for g in gens):
        raise ValueError("zero generator")
    if matrix_rank(gens) != n:
        raise ValueError("generators do not span rank n")
    lineality = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    rays: list[IntVector] = []
    processed: list[IntVector] = []
    for g in gens:
        processed.append(g)
        cvals = [dot(l, g) for l in lineality]
        if any(cvals):
            k = next(i for i, c in enumerate(cvals) if c)
            l0, c0 = lineality[k], cvals[k]
            if c0 < 0:
                l0, c0 = vec_neg(l0), -c0
            new_lin = []
            for l, c in zip(lineality, cvals):
                if l is lineality[k]:
                    continue
                new_lin.append(primitive(vec_sub(vec_scale(l, c0), vec_scale(l0, c))))
            # every old ray is projected along l0 onto {u(g) = 0}; l0
            # itself carries the positive side
            new_rays = []
            for r in rays:
                cr = dot(r, g)
                pr = vec_sub(vec_scale(r, c0), vec_scale(l0, cr))
                if any(pr):
                    new_rays.append(primitive(pr))
            new_rays.append(l0)
            lineality = new_lin
            rays = new_rays
        else:
            withc = [(r, dot(r, g)) for r in rays]
            plus = [(r, c) for r, c in withc if c > 0]
            zero = [r for r, c in withc if c == 0]
            minus = [(r, c) for r, c in withc if c < 0]
            combos = []
            for rp, cp in plus:
                for rm, cm in minus:
                    combos.append(
                        primitive(vec_sub(vec_scale(rm, cp), vec_scale(rp, cm)))
                    )
            rays = [r for r, _ in plus] + zero + combos
        rays = _prune_rays(rays, processed, n, len(lineality))
    assert not lineality, "generators were checked to span rank n"
    return tuple(sorted(rays))


def _prune_rays(rays, constraints, n, lindim):
    """Keep one representative per extreme ray of the current dual cone."""
    need = n - lindim - 1
    keep = []
    seen = set()
    for r in rays:
        if r in seen:
            continue
        seen.add(r)
        active = [g for g in constraints if dot(r, g) == 0]
        rk = matrix_rank(active) if active else 0
        if rk == need:
            keep.append(r)
    return keep


def is_pointed(cone: Cone) -> bool:
    """True iff the cone contains no line, decided exactly.

    Equivalent tests, both run: the support forms span the dual space, and
    no nonzero generator g has -g in the cone (which would force every
    form to vanish on g).
    """
    if matrix_rank(cone.support_forms) != cone.dim:
        return False
    for g in cone.generators:
        if any(g) and all(dot(u, g) == 0 for u in cone.support_forms):
            return False
    return True


# ---------------------------------------------------------------------------
# region classification


def classify(cone: Cone, v) -> tuple[RegionTag, RegionTag]:
    """Tags of v relative to the cone and to its negative.

    Both tags are read off the exact signs of the support form values.
    """
    signs = tuple(dot(u, v) for u in cone.support_forms)
    zeros = tuple(i for i, s in enumerate(signs) if s == 0)
    if all(s > 0 for s in signs):
        sigma = RegionTag("sigma_interior")
    elif all(s >= 0 for s in signs):
        sigma = RegionTag("sigma_boundary", zeros)
    else:
        sigma = RegionTag("outside_sigma")
    if all(s < 0 for s in signs):
        neg = RegionTag("neg_interior")
    elif all(s <= 0 for s in signs):
        neg = RegionTag("neg_boundary", zeros)
    else:
        neg = RegionTag("outside_neg")
    return sigma, neg


# ---------------------------------------------------------------------------
# triangulation and parallelepipeds


@lru_cache(maxsize=None)
def triangulate(cone: Cone) -> tuple[SimplicialSubcone, ...]:
    """Placing triangulation of a pointed full-dimensional cone.

    Rays are inserted in their stored order; each new ray, being extreme,
    lies strictly outside the cone built so far, and is coned over the
    boundary facets it sees.  Subcones use extreme rays only, cover the
    cone, and have pairwise disjoint interiors.
    """
    if not cone.extreme_ray_reps:
        raise ValueError("triangulation needs a pointed cone")
    rays = cone.extreme_rays
    n = cone.dim
    m = len(rays)
    if n == 1:
        return (SimplicialSubcone((0,), abs(rays[0][0])),)
    base: list[int] = []
    for k in range(m):
        if matrix_rank([rays[i] for i in base] + [rays[k]]) > len(base):
            base.append(k)
        if len(base) == n:
            break
    if len(base) < n:
        raise ValueError("cone is not full-dimensional")
    simplices: list[tuple[int, ...]] = [tuple(sorted(base))]
    base_set = set(base)
    for k in range(m):
        if k in base_set:
            continue
        owners: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for S in simplices:
            for drop in S:
                F = tuple(i for i in S if i != drop)
                owners.setdefault(F, []).append(S)
        for F, owning in owners.items():
            if len(owning) != 1:
                continue
            normal = kernel_basis(matrix([rays[i] for i in F]))[0]
            opp = next(i for i in owning[0] if i not in F)
            if dot(normal, rays[opp]) < 0:
                normal = vec_neg(normal)
            if dot(normal, rays[k]) < 0:
                simplices.append(tuple(sorted(F + (k,))))
    out = []
    for S in simplices:
        d = abs(det(matrix([rays[i] for i in S])))
        assert d > 0
        out.append(SimplicialSubcone(S, d))
    return tuple(out)


def parallelepiped_points(sub: SimplicialSubcone, ray_gens) -> tuple[IntVector, ...]:
    """Lattice points sum(mu_k * r_k) with 0 <= mu_k < 1, sorted.

    One representative per class of Z^n modulo the ray lattice, found via
    the Smith form of the ray matrix and wrapped into the half-open box by
    subtracting integer parts.  The count equals the determinant.
    """
    ray_gens = matrix(ray_gens)
    R = transpose(ray_gens)  # columns are the rays
    snf = smith_normal_form(R)
    ds = snf.invariant_factors
    if any(d == 0 for d in ds):
        raise ValueError("rays are linearly dependent")
    u_inv = int_matrix_inverse(snf.u)
    pts = []
    for t in product(*(range(d) for d in ds)):
        x = mat_vec(u_inv, t)
        mu = solve_rational(R, x)
        fl = tuple(math.floor(f) for f in mu)
        pts.append(vec_sub(x, mat_vec(R, fl)))
    assert len(set(pts)) == sub.determinant
    return tuple(sorted(pts))


def decompose(cone: Cone, s) -> tuple[IntVector, IntVector]:
    """Split s in the cone as q + rho with q an extreme-ray sum and rho a
    parallelepiped residue of the simplicial subcone containing s."""
    s = tuple(int(e) for e in s)
    if any(dot(u, s) < 0 for u in cone.support_forms):
        raise ValueError("point lies outside the cone")
    rays = cone.extreme_rays
    for sub in triangulate(cone):
        chosen = [rays[i] for i in sub.ray_indices]
        mu = solve_rational(transpose(matrix(chosen)), s)
        if mu is None or any(f < 0 for f in mu):
            continue
        q = (0,) * cone.dim
        for f, r in zip(mu, chosen):
            q = tuple(a + math.floor(f) * b for a, b in zip(q, r))
        return q, vec_sub(s, q)
    raise RuntimeError("triangulation failed to cover the cone")
