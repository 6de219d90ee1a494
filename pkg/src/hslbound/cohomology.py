"""Frobenius nilpotence of monomial classes in top local cohomology.

A monomial class [x^v] of the top local cohomology of a pointed semigroup
ring at its monomial maximal ideal vanishes iff v + w lands in the
semigroup for some element w of some facet semigroup.  Frobenius raises
monomials to the p-th power, i.e. multiplies lattice degrees by p, and
per-monomial analysis already determines nilpotence of the whole module:
each lattice-degree piece of the top cohomology is at most
one-dimensional (a quotient of the corresponding piece of the full group
algebra) and Frobenius maps the degree-v piece into the degree-p*v piece,
so a general class is killed by F^e exactly when each of its monomial
components is.

The vanishing oracle is exact for degrees inside -sigma (interior: never
zero; boundary: an integer lattice test facet by facet).  Outside -sigma
it first tries the constructive witness built from a verified gamma
translate, which always fires once p^e reaches m_q, and otherwise falls
back to a capped witness search that reports Unknown rather than claim an
uncertified nonvanishing.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .cones import classify
from .errors import DimensionMismatchError
from .intlinalg import IntVector, dot, smith_normal_form, solve_in_lattice, vec_add, vec_mat, vec_scale
from .semigroups import (
    AffineSemigroup,
    FacetData,
    GammaCertificate,
    facet_witness_combo,
    member,
)


@dataclass(frozen=True)
class ZeroClassResult:
    """Verdict on [x^v]: zero with a checked witness, nonzero with the
    region argument used, or unknown when the capped search ran out.

    A zero verdict records the witness facet, the witness w itself and its
    nonnegative coefficients over that facet's generators, so it can be
    re-verified by arithmetic plus one membership query.
    """

    verdict: str  # "zero" | "nonzero" | "unknown"
    facet: int | None = None
    witness: IntVector | None = None
    witness_coeffs: tuple[int, ...] | None = None
    certificate: str | None = None  # "neg_interior" | "boundary_lattice" | "finite_facets"
    checked_facets: tuple[int, ...] = ()
    cap: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.verdict == "zero"

    def recheck(self, S: AffineSemigroup, facets, v) -> bool:
        """Independent validation of the verdict's evidence."""
        signs = [dot(u, v) for u in S.support_forms]
        if self.verdict == "zero":
            fd = facets[self.facet]
            total = S.zero
            for c, g in zip(self.witness_coeffs, fd.facet_gens, strict=True):
                if c < 0:
                    return False
                total = vec_add(total, vec_scale(g, c))
            if total != self.witness:
                return False
            if dot(fd.support_form, self.witness) != 0:
                return False
            return member(S, vec_add(v, self.witness))
        if self.certificate == "neg_interior":
            return all(s < 0 for s in signs)
        if self.certificate == "boundary_lattice":
            if not all(s <= 0 for s in signs):
                return False
            zeros = tuple(i for i, s in enumerate(signs) if s == 0)
            if self.checked_facets != zeros:
                return False
            return all(
                facet_witness_combo(facets[i], v) is None for i in zeros
            )
        if self.certificate == "finite_facets":
            eligible = [i for i, s in enumerate(signs) if s >= 0]
            return all(not facets[i].facet_gens for i in eligible) and not member(S, v)
        return self.verdict == "unknown"


def _zero(facet, witness, coeffs):
    return ZeroClassResult("zero", facet=facet, witness=witness, witness_coeffs=coeffs)


@lru_cache(maxsize=None)
def _facet_elements(facet_gens, grading, cap):
    """Facet semigroup elements with grading value <= cap, by level.

    Returns (level, element, coefficients) triples in search order; the
    zero element is included.
    """
    zero = (0,) * len(grading)
    start = (0, zero, (0,) * len(facet_gens))
    heap = [start]
    seen = {zero}
    out = []
    while heap:
        lv, w, coeffs = heapq.heappop(heap)
        out.append((lv, w, coeffs))
        for j, g in enumerate(facet_gens):
            nxt = vec_add(w, g)
            nlv = lv + dot(grading, g)
            if nlv <= cap and nxt not in seen:
                seen.add(nxt)
                bumped = tuple(c + (1 if jj == j else 0) for jj, c in enumerate(coeffs))
                heapq.heappush(heap, (nlv, nxt, bumped))
    return tuple(out)


def zero_class(
    S: AffineSemigroup,
    cert: GammaCertificate,
    facets: tuple[FacetData, ...],
    v,
    cap: int,
) -> ZeroClassResult:
    """Decide whether [x^v] vanishes in the top cohomology.

    Decision by region of v relative to -sigma:

    * v in the semigroup (in particular the conductor region
      u_i(v) >= u_i(gamma) for all i): zero, witness 0.
    * all u_i(v) < 0: nonzero, since any witness facet i would need
      u_i(v + w) = u_i(v) >= 0.
    * all u_i(v) <= 0 with zeros: zero iff v lies in the lattice spanned
      by some zero-facet's generators; the integer solve doubles as the
      witness construction, and failure on every zero facet certifies
      nonzero (a witness on facet i would force v + w onto facet i).
    * some u_i(v) > 0: if u_i(v) >= u_i(gamma) for some facet i, scale
      that facet's interior element until every other form clears its
      gamma value; then v + w sits in gamma + saturation, hence in the
      semigroup.  Otherwise search facet elements up to the cap and
      answer Unknown when the search is truncated.
    """
    v = tuple(int(e) for e in v)
    signs = tuple(dot(u, v) for u in S.support_forms)
    if all(s >= 0 for s in signs):
        # v is in the cone, so the only possible witness facets are all of
        # them; membership itself settles the w = 0 case
        if all(s >= fv for s, fv in zip(signs, cert.facet_values)) or member(S, v):
            return _zero(0, S.zero, (0,) * len(facets[0].facet_gens))
    if all(s < 0 for s in signs):
        return ZeroClassResult("nonzero", certificate="neg_interior")
    if all(s <= 0 for s in signs):
        zeros = tuple(i for i, s in enumerate(signs) if s == 0)
        for i in zeros:
            combo = facet_witness_combo(facets[i], v)
            if combo is None:
                continue
            coeffs = tuple(max(0, -c) for c in combo)
            w = S.zero
            for c, g in zip(coeffs, facets[i].facet_gens):
                w = vec_add(w, vec_scale(g, c))
            return _zero(i, w, coeffs)
        return ZeroClassResult(
            "nonzero", certificate="boundary_lattice", checked_facets=zeros
        )
    # outside -sigma: constructive route via the gamma certificate
    for i, (s, fv) in enumerate(zip(signs, cert.facet_values)):
        if s < fv:
            continue
        wstar = facets[i].interior_element
        lam = 0
        for j, (sj, fj) in enumerate(zip(signs, cert.facet_values)):
            if j == i or sj >= fj:
                continue
            step = dot(S.support_forms[j], wstar)
            assert step > 0
            need = fj - sj
            lam = max(lam, -(-need // step))
        w = vec_scale(wstar, lam)
        coeffs = (lam,) * len(facets[i].facet_gens)
        return _zero(i, w, coeffs)
    truncated = False
    for i, s in enumerate(signs):
        if s < 0:
            continue
        fd = facets[i]
        if not fd.facet_gens:
            continue  # facet semigroup is {0}; w = 0 was already ruled out
        truncated = True
        for _, w, coeffs in _facet_elements(fd.facet_gens, S.grading, cap):
            if w == S.zero:
                continue
            if member(S, vec_add(v, w)):
                return _zero(i, w, coeffs)
    if truncated:
        return ZeroClassResult("unknown", cap=cap)
    eligible = tuple(i for i, s in enumerate(signs) if s >= 0)
    return ZeroClassResult(
        "nonzero", certificate="finite_facets", checked_facets=eligible
    )


# ---------------------------------------------------------------------------
# Frobenius orbits


@dataclass(frozen=True)
class OrbitReport:
    """Vanishing statuses of [x^{p^e v}] for e = 0..e_max.

    kind is "nilpotent" (order = least e whose status is zero),
    "not_nilpotent" (certified: interior degrees are Frobenius-stable,
    boundary degrees by the exact lattice computation), or "unknown"
    (only possible outside -sigma when e_max stops short of the bound).
    """

    v: IntVector
    prime: int
    statuses: tuple[ZeroClassResult, ...]
    kind: str
    order: int | None

    @property
    def nilpotency_order(self) -> int | None:
        return self.order


def _p_adic_valuation(x: int, p: int) -> int:
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _boundary_nilpotency(S, facets, v, p, zero_facets) -> int | None:
    """Least e with p^e * v in some zero-facet's generator lattice.

    In coordinates where that lattice is spanned by d_j-multiples of a
    hyperplane basis, the condition is d_j | p^e * y_j, which splits into
    a p-free divisibility (independent of e) and a p-power deficit.
    """
    best = None
    for i in zero_facets:
        fd = facets[i]
        if not fd.facet_gens:
            cand = 0 if not any(v) else None
        else:
            a = solve_in_lattice(fd.hyperplane_basis, v)
            assert a is not None
            snf = smith_normal_form(fd.coord_matrix)
            y = vec_mat(a, snf.v)
            cand = 0
            for dj, yj in zip(snf.invariant_factors, y):
                rest = dj
                k = 0
                while rest % p == 0:
                    rest //= p
                    k += 1
                if yj % rest != 0:
                    cand = None
                    break
                if k and yj != 0:
                    cand = max(cand, k - min(k, _p_adic_valuation(yj, p)))
        if cand is not None:
            best = cand if best is None else min(best, cand)
    return best


def frobenius_orbit(
    S: AffineSemigroup,
    cert: GammaCertificate,
    facets: tuple[FacetData, ...],
    v,
    p: int,
    e_max: int,
    cap: int,
) -> OrbitReport:
    """Track [x^{p^e v}] for e = 0..e_max and classify the orbit.

    Once a level is zero, the next level reuses the scaled witness: if w
    kills p^e v then p*(p^e v + w) stays in the semigroup, so p*w kills
    the next level.  Outside -sigma, levels with p^e >= m_q must come out
    zero via the constructive witness; that is asserted, not assumed.
    """
    v = tuple(int(e) for e in v)
    signs = tuple(dot(u, v) for u in S.support_forms)
    outside = any(s > 0 for s in signs)
    statuses: list[ZeroClassResult] = []
    first_zero: int | None = None
    power = 1
    for e in range(e_max + 1):
        if first_zero is not None:
            prev = statuses[-1]
            st = _zero(
                prev.facet,
                vec_scale(prev.witness, p),
                tuple(c * p for c in prev.witness_coeffs),
            )
        else:
            st = zero_class(S, cert, facets, vec_scale(v, power), cap)
            if st.is_zero:
                first_zero = e
        if outside and power >= cert.m_q and not st.is_zero:
            raise AssertionError(
                f"constructive witness failed at p^{e} >= m_q for degree {v}"
            )
        statuses.append(st)
        power *= p
    if all(s < 0 for s in signs):
        kind, order = "not_nilpotent", None
    elif all(s <= 0 for s in signs):
        zeros = tuple(i for i, s in enumerate(signs) if s == 0)
        exact = _boundary_nilpotency(S, facets, v, p, zeros)
        if exact is None:
            kind, order = "not_nilpotent", None
            assert first_zero is None
        else:
            kind, order = "nilpotent", exact
            if exact <= e_max:
                assert first_zero == exact
    elif first_zero is not None:
        kind, order = "nilpotent", first_zero
    else:
        kind, order = "unknown", None
    return OrbitReport(v, p, tuple(statuses), kind, order)


# ---------------------------------------------------------------------------
# bounds and the window verifier


def theoretical_bound(cert: GammaCertificate, nq: int, p: int) -> int | None:
    """ceil(log_p m_q), i.e. the least e with p^e >= m_q; None if p <= nq.

    m_q <= 1 (in particular the saturated case m_q = 0) gives bound 0.
    """
    if p <= nq:
        return None
    m = cert.m_q
    e = 0
    power = 1
    while power < m:
        power *= p
        e += 1
    return e


@dataclass(frozen=True)
class HslReport:
    """Window sweep summary for one prime.

    violations lists nilpotent degrees whose order exceeds the bound; for
    p > nq this is guaranteed empty.  When p <= nq the bound is withheld
    and boundary degrees touching an invariant factor divisible by p are
    flagged instead.
    """

    prime: int
    window: int
    e_max: int
    cap: int
    nq: int
    theoretical_bound: int | None
    empirical_max: int
    region_counts: dict
    class_counts: dict
    violations: tuple[tuple[IntVector, int], ...]
    small_char_flags: tuple[IntVector, ...]

    def as_dict(self) -> dict:
        return {
            "prime": self.prime,
            "window": self.window,
            "e_max": self.e_max,
            "cap": self.cap,
            "n_q": self.nq,
            "theoretical_bound": self.theoretical_bound,
            "empirical_max": self.empirical_max,
            "region_counts": dict(self.region_counts),
            "class_counts": dict(self.class_counts),
            "violations": [
                {"degree": list(v), "order": o} for v, o in self.violations
            ],
            "small_char_flags": [list(v) for v in self.small_char_flags],
        }


def empirical_hsl(
    S: AffineSemigroup,
    cert: GammaCertificate,
    facets: tuple[FacetData, ...],
    p: int,
    window: int,
    e_max: int,
    cap: int,
) -> HslReport:
    """Sweep all degrees in [-window, window]^n and tally orbit behavior.

    Degrees are visited in a fixed lexicographic order, so reports are
    deterministic and independent of any execution interleaving.
    """
    from .semigroups import n_q as compute_nq

    nq = compute_nq(S, facets)
    bound = theoretical_bound(cert, nq, p)
    region_counts = {"neg_interior": 0, "neg_boundary": 0, "outside_neg": 0}
    class_counts = {"nilpotent": 0, "not_nilpotent": 0, "unknown": 0}
    emp_max = 0
    violations = []
    flags = []
    for v in product(range(-window, window + 1), repeat=S.dim):
        _, neg = classify(S.cone, v)
        region_counts[neg.kind] += 1
        orbit = frobenius_orbit(S, cert, facets, v, p, e_max, cap)
        class_counts[orbit.kind] += 1
        if orbit.kind == "nilpotent":
            emp_max = max(emp_max, orbit.order)
            if bound is not None and orbit.order > bound:
                violations.append((v, orbit.order))
        if bound is None and neg.kind == "neg_boundary":
            if any(
                d % p == 0
                for i in neg.zero_facets
                for d in facets[i].invariant_factors
                if d > 1
            ):
                flags.append(v)
    return HslReport(
        p,
        window,
        e_max,
        cap,
        nq,
        bound,
        emp_max,
        region_counts,
        class_counts,
        tuple(violations),
        tuple(flags),
    )


def hsl_exact_dim1(S: AffineSemigroup, p: int) -> int:
    """Exact nilpotence exponent for one-dimensional semigroups.

    Equals the least e with p^e * w in the semigroup, where w is the
    lattice generator lying in the cone.
    """
    if S.dim != 1:
        raise DimensionMismatchError("exact formula needs a rank-1 semigroup")
    w = (1,) if dot(S.support_forms[0], (1,)) > 0 else (-1,)
    e = 0
    power = 1
    while not member(S, vec_scale(w, power)):
        power *= p
        e += 1
    return e
