"""Invariant monomials of diagonal group actions and their binomial relations.

An action is pure weight data: a monomial is invariant exactly when its
exponent vector is orthogonal to every torus weight row and satisfies every
finite congruence row.  Generating sets come from bounded enumeration with
divisibility filtering, certified by a saturation check at twice the bound.
Relations come from congruence closure (union-find) over expanded ambient
monomials, which is complete for binomial ideals, so every answer is exact up
to the stated degree bound.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvolutionError, NonSaturationError, ToolkitError
from .lattice import grlex_key, sort_monomials, total_degree


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class DiagonalAction:
    """Diagonal action of (C*)^k x (finite abelian) on C^n, given by weights.

    ``torus_weights`` has one integer row of length n per C* factor.
    ``finite_factors`` is a sequence of (modulus, weight row) pairs; a cyclic
    factor of order m acts on the i-th variable by the (weight_i)-th power of
    a primitive m-th root of unity.
    """

    ambient_dim: int
    torus_weights: tuple[tuple[int, ...], ...] = ()
    finite_factors: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "torus_weights", tuple(tuple(r) for r in self.torus_weights)
        )
        object.__setattr__(
            self,
            "finite_factors",
            tuple((m, tuple(w)) for m, w in self.finite_factors),
        )
        if self.ambient_dim < 1:
            raise ToolkitError("ambient dimension must be positive")
        for row in self.torus_weights:
            if len(row) != self.ambient_dim:
                raise ToolkitError("torus weight row has wrong length")
        for modulus, row in self.finite_factors:
            if modulus < 2:
                raise ToolkitError("finite factor modulus must be >= 2")
            if len(row) != self.ambient_dim:
                raise ToolkitError("finite weight row has wrong length")


@dataclass(frozen=True)
class MonoidPresentation:
    """Monomial generators plus binomial relations over the generator set.

    A relation is a pair (u, v) of exponent vectors over the generator index
    set whose ambient expansions agree.  Relations may be empty for a
    generators-only presentation.
    """

    ambient_dim: int
    generators: tuple[tuple[int, ...], ...]
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        rels = tuple((tuple(u), tuple(v)) for u, v in self.relations)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        seen = set()
        for g in gens:
            if len(g) != self.ambient_dim:
                raise ToolkitError("generator has wrong ambient dimension")
            if sum(g) < 1:
                raise ToolkitError("the unit monomial cannot be a generator")
            if g in seen:
                raise ToolkitError(f"duplicate generator {g}")
            seen.add(g)
        for u, v in rels:
            if len(u) != len(gens) or len(v) != len(gens):
                raise ToolkitError("relation side has wrong generator count")
            if self.expand(u) != self.expand(v):
                raise ToolkitError(f"relation {u} = {v} does not expand to an identity")

    def expand(self, genexp) -> tuple[int, ...]:
        """Ambient monomial obtained by expanding a generator exponent vector."""
        out = [0] * self.ambient_dim
        for e, g in zip(genexp, self.generators):
            if e:
                for i, gi in enumerate(g):
                    out[i] += e * gi
        return tuple(out)

    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(sum(g) for g in self.generators)


@dataclass(frozen=True)
class CoordinateInvolution:
    """Order-two coordinate substitution x_i -> sign_i * x_image[i]."""

    image: tuple[int, ...]
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        image = tuple(self.image)
        signs = tuple(self.signs) if self.signs else (1,) * len(image)
        object.__setattr__(self, "image", image)
        object.__setattr__(self, "signs", signs)
        n = len(image)
        if sorted(image) != list(range(n)):
            raise InvolutionError("image is not a permutation of the variables")
        if len(signs) != n or any(s not in (1, -1) for s in signs):
            raise InvolutionError("signs must be +1 or -1, one per variable")
        for i in range(n):
            if image[image[i]] != i:
                raise InvolutionError("substitution applied twice is not the identity")
            if signs[i] * signs[image[i]] != 1:
                raise InvolutionError("signs applied twice are not the identity")

    @classmethod
    def identity(cls, n: int) -> "CoordinateInvolution":
        return cls(tuple(range(n)))


@dataclass(frozen=True)
class IsomorphismResult:
    """Outcome of a presentation comparison, with a certificate either way."""

    isomorphic: bool
    degree_bound: int
    classes_checked: int
    detail: str
    counterexample: tuple | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


# ---------------------------------------------------------------------------
# invariance and enumeration


def is_invariant(action: DiagonalAction, monomial) -> bool:
    """Exact weight test for a single monomial."""
    if len(monomial) != action.ambient_dim:
        raise ToolkitError("monomial has wrong ambient dimension")
    for row in action.torus_weights:
        if sum(w * e for w, e in zip(row, monomial)):
            return False
    for modulus, row in action.finite_factors:
        if sum(w * e for w, e in zip(row, monomial)) % modulus:
            return False
    return True


@functools.cache
def invariant_monomials(action: DiagonalAction, max_degree: int) -> tuple:
    """All invariant monomials of total degree <= max_degree, grlex sorted.

    Depth-first enumeration over the variables.  Torus rows prune hard: with
    r units of degree left over the variables i..n-1, the reachable extra
    weight on each row lies between r*min(0, row[i:]) and r*max(0, row[i:]),
    so any partial weight outside that window is dead.
    """
    n = action.ambient_dim
    torus = action.torus_weights
    k = len(torus)
    finite = action.finite_factors

    lo = [[0] * (n + 1) for _ in range(k)]
    hi = [[0] * (n + 1) for _ in range(k)]
    for r in range(k):
        for i in range(n - 1, -1, -1):
            lo[r][i] = min(lo[r][i + 1], torus[r][i])
            hi[r][i] = max(hi[r][i + 1], torus[r][i])

    out = []
    exps = [0] * n
    tw = [0] * k
    fw = [0] * len(finite)

    def rec(i: int, remaining: int) -> None:
        for r in range(k):
            t = -tw[r]
            if t < remaining * lo[r][i] or t > remaining * hi[r][i]:
                return
        if i == n:
            if all(tw[r] == 0 for r in range(k)) and all(
                fw[j] % finite[j][0] == 0 for j in range(len(finite))
            ):
                out.append(tuple(exps))
            return
        rec(i + 1, remaining)
        for e in range(1, remaining + 1):
            exps[i] = e
            for r in range(k):
                tw[r] += torus[r][i]
            for j in range(len(finite)):
                fw[j] += finite[j][1][i]
            rec(i + 1, remaining - e)
        for r in range(k):
            tw[r] -= exps[i] * torus[r][i]
        for j in range(len(finite)):
            fw[j] -= exps[i] * finite[j][1][i]
        exps[i] = 0

    rec(0, max_degree)
    return tuple(sort_monomials(out))


def _factorable(monomials, generators) -> dict:
    """Map each monomial to whether it is a product of the given generators."""
    gens = list(generators)
    memo: dict[tuple, bool] = {}

    def check(m) -> bool:
        known = memo.get(m)
        if known is not None:
            return known
        if sum(m) == 0:
            memo[m] = True
            return True
        ok = False
        for g in gens:
            if all(x <= y for x, y in zip(g, m)):
                if check(tuple(y - x for x, y in zip(g, m))):
                    ok = True
                    break
        memo[m] = ok
        return ok

    return {m: check(m) for m in monomials}


def invariant_generators(
    action: DiagonalAction, degree_bound: int, *, require_saturation: bool = True
) -> MonoidPresentation:
    """Minimal monomial generators of the invariant ring, up to degree_bound.

    A monomial of degree <= degree_bound is kept when no invariant monomial
    of strictly smaller positive degree divides it (the quotient by an
    invariant divisor is automatically invariant, so this is exactly the
    Hilbert basis condition within the bound).

    Saturation certificate: every invariant monomial of degree at most
    2*degree_bound must factor into the kept generators, otherwise the bound
    was too small and NonSaturationError reports the first witness.
    """
    if degree_bound < 1:
        raise ToolkitError("degree bound must be >= 1")
    reach = 2 * degree_bound if require_saturation else degree_bound
    extended = invariant_monomials(action, reach)
    in_bound = [m for m in extended if 1 <= sum(m) <= degree_bound]

    generators = []
    for m in in_bound:
        deg = sum(m)
        proper_divisor = any(
            1 <= sum(d) < deg and all(x <= y for x, y in zip(d, m)) for d in in_bound
        )
        if not proper_divisor:
            generators.append(m)

    if require_saturation:
        reachable = _factorable((m for m in extended if sum(m) >= 1), generators)
        for m in extended:
            if sum(m) >= 1 and not reachable[m]:
                raise NonSaturationError(
                    f"invariant monomial {m} of degree {sum(m)} does not factor "
                    f"into the degree-{degree_bound} generators; raise the bound",
                    witness=m,
                )
    return MonoidPresentation(action.ambient_dim, tuple(generators))


# ---------------------------------------------------------------------------
# binomial relations via congruence closure


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _generator_monomials(pres: MonoidPresentation, bound: int):
    """All exponent vectors over the generators with expansion degree <= bound.

    Yields (genexp, expansion) pairs; enumeration order is deterministic.
    """
    gens = pres.generators
    degs = pres.generator_degrees()
    g = len(gens)
    n = pres.ambient_dim
    cur = [0] * g
    amb = [0] * n

    def rec(i: int, remaining: int):
        if i == g:
            yield tuple(cur), tuple(amb)
            return
        yield from rec(i + 1, remaining)
        d = degs[i]
        e = 0
        while (e + 1) * d <= remaining:
            e += 1
            cur[i] = e
            for j, gj in enumerate(gens[i]):
                amb[j] += gj
            yield from rec(i + 1, remaining - e * d)
        if e:
            for j, gj in enumerate(gens[i]):
                amb[j] -= e * gj
            cur[i] = 0

    yield from rec(0, bound)


def _genmon_sign(genexp, gen_signs) -> int:
    if gen_signs is None:
        return 1
    s = 1
    for e, gs in zip(genexp, gen_signs):
        if gs < 0 and e % 2:
            s = -s
    return s


def _closure(
    pres: MonoidPresentation,
    bound: int,
    given_relations,
    collect_new: bool,
    gen_signs=None,
):
    """Shared congruence-closure engine.

    Processes expansion fibers in increasing ambient degree.  Within a fiber,
    two generator monomials are merged when they become equal after deleting
    one shared generator (a congruence step in context, sound because lower
    fibers are already final), and when a given relation identifies them.  If
    ``collect_new`` is set, any components still separate afterwards get
    joined by fresh relations, which are returned; this yields a minimal
    generating set of the congruence up to the bound.
    """
    fibers: dict = {}
    for genexp, amb in _generator_monomials(pres, bound):
        key = (amb, _genmon_sign(genexp, gen_signs))
        fibers.setdefault(key, []).append(genexp)

    by_relation: dict = {}
    for u, v in given_relations:
        key = (pres.expand(u), _genmon_sign(u, gen_signs))
        if _genmon_sign(v, gen_signs) != key[1]:
            raise ToolkitError("relation sides have opposite signs")
        by_relation.setdefault(key, []).append((u, v))

    uf = _UnionFind()
    for members in fibers.values():
        for m in members:
            uf.add(m)

    new_relations = []
    side_key = lambda u: (sum(u), u)
    for key in sorted(fibers, key=lambda k: (sum(k[0]), grlex_key(k[0]), -k[1])):
        members = sorted(fibers[key], key=side_key)
        if len(members) > 1:
            for a, b in combinations(members, 2):
                if uf.find(a) == uf.find(b):
                    continue
                for i in range(len(a)):
                    if a[i] and b[i]:
                        da = a[:i] + (a[i] - 1,) + a[i + 1 :]
                        db = b[:i] + (b[i] - 1,) + b[i + 1 :]
                        if uf.find(da) == uf.find(db):
                            uf.union(a, b)
                            break
        for u, v in by_relation.get(key, ()):
            uf.union(u, v)
        if collect_new and len(members) > 1:
            components: dict = {}
            for m in members:
                components.setdefault(uf.find(m), []).append(m)
            if len(components) > 1:
                reps = sorted((min(ms, key=side_key) for ms in components.values()),
                              key=side_key)
                base = reps[0]
                for other in reps[1:]:
                    new_relations.append((base, other))
                    uf.union(base, other)

    classes = {m: uf.find(m) for members in fibers.values() for m in members}
    return tuple(new_relations), classes, fibers


def binomial_relations(
    pres: MonoidPresentation, degree_bound: int, gen_signs=None
) -> tuple:
    """Minimal generating set of binomial relations up to an ambient degree."""
    rels, _, _ = _closure(pres, degree_bound, (), collect_new=True,
                          gen_signs=gen_signs)
    return rels


def generates_congruence(
    pres: MonoidPresentation, relations, degree_bound: int
) -> bool:
    """Whether the given relations generate the full congruence up to bound."""
    _, classes, fibers = _closure(pres, degree_bound, relations,
                                  collect_new=False)
    for members in fibers.values():
        roots = {classes[m] for m in members}
        if len(roots) > 1:
            return False
    return True


def toric_relations(
    action: DiagonalAction, gens: MonoidPresentation, degree_bound: int
) -> MonoidPresentation:
    """Attach a minimal binomial relation set to an invariant generator set."""
    for g in gens.generators:
        if not is_invariant(action, g):
            raise ToolkitError(f"generator {g} is not invariant under the action")
    rels = binomial_relations(gens, degree_bound)
    return MonoidPresentation(gens.ambient_dim, gens.generators, rels)


def relation_profile(pres: MonoidPresentation) -> dict:
    """Histogram of relations keyed by (ambient degree, sorted side degrees)."""
    profile: dict = {}
    for u, v in pres.relations:
        key = (sum(pres.expand(u)), tuple(sorted((sum(u), sum(v)))))
        profile[key] = profile.get(key, 0) + 1
    return profile


# ---------------------------------------------------------------------------
# fixed loci of normalizing involutions


def _permuted_exponents(g, image) -> tuple[int, ...]:
    out = [0] * len(g)
    for i, e in enumerate(g):
        if e:
            out[image[i]] += e
    return tuple(out)


def _check_normalizes(
    action: DiagonalAction, pres: MonoidPresentation, inv: CoordinateInvolution
) -> None:
    """The involution must map invariant monomials to invariant monomials.

    Checking the generators suffices: the substitution is multiplicative, so
    closure on generators is closure on everything they generate.  Both the
    identity and any substitution conjugating the acting group into itself
    pass; a substitution moving a generator off the invariant cone fails.
    """
    for g in pres.generators:
        image = _permuted_exponents(g, inv.image)
        if not is_invariant(action, image):
            raise InvolutionError(
                f"involution does not normalize the action: generator {g} "
                f"maps to non-invariant {image}"
            )


def fixed_locus_presentation(
    action: DiagonalAction,
    pres: MonoidPresentation,
    inv: CoordinateInvolution,
    degree_bound: int | None = None,
) -> MonoidPresentation:
    """Presentation induced on the fixed locus of a normalizing involution.

    The fixed locus of the substitution is cut out by identifying each
    variable with (sign times) its image; generators are rewritten in one
    representative variable per orbit, duplicates merge, and the relations
    are recomputed by congruence closure in the reduced variables.  When no
    bound is given, the largest ambient degree among the input relations is
    reused (or twice the top generator degree if there are none).
    """
    if len(inv.image) != action.ambient_dim != pres.ambient_dim:
        raise ToolkitError("action, presentation and involution dimensions differ")
    _check_normalizes(action, pres, inv)

    n = action.ambient_dim
    rep = list(range(n))
    zeroed = [False] * n
    for i in range(n):
        j = inv.image[i]
        if j == i and inv.signs[i] == -1:
            zeroed[i] = True
        rep[i] = min(i, j)
    reps = sorted({rep[i] for i in range(n) if not zeroed[i]})
    index_of = {r: k for k, r in enumerate(reps)}

    reduced: dict[tuple[int, ...], int] = {}
    for g in pres.generators:
        if any(zeroed[i] and g[i] for i in range(n)):
            continue  # the generator vanishes on the fixed locus
        image = [0] * len(reps)
        sign = 1
        for i, e in enumerate(g):
            if not e:
                continue
            image[index_of[rep[i]]] += e
            if i != rep[i] and inv.signs[i] == -1 and e % 2:
                sign = -sign
        key = tuple(image)
        if key in reduced and reduced[key] != sign:
            raise InvolutionError(
                f"generators collapse onto {key} with opposite signs; "
                "the fixed locus is not a monomial cone"
            )
        reduced.setdefault(key, sign)

    new_gens = sort_monomials(reduced)
    signs = tuple(reduced[g] for g in new_gens)
    if degree_bound is None:
        if pres.relations:
            degree_bound = max(sum(pres.expand(u)) for u, _ in pres.relations)
        else:
            degree_bound = 2 * max(total_degree(g) for g in pres.generators)
    base = MonoidPresentation(len(reps), tuple(new_gens))
    gen_signs = signs if any(s < 0 for s in signs) else None
    rels = binomial_relations(base, degree_bound, gen_signs=gen_signs)
    return MonoidPresentation(len(reps), tuple(new_gens), rels)


# ---------------------------------------------------------------------------
# presentation comparison


def match_generators(
    a: MonoidPresentation, b: MonoidPresentation, variable_map=None
) -> tuple[int, ...]:
    """Generator bijection matching exponent vectors, up to a variable map.

    ``variable_map[i]`` names the variable of b corresponding to variable i
    of a (identity when omitted).  Raises when the matched sets differ.
    """
    if variable_map is None:
        if a.ambient_dim != b.ambient_dim:
            raise ToolkitError("ambient dimensions differ and no variable map given")
        variable_map = tuple(range(a.ambient_dim))
    lookup = {g: i for i, g in enumerate(b.generators)}
    mapping = []
    for g in a.generators:
        image = [0] * b.ambient_dim
        for i, e in enumerate(g):
            image[variable_map[i]] += e
        j = lookup.get(tuple(image))
        if j is None:
            raise ToolkitError(f"generator {g} has no counterpart under the map")
        mapping.append(j)
    if len(set(mapping)) != len(b.generators):
        raise ToolkitError("generator correspondence is not a bijection")
    return tuple(mapping)


def presentations_isomorphic(
    a: MonoidPresentation,
    b: MonoidPresentation,
    generator_map,
    degree_bound: int = 4,
) -> IsomorphismResult:
    """Decide whether a generator bijection carries one congruence to the other.

    Two generator monomials are congruent exactly when their ambient
    expansions agree, so the check compares the expansion fibers of both
    sides over all generator exponent vectors of total degree <= the bound.
    A failed comparison returns the offending pair as a counterexample.
    """
    if len(a.generators) != len(b.generators):
        return IsomorphismResult(
            False,
            degree_bound,
            0,
            f"generator count mismatch: {len(a.generators)} vs {len(b.generators)}",
        )
    gmap = tuple(generator_map)
    if sorted(gmap) != list(range(len(b.generators))):
        raise ToolkitError("generator map is not a bijection onto the target")

    def mapped(u):
        w = [0] * len(gmap)
        for i, e in enumerate(u):
            w[gmap[i]] = e
        return tuple(w)

    fiber_a: dict = {}
    fiber_b: dict = {}
    genmons = []
    cur = [0] * len(a.generators)

    def rec(i, remaining):
        if i == len(cur):
            genmons.append(tuple(cur))
            return
        for e in range(remaining + 1):
            cur[i] = e
            rec(i + 1, remaining - e)
        cur[i] = 0

    rec(0, degree_bound)
    for u in genmons:
        fiber_a.setdefault(a.expand(u), []).append(u)
        fiber_b.setdefault(b.expand(mapped(u)), u)

    image_keys = {}
    for amb, members in fiber_a.items():
        keys = {b.expand(mapped(u)) for u in members}
        if len(keys) > 1:
            first = members[0]
            other = next(
                u for u in members if b.expand(mapped(u)) != b.expand(mapped(first))
            )
            return IsomorphismResult(
                False,
                degree_bound,
                len(fiber_a),
                "congruent on the source, not on the target",
                counterexample=(first, other),
            )
        key = keys.pop()
        if key in image_keys:
            return IsomorphismResult(
                False,
                degree_bound,
                len(fiber_a),
                "congruent on the target, not on the source",
                counterexample=(members[0], image_keys[key]),
            )
        image_keys[key] = members[0]
    return IsomorphismResult(
        True,
        degree_bound,
        len(fiber_a),
        f"fiber partitions agree on {len(genmons)} generator monomials",
    )
