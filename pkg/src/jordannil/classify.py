"""Classification of nilpotent Jordan algebras over prime fields.

classify_dim builds dimension n from dimension < n: direct sums with a
one-dimensional trivial algebra supply the classes with a central component,
orbit representatives of allowable subspaces of H² supply the central
extensions without one, and an isomorphism test removes duplicates.
brute_force_classes is the independent oracle: enumerate every symmetric
structure-constant table, filter, and partition by explicit basis changes.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from . import cohomology, extension, homsearch, orbits
from .algebra import Algebra, fingerprint_key, zero_algebra


class InstanceTooLargeError(ValueError):
    """Brute-force enumeration would exceed the desk-scale bound."""


@dataclass(frozen=True)
class Provenance:
    kind: str                 # "base", "direct_sum" or "extension"
    parent_dim: int = None
    parent_index: int = None  # index into classify_dim(parent_dim) output
    r: int = None
    rep_coords: tuple = None  # orbit representative, rows in the H² basis

    def describe(self):
        if self.kind == "base":
            return "zero algebra"
        if self.kind == "oracle":
            return "brute-force enumeration"
        if self.kind == "direct_sum":
            return (f"direct sum: dim-{self.parent_dim} class "
                    f"#{self.parent_index + 1} + trivial line")
        return (f"extension of dim-{self.parent_dim} class "
                f"#{self.parent_index + 1}, r={self.r}, orbit rep "
                f"{self.rep_coords}")


@dataclass(frozen=True)
class ClassificationResult:
    dim: int
    field: object
    representatives: tuple
    provenance: tuple

    def __len__(self):
        return len(self.representatives)


def descendants_with_reps(a, r, verify=True):
    """(J_θ, orbit representative) for each Aut-orbit of allowable subspaces."""
    h2 = cohomology.h2_space(a)
    if r > h2.dim:
        return []
    aut = orbits.automorphism_group(a)
    out = []
    for rep in orbits.orbit_representatives_from(a, h2, aut, r):
        forms = orbits.point_forms(h2, rep)
        vec = extension.CocycleVector(a, forms, validate=True)
        ext = extension.central_extension(a, vec, validate=False)
        if verify:
            _, flag = extension.centre_of_extension_decomposition(a, vec)
            if not flag:
                raise AssertionError(
                    "centre decomposition failed on a descendant")
        out.append((ext, rep))
    return out


def descendants(a, r):
    """Step-r descendants of a: central extensions without central component."""
    return [ext for ext, _ in descendants_with_reps(a, r)]


def classify_dim(n, fld, _memo=None):
    """All nilpotent Jordan algebras of dimension n over F_p, up to isomorphism."""
    if not fld.is_prime_field:
        raise ValueError("classification runs over prime fields")
    if n < 1:
        raise ValueError("dimension must be at least 1")
    memo = _memo if _memo is not None else {}
    if n in memo:
        return memo[n]
    if n == 1:
        result = ClassificationResult(
            1, fld, (zero_algebra(fld, 1),), (Provenance("base"),))
        memo[1] = result
        return result

    candidates = []
    below = classify_dim(n - 1, fld, memo)
    for idx, d in enumerate(below.representatives):
        candidates.append((d.direct_sum(zero_algebra(fld, 1)),
                           Provenance("direct_sum", n - 1, idx)))
    for r in range(1, n):
        parents = classify_dim(n - r, fld, memo)
        for idx, parent in enumerate(parents.representatives):
            for ext, rep in descendants_with_reps(parent, r):
                candidates.append(
                    (ext, Provenance("extension", n - r, idx, r, rep.coords)))

    kept = []
    buckets = {}
    for cand, prov in candidates:
        key = cand.fingerprint()
        bucket = buckets.setdefault(key, [])
        if any(homsearch.find_witness(cand, other) is not None
               for other, _ in bucket):
            continue
        bucket.append((cand, prov))
        kept.append((cand, prov))

    from .files import render_algebra
    kept.sort(key=lambda cp: (fingerprint_key(cp[0].fingerprint()),
                              render_algebra(cp[0])))
    result = ClassificationResult(
        n, fld,
        tuple(c for c, _ in kept),
        tuple(p for _, p in kept))
    memo[n] = result
    return result


# -- brute-force oracle -----------------------------------------------------

_BRUTE_BOUND = 2_000_000


def _table_combo(a, pairs):
    out = []
    for i, j in pairs:
        out.extend(a.table[i - 1][j - 1])
    return tuple(out)


def _rank_is_full(vecs, p, n):
    rows = [list(v) for v in vecs if any(v)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = (rows[i][c] * inv) % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == n:
            return True
    return False


def brute_force_classes(n, fld):
    """Oracle: enumerate all symmetric tables, filter Jordan + nilpotent,
    partition into isomorphism classes by explicit GL(n, p) basis changes."""
    if not fld.is_prime_field:
        raise ValueError("the oracle runs over prime fields")
    p = fld.p
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    slots = len(pairs) * n
    if p ** slots > _BRUTE_BOUND:
        raise InstanceTooLargeError(
            f"{p}^{slots} tables exceed the oracle bound {_BRUTE_BOUND}")

    gl = homsearch.find_isomorphisms(zero_algebra(fld, n), zero_algebra(fld, n),
                                     find_all=True)
    seen = set()
    reps = []
    for combo in iproduct(range(p), repeat=slots):
        if combo in seen:
            continue
        vecs = [combo[t * n:(t + 1) * n] for t in range(len(pairs))]
        if _rank_is_full(vecs, p, n):
            continue  # J² = J can never be nilpotent
        consts = {}
        for t, (i, j) in enumerate(pairs):
            for k in range(n):
                c = combo[t * n + k]
                if c:
                    consts[(i, j, k + 1)] = c
        a = Algebra(fld, n, consts)
        nilpotent, _ = a.is_nilpotent()
        if not nilpotent or not a.check_jordan():
            continue
        reps.append(a)
        for mat in gl:
            seen.add(_table_combo(a.change_basis(mat), pairs))

    from .files import render_algebra
    order = sorted(range(len(reps)),
                   key=lambda i: (fingerprint_key(reps[i].fingerprint()),
                                  render_algebra(reps[i])))
    return ClassificationResult(
        n, fld,
        tuple(reps[i] for i in order),
        tuple(Provenance("oracle") for _ in order))


def match_classes(result_a, result_b):
    """Bijection between two classifications with explicit witnesses.

    Returns [(i, j, witness)] with witness mapping result_a.representatives[i]
    onto result_b.representatives[j]; raises if no bijection exists.
    """
    if len(result_a) != len(result_b):
        raise AssertionError(
            f"class counts differ: {len(result_a)} vs {len(result_b)}")
    matches = []
    used = set()
    for i, a in enumerate(result_a.representatives):
        found = None
        for j, b in enumerate(result_b.representatives):
            if j in used:
                continue
            if a.fingerprint() != b.fingerprint():
                continue
            witness = homsearch.find_witness(a, b)
            if witness is not None:
                found = (j, witness)
                break
        if found is None:
            raise AssertionError(f"representative {i} matches nothing")
        used.add(found[0])
        matches.append((i, found[0], found[1]))
    return matches
