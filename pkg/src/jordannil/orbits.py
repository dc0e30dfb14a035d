"""Automorphism groups and their orbits on subspaces of H².

Points of the Grassmannian G_r(H²) are r × dim(H²) coordinate matrices in
canonical RREF, so point equality is structural.  An automorphism phi acts on
H² coordinates through pull-back followed by reduction modulo δC¹; the orbit
of a point under the full (finite) group is obtained in a single pass.
"""

from itertools import combinations, product as iproduct

from . import cohomology, linalg
from .field import UnsupportedFieldError
from .homsearch import find_isomorphisms


class AutGroup:
    """The full automorphism group of an algebra over a prime field."""

    __slots__ = ("algebra", "elements")

    def __init__(self, algebra, elements):
        self.algebra = algebra
        self.elements = tuple(elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return tuple(tuple(r) for r in m) in set(self.elements)


def automorphism_group(a):
    """Enumerate Aut(J) by backtracking over basis images."""
    if not a.field.is_prime_field:
        raise UnsupportedFieldError("Aut(J) over Q is not a finite list")
    mats = find_isomorphisms(a, a, find_all=True)
    return AutGroup(a, mats)


class SubspacePoint:
    """An r-dimensional subspace of H² in canonical RREF coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(tuple(r) for r in coords)

    @property
    def r(self):
        return len(self.coords)

    def __eq__(self, other):
        return isinstance(other, SubspacePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"SubspacePoint({self.coords})"


def grassmannian_points(h2_dim, r, field):
    """All r-dimensional subspaces of field^h2_dim, each exactly once.

    Enumerates canonical RREF matrices: a pivot column combination plus free
    entries (free positions are right of the row's pivot and not pivots of
    other rows).
    """
    if not field.is_prime_field:
        raise UnsupportedFieldError("cannot enumerate subspaces over Q")
    if not 1 <= r <= h2_dim:
        raise ValueError(f"need 1 <= r <= {h2_dim}, got {r}")
    p_elems = list(range(field.p))
    for pivots in combinations(range(h2_dim), r):
        pivot_set = set(pivots)
        free_pos = [(row, col)
                    for row, pc in enumerate(pivots)
                    for col in range(pc + 1, h2_dim)
                    if col not in pivot_set]
        for values in iproduct(p_elems, repeat=len(free_pos)):
            mat = [[field.zero] * h2_dim for _ in range(r)]
            for row, pc in enumerate(pivots):
                mat[row][pc] = field.one
            for (row, col), v in zip(free_pos, values):
                mat[row][col] = v
            yield SubspacePoint(mat)


def h2_action_matrix(h2, phi):
    """Matrix of the action of phi on H² coordinates (rows = basis images)."""
    rows = []
    for b in h2.basis:
        pulled = cohomology.pull_back(phi, b)
        rows.append(h2.reduce(pulled))
    return tuple(rows)


def act_on_h2(h2, phi, coords):
    """Image of an H²-coordinate row vector under phi."""
    m = h2_action_matrix(h2, phi)
    return linalg.vec_mat(h2.field, coords, m)


def _canonical_point(field, rows):
    red, _ = linalg.rref(field, rows)
    return SubspacePoint(red)


def _point_key(pt):
    return pt.coords


def point_forms(h2, pt):
    """Lift a subspace point to its representative cocycles."""
    return tuple(h2.lift(row) for row in pt.coords)


def _is_allowable_point(algebra, h2, pt):
    forms = point_forms(h2, pt)
    rad = cohomology.radical(list(forms))
    return rad.intersection(algebra.centre()).is_zero()


def allowable_points(a, h2, r):
    """U_r(J): Grassmannian points whose joint radical avoids the centre."""
    if r > h2.dim:
        return []
    return [pt for pt in grassmannian_points(h2.dim, r, a.field)
            if _is_allowable_point(a, h2, pt)]


def orbit_of_point(h2, aut, pt):
    """Full orbit of a point under the automorphism group (single pass)."""
    field = h2.field
    mats = {h2_action_matrix(h2, phi) for phi in aut}
    orbit = set()
    for m in mats:
        rows = [linalg.vec_mat(field, row, m) for row in pt.coords]
        orbit.add(_canonical_point(field, rows))
    return orbit


def orbit_representatives_from(a, h2, aut, r):
    """Orbit representatives with precomputed H² data and Aut group."""
    if r > h2.dim:
        return []
    field = a.field
    action_mats = sorted({h2_action_matrix(h2, phi) for phi in aut})
    reps = []
    visited = set()
    for pt in allowable_points(a, h2, r):
        if pt in visited:
            continue
        orbit = set()
        for m in action_mats:
            rows = [linalg.vec_mat(field, row, m) for row in pt.coords]
            orbit.add(_canonical_point(field, rows))
        visited |= orbit
        reps.append(min(orbit, key=_point_key))
    return sorted(reps, key=_point_key)


def orbit_representatives(a, r):
    """Lexicographically least representative of each Aut(J)-orbit on U_r(J)."""
    h2 = cohomology.h2_space(a)
    if r > h2.dim:
        return []
    aut = automorphism_group(a)
    return orbit_representatives_from(a, h2, aut, r)
