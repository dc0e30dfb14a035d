"""Commutative structure-constant algebras and their structural invariants.

An Algebra holds the ground field, a dimension n and the symmetric products
e_i ∘ e_j = Σ_k c_{ij}^k e_k.  Only pairs i ≤ j are accepted on construction;
the full table is materialized for O(1) lookup.  All values are immutable.
"""

from collections import namedtuple
from itertools import product as iproduct
import string

from . import linalg
from .linalg import Subspace


Fingerprint = namedtuple(
    "Fingerprint",
    ["dim", "dim_centre", "dims_lcs", "dim_square", "nilindex",
     "is_associative", "dim_centre_meet_square"])


def fingerprint_key(fp):
    """Total-order sort key (nilindex None means the series never dies)."""
    ni = fp.nilindex if fp.nilindex is not None else 10 ** 9
    return (fp.dim, fp.dim_centre, fp.dims_lcs, fp.dim_square, ni,
            fp.is_associative, fp.dim_centre_meet_square)


def default_labels(n):
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"e{i + 1}" for i in range(n))


class Algebra:
    """Commutative algebra given by symmetric structure constants."""

    __slots__ = ("field", "dim", "table", "labels", "_cache")

    def __init__(self, field, dim, constants=None, labels=None):
        self.field = field
        self.dim = dim
        rows = [[list([field.zero] * dim) for _ in range(dim)] for _ in range(dim)]
        if constants:
            for (i, j, k), c in constants.items():
                if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                    raise ValueError(f"product index ({i},{j},{k}) out of range")
                if i > j:
                    raise ValueError(f"constants must use i <= j, got ({i},{j})")
                c = field.of(c)
                rows[i - 1][j - 1][k - 1] = c
                rows[j - 1][i - 1][k - 1] = c
        self.table = tuple(tuple(tuple(v) for v in row) for row in rows)
        self.labels = tuple(labels) if labels else default_labels(dim)
        self._cache = {}

    @classmethod
    def from_table(cls, field, table, labels=None):
        a = cls.__new__(cls)
        a.field = field
        a.dim = len(table)
        a.table = tuple(tuple(tuple(v) for v in row) for row in table)
        a.labels = tuple(labels) if labels else default_labels(a.dim)
        a._cache = {}
        return a

    @property
    def constants(self):
        """Nonzero constants as {(i, j, k): c} with 1-based i <= j."""
        out = {}
        for i in range(self.dim):
            for j in range(i, self.dim):
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[(i + 1, j + 1, k + 1)] = c
        return out

    def encode(self):
        return (repr(self.field), self.dim, tuple(sorted(self.constants.items())))

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field
                and self.dim == other.dim and self.table == other.table)

    def __hash__(self):
        return hash(self.encode())

    def __repr__(self):
        parts = []
        for (i, j, k), c in sorted(self.constants.items()):
            lhs = (f"{self.labels[i - 1]}^2" if i == j
                   else f"{self.labels[i - 1]}*{self.labels[j - 1]}")
            coeff = "" if c == self.field.one else f"{self.field.render(c)}*"
            parts.append(f"{lhs}={coeff}{self.labels[k - 1]}")
        body = ", ".join(parts) if parts else "zero"
        return f"Algebra({self.field!r}, dim {self.dim}: {body})"

    # -- products ---------------------------------------------------------

    def product(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = f.mul(xi, yj)
                for k, t in enumerate(row[j]):
                    if t:
                        out[k] = f.add(out[k], f.mul(c, t))
        return tuple(out)

    def product_basis(self, x, j):
        """product(x, e_{j+1}) without building the unit vector."""
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for k, t in enumerate(self.table[i][j]):
                if t:
                    out[k] = f.add(out[k], f.mul(xi, t))
        return tuple(out)

    def all_vectors(self):
        if not self.field.is_prime_field:
            raise ValueError("cannot enumerate vectors over Q")
        return iproduct(range(self.field.p), repeat=self.dim)

    # -- identities -------------------------------------------------------

    def check_jordan(self):
        """x² ∘ (x ∘ y) = x ∘ (x² ∘ y) for all x, y.

        Strategy: pointwise over the whole space for F_2/F_3 (the cubic
        identity cannot be recovered from its linearization there),
        the fully linearized identity on basis quadruples for p >= 5,
        and symbolic coefficient expansion over Q.
        """
        if "jordan" not in self._cache:
            f = self.field
            if f.is_prime_field and f.p in (2, 3):
                ok = self._jordan_pointwise()
            elif f.is_prime_field:
                ok = self._jordan_linearized()
            else:
                ok = self._jordan_symbolic()
            self._cache["jordan"] = ok
        return self._cache["jordan"]

    def _jordan_pointwise(self):
        n = self.dim
        for x in self.all_vectors():
            xx = self.product(x, x)
            for j in range(n):
                xy = self.product_basis(x, j)
                xxy = self.product_basis(xx, j)
                if self.product(xx, xy) != self.product(x, xxy):
                    return False
        return True

    def _jordan_linearized(self):
        # x(v(yz)) + y(v(xz)) + z(v(xy)) = (xy)(zv) + (yz)(xv) + (xz)(yv)
        f = self.field
        n = self.dim
        t = self.table
        units = linalg.identity(f, n)
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    bc, ac = t[b][c], t[a][c]
                    for d in range(n):
                        lhs = [f.zero] * n
                        for vec, other in ((units[a], self.product_basis(bc, d)),
                                           (units[b], self.product_basis(ac, d)),
                                           (units[c], self.product_basis(ab, d))):
                            p = self.product(vec, other)
                            lhs = [f.add(u, v) for u, v in zip(lhs, p)]
                        rhs = [f.zero] * n
                        for u, v in ((ab, t[c][d]), (bc, t[a][d]), (ac, t[b][d])):
                            p = self.product(u, v)
                            rhs = [f.add(x1, x2) for x1, x2 in zip(rhs, p)]
                        if lhs != rhs:
                            return False
        return True

    def _sym_product(self, p, q):
        # p, q: {exponent tuple over lambda vars -> coordinate vector}
        f = self.field
        out = {}
        for m1, v1 in p.items():
            for m2, v2 in q.items():
                w = self.product(v1, v2)
                if not any(w):
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                if m in out:
                    out[m] = tuple(f.add(a, b) for a, b in zip(out[m], w))
                    if not any(out[m]):
                        del out[m]
                else:
                    out[m] = w
        return out

    def _jordan_symbolic(self):
        # x = Σ λ_i e_i with indeterminate λ; every coefficient must vanish
        f = self.field
        n = self.dim
        x = {}
        for i in range(n):
            m = tuple(1 if j == i else 0 for j in range(n))
            x[m] = linalg.unit(f, n, i)
        xx = self._sym_product(x, x)
        zero_m = (0,) * n
        for j in range(n):
            ej = {zero_m: linalg.unit(f, n, j)}
            lhs = self._sym_product(xx, self._sym_product(x, ej))
            rhs = self._sym_product(x, self._sym_product(xx, ej))
            if lhs != rhs:
                return False
        return True

    def is_associative(self):
        if "assoc" not in self._cache:
            ok = True
            t = self.table
            for i in range(self.dim):
                for j in range(self.dim):
                    for k in range(self.dim):
                        if self.product(t[i][j], linalg.unit(self.field, self.dim, k)) \
                                != self.product_basis(t[j][k], i):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            self._cache["assoc"] = ok
        return self._cache["assoc"]

    # -- invariants -------------------------------------------------------

    def centre(self):
        if "centre" not in self._cache:
            f = self.field
            n = self.dim
            rows = []
            for j in range(n):
                for k in range(n):
                    rows.append(tuple(self.table[i][j][k] for i in range(n)))
            self._cache["centre"] = Subspace(f, n, linalg.nullspace(f, rows, n))
        return self._cache["centre"]

    def lower_central_series(self):
        """c¹ = J, c^m = c^{m-1} ∘ J; ends at 0 or when it stabilizes."""
        if "lcs" not in self._cache:
            f = self.field
            n = self.dim
            series = [linalg.full_space(f, n)]
            while True:
                current = series[-1]
                if current.is_zero():
                    break
                vectors = [self.product_basis(u, j)
                           for u in current.basis for j in range(n)]
                nxt = Subspace(f, n, vectors)
                if nxt == current:
                    break
                series.append(nxt)
                if nxt.is_zero():
                    break
            self._cache["lcs"] = series
        return self._cache["lcs"]

    def square(self):
        series = self.lower_central_series()
        if len(series) >= 2:
            return series[1]
        return series[0]  # dim 0: J² = J = 0

    def is_nilpotent(self):
        """(True, nilindex) when the series hits 0, else (False, None)."""
        series = self.lower_central_series()
        if series[-1].is_zero():
            return True, len(series) if self.dim > 0 else 1
        return False, None

    def fingerprint(self):
        if "fp" not in self._cache:
            series = self.lower_central_series()
            dims = tuple(s.dim for s in series)
            nilpotent, nilindex = self.is_nilpotent()
            centre = self.centre()
            square = self.square()
            self._cache["fp"] = Fingerprint(
                dim=self.dim,
                dim_centre=centre.dim,
                dims_lcs=dims,
                dim_square=square.dim,
                nilindex=nilindex if nilpotent else None,
                is_associative=self.is_associative(),
                dim_centre_meet_square=centre.intersection(square).dim)
        return self._cache["fp"]

    # -- constructions ----------------------------------------------------

    def change_basis(self, p):
        """New basis e'_i = Σ_j p[i][j] e_j; requires p invertible."""
        f = self.field
        pinv = linalg.invert(f, p)
        if pinv is None:
            raise ValueError("basis-change matrix is singular")
        table = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                w = self.product(p[i], p[j])
                row.append(linalg.vec_mat(f, w, pinv))
            table.append(tuple(row))
        return Algebra.from_table(f, table, self.labels)

    def direct_sum(self, other):
        if self.field != other.field:
            raise ValueError("direct sum needs a common field")
        f = self.field
        n, m = self.dim, other.dim
        consts = dict(self.constants)
        for (i, j, k), c in other.constants.items():
            consts[(i + n, j + n, k + n)] = c
        return Algebra(f, n + m, consts)

    def quotient_by_centre(self):
        """J / Z(J) on the basis vectors complementary to the centre pivots."""
        f = self.field
        z = self.centre()
        keep = [c for c in range(self.dim) if c not in set(z.pivots)]
        pos = {c: t for t, c in enumerate(keep)}
        m = len(keep)
        table = []
        for a in keep:
            row = []
            for b in keep:
                w = z.reduce(self.table[a][b])
                row.append(tuple(w[c] for c in keep))
                if any(w[c] for c in range(self.dim) if c not in pos):
                    raise AssertionError("centre reduction left pivot support")
            table.append(tuple(row))
        return Algebra.from_table(f, table)


def zero_algebra(field, n):
    return Algebra(field, n)


def is_isomorphism(a, b, phi):
    """True iff phi (rows = images of a's basis) is an algebra isomorphism a -> b."""
    if a.field != b.field or a.dim != b.dim or len(phi) != a.dim:
        return False
    f = a.field
    if linalg.invert(f, phi) is None:
        return False
    for i in range(a.dim):
        for j in range(i, a.dim):
            lhs = linalg.vec_mat(f, a.table[i][j], phi)
            if lhs != b.product(phi[i], phi[j]):
                return False
    return True
