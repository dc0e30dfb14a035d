"""Symmetric bilinear forms and degree-2 cohomology of an algebra.

A form θ on an n-dimensional algebra is a symmetric n×n matrix; it is
vectorized on the lower triangle in the fixed order
(1,1),(2,1),(2,2),(3,1),(3,2),(3,3),...  so that spaces of forms have
canonical RREF bases.  S(i,j) denotes the dual basis form with value 1 on
(e_i, e_j) and (e_j, e_i), 0 elsewhere.
"""

from . import linalg
from .linalg import Subspace


def triangle_size(n):
    return n * (n + 1) // 2


def triangle_index(i, j):
    """0-based position of (i, j), 1-based i >= j."""
    return i * (i - 1) // 2 + (j - 1)


def triangle_pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]


class BilinearForm:
    """Symmetric bilinear form as a full matrix over the algebra's field."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.n = len(rows)
        self.rows = tuple(tuple(r) for r in rows)
        for i in range(self.n):
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError("form matrix is not symmetric")

    @classmethod
    def from_vector(cls, field, n, vec):
        rows = [[field.zero] * n for _ in range(n)]
        for i, j in triangle_pairs(n):
            c = vec[triangle_index(i, j)]
            rows[i - 1][j - 1] = c
            rows[j - 1][i - 1] = c
        return cls(field, rows)

    def vectorize(self):
        return tuple(self.rows[i - 1][j - 1] for i, j in triangle_pairs(self.n))

    def evaluate(self, x, y):
        f = self.field
        acc = f.zero
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.rows[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    acc = f.add(acc, f.mul(xi, f.mul(row[j], yj)))
        return acc

    def is_zero(self):
        return not any(any(r) for r in self.rows)

    def add(self, other):
        f = self.field
        return BilinearForm(f, [linalg.vec_add(f, a, b)
                                for a, b in zip(self.rows, other.rows)])

    def scale(self, c):
        f = self.field
        return BilinearForm(f, [linalg.vec_scale(f, c, r) for r in self.rows])

    def __eq__(self, other):
        return (isinstance(other, BilinearForm) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"BilinearForm({render_form(self)})"


def zero_form(field, n):
    return BilinearForm(field, [[field.zero] * n for _ in range(n)])


def dual_form(field, n, i, j):
    """S(i, j): value 1 on (e_i, e_j) and (e_j, e_i), 0 elsewhere."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"S({i},{j}) out of range for dimension {n}")
    if i < j:
        i, j = j, i
    rows = [[field.zero] * n for _ in range(n)]
    rows[i - 1][j - 1] = field.one
    rows[j - 1][i - 1] = field.one
    return BilinearForm(field, rows)


def form_from_coeffs(field, n, coeffs):
    """Σ c_{ij} S(i,j) from {(i, j): c} with i >= j."""
    vec = [field.zero] * triangle_size(n)
    for (i, j), c in coeffs.items():
        if i < j:
            i, j = j, i
        vec[triangle_index(i, j)] = field.add(vec[triangle_index(i, j)], field.of(c))
    return BilinearForm.from_vector(field, n, vec)


def render_form(form):
    f = form.field
    parts = []
    for i, j in triangle_pairs(form.n):
        c = form.rows[i - 1][j - 1]
        if not c:
            continue
        s = f"S({i},{j})"
        if c == f.one:
            term = s
        elif f.kind == "Q" and c == -f.one:
            term = f"-{s}"
        else:
            term = f"{f.render(c)}*{s}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


class FormSpace:
    """Space of symmetric forms with canonical RREF basis (vectorized)."""

    __slots__ = ("field", "n", "rows", "pivots")

    def __init__(self, field, n, forms=()):
        self.field = field
        self.n = n
        vecs = [f.vectorize() if isinstance(f, BilinearForm) else tuple(f)
                for f in forms]
        self.rows, self.pivots = linalg.rref(field, vecs)

    @property
    def dim(self):
        return len(self.rows)

    @property
    def forms(self):
        return tuple(BilinearForm.from_vector(self.field, self.n, r)
                     for r in self.rows)

    def contains(self, form):
        vec = form.vectorize() if isinstance(form, BilinearForm) else tuple(form)
        return not any(linalg.reduce_vector(self.field, vec, self.rows, self.pivots))

    def contains_space(self, other):
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return (isinstance(other, FormSpace) and self.field == other.field
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"FormSpace(dim {self.dim} on dim-{self.n} space)"


def cocycle_space(a):
    """Z²(J, K): symmetric θ with θ(x², x∘y) = θ(x, x²∘y).

    Linear conditions on the triangle coordinates of θ: pointwise over the
    whole space for F_2/F_3, via the linearized four-variable identity on
    basis tuples for p >= 5 and Q (equivalent there).
    """
    f = a.field
    n = a.dim
    size = triangle_size(n)
    rows = []

    def eval_row(row, x, y):
        # accumulate coefficients of θ(x, y) into the constraint row
        for i in range(1, n + 1):
            xi, yi = x[i - 1], y[i - 1]
            for j in range(1, i + 1):
                xj, yj = x[j - 1], y[j - 1]
                if i == j:
                    c = f.mul(xi, yi)
                else:
                    c = f.add(f.mul(xi, yj), f.mul(xj, yi))
                if c:
                    idx = triangle_index(i, j)
                    row[idx] = f.add(row[idx], c)

    def sub_row(row, x, y):
        for i in range(1, n + 1):
            xi, yi = x[i - 1], y[i - 1]
            for j in range(1, i + 1):
                xj, yj = x[j - 1], y[j - 1]
                if i == j:
                    c = f.mul(xi, yi)
                else:
                    c = f.add(f.mul(xi, yj), f.mul(xj, yi))
                if c:
                    idx = triangle_index(i, j)
                    row[idx] = f.sub(row[idx], c)

    if f.is_prime_field and f.p in (2, 3):
        for x in a.all_vectors():
            xx = a.product(x, x)
            for j in range(n):
                xy = a.product_basis(x, j)
                xxy = a.product_basis(xx, j)
                row = [f.zero] * size
                eval_row(row, xx, xy)
                sub_row(row, x, xxy)
                if any(row):
                    rows.append(tuple(row))
    else:
        units = linalg.identity(f, n)
        t = a.table
        for p_ in range(n):
            for q in range(n):
                pq = t[p_][q]
                for r in range(n):
                    qr, pr = t[q][r], t[p_][r]
                    for s in range(n):
                        row = [f.zero] * size
                        eval_row(row, units[p_], a.product_basis(qr, s))
                        eval_row(row, units[q], a.product_basis(pr, s))
                        eval_row(row, units[r], a.product_basis(pq, s))
                        sub_row(row, pq, t[r][s])
                        sub_row(row, qr, t[p_][s])
                        sub_row(row, pr, t[q][s])
                        if any(row):
                            rows.append(tuple(row))

    basis = linalg.nullspace(f, rows, size)
    return FormSpace(f, n, basis)


def coboundary_space(a):
    """δC¹(J, K): span of δf_k with (δf_k)(e_i, e_j) = k-th coord of e_i∘e_j."""
    f = a.field
    n = a.dim
    forms = []
    for k in range(n):
        rows = [[a.table[i][j][k] for j in range(n)] for i in range(n)]
        forms.append(BilinearForm(f, rows))
    return FormSpace(f, n, forms)


class H2Space:
    """H²(J, K) as a canonical complement of δC¹ inside Z².

    The complement basis extends the RREF basis of δC¹ by Z² rows in fixed
    coordinate order, so reduction of any cocycle modulo δC¹ is deterministic.
    """

    __slots__ = ("algebra", "z2", "coboundaries", "basis", "_solve_rows")

    def __init__(self, a):
        self.algebra = a
        self.z2 = cocycle_space(a)
        self.coboundaries = coboundary_space(a)
        f = a.field
        work = [list(r) for r in self.coboundaries.rows]
        work_rows, work_piv = linalg.rref(f, work)
        added = []
        for r in self.z2.rows:
            red = linalg.reduce_vector(f, r, work_rows, work_piv)
            if any(red):
                lead = next(i for i, c in enumerate(red) if c)
                red = linalg.vec_scale(f, f.inv(red[lead]), red)
                added.append(red)
                work_rows, work_piv = linalg.rref(f, list(work_rows) + [red])
        self.basis = tuple(BilinearForm.from_vector(f, a.dim, v) for v in added)
        # columns: coboundary basis then H² basis; solve once per reduction
        cols = list(self.coboundaries.rows) + [b.vectorize() for b in self.basis]
        self._solve_rows = linalg.transpose(cols) if cols else ()

    @property
    def dim(self):
        return len(self.basis)

    @property
    def field(self):
        return self.algebra.field

    def span(self):
        return FormSpace(self.field, self.algebra.dim, self.basis)

    def reduce(self, form):
        """Coordinates of form modulo δC¹ in the H² basis."""
        vec = form.vectorize()
        if not self._solve_rows:
            if any(vec):
                raise ValueError("form not in Z² span")
            return ()
        sol = linalg.solve(self.field, self._solve_rows, vec)
        if sol is None:
            raise ValueError("form is not a cocycle (not in Z² span)")
        return tuple(sol[self.coboundaries.dim:])

    def lift(self, coords):
        f = self.field
        form = zero_form(f, self.algebra.dim)
        for c, b in zip(coords, self.basis):
            if c:
                form = form.add(b.scale(c))
        return form


def h2_space(a):
    return H2Space(a)


def radical(forms, field=None, n=None):
    """θ⊥ = {x : θ(x, ·) = 0}; for several forms, the joint radical."""
    if isinstance(forms, BilinearForm):
        forms = [forms]
    forms = list(forms)
    if forms:
        field = forms[0].field
        n = forms[0].n
    rows = [r for form in forms for r in form.rows]
    return Subspace(field, n, linalg.nullspace(field, rows, n))


def pull_back(phi, form):
    """(φθ)(x, y) = θ(φx, φy); with rows-as-images this is Φ M Φ^T."""
    f = form.field
    if len(phi) != form.n:
        raise ValueError("matrix size does not match form")
    m = linalg.mat_mul(f, phi, form.rows)
    m = linalg.mat_mul(f, m, linalg.transpose(phi))
    return BilinearForm(f, m)


def parse_form_combo(field, n, text):
    """Parse `2*S(1,1)+S(2,1)-1/2*S(2,2)` into a BilinearForm."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty form expression")
    terms = []
    i = 0
    while i < len(s):
        sign = field.one
        if s[i] == "+":
            i += 1
        elif s[i] == "-":
            sign = field.neg(field.one)
            i += 1
        j = s.find("S(", i)
        if j < 0:
            raise ValueError(f"expected S(i,j) term in {text!r}")
        coeff = field.one
        if j > i:
            lit = s[i:j]
            if not lit.endswith("*"):
                raise ValueError(f"bad coefficient {lit!r} in {text!r}")
            coeff = field.parse(lit[:-1])
        k = s.find(")", j)
        if k < 0:
            raise ValueError(f"unclosed S( in {text!r}")
        inner = s[j + 2:k]
        try:
            a, b = (int(v) for v in inner.split(","))
        except ValueError as exc:
            raise ValueError(f"bad S(i,j) indices {inner!r}") from exc
        terms.append((a, b, field.mul(sign, coeff)))
        i = k + 1
    form = zero_form(field, n)
    for a, b, c in terms:
        form = form.add(dual_form(field, n, a, b).scale(c))
    return form
