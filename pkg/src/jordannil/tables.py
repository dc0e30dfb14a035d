"""Built-in classification tables for dimensions 1-4 and their verification.

Cases: "any" (dims 1-2, valid over every field), "closed" (algebraically
closed, characteristic != 2), "char2", "real".  Entries carry exact tables
over Q (instantiable over any prime field where the coefficients make
sense); square-class families carry an alpha parameter of +1 or -1.
"""

from dataclasses import dataclass

from . import isotest
from .algebra import Algebra
from .field import QQ, GF

CASES = ("any", "closed", "char2", "real")


@dataclass(frozen=True)
class CatalogEntry:
    entry_id: str
    case: str
    dim: int
    products: tuple              # ((i, j, k, coeff), ...) with 1-based i <= j
    is_associative: bool = True
    alpha: int = None            # square-class parameter, when applicable
    family: str = None           # id without the alpha superscript
    centre_labels: tuple = None  # declared centre basis, when stated
    decomposition: str = ""      # e.g. "J_{2,2} + J_{1,1}"

    def algebra(self, fld=QQ):
        consts = {(i, j, k): fld.of(c) for i, j, k, c in self.products}
        return Algebra(fld, self.dim, consts)

    def merges_over_closure_with(self, other):
        """Square-class partners: same family, different alpha."""
        return (self.family is not None and self.family == other.family
                and self.alpha != other.alpha)


def _e(entry_id, case, dim, products, assoc=True, alpha=None, family=None,
       centre=None, decomposition=""):
    return CatalogEntry(entry_id, case, dim, tuple(products), assoc, alpha,
                        family, tuple(centre) if centre else None,
                        decomposition)


_ANY = [
    _e("J_{1,1}", "any", 1, [], centre=("a",)),
    _e("J_{2,1}", "any", 2, [], centre=("a", "b"),
       decomposition="J_{1,1} + J_{1,1}"),
    _e("J_{2,2}", "any", 2, [(1, 1, 2, 1)], centre=("b",)),           # a^2 = b
]

_DIM3_CLOSED = [
    _e("J_{3,1}", "closed", 3, [], centre=("a", "b", "c"),
       decomposition="J_{2,1} + J_{1,1}"),
    _e("J_{3,2}", "closed", 3, [(1, 1, 2, 1)], centre=("b", "c"),
       decomposition="J_{2,2} + J_{1,1}"),                            # a^2 = b
    _e("J_{3,3}", "closed", 3, [(1, 1, 3, 1), (2, 2, 3, 1)],
       centre=("c",)),                                                # a^2 = c, b^2 = c
    _e("J_{3,4}", "closed", 3, [(1, 1, 2, 1), (1, 2, 3, 1)],
       centre=("c",)),                                                # a^2 = b, ab = c
]

_DIM3_CHAR2 = [
    _e("J_{3,1}", "char2", 3, [], centre=("a", "b", "c"),
       decomposition="J_{2,1} + J_{1,1}"),
    _e("J_{3,2}", "char2", 3, [(1, 1, 2, 1)], centre=("b", "c"),
       decomposition="J_{2,2} + J_{1,1}"),
    _e("J_{3,3}", "char2", 3, [(1, 2, 3, 1)], centre=("c",)),         # ab = c
    _e("J_{3,4}", "char2", 3, [(1, 1, 3, 1), (2, 2, 3, 1)],
       centre=("c",)),                                                # a^2 = c, b^2 = c
    _e("J_{3,5}", "char2", 3, [(1, 1, 2, 1), (1, 2, 3, 1)],
       centre=("c",)),                                                # a^2 = b, ab = c
]

_DIM3_REAL = [
    _e("J_{3,1}", "real", 3, [], centre=("a", "b", "c"),
       decomposition="J_{2,1} + J_{1,1}"),
    _e("J_{3,2}", "real", 3, [(1, 1, 2, 1)], centre=("b", "c"),
       decomposition="J_{2,2} + J_{1,1}"),
    _e("J_{3,3}^{+1}", "real", 3, [(1, 1, 3, 1), (2, 2, 3, 1)],
       alpha=1, family="J_{3,3}", centre=("c",)),                     # a^2 = c, b^2 = c
    _e("J_{3,3}^{-1}", "real", 3, [(1, 1, 3, 1), (2, 2, 3, -1)],
       alpha=-1, family="J_{3,3}", centre=("c",)),                    # a^2 = c, b^2 = -c
    _e("J_{3,4}", "real", 3, [(1, 1, 2, 1), (1, 2, 3, 1)],
       centre=("c",)),                                                # a^2 = b, ab = c
]

_DIM4_CLOSED = [
    _e("J_{4,1}", "closed", 4, [], decomposition="J_{3,1} + J_{1,1}"),
    _e("J_{4,2}", "closed", 4, [(1, 1, 2, 1)],
       decomposition="J_{3,2} + J_{1,1}"),                            # a^2 = b
    _e("J_{4,3}", "closed", 4, [(1, 1, 3, 1), (2, 2, 3, 1)],
       decomposition="J_{3,3} + J_{1,1}"),                            # a^2 = c, b^2 = c
    _e("J_{4,4}", "closed", 4, [(1, 1, 2, 1), (1, 2, 3, 1)],
       decomposition="J_{3,4} + J_{1,1}"),                            # a^2 = b, ab = c
    _e("J_{4,5}", "closed", 4, [(1, 1, 4, 1), (2, 2, 4, 1), (3, 3, 4, 1)]),
    _e("J_{4,6}", "closed", 4, [(1, 1, 2, 1), (2, 3, 4, 1)],
       assoc=False),                                                  # a^2 = b, bc = d
    _e("J_{4,7}", "closed", 4, [(1, 1, 2, 1), (1, 2, 4, 1), (3, 3, 4, 1)]),
    _e("J_{4,8}", "closed", 4, [(1, 1, 3, 1), (2, 2, 3, 1), (1, 3, 4, 1)],
       assoc=False),                                                  # a^2 = c, b^2 = c, ac = d
    _e("J_{4,9}", "closed", 4,
       [(1, 1, 3, 1), (2, 2, 3, -1), (1, 3, 4, 1), (2, 3, 4, 1)],
       assoc=False),
    _e("J_{4,10}", "closed", 4,
       [(1, 1, 3, 1), (2, 2, 3, -1), (1, 3, 4, 1), (2, 3, 4, 1), (1, 2, 4, 1)],
       assoc=False),
    _e("J_{4,11}", "closed", 4,
       [(1, 1, 2, 1), (1, 2, 3, 1), (1, 3, 4, 1), (2, 2, 4, 1)]),
    _e("J_{4,12}", "closed", 4, [(1, 1, 3, 1), (1, 2, 4, 1)]),        # a^2 = c, ab = d
    _e("J_{4,13}", "closed", 4, [(1, 1, 3, 1), (2, 2, 3, 1), (1, 2, 4, 1)]),
]

_DIM4_REAL = [
    _e("J_{4,1}", "real", 4, [], decomposition="J_{3,1} + J_{1,1}"),
    _e("J_{4,2}", "real", 4, [(1, 1, 2, 1)],
       decomposition="J_{3,2} + J_{1,1}"),
    _e("J_{4,3}^{+1}", "real", 4, [(1, 1, 3, 1), (2, 2, 3, 1)],
       alpha=1, family="J_{4,3}", decomposition="J_{3,3}^{+1} + J_{1,1}"),
    _e("J_{4,3}^{-1}", "real", 4, [(1, 1, 3, 1), (2, 2, 3, -1)],
       alpha=-1, family="J_{4,3}", decomposition="J_{3,3}^{-1} + J_{1,1}"),
    _e("J_{4,4}", "real", 4, [(1, 1, 2, 1), (1, 2, 3, 1)],
       decomposition="J_{3,4} + J_{1,1}"),
    _e("J_{4,5}^{+1}", "real", 4, [(1, 1, 4, 1), (2, 2, 4, 1), (3, 3, 4, 1)],
       alpha=1, family="J_{4,5}"),
    _e("J_{4,5}^{-1}", "real", 4, [(1, 1, 4, 1), (2, 2, 4, 1), (3, 3, 4, -1)],
       alpha=-1, family="J_{4,5}"),
    _e("J_{4,6}", "real", 4, [(1, 1, 2, 1), (2, 3, 4, 1)], assoc=False),
    _e("J_{4,7}", "real", 4, [(1, 1, 2, 1), (1, 2, 4, 1), (3, 3, 4, 1)]),
    _e("J_{4,8}^{+1}", "real", 4, [(1, 1, 3, 1), (2, 2, 3, 1), (1, 3, 4, 1)],
       assoc=False, alpha=1, family="J_{4,8}"),
    _e("J_{4,8}^{-1}", "real", 4, [(1, 1, 3, 1), (2, 2, 3, -1), (1, 3, 4, 1)],
       assoc=False, alpha=-1, family="J_{4,8}"),
    _e("J_{4,9}", "real", 4,
       [(1, 1, 3, 1), (2, 2, 3, -1), (1, 3, 4, 1), (2, 3, 4, 1)],
       assoc=False),
    _e("J_{4,10}", "real", 4,
       [(1, 1, 3, 1), (2, 2, 3, -1), (1, 3, 4, 1), (2, 3, 4, 1), (1, 2, 4, 1)],
       assoc=False),
    _e("J_{4,11}", "real", 4,
       [(1, 1, 2, 1), (1, 2, 3, 1), (1, 3, 4, 1), (2, 2, 4, 1)]),
    _e("J_{4,12}", "real", 4, [(1, 1, 3, 1), (1, 2, 4, 1)]),
    _e("J_{4,13}^{+1}", "real", 4, [(1, 1, 3, 1), (2, 2, 3, 1), (1, 2, 4, 1)],
       alpha=1, family="J_{4,13}"),
    _e("J_{4,13}^{-1}", "real", 4, [(1, 1, 3, 1), (2, 2, 3, -1), (1, 2, 4, 1)],
       alpha=-1, family="J_{4,13}"),
]

_BY_CASE = {
    "closed": _DIM3_CLOSED + _DIM4_CLOSED,
    "char2": _DIM3_CHAR2,
    "real": _DIM3_REAL + _DIM4_REAL,
}


def catalog(case="closed", dim=None):
    """Catalog entries for a case; dims 1-2 hold over any field."""
    if case not in CASES:
        raise ValueError(f"unknown catalog case {case!r}; choose from {CASES}")
    entries = list(_ANY) if case == "any" else list(_ANY) + _BY_CASE[case]
    if dim is not None:
        entries = [e for e in entries if e.dim == dim]
    return entries


def entry_field(case):
    return GF(2) if case == "char2" else QQ


def _verify_entry(entry, fld):
    a = entry.algebra(fld)
    nilpotent, _ = a.is_nilpotent()
    checks = {
        "jordan": a.check_jordan(),
        "nilpotent": nilpotent,
        "associative_flag": a.is_associative() == entry.is_associative,
    }
    if entry.centre_labels is not None:
        idx = {lab: i for i, lab in enumerate(a.labels)}
        want = [tuple(fld.one if i == idx[lab] else fld.zero
                      for i in range(a.dim)) for lab in entry.centre_labels]
        centre = a.centre()
        checks["centre_claim"] = (centre.dim == len(want)
                                  and all(centre.contains(v) for v in want))
    return checks


def _certify_pair(e1, e2, fld, mode, limits=None):
    a, b = e1.algebra(fld), e2.algebra(fld)
    verdict = isotest.decide(a, b, mode=mode, limits=limits)
    if verdict.kind == isotest.DISTINGUISHED:
        return ("fingerprint", True, verdict.invariant)
    if verdict.kind == isotest.NON_ISOMORPHIC_OVER_CLOSURE:
        return ("groebner", True, "reduced basis {1}")
    if verdict.kind == isotest.ISOMORPHIC_OVER_CLOSURE \
            and verdict.base_field_conclusive:
        return ("witness-search", True,
                "no witness over the base field; merges over the closure")
    if verdict.kind == isotest.RESOURCE_EXCEEDED:
        return ("groebner", False, f"resource limit: {verdict.detail}")
    return (verdict.kind, False, verdict.detail or "unexpected verdict")


def _pair_job(args):
    case, dim, i, j, limits = args
    entries = catalog(case, dim)
    e1, e2 = entries[i], entries[j]
    fld = entry_field(case)
    if case == "real" and e1.merges_over_closure_with(e2):
        return (e1.entry_id, e2.entry_id, "skipped-square-class", True,
                "closure-merged; distinctness over the reals out of scope")
    mode = (isotest.MODE_BASE_FIELD_FIRST if fld.is_prime_field
            else isotest.MODE_CLOSURE_ONLY)
    method, ok, detail = _certify_pair(e1, e2, fld, mode, limits)
    return (e1.entry_id, e2.entry_id, method, ok, detail)


@dataclass
class CatalogReport:
    case: str
    dim: int
    entry_checks: tuple   # (id, {check: bool})
    pair_checks: tuple    # (id1, id2, method, ok, detail)

    @property
    def ok(self):
        return (all(all(c.values()) for _, c in self.entry_checks)
                and all(ok for _, _, _, ok, _ in self.pair_checks))

    def counts(self):
        methods = {}
        for _, _, method, _, _ in self.pair_checks:
            methods[method] = methods.get(method, 0) + 1
        return methods


def catalog_verify(case, dim=None, jobs=1, limits=None):
    """Check every entry and certify pairwise distinctness where in scope."""
    entries = catalog(case, dim)
    fld = entry_field(case)
    entry_checks = tuple((e.entry_id, _verify_entry(e, fld)) for e in entries)
    jobs_args = []
    by_dim = {}
    for i, e in enumerate(entries):
        by_dim.setdefault(e.dim, []).append(i)
    for _, idxs in sorted(by_dim.items()):
        for ii, i in enumerate(idxs):
            for j in idxs[ii + 1:]:
                jobs_args.append((case, dim, i, j, limits))
    if jobs > 1 and jobs_args:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_pair_job, jobs_args))
    else:
        results = [_pair_job(a) for a in jobs_args]
    results.sort(key=lambda rec: (rec[0], rec[1]))
    return CatalogReport(case, dim, entry_checks, tuple(results))
