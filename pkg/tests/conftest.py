import pytest

from jordannil import tables
from jordannil.field import GF


@pytest.fixture
def catalog_algebra():
    """Lookup: catalog_algebra(case, entry_id, field=None) -> Algebra."""
    def lookup(case, entry_id, fld=None):
        for e in tables.catalog(case):
            if e.entry_id == entry_id:
                return e.algebra(fld if fld is not None
                                 else tables.entry_field(case))
        raise KeyError(f"{entry_id} not in case {case}")
    return lookup


@pytest.fixture
def all_catalog_entries():
    seen = []
    for case in ("closed", "char2", "real"):
        for e in tables.catalog(case):
            seen.append((case, e))
    return seen


@pytest.fixture(params=[GF(2), GF(3), GF(5)], ids=["F2", "F3", "F5"])
def prime_field(request):
    return request.param
