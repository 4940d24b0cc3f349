import pytest

from equihom.complexes import matching_complex, pcycle_complex, quillen_complex
from equihom.homology import equivariant_decomposition


@pytest.fixture(scope="session")
def decomposition_cache():
    """Shared equivariant decompositions; the heavy ones (M_3(10), quillen at
    n=8) are computed once for the whole run."""
    cache = {}

    def get(kind, p, n):
        key = (kind, p, n)
        if key not in cache:
            if kind == "matching":
                cx = matching_complex(p, n)
            elif kind == "pcycle":
                cx = pcycle_complex(p, n)
            elif kind == "quillen":
                cx = quillen_complex(p, n)
            else:
                raise ValueError(kind)
            cache[key] = (cx, equivariant_decomposition(cx))
        return cache[key]

    return get
