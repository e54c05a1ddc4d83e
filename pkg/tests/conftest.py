import pytest

from hochfrob import Field, cyclic, dihedral, direct_product, symmetric

SUITE_SPECS = ("C2", "C3", "C4", "C2xC2", "S3", "D4")


@pytest.fixture(scope="session")
def groups():
    """The six suite groups, built once so index-map caches are shared."""
    return {
        "C2": cyclic(2),
        "C3": cyclic(3),
        "C4": cyclic(4),
        "C2xC2": direct_product(cyclic(2), cyclic(2)),
        "S3": symmetric(3),
        "D4": dihedral(4),
    }


@pytest.fixture(scope="session")
def fields():
    return {"Q": Field.rationals(), "F2": Field.prime(2), "F3": Field.prime(3)}
