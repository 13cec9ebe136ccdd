import pytest

from fpvc import Group, derive_generators, preset


@pytest.fixture(scope="session")
def group():
    return Group(preset("test"))


@pytest.fixture(scope="session")
def gens(group):
    # enough for every module-level test: matmul at 16^3 with s=8 needs
    # 16*16*8 = 2048; relu at nk=256 width 8 needs 2048; IPA up to 256.
    return derive_generators(group, b"fpvc/tests", 4096)
