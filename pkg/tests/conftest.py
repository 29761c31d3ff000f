import pytest

from g2fmethod.embedding import embed_g2
from g2fmethod.liealg import build_so_odd
from g2fmethod.solver import SolverContext


@pytest.fixture(scope="session")
def so7():
    return build_so_odd(3)


@pytest.fixture(scope="session")
def emb(so7):
    return embed_g2(so7)


@pytest.fixture(scope="session")
def ctx(emb):
    return SolverContext(emb)
