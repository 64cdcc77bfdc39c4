import pytest

from kiselman import congruence_oracle, enumerate_elements

# dual-verified cardinalities: BFS count equals oracle class count at n = 2, 3
KNOWN_SIZES = {1: 2, 2: 5, 3: 18, 4: 115}


@pytest.fixture(scope="session")
def universe2():
    return enumerate_elements(2)


@pytest.fixture(scope="session")
def universe3():
    return enumerate_elements(3)


@pytest.fixture(scope="session")
def universe4():
    return enumerate_elements(4)


@pytest.fixture(scope="session")
def oracle2():
    return congruence_oracle(2, max_len=8)


@pytest.fixture(scope="session")
def oracle3():
    return congruence_oracle(3, max_len=8)
