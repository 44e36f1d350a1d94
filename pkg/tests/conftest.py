import pytest

from dyckperm import enumerate_updown_avoiders, enumerate_weighted

# The 14-step example used throughout: weights 0,0,1,1,1,1,1,2,2,2,0,2,1,0
# on UUDUDUUUDDUDDD, mapping to 8 13 6 12 11 14 7 10 2 9 4 5 1 3.
EXAMPLE14_TEXT = "UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0"
EXAMPLE14_IMAGE = (8, 13, 6, 12, 11, 14, 7, 10, 2, 9, 4, 5, 1, 3)


@pytest.fixture(scope="session")
def wd_pools():
    """All weighted Dyck paths for n <= 4, keyed by n."""
    return {n: list(enumerate_weighted(n)) for n in range(5)}


@pytest.fixture(scope="session")
def perm_pools():
    """All up-down 1234-avoiders for n <= 4, keyed by n."""
    return {n: list(enumerate_updown_avoiders(n)) for n in range(5)}
