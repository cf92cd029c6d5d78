import pytest

from priceofmajority import VoterMatrix


@pytest.fixture
def intro_matrix() -> VoterMatrix:
    """9 voters, 7 topics; every column has a Y-majority of at least 5."""
    return VoterMatrix.from_strings(
        ["YYYYYYY"] * 4 + ["YYYNNNN"] + ["NNNYYNN"] * 2 + ["NNNNNYY"] * 2
    )
