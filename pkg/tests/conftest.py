import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from syzkit import varieties  # noqa: E402


@pytest.fixture(scope="session")
def tc():
    return varieties.twisted_cubic()


@pytest.fixture(scope="session")
def rnc4():
    return varieties.rational_normal_curve(4)


@pytest.fixture(scope="session")
def rnc5():
    return varieties.rational_normal_curve(5)


@pytest.fixture(scope="session")
def scroll12():
    return varieties.scroll(1, 2)


@pytest.fixture(scope="session")
def hyper():
    return varieties.hyperelliptic_g2(0)


@pytest.fixture(scope="session")
def quintic():
    return varieties.elliptic_quintic(0)


@pytest.fixture(scope="session")
def catalog():
    return {
        "twisted-cubic": varieties.twisted_cubic(),
        "rnc4": varieties.rational_normal_curve(4),
        "rnc5": varieties.rational_normal_curve(5),
        "scroll12": varieties.scroll(1, 2),
        "veronese": varieties.veronese(),
        "hyperelliptic-g2": varieties.hyperelliptic_g2(0),
        "elliptic-quintic": varieties.elliptic_quintic(0),
    }
