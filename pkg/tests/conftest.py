# built in modules
import os

# installed modules
import pytest

# project modules
from bilch.dga import DGA, parse_dga
from bilch.families import trefoil_augmentations, trefoil_dga
from bilch.ioutils import read_text


FIXTURES_DIR = os.path.join(os.path.dirname(__file__), 'fixtures')


@pytest.fixture
def trefoil():
    return trefoil_dga()


@pytest.fixture
def trefoil_eps(trefoil):
    """The five trefoil augmentations, keyed 1..5"""
    return trefoil_augmentations(trefoil)


@pytest.fixture
def toy_dga():
    """a (1), b (0), c (-1) with d(b) = c"""
    return DGA.from_terms(1, [('a', 1), ('b', 0), ('c', -1)],
                          {'b': [('c', )]})


@pytest.fixture(scope='session')
def k2_dga():
    """User supplied DGA of the Legendrian K2 (mirror 8_21); the tests
    using it are skipped when the file is missing."""
    path = os.environ.get('BILCH_K2_DGA',
                          os.path.join(FIXTURES_DIR, 'k2.dga'))
    if not os.path.exists(path):
        pytest.skip('no K2 DGA: set BILCH_K2_DGA or add {}'.format(path))
    return parse_dga(read_text(path))
