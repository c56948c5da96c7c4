import numpy as np
import pytest

from polydisc.mobius import CPoint

# the worked data point used throughout: target (3/2, 3/4, 1/2), lambda0 = -4/5
WORKED_POINT = CPoint((1.5, 0.75, 0.5))
WORKED_LAMBDA0 = -0.8


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def rand_complex(rng, rmax=1.0):
    return rmax * np.sqrt(rng.random()) * np.exp(2j * np.pi * rng.random())


def rand_contraction(rng, nmax=0.95):
    M = np.array(
        [[rand_complex(rng), rand_complex(rng)], [rand_complex(rng), rand_complex(rng)]]
    )
    from polydisc.clinalg import op_norm

    norm = op_norm(M)
    target = nmax * rng.random()
    return M * (target / norm) if norm > 0 else M
