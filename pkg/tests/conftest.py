import numpy as np
import pytest

from tfdcx.params import ModelParams


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_model_params(rng, with_field=True):
    """Draw from the ranges used throughout the verification suite."""
    return ModelParams(
        beta_omega=rng.uniform(0.1, 20.0),
        beta_omega_ref=rng.uniform(0.1, 20.0),
        field_ratio=rng.uniform(0.0, 2.0) if with_field else 0.0,
        lambda_ref=rng.uniform(0.1, 10.0),
    )
