import pytest

import asmpadic as ap


@pytest.fixture(scope="session")
def coeffs_p2():
    return ap.fourier_coefficients(2, 400)


@pytest.fixture(scope="session")
def coeffs_p3():
    return ap.fourier_coefficients(3, 400)


@pytest.fixture(scope="session")
def coeffs_p7():
    return ap.fourier_coefficients(7, 400)
