import pytest

from derivgamma import _accel


@pytest.fixture(params=_accel.available())
def backend(request):
    with _accel.use_backend(request.param):
        yield request.param
