import pytest

from rankinv import backends
from rankinv.gfcore import get_field


@pytest.fixture(scope="session")
def f4():
    return get_field("gf4")


@pytest.fixture(scope="session")
def f8():
    return get_field("gf8")


@pytest.fixture(scope="session")
def f16():
    return get_field("gf16")


@pytest.fixture(scope="session")
def f256():
    return get_field("gf256")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the numba kernels once so timing assertions see steady state
    be = backends.active()
    if hasattr(be, "warmup"):
        be.warmup(get_field("gf8"))
    return be


@pytest.fixture(params=["numpy", "numba"])
def both_backends(request):
    previous = backends.active()
    be = backends.set_backend(request.param)
    yield be
    backends._active = previous
