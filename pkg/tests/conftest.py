import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lensfib import _kernels_py  # noqa: E402

try:
    from lensfib import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

KERNEL_BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    KERNEL_BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=KERNEL_BACKENDS)
def kernels(request):
    return request.param
