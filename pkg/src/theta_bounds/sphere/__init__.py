# Copyright 2026 Open Collector, Inc,
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from .certificate import (  # noqa: F401
    Certificate,
    Verification,
    VerificationFailure,
    certificate_from_dict,
    certificate_to_dict,
    dump_certificate,
    load_certificate,
    verify_certificate,
)
from .exchange import (  # noqa: F401
    ExchangeOptions,
    FloatSphereLpResult,
    SphereLpResult,
    dgs_lp_bound,
    solve_sphere_lp,
    solve_sphere_lp_float,
)
from .harmonics import (  # noqa: F401
    MultiPoly,
    adjoint_check,
    harm_dim,
    harmonic_basis,
    harmonic_decompose,
    inner_product_kernel_apply,
    inner_product_kernel_eigenvalue,
    inner_product_kernel_spectrum,
    laplacian,
    sphere_inner_product,
    sphere_monomial_average,
    zonal_kernel,
)
