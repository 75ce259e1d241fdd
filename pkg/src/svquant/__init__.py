"""Exact Drinfel'd-twist quantization of the Schrodinger-Virasoro Lie algebra."""

from .enveloping import (ONE, TensorUEAElement, UEAElement, antipode0,
                         coproduct0, counit, falling_factorial, gen, normalize,
                         rising_factorial)
from .lie import (Generator, L, LieElement, M, TensorLieElement, TwistCase, Y,
                  bracket, case_generators, cybe_defect, r_matrix)
from .series import Series, binomial_series, embed, invert
from .twist import (TwistData, antipode_twisted, build_twist,
                    closed_form_antipode, closed_form_delta, delta_twisted,
                    twist_defects)
from .verification import Report, SuiteConfig, run_suite

__version__ = "0.1.0"
