"""Symmetric scalar fields g(lambda_1, ..., lambda_n) and their spectral lifts.

A field packages a value function with (optional) analytic gradient and
Hessian evaluators plus symmetry/convexity metadata. Applying a field to the
eigenvalues of a symmetric matrix yields an orthogonally invariant matrix
function; ``evaluate_spectral`` is that lift.

Value evaluators are vectorized over leading axes (the coordinate axis is the
last one), which the mollification quadratures rely on. Gradients and
Hessians are single-point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, NonsmoothFieldError
from .symmat import (
    SymmetricMatrix,
    eigendecompose,
    conjugate,
    orthogonal_from_rng,
    symmetric_sh_dummy := None,  # placeholder removed below
)
