import numpy as np
import numpy.typing as npt

Matrix = npt.NDArray[np.float64]
"""A dense real n×n component matrix."""

ComplexVector = npt.NDArray[np.complex128]
