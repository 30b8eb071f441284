"""Named numerical tolerances shared by the library and its test suite.

Every threshold used for validation, clamping, or success criteria lives
here so tests can reference the same constant the code enforces.
"""

# Input validation
UNIT_VECTOR_ATOL = 1e-9        # |v| - 1 for measurement directions
HERMITICITY_ATOL = 1e-10       # max |m - m^dag| entry for eigensystem input
NORM_ATOL = 1e-12              # state normalisation Sum |c|^2 - 1
NORM_WARN_ATOL = 1e-6          # renormalisation beyond this emits a warning

# Numerical clamping
PSD_CLAMP = 1e-10              # eigenvalues in [-PSD_CLAMP, 0) clamp to 0
PSD_ERROR = 1e-8               # eigenvalues below -PSD_ERROR are an error
RADICAND_CLAMP = 1e-12         # sqrt arguments in [-RADICAND_CLAMP, 0) clamp
RANK_EPS = 1e-12               # density-matrix eigenvalues below this are
                               # treated as numerical zeros (support cutoff)

# Canonical-form computation
CANONICAL_RESIDUAL = 1e-8      # forbidden-index squared magnitude for success
CANONICAL_TARGET = 1e-16       # simplex descent stops below this objective
THETA_ZERO = 1e-9              # lambda_1 below this makes theta unphysical

# Expectation values
IMAG_PART_ATOL = 1e-10         # residual imaginary part of quadratic forms

# Reconstruction / consistency checks used by tests
EIG_RECONSTRUCTION_ATOL = 1e-10
MEASURE_ATOL = 1e-9
CHAIN_ATOL = 1e-9
EB_SLACK_ATOL = 1e-6
