"""rpdlab: radial positive definite kernels, Schoenberg matrices and
measures, verified at desk scale."""

__version__ = "0.1.0"
