"""Publication-style figures from the training pipeline's CSV outputs."""

__version__ = "0.1.0"
