"""Character tables, p-blocks and Frobenius-pair analysis for finite permutation groups."""

__version__ = "0.1.0"
