"""
gtsij - signed sets, sijections and Gelfand-Tsetlin patterns.

Bijective proofs of the counting identities between Gelfand-Tsetlin patterns,
monotone triangles and alternating sign matrices, built from composable
sijections that can be checked element by element.
"""

__version__ = "0.1.0"
