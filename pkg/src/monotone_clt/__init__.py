"""
Monotone CLT toolkit.

Exact combinatorics behind the monotone central limit theorem: peakless pair
partitions, mixed-moment reduction under monotone independence, finite-N CLT
moments and the arcsine limit law.
"""

__version__ = "1.0.0"
