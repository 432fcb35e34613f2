"""packrho: greedy and exact packing colorings of small graphs.

Greedy packing coloring over vertex orders, exact Grundy packing and packing
chromatic numbers by exhaustive search, closed forms for diameters 2 and 3,
and exhaustive checks of the closed-form results on small labeled graphs.
"""

__version__ = "0.1.0"
