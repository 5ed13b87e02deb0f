"""Quoridor hardness toolkit.

A generalized n-by-n Quoridor rules engine, an exact solver for the
positive-CNF variable-claiming game, a compiler that turns any positive CNF
formula into a Quoridor position whose winner mirrors the formula game, and
a harness of executable checks over the compiled wall structures.
"""

__version__ = "0.1.0"
