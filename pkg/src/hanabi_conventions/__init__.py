"""Hanabi with conventions as an augmented action space.

Subpackages: ``engine`` (rules), ``knowledge`` (card reasoning),
``conventions`` (catalogues, masking, translation), ``agents`` (Q-networks,
replay, updates, checkpoints), ``harness`` (training/evaluation loops and
statistics) and ``cli``.
"""

__version__ = "0.1.0"
