"""movekit: a direct-manipulation geometry engine.

Covers describe where objects can be grabbed, movers run the
press-move-release state machine, and scene objects supply the geometry.
"""

__version__ = "0.1.0"
