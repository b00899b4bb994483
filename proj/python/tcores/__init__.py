"""t-cores, their abaci and N-codings, and the sums-of-squares maps built on them.

Partitions are tuples of parts, abaci tuples of runner counts, N-codings lists.
"""

from ._tcores import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
