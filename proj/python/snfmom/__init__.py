from ._snfmom import *  # noqa: F401,F403
