"""Position-matching steganography: record where a cover's LSBs already spell
a message instead of modifying the cover."""

try:
    from ._posmatch import *  # noqa: F401,F403
    from ._posmatch import __version__  # noqa: F401
except ImportError:  # in-tree build: the extension sits next to the package
    from _posmatch import *  # noqa: F401,F403
    from _posmatch import __version__  # noqa: F401
