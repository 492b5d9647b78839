"""k-descending trees, row-length sequences and rigorous rho(k) enclosures.

Thin Python wrapper over the C++ core. All arithmetic underneath is exact:
rationals, elements of real quadratic fields, and arbitrary-precision
integers; interval endpoints come back as fractions.Fraction.
"""

try:
    from ._ktree import *  # noqa: F401,F403
    from ._ktree import __version__  # noqa: F401
except ImportError:  # in-tree test runs have the extension on sys.path directly
    from _ktree import *  # noqa: F401,F403
    from _ktree import __version__  # noqa: F401
