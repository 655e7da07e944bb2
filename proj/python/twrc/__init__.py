"""Error exponents and resource allocation for amplify-and-forward two-way
relay links: python bindings over the C++ core."""

try:
    # installed wheel layout: the extension lives inside the package
    from ._twrc import *  # noqa: F401,F403
    from ._twrc import __doc__ as _core_doc  # noqa: F401
except ImportError:
    # in-tree layout: the extension sits on sys.path next to the build
    from _twrc import *  # noqa: F401,F403
