"""IPv6 active-address temporal/spatial classification."""

try:
    from ._v6taxon import *  # noqa: F401,F403
except ImportError:  # development layout: extension built next to the package
    from _v6taxon import *  # noqa: F401,F403
