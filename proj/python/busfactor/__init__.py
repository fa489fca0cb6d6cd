"""Bus-factor estimation for bipartite people-task graphs."""

try:
    from ._busfactor import *  # noqa: F401,F403
except ImportError:  # running against a build tree, module not in the package
    from _busfactor import *  # noqa: F401,F403
