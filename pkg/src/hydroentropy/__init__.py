"""Information-entropic measures of free and confined hydrogenic atoms."""

__version__ = "0.1.0"
