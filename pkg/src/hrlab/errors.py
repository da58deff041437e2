"""Exception types shared across the package."""


class HRLabError(Exception):
    """Base class for errors raised by hrlab."""


class CacheFormatError(HRLabError, ValueError):
    """A cache file has the wrong magic, version, length or checksum."""


class ResourceLimitError(HRLabError, MemoryError):
    """The requested computation could not allocate the memory it needs.

    Kept distinct from ``ValueError`` so callers can tell a bad request
    from a machine that is too small for a valid one.
    """
