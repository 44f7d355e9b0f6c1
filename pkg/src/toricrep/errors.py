"""Exception types raised across the package."""


class ToricRepError(Exception):
    """Base class for all errors raised by toricrep."""


class RankTooLarge(ToricRepError):
    def __init__(self, rank: int, limit: int):
        super().__init__(f"row space of rank {rank} exceeds enumeration limit {limit}")
        self.rank = rank
        self.limit = limit


class DimensionMismatch(ToricRepError, ValueError):
    pass


class NotAnAutomorphism(ToricRepError):
    def __init__(self, generator, face):
        super().__init__(f"generator {generator} maps face {face} outside the complex")
        self.generator = generator
        self.face = face


class GroupTooLarge(ToricRepError):
    pass


class VertexNotFound(ToricRepError):
    pass


class NotASkewHook(ToricRepError, ValueError):
    pass


class MissingSingleton(ToricRepError, ValueError):
    def __init__(self, element: int):
        super().__init__(f"building set is missing the singleton {{{element}}}")
        self.element = element


class NotUnionClosed(ToricRepError, ValueError):
    def __init__(self, first, second):
        super().__init__(
            f"members {sorted(first)} and {sorted(second)} intersect but their union is absent"
        )
        self.first = first
        self.second = second


class NotConnected(ToricRepError, ValueError):
    pass


class CacheCorrupt(ToricRepError):
    pass
