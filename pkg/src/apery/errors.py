"""Exception types raised by the library."""


class SemigroupError(ValueError):
    """Base class for invalid semigroup input."""


class GcdNotOne(SemigroupError):
    def __init__(self, generators, g):
        self.generators = tuple(generators)
        self.gcd = g
        super().__init__(f"generators {self.generators} have gcd {g}, not 1")


class NotMinimal(SemigroupError):
    def __init__(self, generators, redundant):
        self.generators = tuple(generators)
        self.redundant = redundant
        super().__init__(
            f"generator {redundant} of {self.generators} is a combination of the others"
        )


class NotAMember(SemigroupError):
    def __init__(self, x, generators):
        self.x = x
        self.generators = tuple(generators)
        super().__init__(f"{x} is not a nonzero element of <{', '.join(map(str, generators))}>")


class BadParameter(SemigroupError):
    """A family parameter violates one of its constraints."""


class UncoveredCase(SemigroupError):
    """No closed form is known for this parameter choice."""
