"""Exception types shared across the package."""


class AutocycError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(AutocycError):
    """Permutations of different degrees were combined."""


class OrderBoundExceeded(AutocycError):
    """Group enumeration passed the configured order bound."""


class PrimeNotDividing(AutocycError):
    """The requested prime does not divide the group order."""


class NotAbelian(AutocycError):
    """An abelian-only computation was requested on a nonabelian group."""


class LatticeCapExceeded(AutocycError):
    """The normal subgroup lattice grew past the configured cap."""


class DoesNotNormalize(AutocycError):
    """A conjugating permutation does not map the group to itself."""


class NotAHomomorphism(AutocycError):
    """Generator images do not extend to a multiplicative map."""


class NotBijective(AutocycError):
    """Generator images extend to a non-injective map."""


class ActionCapExceeded(AutocycError):
    """Closure of an automorphism action passed the configured cap."""


class GroupTooLarge(AutocycError):
    """Brute-force automorphism search refused a group over its bound."""


class NoSuchOrder(AutocycError):
    """No element of the requested order exists."""


class ActionNotInner(AutocycError):
    """A verifier restricted to (sub)inner actions got another kind."""


class BadParameters(AutocycError):
    """A catalog constructor was called with invalid parameters."""


class UnknownKey(AutocycError):
    """No catalog entry under the requested key."""


class FileFormatError(AutocycError):
    """A group or action file failed to parse or validate."""
