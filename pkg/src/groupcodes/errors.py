"""Exception types shared across the package."""


class GroupCodesError(Exception):
    """Base class for all errors raised by this package."""


# -- finite fields ----------------------------------------------------------

class NonPrime(GroupCodesError):
    """Requested characteristic is not a prime number."""


class ReducibleModulus(GroupCodesError):
    """Modulus polynomial is not irreducible (or not monic of the right degree)."""


class UnsupportedSize(GroupCodesError):
    """Field size exceeds the implementation cap."""


class FieldMismatch(GroupCodesError):
    """Operands belong to different finite fields."""


# -- linear algebra ---------------------------------------------------------

class AmbientMismatch(GroupCodesError):
    """Subspaces live in different ambient spaces (field or dimension)."""


# -- presentations / groups -------------------------------------------------

class ParseError(GroupCodesError):
    """Input text does not match the expected grammar."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownGenerator(ParseError):
    """A word uses a generator symbol that was never declared."""


class CosetBudgetExceeded(GroupCodesError):
    """Coset enumeration defined more cosets than the allowed budget."""


class IncompleteEnumeration(GroupCodesError):
    """Coset table left undefined entries after the enumeration loop."""


class OrderCapExceeded(GroupCodesError):
    """Constructed group would exceed the group-order cap."""


# -- group algebra ----------------------------------------------------------

class ContextMismatch(GroupCodesError):
    """Operands belong to different group algebras."""


class NotAPGroup(GroupCodesError):
    """Operation requires a group of prime-power order."""


class CharMismatch(GroupCodesError):
    """Field characteristic does not match the group's prime."""


# -- codes / checkability ---------------------------------------------------

class NotARightIdeal(GroupCodesError):
    """Operation requires a verified right ideal."""


class SideMismatch(GroupCodesError):
    """Ideal does not carry the side flag the operation needs."""


class BudgetExceeded(GroupCodesError):
    """Enumeration would exceed the configured work budget."""


class ScaleExceeded(GroupCodesError):
    """Requested experiment is beyond the supported desk scale."""


class VerificationFailed(GroupCodesError):
    """Internal consistency check failed; indicates a bug, not bad input."""
