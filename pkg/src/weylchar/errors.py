"""Exception types shared across the engine."""


class GuardError(RuntimeError):
    """A resource guard (orbit size, oracle dimension) would be exceeded."""


class NegativeMultiplicityError(RuntimeError):
    """A net multiplicity went negative where the theory forbids it.

    Signals an arithmetic bug or corrupted input data, never a user error.
    """
