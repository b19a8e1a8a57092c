from typing import Any, Dict, List, Optional


class RecoloureurError(Exception):
    """Base class of every error raised by recoloureur."""


# --- Input ---

class IndexOutOfRange(RecoloureurError):
    pass


class SelfLoop(RecoloureurError):
    pass


class LengthMismatch(RecoloureurError):
    pass


class MalformedInput(RecoloureurError):
    pass


class BadParams(RecoloureurError):
    pass


class UnknownName(RecoloureurError):
    pass


# --- Colourings ---

class ImproperColouring(RecoloureurError):
    pass


class PartitionMismatch(RecoloureurError):
    pass


class PaletteTooSmall(RecoloureurError):
    pass


class BadTarget(RecoloureurError):
    pass


class TooLarge(RecoloureurError):
    pass


# --- Class membership ---

class NotInClass(RecoloureurError):
    """
    The input graph lies outside the class an algorithm needs.

    `witness_name` names the forbidden graph that was found and `witness`
    lists the host vertices of the induced copy (in pattern order).
    """

    def __init__(self, message: str, witness_name: Optional[str] = None,
                 witness: Optional[List[int]] = None):
        super().__init__(message)
        self.witness_name = witness_name
        self.witness = list(witness) if witness is not None else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": str(self),
            "witness_name": self.witness_name,
            "witness": self.witness,
        }


class Not3K1Free(NotInClass):
    pass


class NotP3Free(NotInClass):
    pass


class NotChordal(NotInClass):
    pass


class Disconnected(NotInClass):
    pass


# --- Oracle and structure ---

class BudgetExceeded(RecoloureurError):
    def __init__(self, states: int, budget: int):
        super().__init__(f"state space of {states} keys exceeds budget {budget}")
        self.states = states
        self.budget = budget


class InvalidSeed(RecoloureurError):
    pass


class NotTight(RecoloureurError):
    pass


class BlowupBaseTooLarge(RecoloureurError):
    """
    A base graph is past the state budget and not (P3+P1)-free. Every C5
    blow-up is (P3+P1)-free, so (P5,C4)-free inputs only reach this when
    the decomposition is broken.
    """


# --- Internal ---

class InternalInvariantViolation(RecoloureurError):
    pass


class GenerationFailed(RecoloureurError):
    pass
