from typing import Any, Optional


class PolytopeError(Exception):
    """Base exception for everything raised deliberately by a4_polytopes"""
    pass


class FieldDivisionError(PolytopeError, ZeroDivisionError):
    """Exception raised when dividing by the zero element of Q(sqrt2, sqrt5)"""
    pass


class WeightError(PolytopeError, ValueError):
    """Exception raised for malformed weights or node indices outside 1..4"""
    pass


class NotInOrbitError(PolytopeError):
    """Exception raised when a vertex does not belong to the orbit of a weight"""
    pass


class DegenerateGeometryError(PolytopeError):
    """Exception raised when a point set does not span three dimensions"""

    def __init__(self, rank: int, message: Optional[str] = None):
        self.rank = rank
        super().__init__(message or f"point set has affine rank {rank}, expected 3")


class VerificationError(PolytopeError):
    """Exception raised when a verification report failed and a hard failure was requested"""

    def __init__(self, message: str, counterexample: Any = None):
        self.counterexample = counterexample
        if counterexample is not None:
            message = f"{message}: {counterexample}"
        super().__init__(message)
