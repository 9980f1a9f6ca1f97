"""
Typed errors raised by the workbench.

Every error carries a stable `code` (used in JSON failure lists and by the CLI)
and a `details` dict of JSON-ready witness data.
"""
from __future__ import annotations


class WorkbenchError(Exception):
    code = "WorkbenchError"

    def __init__(self, message: str = "", **details) -> None:
        super().__init__(message or self.code)
        self.message = message or self.code
        self.details = details

    def to_dict(self) -> dict:
        return {"error": self.code, "message": self.message, "details": self.details}


# ======== INCIDENCE =========== #

class InvalidStructure(WorkbenchError):
    code = "InvalidStructure"


class NotUniformLineSize(WorkbenchError):
    code = "NotUniformLineSize"


class NotUniformPointDegree(WorkbenchError):
    code = "NotUniformPointDegree"


class ContainsTriangleOrDigon(WorkbenchError):
    code = "ContainsTriangleOrDigon"


class GQAxiomFails(WorkbenchError):
    code = "GQAxiomFails"


class CountMismatch(WorkbenchError):
    code = "CountMismatch"


class EmptyInput(WorkbenchError):
    code = "EmptyInput"


class NotThick(WorkbenchError):
    code = "NotThick"


# ======== GROUPS =========== #

class CapExceeded(WorkbenchError):
    code = "CapExceeded"


class NotTransitive(WorkbenchError):
    code = "NotTransitive"


class DomainMismatch(WorkbenchError):
    code = "DomainMismatch"


class NotAutomorphism(WorkbenchError):
    code = "NotAutomorphism"


class TooLarge(WorkbenchError):
    code = "TooLarge"


class SearchBudgetExceeded(WorkbenchError):
    code = "SearchBudgetExceeded"


# ======== VERIFICATION =========== #

class NoCaseApplies(WorkbenchError):
    code = "NoCaseApplies"


class NotRegular(WorkbenchError):
    code = "NotRegular"


class VerificationFailed(WorkbenchError):
    code = "VerificationFailed"


class NoCaseVerifies(WorkbenchError):
    code = "NoCaseVerifies"


class HypothesisNotMet(WorkbenchError):
    code = "HypothesisNotMet"


# ======== CONSTRUCTIONS =========== #

class UnsupportedField(WorkbenchError):
    code = "UnsupportedField"


class NotSquareOrder(WorkbenchError):
    code = "NotSquareOrder"


class NotRegularPoint(WorkbenchError):
    code = "NotRegularPoint"


class ValidationFailed(WorkbenchError):
    code = "ValidationFailed"


class ConstructionFailed(WorkbenchError):
    code = "ConstructionFailed"


# ======== SIMPLE GROUPS =========== #

class UnsupportedFamily(WorkbenchError):
    code = "UnsupportedFamily"


class NonIntegerFormulaValue(WorkbenchError):
    code = "NonIntegerFormulaValue"


class FormulaMismatch(WorkbenchError):
    code = "FormulaMismatch"


class InvalidGroupSpec(WorkbenchError):
    code = "InvalidGroupSpec"


# ======== CLI =========== #

class ReportFormatError(WorkbenchError):
    code = "ReportFormatError"
