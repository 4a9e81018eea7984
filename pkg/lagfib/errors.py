#coding: utf-8


u"""Exception classes raised by lagfib.

Every error carries an ``exit_status`` which the command-line front end
returns to the shell: 2 for bad user input, 1 for internal failures that
should never happen with honest data.  The message for each class is a
template filled from the keyword details passed to the constructor, so
that the same condition is always reported the same way.
"""

USER_ERROR = 2
INTERNAL_ERROR = 1


class LagfibError(Exception):
    exit_status = USER_ERROR
    template = "{detail}"

    def __init__(self, detail="", **details):
        self.details = dict(details, detail=detail)
        super().__init__(self.message)

    @property
    def message(self):
        try:
            return self.template.format(**self.details)
        except KeyError:
            return str(self.details.get("detail", ""))

    def __str__(self):
        return self.message


# Graded ring

class RingError(LagfibError, ValueError):
    pass

class DuplicateGenerator(RingError):
    template = "Generator name '{name}' declared more than once"

class InvalidWeight(RingError):
    template = "{detail}"

class UnknownGenerator(RingError):
    template = "Generator '{name}' is not one of {known}"

class RingMismatch(RingError):
    template = "Cannot combine elements of different rings ({left} vs {right})"

class NonUnitConstantTerm(RingError):
    template = "{operation} needs constant term {expected}, got {constant}"

class WeightMismatch(RingError):
    template = "{detail}"


# Characteristic classes

class InvalidChernNumbers(LagfibError, ValueError):
    template = "Bad Chern number record{where}: {detail}"

    def __init__(self, detail="", where="", **details):
        super().__init__(detail, where=f" {where}" if where else "", **details)


# Fibration formulas

class NotPerfectPower(LagfibError, ValueError):
    template = "{value} has no rational {n}-th root; the inputs cannot come from a fibration with good singular fibres"

class NegativeEvenRoot(LagfibError, ValueError):
    template = "Cannot take an even ({n}-th) root of negative value {value}"

class NonPositiveInput(LagfibError, ValueError):
    template = "{name} must be positive, got {value}"

class InvalidPolarization(LagfibError, ValueError):
    template = "Polarization type {d} is invalid: {detail}"


# Internal consistency

class NonIntegerResult(LagfibError, ArithmeticError):
    exit_status = INTERNAL_ERROR
    template = "Expected an integer from {name}, got {value}"

class RouteDisagreement(LagfibError, ArithmeticError):
    exit_status = INTERNAL_ERROR
    template = "Independent computations disagree: {left_name} = {left} but {right_name} = {right}"


# Four-fold census

class NotInGuanTable(LagfibError, ValueError):
    template = "(b2, b3) = ({b2}, {b3}) is not allowed by Guan's bounds"

class EmptyCensus(LagfibError, ValueError):
    template = "No census rows to summarize"
