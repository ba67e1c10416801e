# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Exceptions."""


class RelayCapException(Exception):
    """Base exception for relaycap errors."""

    message = "[ERROR]"

    def __init__(self, *args, **kwargs):
        """Exception custom initialisation."""
        self.field = kwargs.pop("field", None)
        self.condition = kwargs.pop("condition", None)
        self.term = kwargs.pop("term", None)
        detail = kwargs.pop("message", None)
        message = self.message
        for extra in (self.field, self.condition, self.term):
            if extra:
                message = f"{message}({extra})"
        if detail:
            message = f"{message}: {detail}"
        self.message = message
        super().__init__(message, *args)


class InvalidArgumentError(RelayCapException, ValueError):
    """A pmf, channel or parameter is malformed."""

    message = "[INVALID ARGUMENT]"


class InfeasibleError(RelayCapException):
    """No input distribution satisfies the cost constraints."""

    message = "[INFEASIBLE]"


class PreconditionError(RelayCapException):
    """A capacity statement is used outside of its hypotheses."""

    message = "[PRECONDITION VIOLATED]"


class NumericDegeneracyError(RelayCapException, ArithmeticError):
    """A Gaussian conditional covariance is singular."""

    message = "[NUMERIC DEGENERACY]"


class OutputError(RelayCapException):
    """An output file cannot be written."""

    message = "[OUTPUT ERROR]"


class PreconditionWarning(UserWarning):
    """A closed form is evaluated outside of its capacity hypotheses."""
