#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/errors.py

"""Exception hierarchy shared by the algebra, verification and suite layers."""


class ProlimError(Exception):
    """Base class for every error raised by prolim."""


class DimensionError(ProlimError, ValueError):
    """Matrix or vector shapes do not fit together."""


class RingMismatchError(ProlimError, ValueError):
    """Operands live over different groups or base rings."""


class IllDefinedMapError(ProlimError, ValueError):
    """A module map does not respect relations, or maps do not compose."""


class TowerError(ProlimError, ValueError):
    """A tower specification is invalid or a tower invariant failed."""


class DigitError(ProlimError, ValueError):
    """A digit sequence violates its bounds."""


class ConfigError(ProlimError, ValueError):
    """A suite configuration is invalid."""
