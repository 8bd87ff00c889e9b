class DegenLabError(Exception):
    """Base class for exceptions raised in the degenlab library"""


class InvalidInputError(DegenLabError):
    """Raised when an incorrect input is passed to one of the APIs"""


class DomainError(DegenLabError, ValueError):
    """Raised when an argument lies outside the mathematical domain of a
    formula, e.g. a point on the boundary of a cylinder or a geodesic of
    non-positive length"""


class PoleError(DomainError):
    """Raised when a Schwarzian derivative is requested at a critical point
    of the map"""

    def __init__(self, z):
        super(PoleError, self).__init__(
            "Derivative vanishes at z=%s, the Schwarzian has a pole there"
            % z)
        self.z = z


class ContractViolation(DegenLabError):
    """Raised when structural preconditions between objects do not hold,
    such as composing maps with mismatched heights"""


class CertificationError(DegenLabError):
    """Raised when a David certificate cannot be issued"""

    def __init__(self, msg, diagnostic=None):
        super(CertificationError, self).__init__(msg)
        self.diagnostic = diagnostic


class SolverError(DegenLabError):
    """Raised when the discrete Beltrami system cannot be solved"""


class QuadratureError(DegenLabError):
    """Raised when two quadrature resolutions disagree beyond tolerance"""

    def __init__(self, coarse, fine, tolerance):
        super(QuadratureError, self).__init__(
            "Quadrature did not converge: coarse=%r, fine=%r, tolerance=%r"
            % (coarse, fine, tolerance))
        self.coarse = coarse
        self.fine = fine


class AlreadyRegisteredError(DegenLabError):
    """Raised when attempting to register a name twice on the same
    registrable base"""

    def __init__(self, name, new_class, existing_class):
        msg = "Cannot register %s for %s as it has already been used to " \
              "register %s" \
              % (name, new_class.__name__, existing_class.__name__)
        super(AlreadyRegisteredError, self).__init__(msg)


class NotRegisteredError(DegenLabError):
    """Raised when trying to use a name or a subclass which was not
    registered"""

    def __init__(self, registrable_cls, name=None, registered_cls=None):
        if name is not None:
            msg = "'%s' has not been registered for type %s. " \
                  % (name, registrable_cls.__name__)
        else:
            msg = "subclass %s has not been registered for type %s. " \
                  % (registered_cls.__name__, registrable_cls.__name__)
        msg += "Available: %s" % ", ".join(
            sorted(registrable_cls.list_available()))
        super(NotRegisteredError, self).__init__(msg)
