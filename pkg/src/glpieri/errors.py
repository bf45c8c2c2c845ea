"""Exception hierarchy shared by all modules."""


class GlpieriError(Exception):
    """Base class for all package errors."""


class ProfileError(GlpieriError):
    """Invalid weight profile."""


class NonDecreasingValues(ProfileError):
    pass


class EmptyClass(ProfileError):
    pass


class BadTailStep(ProfileError):
    pass


class NoSuchClass(GlpieriError):
    pass


class NonZeroSum(GlpieriError):
    pass


class NotFockProfile(GlpieriError):
    pass


class ModuleError(GlpieriError):
    """Invalid (profile, module) pair."""


class ShapeMismatch(ModuleError):
    pass


class ANotInfinite(ModuleError):
    pass


class BNotInfinite(ModuleError):
    pass


class TooSmallForD(ModuleError):
    pass


class NotHighestWeight(GlpieriError):
    pass


class NotDualizable(GlpieriError):
    pass


class CapacityExceeded(GlpieriError):
    pass


class UnsupportedHypothesis(GlpieriError):
    """Fock module whose wedge set is not initial run by run; the structure
    theory does not apply and every structure operation fails closed."""


class OracleError(GlpieriError):
    pass


class NotContaining(OracleError):
    pass


class NoneAbove(OracleError):
    pass


class SizeBound(OracleError):
    pass


class MultiplicityNotOne(OracleError):
    pass


class HypothesesNotMet(OracleError):
    pass


class NotAStep(OracleError):
    pass


class PreconditionFailed(OracleError):
    pass
