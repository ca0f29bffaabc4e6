"""Exception hierarchy shared by all kdiff modules.

Every domain error derives from :class:`KdiffError`; the CLI maps these to
exit code 1 and prints the class name.
"""


class KdiffError(Exception):
    """Base class for domain errors."""


class DegreeMismatch(KdiffError):
    pass


class InvalidSignature(KdiffError):
    pass


class MinusKEntry(KdiffError):
    """Some order equals -k, so kappa_mu (and eta-relations) are undefined."""


class UnreducibleGenerator(KdiffError):
    pass


class MarkingMismatch(KdiffError):
    pass


class WrongVerdict(KdiffError):
    pass


class NotInfiniteArea(KdiffError):
    pass


class NotApplicable(KdiffError):
    pass


class NotHNStratum(KdiffError):
    pass


class DataFileCorrupt(KdiffError):
    pass


class CatalogContradiction(KdiffError):
    pass


class InvalidPositions(KdiffError):
    pass


class MergedMinusK(KdiffError):
    pass


class UnsupportedK(KdiffError):
    pass


class NotConnected(KdiffError):
    pass


class MeromorphicUnsupported(KdiffError):
    pass


class OddOrderZero(KdiffError):
    pass


class ParseError(KdiffError):
    pass
