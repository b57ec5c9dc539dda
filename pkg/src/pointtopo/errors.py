"""Exception hierarchy.

Everything raised for bad input derives from :class:`TopologyError`, which is
itself a ``ValueError`` so callers that only care about "bad input" can catch
that.
"""


class TopologyError(ValueError):
    pass


class DuplicateLabel(TopologyError):
    pass


class EmptyLabelList(TopologyError):
    pass


class MalformedLabel(TopologyError):
    pass


class UnknownPoint(TopologyError):
    pass


class ShapeMismatch(TopologyError):
    pass


class UnsupportedSize(TopologyError):
    pass


class MissingEmptyPart(TopologyError):
    pass


class MissingFullPart(TopologyError):
    pass


class _PairWitness(TopologyError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


class NotClosedUnderUnion(_PairWitness):
    pass


class NotClosedUnderIntersection(_PairWitness):
    pass


class NotReflexive(TopologyError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


class NotTransitive(_PairWitness):
    """``witness`` is a triple ``(q, p, r)`` with q<=p, p<=r but not q<=r."""


class NotAntisymmetric(_PairWitness):
    pass


class NonSquare(TopologyError):
    pass


class BadEntry(TopologyError):
    pass


class NonMonotoneStepIndex(TopologyError):
    pass


class MalformedStep(TopologyError):
    pass


class ParseError(TopologyError):
    """Raised by the text-format readers; carries the 1-based line number."""

    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = f"line {lineno}: {msg}"
        super().__init__(msg)
        self.lineno = lineno


class SelfLoopWarning(UserWarning):
    pass
