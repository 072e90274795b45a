"""Exception vocabulary shared by the library and the command line.

Every failure raised by a validator is a subclass of :class:`InvariantError`;
its class name is the identifier printed by the CLI.
"""

from __future__ import annotations


class InvariantError(ValueError):
    """Base class: some structural invariant does not hold."""

    def __init__(self, detail: object = None, message: str | None = None) -> None:
        self.detail = detail
        text = type(self).__name__
        if detail is not None:
            text += f"({detail})"
        if message:
            text += f": {message}"
        super().__init__(text)


class FormatError(InvariantError):
    """A text file could not be parsed."""


class BudgetExceeded(InvariantError):
    """An exhaustive enumeration was asked for more than its size budget."""


# comb_map
class MapError(InvariantError):
    pass


class InvalidPermutation(MapError):
    pass


class NotInvolution(MapError):
    pass


class NotConnected(MapError):
    pass


class NonPlanar(MapError):
    pass


class BadRoot(MapError):
    pass


# bipolar
class BipolarError(InvariantError):
    pass


class CyclicOrientation(BipolarError):
    pass


class ExtraSource(BipolarError):
    pass


class ExtraSink(BipolarError):
    pass


class PoleNotOnOuterFace(BipolarError):
    pass


class VertexBlocksViolated(BipolarError):
    pass


class FaceNotTwoPaths(BipolarError):
    pass


# separating
class SeparatingError(InvariantError):
    pass


class NotQuadrangulation(SeparatingError):
    pass


class NotSimple(SeparatingError):
    pass


class OutdegreeViolated(SeparatingError):
    pass


class RotationRuleViolated(SeparatingError):
    pass


class PoleRuleViolated(SeparatingError):
    pass


class BlueNotSpanningTree(SeparatingError):
    pass


class RedNotSpanningTree(SeparatingError):
    pass


# words and paths
class WordError(InvariantError):
    pass


class MalformedContourWord(WordError):
    pass


class ContentViolated(WordError):
    pass


class RedundancyViolated(WordError):
    pass


class Property1Violated(WordError):
    pass


class Property2Violated(WordError):
    pass


class NotAdmissible(WordError):
    pass


class BadEndpoints(WordError):
    pass


class Intersecting(WordError):
    pass


# decode
class DecodeError(InvariantError):
    pass


class NotDyck(DecodeError):
    pass


class NoValidShuffle(DecodeError):
    pass


class InconsistentType(DecodeError):
    pass


class UnmatchedStem(DecodeError):
    pass


class InvariantIBroken(DecodeError):
    pass


# schnyder
class SchnyderError(InvariantError):
    pass


class NotTriangulation(SchnyderError):
    pass


class ColorOutdegreeViolated(SchnyderError):
    pass


class RotationOrderViolated(SchnyderError):
    pass


class OuterRuleViolated(SchnyderError):
    pass


class ColorTreeViolated(SchnyderError):
    pass


class NotContractible(SchnyderError):
    pass


class Crossing(SchnyderError):
    pass
