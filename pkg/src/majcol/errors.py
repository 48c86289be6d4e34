"""Exception hierarchy shared by all majcol modules."""


class MajcolError(Exception):
    """Base class for all majcol errors."""


class CyclicInput(MajcolError):
    """An operation requiring an acyclic digraph received a cyclic one."""


class InstanceTooLarge(MajcolError):
    """Exact search refused to run above its configured size cap."""


class PartialColoring(MajcolError):
    """A coloring left some vertex uncolored."""


class OddDicycle(MajcolError):
    """An odd directed cycle violates a precondition.

    `cycle` holds the witness as a vertex sequence.
    """

    def __init__(self, cycle, message=None):
        self.cycle = list(cycle)
        super().__init__(message or f"odd directed cycle {self.cycle}")


class PrecoloredNonSink(MajcolError):
    """A precoloring touched a vertex with positive out-degree."""


class MonochromaticListOddDicycle(MajcolError):
    """An odd directed cycle whose vertices all carry the same 2-list."""

    def __init__(self, cycle, shared_list):
        self.cycle = list(cycle)
        self.shared_list = frozenset(shared_list)
        super().__init__(
            f"odd directed cycle {self.cycle} with shared list {sorted(self.shared_list)}"
        )


class BadPartition(MajcolError):
    """A supplied vertex partition violates the operation's hypothesis."""

    def __init__(self, part_index, message, cycle=None):
        self.part_index = part_index
        self.cycle = list(cycle) if cycle is not None else None
        super().__init__(f"part {part_index}: {message}")


class ChromaticTooHighOrUnknown(MajcolError):
    """No proper 6-coloring of the underlying graph was found within caps."""


class PreconditionViolated(MajcolError):
    """Input fails the documented hypothesis of a constructive procedure."""


class ComponentTooHard(MajcolError):
    """A fallback exact search on one component exceeded its cap."""


class ParamOutOfRange(MajcolError):
    """A numeric parameter lies outside its admissible range."""


class DegreeTooLow(MajcolError):
    """Minimum out-degree below the sampler's requirement."""


class CoverageFailure(MajcolError):
    """Sampled stable sets failed to cover every vertex within the retry cap."""


class GenerationFailed(MajcolError):
    """A randomized generator exhausted its retry budget."""


class MalformedEdge(MajcolError):
    """A hypergraph edge is not a set of 3 distinct in-range vertices."""


class FormatError(MajcolError):
    """A text document does not match its declared format."""
