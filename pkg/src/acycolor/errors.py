"""Exception types shared across the package."""


class AcycolorError(Exception):
    """Base class for all package errors."""


class GraphError(AcycolorError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class MissingEdge(GraphError):
    pass


class TooLarge(AcycolorError):
    """Input exceeds the guard of an exhaustive routine."""


class NotACandidate(AcycolorError):
    """Color clashes with an edge adjacent to the target edge."""


class EdgeAlreadyColored(AcycolorError):
    pass


class PartialInput(AcycolorError):
    """A total coloring was required but some edge is uncolored."""


class ImproperExchange(AcycolorError):
    """Color exchange would break properness (Fact 3 condition)."""


class NoConfiguration(AcycolorError):
    """No unavoidable local configuration found; the input violates the
    degree/sparsity precondition."""


class NotPropertyA(AcycolorError):
    """Some induced subgraph spans more than 2|S|-1 edges."""

    def __init__(self, witness):
        self.witness = tuple(sorted(witness))
        super().__init__(
            "graph violates the sparsity bound on vertex set %s" % (self.witness,)
        )


class ExtensionExhausted(AcycolorError):
    """The scripted extension and the local repair search both failed.

    Signals a bug or a precondition violation; the recoloring procedure is
    proven total on sparse inputs.
    """


class SearchBudgetExceeded(AcycolorError):
    """Backtracking solver hit its node budget before finding a coloring."""


class ParseError(AcycolorError):
    pass
