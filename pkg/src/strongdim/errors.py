"""Exception hierarchy shared by all modules."""


class StrongDimError(Exception):
    pass


class GraphError(StrongDimError):
    pass


class SelfLoop(GraphError):
    def __init__(self, label):
        super().__init__(f"self-loop on vertex {label!r}")
        self.label = label


class UnknownVertex(GraphError, KeyError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex

    def __str__(self):
        return self.args[0]


class Disconnected(GraphError):
    pass


class SizeTooSmall(GraphError):
    pass


class NotConnected(Disconnected):
    """A merge operand is not connected."""


class BudgetExceeded(StrongDimError):
    def __init__(self, budget):
        super().__init__(f"vertex cover search exceeded budget of {budget} nodes")
        self.budget = budget


class NotACycle(StrongDimError):
    pass


class NotAGrid(StrongDimError):
    pass


class NotACograph(StrongDimError):
    def __init__(self, witness):
        super().__init__(f"induced P4 {witness!r}")
        self.witness = tuple(witness)


class NoSolver(StrongDimError):
    pass


class SolverFailure(StrongDimError):
    pass


class NotResolving(StrongDimError):
    def __init__(self, pair):
        super().__init__(f"pair {pair!r} is not strongly resolved")
        self.pair = pair


class ParseError(StrongDimError):
    pass
