class BudgetExceeded(RuntimeError):
    """A search or enumeration hit its configured cap (circles, classes, nodes or wall time)."""
