"""Exception types shared across the package."""


class StructureError(ValueError):
    """Invalid structural input: bad graph, bad document, bad geometry."""


class StateError(ValueError):
    """Invalid or incomplete self-stress state."""
