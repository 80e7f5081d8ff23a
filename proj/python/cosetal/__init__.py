from ._cosetal import CosetalError, Workspace, describe_monoid, run

__all__ = ["CosetalError", "Workspace", "describe_monoid", "run"]
