class GroupError(Exception):
    """Base exception for group model errors."""


class GroupSpecError(GroupError):
    """Raised when a group spec string or factor list is malformed."""


class GroupCapError(GroupError):
    """Raised when a group order exceeds the configured cap."""


class ElementRangeError(GroupError):
    """Raised when an element or character rank is out of range."""
