"""Exception types shared by every engine."""


class APSPError(Exception):
    pass


class EmptyString(APSPError, ValueError):
    pass


class DuplicateString(APSPError, ValueError):
    pass


class UnknownId(APSPError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DeadHandle(APSPError, RuntimeError):
    """A compact-trie handle whose forwarding chain does not reach a live node."""
