class LatticeError(ValueError):
    pass


class NotInvertible(LatticeError):
    pass


class OrderCapExceeded(LatticeError):
    pass


class GroupMismatch(LatticeError):
    pass


class InvalidAction(LatticeError):
    pass
