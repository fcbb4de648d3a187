"""Exception hierarchy.

Every error carries a ``category`` used by the command line to pick an exit
code: ``"parse"`` (2) or ``"precondition"`` (3).
"""


class GroupError(Exception):
    category = "precondition"


class ParseError(GroupError):
    category = "parse"


class MalformedCycle(ParseError):
    pass


class PointOutOfRange(ParseError):
    pass


class RepeatedPoint(ParseError):
    pass


class DegreeMismatch(GroupError):
    pass


class CapExceeded(GroupError):
    def __init__(self, cap, count, what="elements"):
        super().__init__(f"cap of {cap} {what} exceeded (reached {count})")
        self.cap = cap
        self.count = count


class MixedParents(GroupError):
    pass


class NotContained(GroupError):
    pass


class ImageNotInGroup(GroupError):
    pass


class NotAHomomorphism(GroupError):
    pass


class NotBijective(GroupError):
    pass


class NotCoprime(GroupError):
    def __init__(self, action_order, group_order, gcd):
        super().__init__(
            f"action order {action_order} and group order {group_order} "
            f"are not coprime (gcd {gcd})"
        )
        self.action_order = action_order
        self.group_order = group_order
        self.gcd = gcd


class MixedTargets(GroupError):
    pass


class NotInvariant(GroupError):
    pass


class PrimeDoesNotDivide(GroupError):
    def __init__(self, prime, order):
        super().__init__(f"{prime} does not divide the group order {order}")
        self.prime = prime
        self.order = order
