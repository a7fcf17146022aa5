"""Exception hierarchy shared by all modules."""


class DDyckError(ValueError):
    pass


# dyck paths
class PathError(DDyckError):
    pass


class BadCharacter(PathError):
    pass


class NotBalanced(PathError):
    pass


class DipsBelowAxis(PathError):
    pass


class UnsupportedD(DDyckError):
    pass


# polyominoes
class InvalidPolyomino(DDyckError):
    pass


class NotNonDecreasing(DDyckError):
    pass


class CellNotInPolyomino(DDyckError):
    pass


# generating functions
class NonUnitConstantTerm(DDyckError):
    pass


# partitions
class InvalidPartition(DDyckError):
    pass


class CrossingPartition(DDyckError):
    pass


class NotDDyck(DDyckError):
    pass


class NotNcdMember(DDyckError):
    pass
