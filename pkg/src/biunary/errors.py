"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for all structured errors raised by this package."""


class ShapeError(WorkbenchError):
    """A table, map or label list is malformed (wrong size, out of range)."""


class AssocError(WorkbenchError):
    """Multiplication table is not associative; carries a witness triple."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__("not associative at (x,y,z)=%r" % (self.witness,))


class ParseError(WorkbenchError):
    """Text input does not conform to the file format."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = " at line %d" % line
            if column is not None:
                where += ", column %d" % column
        super().__init__(message + where)


class CategoryAxiomError(WorkbenchError):
    """A category axiom C1..C5 fails; names the axiom and a witness."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__("axiom %s fails at %r" % (axiom, self.witness))


class BiactionAxiomError(WorkbenchError):
    """A biaction axiom TC1/TC2/TC6 fails; names the axiom and a witness."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__("axiom %s fails at %r" % (axiom, self.witness))


class WrongStructureKind(WorkbenchError):
    """A law tag was applied to the wrong kind of structure."""


class PseudoproductUndefined(WorkbenchError):
    """A law needs a total pseudoproduct but some pair has no composite."""

    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(witness)
        super().__init__("%s: pseudoproduct undefined at %r" % (law, self.witness))


class NotCatSemigroup(WorkbenchError):
    """The restricted product does not form a category; names the failed law."""

    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(witness)
        super().__init__("%s fails at %r" % (law, self.witness))


class PrerequisiteFailed(WorkbenchError):
    """An operation's precondition law fails on the given structure."""

    def __init__(self, law, witness=None):
        self.law = law
        self.witness = tuple(witness) if witness is not None else None
        super().__init__("prerequisite %s fails%s"
                         % (law, "" if witness is None else " at %r" % (self.witness,)))


class OrderTooLarge(WorkbenchError):
    """The structure is too large for an exhaustive search operation."""


class CapExceeded(WorkbenchError):
    """Closure generation exceeded its element cap."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__("closure exceeds cap of %d elements" % cap)


class SizeMismatch(WorkbenchError):
    """Two relations live on ground sets of different sizes."""
