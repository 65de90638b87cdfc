"""A-SQL abstract syntax tree.

Every statement variant is a plain dataclass; parsing and rendering are
mutually inverse over these nodes (parse(render(s)) == s).
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

Value = Union[None, str, int, float]


# --- expressions -----------------------------------------------------------

@dataclass
class ColRef:
    table: Optional[str]  # alias or table name, None if unqualified
    name: str


@dataclass
class Literal:
    value: Value


@dataclass
class AggCall:
    func: str                 # COUNT | MIN | MAX | SUM
    column: Optional[ColRef]  # None for COUNT(*)
    star: bool = False


Operand = Union[ColRef, Literal, AggCall]


@dataclass
class Comparison:
    lhs: Operand
    op: str  # = <> < <= > >= LIKE
    rhs: Operand


@dataclass
class IsNull:
    operand: Operand
    negated: bool = False


@dataclass
class AnnAtom:
    """Predicate over one annotation field: VALUE, TABLE, TS or TAG('name')."""

    fld: str  # VALUE | TABLE | TS | TAG
    tag: Optional[str]
    op: str
    value: Value


@dataclass
class Not:
    operand: "Cond"


@dataclass
class And:
    left: "Cond"
    right: "Cond"


@dataclass
class Or:
    left: "Cond"
    right: "Cond"


Cond = Union[Comparison, IsNull, AnnAtom, Not, And, Or]


# --- SELECT ----------------------------------------------------------------

@dataclass
class Star:
    table: Optional[str] = None  # qualified star, e.g. G.*


SelectItem = Union[Star, ColRef, AggCall, Literal]


@dataclass
class TableRef:
    name: str
    alias: Optional[str] = None


@dataclass
class Promote:
    sources: List[ColRef]
    target: str


@dataclass
class AnnSelect:
    projection: List[SelectItem]
    distinct: bool = False
    from_tables: List[TableRef] = field(default_factory=list)
    annotations: Optional[List[str]] = None  # None=absent, ['*']=all
    where: Optional[Cond] = None
    awhere: Optional[Cond] = None
    group_by: List[ColRef] = field(default_factory=list)
    having: Optional[Cond] = None
    ahaving: Optional[Cond] = None
    filter: Optional[Cond] = None
    promotes: List[Promote] = field(default_factory=list)
    # trailing (UNION|INTERSECT|EXCEPT, operand) pairs, folded left to right
    set_ops: List[Tuple[str, "AnnSelect"]] = field(default_factory=list)


# --- statements ------------------------------------------------------------

@dataclass
class CreateTable:
    name: str
    columns: List[Tuple[str, str]]  # (column, TEXT|INT|FLOAT)


@dataclass
class Insert:
    table: str
    columns: Optional[List[str]]
    rows: List[List[Value]]


@dataclass
class Update:
    table: str
    assignments: List[Tuple[str, Value]]
    where: Optional[Cond] = None


@dataclass
class Delete:
    table: str
    where: Optional[Cond] = None


@dataclass
class CreateAnnotationTable:
    owner: str
    name: str
    category: str = "COMMENT"
    required_tags: List[str] = field(default_factory=list)
    writers: List[str] = field(default_factory=list)


@dataclass
class DropAnnotationTable:
    owner: str
    name: str


@dataclass
class AddAnnotation:
    tables: List[Tuple[str, str]]  # (owner, annotation table)
    body: str                      # XML text
    on: "Statement"                # SELECT / INSERT / UPDATE / DELETE


@dataclass
class ArchiveAnnotation:
    tables: List[Tuple[str, str]]
    on: AnnSelect
    between: Optional[Tuple[str, str]] = None  # ISO-8601 bounds


@dataclass
class RestoreAnnotation:
    tables: List[Tuple[str, str]]
    on: AnnSelect
    between: Optional[Tuple[str, str]] = None


@dataclass
class CreateDependencyRule:
    rule_id: str
    source_table: str
    source_cols: List[str]
    target_table: str
    target_cols: List[str]
    link: List[Tuple[str, str, str, str]]  # (t1, c1, t2, c2) equalities
    proc: str
    db_executable: bool
    invertible: bool


@dataclass
class DropDependencyRule:
    rule_id: str


@dataclass
class Validate:
    table: str
    column: str
    where: Optional[Cond] = None
    set_value: Optional[Tuple[str, Value]] = None


@dataclass
class StartContentApproval:
    table: str
    columns: Optional[List[str]]
    approvers: List[str]


@dataclass
class EndContentApproval:
    table: str


@dataclass
class Approve:
    op_id: int


@dataclass
class Disapprove:
    op_id: int
    force: bool = False


@dataclass
class ListPending:
    pass


@dataclass
class SetUser:
    name: str


@dataclass
class RegisterProcedure:
    name: str
    arity: int
    builtin: Optional[str] = None  # binding into the builtin library


Statement = Union[
    CreateTable, Insert, Update, Delete, AnnSelect,
    CreateAnnotationTable, DropAnnotationTable, AddAnnotation,
    ArchiveAnnotation, RestoreAnnotation,
    CreateDependencyRule, DropDependencyRule, Validate,
    StartContentApproval, EndContentApproval, Approve, Disapprove,
    ListPending, SetUser, RegisterProcedure,
]

DML_TYPES = (Insert, Update, Delete)
