"""Condensed border representations of constrained datacubes."""

from .borders import (
    Border,
    borders_from_G,
    borders_from_S,
    compute_borders,
    is_member,
    solution_set,
)
from .constraints import (
    Aggregate,
    Atom,
    Conjunction,
    Monotonicity,
    aggregate,
    classify,
    parse_conjunction,
    relative_aggregate,
    satisfies,
)
from .cubes import (
    INF,
    CubeCell,
    EmergenceEntry,
    datacube,
    datacube_borders,
    differential_borders,
    emergence_rate,
    emergence_report,
    emerging_borders,
    iceberg_borders,
    range_borders,
)
from .errors import (
    AntichainError,
    ArityError,
    BudgetExceeded,
    ConfigurationError,
    CubeError,
    DataError,
    DomainError,
)
from .io import load_relation
from .lattice import (
    ALL,
    BOTTOM,
    Relation,
    Schema,
    Space,
    enumerate_space,
    generalizes,
    join,
    meet,
    tuple_product,
    tuple_sum,
    tupall,
)
from .transversals import (
    MaximalSet,
    ctr,
    ctr_constrained,
    emerging_borders_via_transversals,
    maximal_frequent,
)

__version__ = "0.1.0"
