"""Exact blocker sizes for cross-intersecting pairs in [n]^r and C([n], r)."""

from .errors import BlockadeError, BudgetExceeded, ConsistencyError, MonotonicityError, ParameterError
from .hyper import GroundSpace, Hypergraph, blocker
from .seqcore import blocker_max_partite, n_table
from .setfam import blocker_max_subsets, m_table
from .words import ALPHA, AND, OMEGA, OR, Word, parse_word, word

__version__ = "0.1.0"
