"""Exact solvers for radius-minimizing completion of incomplete matrices."""

from .binary import solve_binary_high
from .budget_branch import solve_conrmc_dk
from .column_search import solve_conrmc_alg1
from .dispatch import (AlgorithmChoice, CostEstimate, MinLrmcMode, Violation,
                       minimum_local_radius, minimum_radius, solve_conrmc,
                       solve_minlrmc, solve_minrmc, verify_witness)
from .dummy import conrmc_via_nsd, ms_neighboring, nsd_solve, pad_to_nsd
from .model import (DUMMY, WILDCARD, Alphabet, ConRmcInstance, DummyMatrix,
                    IncompleteMatrix, NsdInstance, SearchStats, SolveOutcome,
                    UsageError, dirty_columns, hamming, mismatch_set, normalize,
                    overlay, positions_of)
from .oracle import OracleBudgetExceeded, brute_conrmc, brute_minlrmc
from .twosat import TwoCnf, at_most_one, encode_conrmc_d1, solve_conrmc_d1, solve_two_sat

__version__ = "0.1.0"
