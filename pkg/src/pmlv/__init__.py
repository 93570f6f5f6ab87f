"""pmlv: exact and numeric partial multiple L-values S_k^{(N,M)}(n_1, ..., n_k)."""
from .cyclotomic import CyclotomicNumber, monomial_at_roots, root_of_unity
from .errors import CancellationError, CapacityError, ConsistencyError, DivergentSeriesError
from .partitions import Partition, partitions
from .rational import BernoulliTable, Rational, bernoulli, binomial, factorial
from .series import TruncatedSeries, log_gamma_at, series_exp, series_log
from .symbolic import SymbolicValue, ZetaGenerator, assert_gamma_free, normalize_even_zetas, numeric_eval

__version__ = "0.1.0"
