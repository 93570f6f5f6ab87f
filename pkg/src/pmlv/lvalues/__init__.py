"""Partial multiple L-values: oracles, generating functions, closed forms and checks."""
from .checks import DecompositionReport, IdentityCheck, gamma_product_check, gamma_product_gap, lemma_decomposition_check
from .closed import (
    PRINTED_EXAMPLES,
    PRINTED_S3_3,
    S1,
    Z_n_k,
    bernoulli_S_k_even,
    closed_S_k,
    closed_S_k_n,
    closed_S_k_n1,
    double_zeta_remark,
)
from .genfun import coefficient, genfun_P, genfun_P2, genfun_S1, genfun_U, zeta_exponential
from .oracle import (
    OracleResult,
    S_lambda_oracle,
    S_ones_oracle,
    U_d_oracle,
    U_d_symmetric,
    finite_partial_S2,
    oracle_eval,
    strict_sum_oracle,
)
from .spec import LValueSpec, epsilon, epsilon_chain, nu, nu_tilde
