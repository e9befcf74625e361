"""qbailey: exact q-series engine for Rogers-Ramanujan type identities.

Everything is computed in exact arithmetic: coefficients live in the
cyclotomic field Q(zeta_12) (which contains i and the cube root omega),
series are truncated generalized power series with rational exponents, and
every verification is an exact coefficient comparison up to a stated order.
"""

from .cyclo import Cyclo, I, OMEGA, ONE, ZERO, as_cyclo, parse_unit
from .errors import (NonTerminatingError, QBaileyError, RegistryError,
                     TruncationError, ZeroDivisorError)
from .qseries import QSeries, Verdict
from .qproducts import (INFINITE, PochFactor, ProductSpec, ZERO_DIVISOR,
                        jtp_theta_oracle, poch, poch_eval, poch_inf,
                        product_spec_eval, qpoch)
from .hypergeom import (DEFAULT_ASSIGNMENTS, INFINITY, Monomial, PhiSpec,
                        WSpec, mono, parse_monomial, phi_eval, qpow,
                        transformation_sides, verify_transformation,
                        vwp_order, w_eval)
from .bailey import (LemmaSpec, PairSpec, STANDARD_A_SPECS, alpha_mp,
                     alpha_mp_b_infinity, bailey_transform_check,
                     beta_defining, beta_formula, beta_from_alpha,
                     lemma_identity_sides, lemma_sides, pair_ids,
                     pair_triple, verify_pair)
from .registry import (IdentitySpec, LinearForm, QuadForm, TermSpec,
                       eval_lhs, eval_rhs, load_registry, sum_lhs,
                       triple_product_blocks, verify_all, verify_identity)
from .recognizer import (euler_exponents_of_product, periodicity_fit,
                         product_exponents)

__version__ = "0.1.0"
