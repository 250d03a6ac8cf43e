"""weylcalc: exact graph-indexed calculus for Weyl symbols of functions of
operators, with Moyal star products, quadratic closed forms and a
semiclassical eigenvalue pipeline."""

from .errors import CapacityError, DimensionMismatch, WeylcalcError
from .scalars import GaussianRational
from .poly import PhasePolynomial, parse_symbol
from .series import HbarSeries
from .resolvent import ResolventSymbol
from .tensors import (QuantizationTensor, bracket_k, moyal_tensor,
                      poisson_bracket, standard_order_tensor)
from .graphs import (LabeledGraph, UnlabeledGraph, c_coefficient, c_via_facts,
                     canonicalize, enumerate_reduced)
from .contraction import attach_arrows_expand, contract, contract_graph, \
    reverse_edge_sign_check
from .star import (StarConfig, moyal_product, star_fold, star_n_fold,
                   star_power, star_product, star_standard_order)
from .funcalc import (FunctionJet, JetSeries, MultiJetSeries, pointwise_symbol,
                      resolvent_identity_check, substitute_polynomial,
                      substitute_resolvent, symbol_of_function_connected,
                      symbol_of_function_labeled, symbol_of_function_unlabeled,
                      symbol_of_multifunction)
from .quadratic import (QuadraticForm, quadratic_closed_symbol,
                        time_evolution_cells, zag_numbers)
from .bohr import (ActionSeries, Hamiltonian1D, action_correction,
                   action_series, bs_eigenvalues, period_integral,
                   schrodinger_oracle, universal_polynomial)

__version__ = "0.1.0"
