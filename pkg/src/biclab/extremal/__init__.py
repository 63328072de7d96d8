"""Exact search: alpha, beta, tau, tau', gamma_max."""

from .budget import BudgetExceeded
from .cliques import alpha, beta
from .sparse import gamma_max, list_induced_c4, structural_condition
from .tau import exact_tau, exact_tau_prime, lemma34_min

__all__ = ["BudgetExceeded", "alpha", "beta", "gamma_max", "list_induced_c4", "structural_condition",
           "exact_tau", "exact_tau_prime", "lemma34_min"]
