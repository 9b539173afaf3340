"""sumsetlab: exact computations with sumsets in finite abelian groups."""

from .groups import (Group, Subset, group, normalize, normalize_factors,
                     ord_set,
                     cyclic_subgroup, generated_subgroup,
                     subgroup_count_rank2, all_subgroups,
                     abelian_groups_of_order)
from .counting import (NONNEG, SIGNED, RESTRICTED, RESTRICTED_SIGNED,
                       binom, delannoy_a, delannoy_c, partition_count,
                       layer_size, layer_halfspace_size)
from .sides import (v, v_pm, v_hat, v_hat_pm, u, u_hat, f_d, f_hat_d,
                    delta_d, h_critical, divisors)
from .sumsets import (SumsetSpec, sumset, sumset_mask, sigma, sigma_star,
                      sigma_pm, sigma_pm_star, dilate, norm)
from .search import (SearchResult, QuantityQuery, BudgetExceededError,
                     max_sumset_size, min_sumset_size, min_spanning_size,
                     max_sidon_size, critical_number, max_zero_sum_free,
                     max_sum_free, max_sum_free_upto, enumerate_extremal)

__version__ = "0.1.0"
