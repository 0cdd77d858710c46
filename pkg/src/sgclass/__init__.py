"""Closedness classification of commutative semigroups.

Finite Cayley-table algebra (idempotents, H-classes, the idempotent-power
map, chains, quotients, power semigroups), symbolic descriptors of infinite
commutative semigroups, closedness verdicts, and an exhaustive small-order
enumeration harness.
"""

from .classify import (ClosednessVerdict, classify, classify_group,
                       classify_semilattice, explain)
from .core import (CayleyTable, MalformedTableError, MonogenicData,
                   PreconditionError, ValidationReport, adjoin_identity,
                   adjoin_zero, antichain_zero_table, center, chain_table,
                   clifford_part, cyclic_table, group_exponent, h_class,
                   idempotents, max_chain_length, monogenic_data, natural_le,
                   null_table, pi_map, product_table, relabel, restrict,
                   root_inf, taimanov_table, validate, z_sets)
from .descriptors import (OMEGA, AdjoinIdentity, AdjoinZero, Descriptor,
                          Factor, FinitePoset, FiniteTable, Group, GroupSpec,
                          Null, OmegaAntichainZero, OmegaChain,
                          PredicateProfile, Product, Semilattice, Taimanov,
                          cardinality, describe, evaluate, truncate)
from .harness import (SuiteReport, enumerate_commutative,
                      enumerate_commutative_naive, iso_class_count,
                      kernel_backend, lemma_suite, singleton_square_scan)
from .power import PowerSemigroup, basic_open, power_semigroup, subset_product
from .quotients import (Congruence, congruence_closure, congruences,
                        generated_ideal, is_congruence, is_ideal,
                        lift_idempotent, quotient_by_congruence,
                        rees_congruence, rees_quotient)

__version__ = "0.1.0"
