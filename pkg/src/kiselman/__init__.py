"""Exact computation and simulation toolkit for the monoids K_n."""

from kiselman._kernel import KERNEL_BACKEND
from kiselman.core import (
    Element,
    MalformedWordError,
    RankMismatchError,
    content,
    format_word,
    generator,
    idempotent,
    multiply,
    parse_word,
    power,
    reduce,
    tau,
    unit,
    zero,
)
from kiselman.enumeration import (
    CongruencePartition,
    ElementList,
    cardinality_table,
    congruence_oracle,
    enumerate_elements,
)
from kiselman.level_metric import (
    ball,
    distance,
    g,
    level,
    level_by_definition,
    level_by_recursion,
    level_sets,
    m_function,
    r_set,
    sphere,
)
from kiselman.morphisms import (
    EndomorphismSpec,
    InvalidEndomorphismError,
    apply_endomorphism,
    delete,
    deletion_matrix,
    dn_member,
    dn_product,
    identity_matrix,
    word_delete,
)
from kiselman.stochastic import (
    HittingTimePMF,
    SequenceSpec,
    SimulationReport,
    chain_hitting_cdf,
    eventual_value,
    exact_hitting_pmf,
    partial_products,
    simulate,
    transition_matrix,
    verify_distribution,
)

__version__ = "0.1.0"
