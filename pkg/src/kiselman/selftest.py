"""Executable checks of the algebraic laws of K_n at desk scale (rank <= 3).

Each check is a named predicate over full enumerations or seeded random
samples.  ``run_selftest`` evaluates all of them and returns (name, ok)
pairs; the CLI prints one line per check.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from kiselman import core, enumeration, level_metric, morphisms, stochastic

RANKS = (2, 3)
ORACLE_MAX_LEN = 6


def _all_words(n, max_len):
    yield ()
    for length in range(1, max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=length)


def _subsets(n):
    items = list(range(1, n + 1))
    for k in range(n + 1):
        yield from map(frozenset, itertools.combinations(items, k))


def check_defining_relations():
    for n in RANKS:
        for i in range(1, n + 1):
            if core.reduce(n, (i, i)) != core.generator(n, i):
                return False
            for j in range(1, i):
                ij = core.reduce(n, (i, j))
                if core.reduce(n, (i, j, i)) != ij or core.reduce(n, (j, i, j)) != ij:
                    return False
    return True


def check_reduction_matches_oracle():
    for n in RANKS:
        oracle = enumeration.congruence_oracle(n, ORACLE_MAX_LEN)
        by_class = {}
        for w in _all_words(n, ORACLE_MAX_LEN):
            cls = oracle.class_ids[w]
            canon = core.reduce(n, w).letters
            if by_class.setdefault(cls, canon) != canon:
                return False
        if len(set(by_class.values())) != len(by_class):
            return False
    return True


def check_associativity(samples=300):
    rng = random.Random(7)
    for n in RANKS:
        for _ in range(samples):
            x, y, z = (
                core.reduce(n, [rng.randint(1, n) for _ in range(rng.randint(0, 6))])
                for _ in range(3)
            )
            if (x * y) * z != x * (y * z):
                return False
    return True


def check_idempotent_classification():
    for n in RANKS:
        universe = enumeration.enumerate_elements(n)
        expected = {core.idempotent(n, s) for s in _subsets(n)}
        if len(expected) != 2**n:
            return False
        actual = {x for x in universe if x * x == x}
        if actual != expected:
            return False
    return True


def check_power_collapse(samples=200):
    rng = random.Random(11)
    for n in RANKS:
        for _ in range(samples):
            x = core.reduce(n, [rng.randint(1, n) for _ in range(rng.randint(0, 6))])
            cset = core.content(x)
            for k in range(max(1, len(cset)), len(cset) + 3):
                if core.power(x, k) != core.idempotent(n, cset):
                    return False
    return True


def check_content_homomorphism():
    for n in RANKS:
        universe = enumeration.enumerate_elements(n)
        for x in universe:
            for y in universe:
                if core.content(x * y) != core.content(x) | core.content(y):
                    return False
    return True


def check_tau_antiautomorphism(samples=300):
    rng = random.Random(13)
    for n in RANKS:
        for _ in range(samples):
            x, y = (
                core.reduce(n, [rng.randint(1, n) for _ in range(rng.randint(0, 6))])
                for _ in range(2)
            )
            if core.tau(x * y) != core.tau(y) * core.tau(x):
                return False
            if core.tau(core.tau(x)) != x:
                return False
    return True


def check_matrix_monoid_closure(samples=200):
    rng = random.Random(17)
    for n in RANKS:
        found = 0
        while found < samples:
            m1 = tuple(tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(n))
            m2 = tuple(tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(n))
            if not (morphisms.dn_member(m1) and morphisms.dn_member(m2)):
                continue
            found += 1
            if not morphisms.dn_member(morphisms.dn_product(m1, m2)):
                return False
        ident = morphisms.identity_matrix(n)
        if morphisms.dn_product(ident, m1) != m1:
            return False
    return True


def check_deletion_is_word_filter():
    for n in RANKS:
        for subset in _subsets(n):
            spec = morphisms.deletion_matrix(n, subset)
            for w in _all_words(n, 5):
                x = core.reduce(n, w)
                fast = morphisms.delete(subset, x)
                slow = morphisms.apply_endomorphism(spec, x)
                via_word = core.reduce(n, morphisms.word_delete(subset, w))
                if fast != slow or fast != via_word:
                    return False
    return True


def check_deletion_composition():
    for n in RANKS:
        universe = enumeration.enumerate_elements(n)
        for x in universe:
            for s1 in _subsets(n):
                for s2 in _subsets(n):
                    both = morphisms.delete(s1, morphisms.delete(s2, x))
                    if both != morphisms.delete(s1 | s2, x):
                        return False
                    if both != morphisms.delete(s2, morphisms.delete(s1, x)):
                        return False
    return True


def check_deletion_of_idempotents():
    for n in RANKS:
        for s1 in _subsets(n):
            for s2 in _subsets(n):
                if morphisms.delete(s1, core.idempotent(n, s2)) != core.idempotent(
                    n, s2 - s1
                ):
                    return False
    return True


def check_truncation_chain_step():
    for n in RANKS:
        universe = enumeration.enumerate_elements(n)
        for x in universe:
            for m in range(1, n + 1):
                am = core.generator(n, m)
                lhs = morphisms.delete(range(1, m), x) * am
                rhs = morphisms.delete(range(1, m + 1), x) * am
                if lhs != rhs:
                    return False
    return True


def check_truncation_absorption():
    for n in RANKS:
        universe = enumeration.enumerate_elements(n)
        for x in universe:
            for i in range(n + 1):
                ei = core.idempotent(n, range(1, i + 1))
                for j in range(i + 1):
                    if x * ei != morphisms.delete(range(1, j + 1), x) * ei:
                        return False
    return True


def check_level_agreement():
    for n in RANKS:
        for x in enumeration.enumerate_elements(n):
            by_def = level_metric.level_by_definition(x)
            by_rec = level_metric.level_by_recursion(n, x.letters)
            by_m = level_metric.m_function(x)
            if not by_def == by_rec == by_m:
                return False
    return True


def check_level_recursion_on_any_word():
    for n in RANKS:
        for w in _all_words(n, 6):
            if level_metric.level_by_recursion(n, w) != level_metric.level_by_definition(
                core.reduce(n, w)
            ):
                return False
    return True


def check_right_multiplication_law():
    for n in RANKS:
        for x in enumeration.enumerate_elements(n):
            lvl = level_metric.level_by_definition(x)
            for i in range(1, n + 1):
                got = level_metric.level_by_definition(x * core.generator(n, i))
                want = lvl - 1 if i == lvl else lvl
                if got != want:
                    return False
    return True


def check_left_multiplication_law():
    for n in RANKS:
        for x in enumeration.enumerate_elements(n):
            lvl = level_metric.level_by_definition(x)
            for i in range(1, n):
                if level_metric.level_by_definition(core.generator(n, i) * x) != lvl:
                    return False
        # multiplying by smaller-index elements on the left preserves level
        small = [
            y
            for y in enumeration.enumerate_elements(n)
            if core.content(y) <= frozenset(range(1, n))
        ]
        for y in small:
            for x in enumeration.enumerate_elements(n):
                if level_metric.level_by_definition(
                    y * x
                ) != level_metric.level_by_definition(x):
                    return False
    return True


def check_top_generator_counterexample():
    # left multiplication by a_n can strictly drop the level: for each j < n,
    # a_n * e_{[n-1] minus [j]} has level j
    for n in RANKS:
        an = core.generator(n, n)
        for j in range(n):
            x = core.idempotent(n, set(range(j + 1, n)))
            if level_metric.level_by_definition(an * x) != j:
                return False
    return True


def check_level_submultiplicative(samples=300):
    rng = random.Random(19)
    for n in RANKS:
        for _ in range(samples):
            x, y = (
                core.reduce(n, [rng.randint(1, n) for _ in range(rng.randint(0, 6))])
                for _ in range(2)
            )
            lx = level_metric.level_by_definition(x)
            ly = level_metric.level_by_definition(y)
            if level_metric.level_by_definition(x * y) > min(lx, ly):
                return False
    return True


def check_level_extremes():
    for n in RANKS:
        for x in enumeration.enumerate_elements(n):
            lvl = level_metric.level_by_definition(x)
            if (lvl == 0) != (x == core.zero(n)):
                return False
            if (lvl == n) != (core.content(x) <= frozenset(range(1, n))):
                return False
    return True


def check_zero_propagation():
    for n in RANKS:
        f = core.zero(n)
        for x in enumeration.enumerate_elements(n):
            for k in range(2, n + 1):
                if x * core.generator(n, k) == f and x != f:
                    return False
            for r in range(1, n):
                if core.generator(n, r) * x == f and x != f:
                    return False
    return True


def check_witness_sets_equal():
    for n in RANKS:
        for x in enumeration.enumerate_elements(n):
            a_set, b_set = level_metric.level_sets(x)
            if a_set != b_set:
                return False
            lvl = level_metric.level_by_definition(x)
            if a_set != frozenset(range(lvl, n + 1)):
                return False
    return True


def check_ultrametric_axioms():
    for n in RANKS:
        universe = list(enumeration.enumerate_elements(n))
        for x in universe:
            for y in universe:
                d = level_metric.distance(x, y)
                if (d == 0) != (x == y) or d != level_metric.distance(y, x):
                    return False
        rng = random.Random(23)
        for _ in range(2000):
            x, y, z = (rng.choice(universe) for _ in range(3))
            if level_metric.distance(x, y) > max(
                level_metric.distance(x, z), level_metric.distance(z, y)
            ):
                return False
    return True


def check_distance_to_zero_is_level():
    for n in RANKS:
        f = core.zero(n)
        for x in enumeration.enumerate_elements(n):
            if level_metric.distance(x, f) != level_metric.level_by_definition(x):
                return False
    return True


def check_ball_and_sphere_sizes():
    sizes = dict(enumeration.cardinality_table(max_rank=max(RANKS)))
    sizes[1] = 2  # e and the single generator
    for n in RANKS:
        universe = enumeration.enumerate_elements(n)
        f = core.zero(n)
        b1 = level_metric.ball(universe, f, 1)
        rset = level_metric.r_set(universe)
        if b1 != rset or len(rset) != 1 + sizes[n - 1]:
            return False
        sn = level_metric.sphere(universe, f, n)
        expected = [x for x in universe if core.content(x) <= frozenset(range(1, n))]
        if sn != expected or len(sn) != sizes[n - 1]:
            return False
    return True


def check_r_set_structure():
    # R = {e_{{2..n}}} union {x a_1 e_{{2..m(x)}} : x generated by a_2..a_n}
    for n in RANKS:
        universe = enumeration.enumerate_elements(n)
        rset = set(level_metric.r_set(universe))
        a1 = core.generator(n, 1)
        sub = [x for x in universe if 1 not in core.content(x)]
        built = {core.idempotent(n, range(2, n + 1))}
        for x in sub:
            m = level_metric.m_function(x)
            built.add(x * a1 * core.idempotent(n, range(2, m + 1)))
        if built != rset:
            return False
    return True


def check_partial_product_stabilization():
    for n in RANKS:
        full_cycle = tuple(range(1, n + 1))
        trace = stochastic.partial_products(stochastic.SequenceSpec(n, cycle=full_cycle))
        if not trace.stabilized or trace.value != core.zero(n):
            return False
        for cycle_len in range(1, n + 1):
            for cycle in itertools.product(range(1, n + 1), repeat=cycle_len):
                spec = stochastic.SequenceSpec(n, cycle=cycle)
                trace = stochastic.partial_products(spec)
                if not trace.stabilized:
                    return False
                if trace.value != stochastic.eventual_value(spec):
                    return False
                if trace.value != core.idempotent(n, set(cycle)):
                    return False
    return True


def check_chain_vs_convolution():
    rng = np.random.default_rng(29)
    for n in (2, 3, 4, 5):
        for _ in range(10):
            p = rng.dirichlet(np.ones(n)) * 0.98 + 0.02 / n
            p = p / p.sum()
            pmf = stochastic.exact_hitting_pmf(p, k_max=80)
            chain_cdf = stochastic.chain_hitting_cdf(p, 80)
            if np.abs(pmf.cdf() - chain_cdf).max() > 1e-12:
                return False
    return True


def check_pmf_mean():
    rng = np.random.default_rng(31)
    for n in (2, 3, 4):
        for _ in range(10):
            p = rng.dirichlet(np.ones(n)) * 0.98 + 0.02 / n
            p = p / p.sum()
            pmf = stochastic.exact_hitting_pmf(p)
            if abs(pmf.mean() - float((1.0 / p).sum())) > 1e-9:
                return False
    return True


def check_simulation_consistency():
    p = (1 / 3, 1 / 3, 1 / 3)
    rep1 = stochastic.simulate(3, p, trials=2000, seed=12345, mode="full")
    rep2 = stochastic.simulate(3, p, trials=2000, seed=12345, mode="full")
    if rep1.to_json() != rep2.to_json():
        return False
    if rep1.crosscheck_failures != 0:
        return False
    if min(rep1.histogram) < 3:
        return False
    pmf = stochastic.exact_hitting_pmf(p)
    verdict = stochastic.verify_distribution(rep1, pmf, tv_bound=0.05)
    return verdict.passed


CHECKS = [
    ("defining relations hold after reduction", check_defining_relations),
    ("reduction equality matches the congruence oracle", check_reduction_matches_oracle),
    ("multiplication is associative", check_associativity),
    ("idempotents are exactly the decreasing products e_X", check_idempotent_classification),
    ("high powers collapse to the content idempotent", check_power_collapse),
    ("content is a union homomorphism", check_content_homomorphism),
    ("tau is an involutive antiautomorphism", check_tau_antiautomorphism),
    ("pattern-avoiding Boolean matrices form a monoid", check_matrix_monoid_closure),
    ("deletion agrees with word filtering and matrix action", check_deletion_is_word_filter),
    ("deletions compose by union and commute", check_deletion_composition),
    ("deleting from an idempotent removes indices", check_deletion_of_idempotents),
    ("one-step truncation identity under right a_m", check_truncation_chain_step),
    ("truncated element absorbs into e_[i]", check_truncation_absorption),
    ("three level computations agree", check_level_agreement),
    ("level recursion is representative-independent", check_level_recursion_on_any_word),
    ("right multiplication law for the level", check_right_multiplication_law),
    ("left multiplication below n preserves level", check_left_multiplication_law),
    ("left multiplication by a_n can drop the level", check_top_generator_counterexample),
    ("level of a product is at most both levels", check_level_submultiplicative),
    ("level extremes characterize zero and low content", check_level_extremes),
    ("only the zero maps to zero under these products", check_zero_propagation),
    ("deletion and absorption witness sets coincide", check_witness_sets_equal),
    ("distance is an ultrametric", check_ultrametric_axioms),
    ("distance to the zero equals the level", check_distance_to_zero_is_level),
    ("ball and sphere sizes around the zero", check_ball_and_sphere_sizes),
    ("structure of the radius-one ball", check_r_set_structure),
    ("partial products stabilize to the content idempotent", check_partial_product_stabilization),
    ("chain powers agree with geometric convolution", check_chain_vs_convolution),
    ("pmf mean equals the sum of reciprocal probabilities", check_pmf_mean),
    ("seeded simulation is reproducible and self-consistent", check_simulation_consistency),
]


def run_selftest():
    """Run every check; returns a list of (name, passed) pairs."""
    results = []
    for name, fn in CHECKS:
        results.append((name, bool(fn())))
    return results
