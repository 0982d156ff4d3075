"""
Verification suites binding the engine to the identities it implements.

Every statement is checked per size so that reports stay small and a
failure names the first failing case in canonical enumeration order.
"""

import logging
import random
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Dict, Iterator, List, Tuple

from sympy.polys.fields import FracElement

from jacklab.algebra.characters import (
    a_top_ch,
    c_from_g,
    ch,
    check_degree_bounds,
    predicted_top_beta_coefficient,
    structure_constants,
    top_coefficient,
    top_degree_allowed,
)
from jacklab.algebra.coeffs import (
    check_leading_factorization,
    connection_c,
    connection_c_alpha,
    connection_h,
    h_as_beta,
    leading_factorization_sides,
)
from jacklab.algebra.jack import inner_product, jack, theta, theta_matrix, to_monomial_basis
from jacklab.algebra.partitions import (
    Partition,
    all_partitions,
    concat,
    degree_d,
    dominance_leq,
    subpartition_leq,
    z,
)
from jacklab.algebra.scalars import (
    BETA_RING,
    DELTA_A,
    DELTA_RING,
    GAMMA_A,
    alpha_at_one,
    alpha_to_beta,
    beta_to_alpha,
    delta_to_laurent,
    format_fraction,
    has_nonnegative_integer_coefficients,
    laurent_terms,
    laurent_to_delta,
    poly_coefficient,
    poly_coefficients,
    poly_degree,
    poly_from_coefficients,
)
from jacklab.combinatorics.embeddings import count_embeddings, graph_of_partition, hat_p
from jacklab.combinatorics.handshake import count_P, decompose
from jacklab.combinatorics.maps import (
    BLACK,
    CanonicalCode,
    FlagMap,
    component_labellings,
    count_oriented_lists_anyface,
    count_rooted_lists,
    distinct_oriented_lists,
    distinct_rooted_lists,
    glue,
    read_matching,
)
from jacklab.combinatorics.matchings import (
    class_G,
    class_histogram,
    component_type,
    cycle_type,
    double_factorial,
    enumerate_matchings,
    reference_matchings,
)
from jacklab.combinatorics.nonorientability import (
    EdgeClass,
    EtaPolicy,
    classify_root_edge,
    delete_root_edge,
    eta_map,
    poly_G_eta,
    poly_H_eta,
    rooted_list_census,
    stat_eta,
    twist,
    unhandled_matchings,
)
from jacklab.core.config import settings
from jacklab.models.schemas import matching_json, partition_json, poly_json
from jacklab.verify.base import BaseSuite, Check, Counterexample, first_failure

logger = logging.getLogger(__name__)

# Double enumeration through canonical codes is only run up to this size.
CANONICAL_ORACLE_N_MAX = 4

Triple = Tuple[Partition, Partition, Partition]


def _triples(n: int) -> Iterator[Triple]:
    partitions = all_partitions(n)
    for pi in partitions:
        for sigma in partitions:
            for lam in partitions:
                yield pi, sigma, lam


def _pairs_of_total(total: int) -> Iterator[Tuple[Partition, Partition]]:
    """Unordered pairs of nonempty partitions with |π| + |σ| = total, π <= σ."""
    for k in range(1, total // 2 + 1):
        for pi in all_partitions(k):
            for sigma in all_partitions(total - k):
                if k < total - k or pi <= sigma:
                    yield pi, sigma


def _case(**partitions: Partition) -> Dict[str, Any]:
    return {name: partition_json(p) for name, p in partitions.items()}


def _top_beta(c, d: int) -> Fraction:
    return poly_coefficient(c, d) if d >= 0 else Fraction(0)


def _beta_degree(c) -> int:
    degree = poly_degree(c)
    return -1 if degree is None else degree


# ============================================================================
# Jack axioms
# ============================================================================

class JackAxiomsSuite(BaseSuite):
    name = "jack-axioms"
    description = "Triangularity, normalization and orthogonality of J_λ; θ-matrix invertibility; ring conversions"
    statements = (
        "jack.triangularity",
        "jack.normalization",
        "jack.orthogonality",
        "jack.theta-invertible",
        "jack.schur-point",
        "scalars.roundtrip",
    )

    def default_n(self) -> int:
        return settings.JACKLAB_G_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        for n in range(1, n_max + 1):
            params = {"n": n}
            checks.extend([
                Check("jack.triangularity", params, lambda n=n: self._triangularity(n)),
                Check("jack.normalization", params, lambda n=n: self._normalization(n)),
                Check("jack.orthogonality", params, lambda n=n: self._orthogonality(n)),
                Check("jack.theta-invertible", params, lambda n=n: self._invertible(n)),
                Check("jack.schur-point", params, lambda n=n: self._schur_point(n)),
            ])
        # Draw the samples now so threads never touch the generator.
        samples = [[rng.randint(-5, 5) for _ in range(rng.randint(1, 13))] for _ in range(20)]
        checks.append(
            Check("scalars.roundtrip", {"samples": len(samples)}, lambda: self._roundtrip(samples))
        )
        return checks

    @staticmethod
    def _triangularity(n: int) -> Counterexample:
        def observe(lam):
            expansion = to_monomial_basis(jack(lam))
            outside = [mu for mu, _ in expansion.items() if not dominance_leq(mu, lam)]
            leading = bool(expansion.coefficient(lam))
            return not outside and leading, {"outside": [partition_json(m) for m in outside]}

        return first_failure((_case(lam=lam), lambda lam=lam: observe(lam)) for lam in all_partitions(n))

    @staticmethod
    def _normalization(n: int) -> Counterexample:
        unit = Partition((1,) * n)

        def observe(lam):
            value = to_monomial_basis(jack(lam)).coefficient(unit)
            return value == factorial(n), {"coefficient": str(value.as_expr())}

        return first_failure((_case(lam=lam), lambda lam=lam: observe(lam)) for lam in all_partitions(n))

    @staticmethod
    def _orthogonality(n: int) -> Counterexample:
        partitions = all_partitions(n)
        cases = (
            (_case(lam=lam, mu=mu), lambda lam=lam, mu=mu: (not inner_product(jack(lam), jack(mu)), {}))
            for i, lam in enumerate(partitions)
            for mu in partitions[i + 1:]
        )
        return first_failure(cases)

    @staticmethod
    def _invertible(n: int) -> Counterexample:
        if theta_matrix(n).det():
            return None
        return {"n": n, "determinant": "0"}

    @staticmethod
    def _schur_point(n: int) -> Counterexample:
        # z_μ θ_μ(λ) at α = 1 is a hook product times an irreducible character.
        def observe(mu, lam):
            value = alpha_at_one(theta(mu, lam)) * z(mu)
            return value.denominator == 1, {"value": format_fraction(value)}

        return first_failure(
            (_case(mu=mu, lam=lam), lambda mu=mu, lam=lam: observe(mu, lam))
            for mu in all_partitions(n)
            for lam in all_partitions(n)
        )

    @staticmethod
    def _roundtrip(samples: List[List[int]]) -> Counterexample:
        if DELTA_A + GAMMA_A:
            return {"identity": "delta + gamma = 0"}
        for coefficients in samples:
            p = poly_from_coefficients(DELTA_RING, coefficients)
            if laurent_to_delta(delta_to_laurent(p)) != p:
                return {"delta": poly_json(p)}
            q = poly_from_coefficients(BETA_RING, coefficients)
            if alpha_to_beta(beta_to_alpha(q)) != q:
                return {"beta": poly_json(q)}
        return None


# ============================================================================
# Specializations of c
# ============================================================================

class SpecializationsSuite(BaseSuite):
    name = "specializations"
    description = "c at β = 0 and β = 1 against matching counts; symmetry; Cauchy oracle; integrality at α = 1"
    statements = (
        "c.beta-zero",
        "c.beta-one",
        "c.symmetry",
        "c.cauchy-oracle",
        "c.nonnegative-integer",
        "ch.integral-at-one",
        "matchings.class-partition",
    )

    def default_n(self) -> int:
        return settings.JACKLAB_MATCHING_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        for n in range(1, n_max + 1):
            params = {"n": n}
            checks.extend([
                Check("c.beta-zero", params, lambda n=n: self._specialization(n, bipartite=True)),
                Check("c.beta-one", params, lambda n=n: self._specialization(n, bipartite=False)),
                Check("c.symmetry", params, lambda n=n: self._symmetry(n)),
                Check("c.cauchy-oracle", params, lambda n=n: self._oracle(n)),
                Check("c.nonnegative-integer", params, lambda n=n: self._nonnegative(n), conjectural=True),
                Check("ch.integral-at-one", params, lambda n=n: self._integral_at_one(n)),
                Check("matchings.class-partition", params, lambda n=n: self._class_partition(n)),
            ])
        return checks

    @staticmethod
    def _specialization(n: int, bipartite: bool) -> Counterexample:
        table = connection_c(n)

        def observe(pi, sigma, lam):
            counts = [
                (count.bipartite if bipartite else count.total)
                for (p, s, _), count in class_histogram(lam).items()
                if p == pi and s == sigma
            ]
            expected = sum(counts)
            coefficients = poly_coefficients(table.get(pi, sigma, lam))
            value = (coefficients[0] if coefficients else Fraction(0)) if bipartite else sum(coefficients, Fraction(0))
            return value == expected, {"c": format_fraction(value), "matchings": expected}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam): observe(*t))
            for pi, sigma, lam in _triples(n)
        )

    @staticmethod
    def _symmetry(n: int) -> Counterexample:
        table = connection_c(n)
        return None if table.is_symmetric() else {"n": n}

    @staticmethod
    def _oracle(n: int) -> Counterexample:
        # The linear solve raises on any disagreement with the Cauchy sum.
        connection_c_alpha(n)
        return None

    @staticmethod
    def _nonnegative(n: int) -> Counterexample:
        for (pi, sigma, lam), c in connection_c(n).items():
            if not has_nonnegative_integer_coefficients(c):
                return {**_case(pi=pi, sigma=sigma, lam=lam), "c": poly_json(c)}
        return None

    @staticmethod
    def _integral_at_one(n: int) -> Counterexample:
        def observe(pi, lam):
            value = sum(laurent_terms(ch(pi, lam)).values(), Fraction(0))
            return value.denominator == 1, {"value": format_fraction(value)}

        return first_failure(
            (_case(pi=pi, lam=lam), lambda pi=pi, lam=lam: observe(pi, lam))
            for k in range(1, n + 1)
            for pi in all_partitions(k)
            for lam in all_partitions(n)
        )

    @staticmethod
    def _class_partition(n: int) -> Counterexample:
        def observe(lam):
            histogram = class_histogram(lam)
            total = sum(count.total for count in histogram.values())
            coarser = all(subpartition_leq(lam, mu) for _, _, mu in histogram)
            return total == double_factorial(2 * n - 1) and coarser, {"total": total}

        return first_failure((_case(lam=lam), lambda lam=lam: observe(lam)) for lam in all_partitions(n))


# ============================================================================
# Degree bounds
# ============================================================================

class DegreeBoundsSuite(BaseSuite):
    name = "degree-bounds"
    description = "δ-degree bounds of g and the β-degree bound d(π,σ;λ) of c"
    statements = ("g.degree-bound", "c.degree-bound")

    def default_n(self) -> int:
        return settings.JACKLAB_G_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        for n in range(1, n_max + 1):
            checks.append(Check("g.degree-bound", {"total": n}, lambda n=n: self._g_bound(n)))
            checks.append(Check("c.degree-bound", {"n": n}, lambda n=n: self._c_bound(n)))
        return checks

    @staticmethod
    def _g_bound(total: int) -> Counterexample:
        for pi, sigma in _pairs_of_total(total):
            # Raises DegreeBoundError, reported with the parameters.
            check_degree_bounds(structure_constants(pi, sigma))
        return None

    @staticmethod
    def _c_bound(n: int) -> Counterexample:
        table = connection_c(n)
        return first_failure(
            (
                _case(pi=pi, sigma=sigma, lam=lam),
                lambda t=(pi, sigma, lam): (
                    _beta_degree(table.get(*t)) <= degree_d(*t),
                    {"degree": _beta_degree(table.get(*t)), "bound": degree_d(*t)},
                ),
            )
            for pi, sigma, lam in _triples(n)
        )


# ============================================================================
# Leading coefficient of c
# ============================================================================

class MainTheoremSuite(BaseSuite):
    name = "main-theorem"
    description = "Degree attainment and the two combinatorial forms of the leading coefficient of c"
    statements = (
        "c.top-degree",
        "c.top-unhandled",
        "c.top-oriented-lists",
        "c.connection-formula",
        "c.top-from-g",
        "eta.poly-extremes",
        "eta.zero-iff-bipartite",
    )

    def default_n(self) -> int:
        return settings.JACKLAB_MATCHING_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        for n in range(1, n_max + 1):
            params = {"n": n}
            checks.extend([
                Check("c.top-degree", params, lambda n=n: self._top_degree(n)),
                Check("c.top-unhandled", params, lambda n=n: self._top_unhandled(n)),
                Check("c.top-oriented-lists", params, lambda n=n: self._top_oriented(n)),
                Check("c.connection-formula", params, lambda n=n: self._connection(n)),
                Check("c.top-from-g", params, lambda n=n: self._top_from_g(n)),
                Check("eta.poly-extremes", params, lambda n=n: self._poly_extremes(n)),
                Check("eta.zero-iff-bipartite", params, lambda n=n: self._zero_iff_bipartite(n)),
            ])
        return checks

    @staticmethod
    def _top_degree(n: int) -> Counterexample:
        table = connection_c(n)

        def observe(pi, sigma, lam):
            attained = _beta_degree(table.get(pi, sigma, lam)) == degree_d(pi, sigma, lam)
            expected = subpartition_leq(pi, lam) and subpartition_leq(sigma, lam)
            return attained == expected, {"attained": attained, "subpartitions": expected}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam): observe(*t))
            for pi, sigma, lam in _triples(n)
        )

    @staticmethod
    def _top_unhandled(n: int) -> Counterexample:
        table = connection_c(n)

        def observe(pi, sigma, lam):
            top = _top_beta(table.get(pi, sigma, lam), degree_d(pi, sigma, lam))
            if (pi, sigma, lam) in class_histogram(lam):
                unhandled = len(unhandled_matchings(pi, sigma, lam))
            else:
                unhandled = 0
            return top == unhandled, {"top": format_fraction(top), "unhandled": unhandled}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam): observe(*t))
            for pi, sigma, lam in _triples(n)
        )

    @staticmethod
    def _top_oriented(n: int) -> Counterexample:
        table = connection_c(n)

        def observe(pi, sigma, lam):
            top = _top_beta(table.get(pi, sigma, lam), degree_d(pi, sigma, lam))
            lists = count_oriented_lists_anyface(pi, sigma, lam)
            return top == lists, {"top": format_fraction(top), "oriented_lists": lists}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam): observe(*t))
            for pi, sigma, lam in _triples(n)
        )

    @staticmethod
    def _connection(n: int) -> Counterexample:
        table = connection_c(n)

        def observe(pi, sigma, lam):
            via_g = c_from_g(pi, sigma, lam)
            return via_g == table.get(pi, sigma, lam), {"from_g": poly_json(via_g)}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam): observe(*t))
            for pi, sigma, lam in _triples(n)
        )

    @staticmethod
    def _top_from_g(n: int) -> Counterexample:
        table = connection_c(n)

        def observe(pi, sigma, lam):
            predicted = predicted_top_beta_coefficient(pi, sigma, lam)
            if predicted is None:
                return True, {}
            top = _top_beta(table.get(pi, sigma, lam), degree_d(pi, sigma, lam))
            return top == predicted, {"top": format_fraction(top), "predicted": format_fraction(predicted)}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam): observe(*t))
            for pi, sigma, lam in _triples(n)
        )

    @staticmethod
    def _poly_extremes(n: int) -> Counterexample:
        table = connection_c(n)

        def observe(pi, sigma, lam, policy):
            count = class_histogram(lam).get((pi, sigma, lam))
            if count is None:
                return True, {}
            d = degree_d(pi, sigma, lam)
            poly = poly_G_eta(pi, sigma, lam, policy)
            ground = poly_coefficient(poly, 0)
            top = _top_beta(poly, d)
            unhandled = len(unhandled_matchings(pi, sigma, lam))
            c_top = _top_beta(table.get(pi, sigma, lam), d)
            holds = (
                _beta_degree(poly) <= d
                and ground == count.bipartite
                and top == unhandled
                and top == c_top
            )
            return holds, {"policy": policy.value, "poly": poly_json(poly), "c_top": format_fraction(c_top)}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam), p=policy: observe(*t, p))
            for pi, sigma, lam in _triples(n)
            for policy in EtaPolicy
        )

    @staticmethod
    def _zero_iff_bipartite(n: int) -> Counterexample:
        def observe(lam, delta, policy):
            value = stat_eta(lam, delta, policy)
            return (value == 0) == delta.is_bipartite(), {"policy": policy.value, "eta": value}

        return first_failure(
            (
                {**_case(pi=pi, sigma=sigma, lam=lam), "matching": matching_json(delta)},
                lambda lam=lam, delta=delta, p=policy: observe(lam, delta, p),
            )
            for lam in all_partitions(n)
            for (pi, sigma, mu) in sorted(class_histogram(lam))
            if mu == lam
            for delta in class_G(pi, sigma, lam, lam)
            for policy in EtaPolicy
        )


# ============================================================================
# Top coefficients of g and the hands-shaking procedure
# ============================================================================

# Ch_3 Ch_2 and Ch_3 Ch_3 expanded in the Ch basis, ascending δ-coefficients.
GOLDEN_STRUCTURE_CONSTANTS: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Dict[Tuple[int, ...], List[int]]] = {
    ((3,), (2,)): {
        (3,): [0, 6],
        (3, 2): [1],
        (2, 1): [6],
        (4,): [6],
    },
    ((3,), (3,)): {
        (3,): [3, 0, 6],
        (2, 1): [0, 9],
        (4,): [0, 18],
        (1, 1, 1): [3],
        (3, 1): [9],
        (2, 2): [9],
        (5,): [9],
        (3, 3): [1],
    },
}


class GTopSuite(BaseSuite):
    name = "g-top"
    description = "Top δ-coefficients of g against the hands-shaking count and its decomposition"
    statements = (
        "g.golden-tables",
        "g.worked-example",
        "g.top-equals-count-P",
        "handshake.nonempty",
        "handshake.decomposition",
        "g.nonnegative-integer",
    )

    def default_n(self) -> int:
        return settings.JACKLAB_G_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = [
            Check("g.golden-tables", {"tables": len(GOLDEN_STRUCTURE_CONSTANTS)}, self._golden),
            Check("g.worked-example", {"pi": [3, 2], "sigma": [3, 3], "mu": [3, 3]}, self._worked_example),
        ]
        for total in range(2, n_max + 1):
            params = {"total": total}
            checks.extend([
                Check("g.top-equals-count-P", params, lambda t=total: self._top_equals_count(t)),
                Check("handshake.nonempty", params, lambda t=total: self._nonempty(t)),
                Check("handshake.decomposition", params, lambda t=total: self._decomposition(t)),
                Check("g.nonnegative-integer", params, lambda t=total: self._nonnegative(t), conjectural=True),
            ])
        return checks

    @staticmethod
    def _targets(total: int) -> Iterator[Tuple[Partition, Partition, Partition]]:
        for pi, sigma in _pairs_of_total(total):
            for size in range(1, total + 1):
                for mu in all_partitions(size):
                    yield pi, sigma, mu

    @staticmethod
    def _golden() -> Counterexample:
        for (pi_parts, sigma_parts), expected in GOLDEN_STRUCTURE_CONSTANTS.items():
            pi, sigma = Partition(pi_parts), Partition(sigma_parts)
            table = structure_constants(pi, sigma)
            wanted = {Partition(mu): poly_from_coefficients(DELTA_RING, cs) for mu, cs in expected.items()}
            if dict(table.items()) != wanted:
                return {
                    **_case(pi=pi, sigma=sigma),
                    "table": {str(mu): poly_json(g) for mu, g in table.items()},
                }
        return None

    @staticmethod
    def _worked_example() -> Counterexample:
        pi, sigma, mu = Partition((3, 2)), Partition((3, 3)), Partition((3, 3))
        top = top_coefficient(pi, sigma, mu)
        split = decompose(pi, sigma, mu)
        holds = (
            top == 72
            and split.count == 72
            and split.constant == 1
            and split.z_ratio == 6
            and split.oriented_lists == 12
        )
        if holds:
            return None
        return {
            **_case(pi=pi, sigma=sigma, mu=mu),
            "top": format_fraction(top),
            "count_P": split.count,
            "constant": split.constant,
            "z_ratio": format_fraction(split.z_ratio),
            "oriented_lists": split.oriented_lists,
        }

    def _top_equals_count(self, total: int) -> Counterexample:
        def observe(pi, sigma, mu):
            top, count = top_coefficient(pi, sigma, mu), count_P(pi, sigma, mu)
            return top == count, {"top": format_fraction(top), "count_P": count}

        return first_failure(
            (_case(pi=pi, sigma=sigma, mu=mu), lambda t=(pi, sigma, mu): observe(*t))
            for pi, sigma, mu in self._targets(total)
        )

    def _nonempty(self, total: int) -> Counterexample:
        def observe(pi, sigma, mu):
            nonempty, allowed = count_P(pi, sigma, mu) > 0, top_degree_allowed(pi, sigma, mu)
            return allowed or not nonempty, {"nonempty": nonempty, "subpartitions": allowed}

        return first_failure(
            (_case(pi=pi, sigma=sigma, mu=mu), lambda t=(pi, sigma, mu): observe(*t))
            for pi, sigma, mu in self._targets(total)
        )

    def _decomposition(self, total: int) -> Counterexample:
        def observe(pi, sigma, mu):
            split = decompose(pi, sigma, mu)
            return split.holds, {"count_P": split.count, "product": format_fraction(split.product)}

        return first_failure(
            (_case(pi=pi, sigma=sigma, mu=mu), lambda t=(pi, sigma, mu): observe(*t))
            for pi, sigma, mu in self._targets(total)
            if mu.size >= max(pi.size, sigma.size)
        )

    @staticmethod
    def _nonnegative(total: int) -> Counterexample:
        for pi, sigma in _pairs_of_total(total):
            for mu, g in structure_constants(pi, sigma).items():
                if not has_nonnegative_integer_coefficients(g):
                    return {**_case(pi=pi, sigma=sigma, mu=mu), "g": poly_json(g)}
        return None


# ============================================================================
# A-top part of characters and embeddings
# ============================================================================

class AtopEmbeddingsSuite(BaseSuite):
    name = "atop-embeddings"
    description = "A-top coefficient of Ch_π(λ) against embedding counts of G_π"
    statements = (
        "ch.a-top-embeddings",
        "embeddings.negative-conjugate",
        "embeddings.row-monotone",
    )

    def default_n(self) -> int:
        return settings.JACKLAB_MATCHING_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        diagrams = [lam for size in range(1, n_max + 3) for lam in all_partitions(size)]
        for k in range(1, n_max + 1):
            params = {"k": k, "diagram_size": n_max + 2}
            checks.extend([
                Check("ch.a-top-embeddings", params, lambda k=k: self._a_top(k, diagrams)),
                Check("embeddings.negative-conjugate", params, lambda k=k: self._conjugate(k, diagrams)),
                Check("embeddings.row-monotone", params, lambda k=k: self._monotone(k, diagrams)),
            ])
        return checks

    @staticmethod
    def _a_top(k: int, diagrams: List[Partition]) -> Counterexample:
        def observe(pi, lam):
            top = a_top_ch(pi, lam)
            embeddings = count_embeddings(graph_of_partition(pi), lam)
            hat = hat_p(pi, lam)
            return top == embeddings == hat, {"a_top": top, "embeddings": embeddings, "hat_p": hat}

        return first_failure(
            (_case(pi=pi, lam=lam), lambda pi=pi, lam=lam: observe(pi, lam))
            for pi in all_partitions(k)
            for lam in diagrams
        )

    @staticmethod
    def _conjugate(k: int, diagrams: List[Partition]) -> Counterexample:
        def observe(pi, lam):
            direct = count_embeddings(graph_of_partition(pi), lam)
            negative = count_embeddings(graph_of_partition(pi, conjugate=True), lam, negative=True)
            return direct == negative, {"embeddings": direct, "negative": negative}

        return first_failure(
            (_case(pi=pi, lam=lam), lambda pi=pi, lam=lam: observe(pi, lam))
            for pi in all_partitions(k)
            for lam in diagrams
        )

    @staticmethod
    def _monotone(k: int, diagrams: List[Partition]) -> Counterexample:
        def observe(pi, lam):
            graph = graph_of_partition(pi)
            before = count_embeddings(graph, lam)
            after = count_embeddings(graph, concat(lam, Partition((1,))))
            return before <= after, {"before": before, "after": after}

        return first_failure(
            (_case(pi=pi, lam=lam), lambda pi=pi, lam=lam: observe(pi, lam))
            for pi in all_partitions(k)
            for lam in diagrams
        )


# ============================================================================
# Gluing and counting identities
# ============================================================================

class CountingIdentitiesSuite(BaseSuite):
    name = "counting-identities"
    description = "Gluing profiles, injectivity, orientability and double counting of rooted lists"
    statements = (
        "maps.profiles",
        "maps.glue-injective",
        "maps.bipartite-orientable",
        "maps.euler",
        "maps.labelling-count",
        "maps.rooted-lists",
        "maps.oriented-lists",
        "eta.lists-census",
        "eta.orientable-equals-unhandled",
    )

    def default_n(self) -> int:
        return settings.JACKLAB_MATCHING_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        for n in range(1, n_max + 1):
            params = {"n": n}
            checks.extend([
                Check("maps.profiles", params, lambda n=n: self._per_gluing(n, self._profiles)),
                Check("maps.glue-injective", params, lambda n=n: self._per_gluing(n, self._injective)),
                Check("maps.bipartite-orientable", params, lambda n=n: self._per_gluing(n, self._orientable)),
                Check("maps.euler", params, lambda n=n: self._per_gluing(n, self._euler)),
            ])
            if n > CANONICAL_ORACLE_N_MAX:
                continue
            checks.extend([
                Check("maps.labelling-count", params, lambda n=n: self._labellings(n)),
                Check("maps.rooted-lists", params, lambda n=n: self._rooted_lists(n)),
                Check("maps.oriented-lists", params, lambda n=n: self._oriented_lists(n)),
                Check("eta.lists-census", params, lambda n=n: self._census(n)),
                Check("eta.orientable-equals-unhandled", params, lambda n=n: self._orientable_unhandled(n)),
            ])
        return checks

    @staticmethod
    def _per_gluing(n: int, observe) -> Counterexample:
        return first_failure(
            (
                {**_case(lam=lam), "matching": matching_json(delta)},
                lambda lam=lam, delta=delta: observe(lam, delta),
            )
            for lam in all_partitions(n)
            for delta in enumerate_matchings(n)
        )

    @staticmethod
    def _profiles(lam, delta):
        eps, delta_lam = reference_matchings(lam)
        expected = (
            lam,
            cycle_type(delta, delta_lam),
            cycle_type(delta, eps),
            component_type(delta, eps, delta_lam),
        )
        observed = glue(lam, delta).profiles()
        return observed == expected, {"profiles": [partition_json(p) for p in observed]}

    @staticmethod
    def _injective(lam, delta):
        recovered = read_matching(lam, glue(lam, delta))
        return recovered == delta, {"recovered": matching_json(recovered)}

    @staticmethod
    def _orientable(lam, delta):
        orientable = glue(lam, delta).is_orientable()
        eps, delta_lam = reference_matchings(lam)
        unicellular = component_type(delta, eps, delta_lam) == lam
        if delta.is_bipartite():
            holds = orientable
        else:
            holds = not (orientable and unicellular)
        return holds, {"orientable": orientable, "bipartite": delta.is_bipartite()}

    @staticmethod
    def _euler(lam, delta):
        characteristics = [c.euler_characteristic() for c in glue(lam, delta).components()]
        return all(chi <= 2 for chi in characteristics), {"euler": characteristics}

    @staticmethod
    def _labellings(n: int) -> Counterexample:
        def observe(lam, delta):
            M = glue(lam, delta)
            eps, delta_lam = reference_matchings(lam)
            mu = component_type(delta, eps, delta_lam)
            produced = sum(1 for _ in component_labellings(M, mu))
            expected = 2 ** mu.length * z(mu)
            return produced == expected, {"produced": produced, "expected": expected}

        return first_failure(
            (
                {**_case(lam=lam), "matching": matching_json(delta)},
                lambda lam=lam, delta=delta: observe(lam, delta),
            )
            for lam in all_partitions(n)
            for delta in enumerate_matchings(n)
        )

    @staticmethod
    def _classes(n: int) -> Iterator[Tuple[Partition, Partition, Partition, Partition]]:
        for lam in all_partitions(n):
            for pi, sigma, mu in sorted(class_histogram(lam)):
                yield pi, sigma, lam, mu

    def _rooted_lists(self, n: int) -> Counterexample:
        def observe(pi, sigma, lam, mu):
            counted = count_rooted_lists(pi, sigma, lam, mu)
            distinct = len(distinct_rooted_lists(pi, sigma, lam, mu))
            return counted == distinct, {"counted": counted, "distinct": distinct}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam, mu=mu), lambda t=(pi, sigma, lam, mu): observe(*t))
            for pi, sigma, lam, mu in self._classes(n)
        )

    @staticmethod
    def _oriented_lists(n: int) -> Counterexample:
        def observe(pi, sigma, mu):
            counted = count_oriented_lists_anyface(pi, sigma, mu)
            distinct = len(distinct_oriented_lists(pi, sigma, mu))
            return counted == distinct, {"counted": counted, "distinct": distinct}

        return first_failure(
            (_case(pi=pi, sigma=sigma, mu=mu), lambda t=(pi, sigma, mu): observe(*t))
            for pi, sigma, mu in _triples(n)
        )

    def _census(self, n: int) -> Counterexample:
        def observe(pi, sigma, lam, mu):
            d = degree_d(pi, sigma, lam)
            census = rooted_list_census(pi, sigma, lam, mu)
            observed: Dict[str, Any] = {"orientable": census.orientable}
            for policy in EtaPolicy:
                poly = poly_H_eta(pi, sigma, lam, mu, policy)
                top = _top_beta(poly, d)
                expected_top = census.unicellular_unhandled if mu == lam else 0
                observed[policy.value] = poly_json(poly)
                if not (
                    _beta_degree(poly) <= d
                    and poly_coefficient(poly, 0) == census.orientable
                    and top == expected_top
                ):
                    return False, observed
            return True, observed

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam, mu=mu), lambda t=(pi, sigma, lam, mu): observe(*t))
            for pi, sigma, lam, mu in self._classes(n)
        )

    @staticmethod
    def _orientable_unhandled(n: int) -> Counterexample:
        def observe(pi, sigma, mu):
            oriented = count_oriented_lists_anyface(pi, sigma, mu)
            if (pi, sigma, mu) in class_histogram(mu):
                unhandled = rooted_list_census(pi, sigma, mu, mu).unhandled
            else:
                unhandled = 0
            return oriented == unhandled, {"oriented_lists": oriented, "unhandled_lists": unhandled}

        return first_failure(
            (_case(pi=pi, sigma=sigma, mu=mu), lambda t=(pi, sigma, mu): observe(*t))
            for pi, sigma, mu in _triples(n)
        )


# ============================================================================
# Properties of η
# ============================================================================

@lru_cache(maxsize=None)
def _rooted_component_codes(n: int) -> Tuple[CanonicalCode, ...]:
    """Every connected component of a glued map with n edges in total, rooted at each black flag."""
    codes = set()
    for lam in all_partitions(n):
        for delta in enumerate_matchings(n):
            for component in glue(lam, delta).components():
                for root in range(component.num_flags):
                    if component.color[root] == BLACK:
                        codes.add(component.with_root(root).canonical_code())
    return tuple(sorted(codes))


class EtaPropertiesSuite(BaseSuite):
    name = "eta-properties"
    description = "η vanishes exactly on orientable maps; twisting contracts"
    statements = ("eta.zero-iff-orientable", "eta.twist-involution", "eta.handle-twist")

    def default_n(self) -> int:
        return settings.JACKLAB_MATCHING_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        for n in range(1, n_max + 1):
            params = {"n": n}
            checks.extend([
                Check("eta.zero-iff-orientable", params, lambda n=n: self._per_map(n, self._zero_iff)),
                Check("eta.twist-involution", params, lambda n=n: self._per_map(n, self._involution)),
                Check("eta.handle-twist", params, lambda n=n: self._per_map(n, self._handle)),
            ])
        return checks

    @staticmethod
    def _per_map(n: int, observe) -> Counterexample:
        return first_failure(
            ({"n": n, "code": [list(row) for row in code]}, lambda code=code: observe(FlagMap.from_code(code)))
            for code in _rooted_component_codes(n)
        )

    @staticmethod
    def _zero_iff(M: FlagMap):
        orientable = M.is_orientable()
        values = {policy.value: eta_map(M, policy) for policy in EtaPolicy}
        holds = all((value == 0) == orientable for value in values.values())
        return holds, {"orientable": orientable, **values}

    @staticmethod
    def _involution(M: FlagMap):
        return twist(twist(M)).canonical_code() == M.canonical_code(), {}

    @staticmethod
    def _handle(M: FlagMap):
        edge_class = classify_root_edge(M)
        if edge_class == EdgeClass.BRIDGE:
            return True, {}
        twisted = twist(M)
        same_rest = [p.canonical_code() for p in delete_root_edge(M)] == [
            p.canonical_code() for p in delete_root_edge(twisted)
        ]
        both_orientable = M.is_orientable() and twisted.is_orientable()
        return same_rest and not both_orientable, {"class": edge_class.value}


# ============================================================================
# Logarithmic coefficients
# ============================================================================

class AppendixSuite(BaseSuite):
    name = "appendix"
    description = "h through the logarithm of the c series: single-part agreement, symmetry, leading-coefficient identity"
    statements = ("h.single-part", "h.symmetry", "h.leading-factorization", "h.beta-polynomial")

    def default_n(self) -> int:
        return settings.JACKLAB_H_N_MAX

    def checks(self, n_max: int, rng: random.Random) -> List[Check]:
        checks = []
        for n in range(1, n_max + 1):
            params = {"n": n}
            checks.extend([
                Check("h.single-part", params, lambda n=n: self._single_part(n)),
                Check("h.symmetry", params, lambda n=n: self._symmetry(n)),
                Check("h.leading-factorization", params, lambda n=n: self._leading_factorization(n)),
                Check("h.beta-polynomial", params, lambda n=n: self._beta(n), conjectural=True),
            ])
        return checks

    @staticmethod
    def _single_part(n: int) -> Counterexample:
        h = connection_h(n)[n]
        c = connection_c_alpha(n)
        row = Partition((n,))

        def observe(pi, sigma):
            h_value, c_value = h.get(pi, sigma, row), c.get(pi, sigma, row)
            return h_value == c_value, {"h": _alpha_text(h_value), "c": _alpha_text(c_value)}

        partitions = all_partitions(n)
        return first_failure(
            (_case(pi=pi, sigma=sigma), lambda pi=pi, sigma=sigma: observe(pi, sigma))
            for pi in partitions
            for sigma in partitions
        )

    @staticmethod
    def _symmetry(n: int) -> Counterexample:
        return None if connection_h(n)[n].is_symmetric() else {"n": n}

    @staticmethod
    def _leading_factorization(n: int) -> Counterexample:
        def observe(pi, sigma, lam):
            if check_leading_factorization(pi, sigma, lam):
                return True, {}
            lhs, rhs = leading_factorization_sides(pi, sigma, lam)
            return False, {"c_top": format_fraction(lhs), "h_products": format_fraction(rhs)}

        return first_failure(
            (_case(pi=pi, sigma=sigma, lam=lam), lambda t=(pi, sigma, lam): observe(*t))
            for pi, sigma, lam in _triples(n)
        )

    @staticmethod
    def _beta(n: int) -> Counterexample:
        for (pi, sigma, lam), value in h_as_beta(connection_h(n)[n]).items():
            if value is None:
                return _case(pi=pi, sigma=sigma, lam=lam)
        return None


def _alpha_text(value: FracElement) -> str:
    return str(value.as_expr())


SUITES: Dict[str, BaseSuite] = {
    suite.name: suite
    for suite in (
        JackAxiomsSuite(),
        SpecializationsSuite(),
        DegreeBoundsSuite(),
        MainTheoremSuite(),
        GTopSuite(),
        AtopEmbeddingsSuite(),
        CountingIdentitiesSuite(),
        EtaPropertiesSuite(),
        AppendixSuite(),
    )
}
