import random
from decimal import Decimal
from itertools import combinations, product

import pytest

from radoforge.eqcore import Coloring, ResourceLimitError, balanced, check_coloring
from radoforge.localcolor import (
    ChargeCoverError,
    LocalEdgeColoring,
    charge_cover,
    chromatic_number,
    difference_coloring,
    local_chromatic_hypothesis,
    neighborhood,
    neighborhood_within,
    total_weight,
    vertex_count_conclusion,
    vertex_count_predicate,
    vertex_weight,
)
from radoforge.search import nu2_coloring

from helpers import brute_chromatic


def complete_coloring(n, color_fn):
    return LocalEdgeColoring(
        n, {(u, v): color_fn(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)})


def random_edge_coloring(rng, n, palette):
    return complete_coloring(n, lambda u, v: rng.randint(1, palette))


def test_edge_coloring_requires_every_pair():
    with pytest.raises(ValueError):
        LocalEdgeColoring(3, {(1, 2): 1, (2, 3): 1})
    with pytest.raises(ValueError):
        LocalEdgeColoring(2, {(1, 1): 1})
    single = LocalEdgeColoring(1, {})
    assert single.locality() == 0


def test_edge_coloring_json_round_trip():
    ec = difference_coloring(Coloring(4, 2, (1, 2, 2, 1)))
    again = LocalEdgeColoring.from_json_dict(ec.to_json_dict())
    assert again.to_json_dict() == ec.to_json_dict()


def test_difference_coloring_examples():
    all_one = difference_coloring(Coloring(3, 1, (1, 1, 1)))
    assert all(c == 1 for *_, c in all_one.to_json_dict()["edges"])

    nu2_3 = difference_coloring(Coloring(3, 2, (1, 2, 1)))
    assert nu2_3.color_of(1, 2) == 1
    assert nu2_3.color_of(2, 3) == 1
    assert nu2_3.color_of(1, 3) == 2


def test_difference_coloring_is_r_local():
    rng = random.Random(42)
    for _ in range(30):
        n = rng.randint(2, 9)
        r = rng.randint(1, 4)
        coloring = Coloring(n, r, tuple(rng.randint(1, r) for _ in range(n)))
        assert difference_coloring(coloring).locality() <= r


def test_neighborhood_examples():
    k3 = complete_coloring(3, lambda u, v: 1)
    assert neighborhood(k3, 1, 1, 0) == {1}
    assert neighborhood(k3, 1, 1, 1) == {2, 3}
    # distance-2 set in the color-1 cycle 1-2-3-4-1 of the dyadic coloring of [4]
    ec = difference_coloring(Coloring(4, 3, (1, 2, 1, 3)))
    assert neighborhood(ec, 1, 1, 1) == {2, 4}
    assert neighborhood(ec, 1, 1, 2) == {3}
    assert neighborhood_within(ec, 1, 1, 2) == {1, 2, 3, 4}


def test_neighborhood_layers_partition():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(2, 9)
        ec = random_edge_coloring(rng, n, rng.randint(1, 3))
        for v in ec.vertices():
            for c in ec.colors_at(v):
                layers = [neighborhood(ec, v, c, i) for i in range(4)]
                for i, j in combinations(range(4), 2):
                    assert layers[i].isdisjoint(layers[j])
                assert set().union(*layers) == neighborhood_within(ec, v, c, 3)


def test_vertex_weight_examples():
    assert vertex_weight(2, 1, 1) == Decimal("0.5")
    assert str(vertex_weight(3, 2, 2)).startswith("0.0785674201")
    assert vertex_weight(5, 2, 0) == 1


def test_vertex_weight_strictly_decreasing_in_degree():
    for chi in (2, 3, 5):
        for ell in (1, 2, 3):
            weights = [vertex_weight(chi, ell, d) for d in range(0, 8)]
            assert all(a > b for a, b in zip(weights, weights[1:]))


def test_chromatic_number_examples():
    assert chromatic_number([1, 2, 3], [(1, 2), (2, 3), (1, 3)]) == 3
    assert chromatic_number(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]) == 3
    assert chromatic_number(range(1, 6), []) == 1
    assert chromatic_number([], []) == 0
    with pytest.raises(ResourceLimitError):
        chromatic_number(range(1, 18), [])


def test_chromatic_number_matches_brute_force():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randint(1, 7)
        vertices = list(range(1, n + 1))
        edges = [e for e in combinations(vertices, 2) if rng.random() < 0.5]
        assert chromatic_number(vertices, edges) == brute_chromatic(vertices, edges)


def test_hypothesis_on_monochromatic_k4():
    k4 = complete_coloring(4, lambda u, v: 1)
    assert local_chromatic_hypothesis(k4, 4, 1).holds
    assert not local_chromatic_hypothesis(k4, 3, 1).holds


def test_hypothesis_on_schur_partition_of_4():
    ec = difference_coloring(Coloring(4, 2, (1, 2, 2, 1)))
    report = local_chromatic_hypothesis(ec, 3, 1)
    assert report.holds
    assert report.worst() <= 2  # both color subgraphs are paths here


def test_hypothesis_trivial_single_vertex():
    assert local_chromatic_hypothesis(LocalEdgeColoring(1, {}), 2, 1).holds


def test_conclusion_tight_single_color_case():
    # one color, hypothesis with chi = n: predicate holds with equality
    for n in (2, 3, 5):
        ec = complete_coloring(n, lambda u, v: 1)
        report = vertex_count_conclusion(ec, n, 1)
        assert report.locality == 1
        assert report.holds
        # n vertices of weight 1/chi = 1/n: total 1 up to 50-digit rounding
        assert abs(report.total_weight - 1) < Decimal("1e-30")
        assert report.weight_bounded
        assert not vertex_count_predicate(n + 1, n, 1, 1)


def test_conclusion_predicate_boundary():
    assert vertex_count_predicate(18, 3, 2, 1)
    assert not vertex_count_predicate(19, 3, 2, 1)


def test_hypothesis_implies_conclusion_on_random_colorings():
    rng = random.Random(99)
    for _ in range(120):
        n = rng.randint(2, 9)
        ec = random_edge_coloring(rng, n, rng.randint(2, 4))
        ell = rng.randint(1, 2)
        table = local_chromatic_hypothesis(ec, n, ell).chromatic
        chi = max(2, max(table.values(), default=1))
        assert local_chromatic_hypothesis(ec, chi, ell).holds
        report = vertex_count_conclusion(ec, chi, ell)
        assert report.holds
        assert report.weight_bounded


def test_charge_cover_nu2_example():
    cover = charge_cover(nu2_coloring(3), 1, 1, 1)
    assert cover.sets[0] == {1}
    assert cover.sets[1] == {2, 4, 6}
    assert cover.sets[-1] == frozenset()
    assert cover.ball == {1, 2, 4, 6}
    proper = cover.proper_coloring()
    assert set(proper) == set(cover.ball)
    assert len(set(proper.values())) <= 3


def test_charge_cover_empty_class():
    # color 3 of the dyadic coloring of [3] colors nothing
    coloring = Coloring(3, 3, (1, 2, 1))
    cover = charge_cover(coloring, 2, 3, 1)
    assert cover.sets[0] == {2}
    assert cover.sets[1] == cover.sets[-1] == frozenset()


def test_charge_cover_schur_partition_all_bases_and_colors():
    coloring = Coloring(4, 2, (1, 2, 2, 1))
    for base in range(1, 5):
        for color in (1, 2):
            cover = charge_cover(coloring, base, color, 1)
            assert len(cover.sets) == 3
            class_set = coloring.class_of(color)
            for members in cover.sets.values():
                assert not any(
                    y - x in class_set for x, y in combinations(sorted(members), 2))


def test_charge_cover_rejects_bad_arguments():
    coloring = Coloring(4, 2, (1, 2, 2, 1))
    with pytest.raises(ValueError):
        charge_cover(coloring, 0, 1, 1)
    with pytest.raises(ValueError):
        charge_cover(coloring, 1, 3, 1)
    with pytest.raises(ValueError):
        charge_cover(coloring, 1, 1, 0)


def test_charge_cover_detects_precondition_violation():
    # the all-one coloring of [3] has 1+1=2 inside its class: independence
    # of the charge sets must break somewhere
    coloring = Coloring(3, 1, (1, 1, 1))
    with pytest.raises(ChargeCoverError):
        for base in range(1, 4):
            charge_cover(coloring, base, 1, 1)


def _avoids_up_to(coloring, radius):
    return all(check_coloring(coloring, balanced(m)) is None
               for m in range(1, radius + 1))


def test_charge_cover_claims_exhaustive_small():
    # every 1- and 2-coloring of [1..10] avoiding the balanced equations up
    # to the radius yields a valid cover with a proper (2m+1)-coloring
    for n in range(1, 11):
        for r in (1, 2):
            for assignment in product(range(1, r + 1), repeat=n):
                coloring = Coloring(n, r, assignment)
                for radius in (1, 2):
                    if not _avoids_up_to(coloring, radius):
                        continue
                    for base in range(1, n + 1):
                        for color in range(1, r + 1):
                            cover = charge_cover(coloring, base, color, radius)
                            proper = cover.proper_coloring()
                            assert set(proper) == set(cover.ball)
                            assert len(set(proper.values())) <= 2 * radius + 1


def test_charge_cover_unclipped_variant_contains_clipped():
    corpus = [nu2_coloring(2), nu2_coloring(3), Coloring(4, 2, (1, 2, 2, 1))]
    for coloring in corpus:
        for radius in (1, 2):
            if not _avoids_up_to(coloring, radius):
                continue
            for base in range(1, coloring.n + 1):
                for color in range(1, coloring.colors + 1):
                    clipped = charge_cover(coloring, base, color, radius, clip=True)
                    loose = charge_cover(coloring, base, color, radius, clip=False)
                    for t in range(-radius, radius + 1):
                        assert clipped.sets[t] <= loose.sets[t]


def test_total_weight_single_vertex():
    assert total_weight(LocalEdgeColoring(1, {}), 3, 1) == 1
