import json

import pytest

from ecpoly.engines import edge_cover_polynomial
from ecpoly.errors import DeltaTooSmall, NonIntegerTerm, NotMonic, ZeroOrUnitPolynomial
from ecpoly.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    petersen,
    star_graph,
)
from ecpoly.identities import (
    FAIL,
    NA,
    PASS,
    check_corona_identity,
    check_regularity,
    check_root_family,
    check_tail_recurrence,
    infer_from_polynomial,
    min_degree_count,
    recover_degree_counts,
    verify,
)
from ecpoly.polynomial import ECPolynomial

C4 = cycle_graph(4)
K4 = complete_graph(4)
C4_CHORD = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


def poly(g):
    return edge_cover_polynomial(g, "dp")


class TestInference:
    @pytest.mark.parametrize(
        "g, want", [(C4, (4, 2, 2)), (complete_graph(2), (1, 1, 1)), (petersen(), (15, 5, 3))]
    )
    def test_values(self, g, want):
        assert infer_from_polynomial(poly(g)) == want

    def test_rejects_zero_and_unit(self):
        with pytest.raises(ZeroOrUnitPolynomial):
            infer_from_polynomial(ECPolynomial.zero())
        with pytest.raises(ZeroOrUnitPolynomial):
            infer_from_polynomial(ECPolynomial.one())

    def test_rejects_non_monic(self):
        with pytest.raises(NotMonic):
            infer_from_polynomial(ECPolynomial((0, 3, 2)))


class TestRegularity:
    def test_c4(self):
        assert check_regularity(poly(C4), 4, 2)

    def test_k4(self):
        assert check_regularity(poly(K4), 6, 3)

    def test_c4_with_chord(self):
        assert poly(C4_CHORD)[3] == 8
        assert not check_regularity(poly(C4_CHORD), 5, 2)

    def test_needs_delta_two(self):
        with pytest.raises(DeltaTooSmall):
            check_regularity(poly(star_graph(3)), 3, 1)


class TestTailRecurrence:
    def test_k4(self):
        p = poly(K4)
        # (3/4)*16 + (1/4)*4*C(3,3)*3 = 15
        assert 4 * p[4] == 1 * p[3] * 3 + 4 * 1 * 3
        assert check_tail_recurrence(p, K4)

    def test_petersen(self):
        assert check_tail_recurrence(poly(petersen()), petersen())

    def test_empty_range(self):
        assert check_tail_recurrence(poly(complete_graph(2)), complete_graph(2)) is None

    def test_detects_tampering(self):
        p = poly(K4)
        bad = ECPolynomial(p.coeffs[:4] + (p[4] + 4,) + p.coeffs[5:])
        assert check_tail_recurrence(bad, K4) is False

    def test_inexact_division_raises(self):
        p = poly(K4)
        # first step of the range: (4*e_2 + 36) / 3 with e_2 bumped to 4
        bad = ECPolynomial(p.coeffs[:2] + (p[2] + 1,) + p.coeffs[3:])
        with pytest.raises(NonIntegerTerm):
            check_tail_recurrence(bad, K4)


class TestDegreeRecovery:
    def test_k4(self):
        assert recover_degree_counts(poly(K4), 6, 3) == [0, 0, 4, 0]

    def test_petersen(self):
        p = poly(petersen())
        assert p[12] == 445
        assert min_degree_count(p, 15, 3) == 10
        assert recover_degree_counts(p, 15, 3) == [0, 0, 10, 0]

    def test_c4(self):
        assert recover_degree_counts(poly(C4), 4, 2) == [0, 4]
        assert min_degree_count(poly(C4), 4, 2) == 4

    def test_mixed_degrees(self):
        # K4 minus an edge: degrees 2,2,3,3
        g = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert recover_degree_counts(poly(g), 5, 2) == [0, 2]


class TestCorona:
    def test_k2(self):
        assert check_corona_identity(complete_graph(2), 1)

    def test_c3_two_pendants(self):
        assert check_corona_identity(cycle_graph(3), 2, "brute")

    def test_edgeless(self):
        assert check_corona_identity(empty_graph(3), 1, "ie")

    def test_root_family(self):
        assert check_root_family(complete_graph(2), 2)
        assert check_root_family(cycle_graph(3), 1, "ie")
        assert check_root_family(complete_graph(2), 1, i=3)


class TestReport:
    def test_petersen_all_pass(self):
        rep = verify(petersen(), poly(petersen()))
        assert rep.ok
        statuses = {c.name: c.status for c in rep.checks}
        assert statuses["regularity"] == PASS
        assert statuses["degree_recovery"] == PASS
        assert rep.derived["rho"] == 5

    def test_k2_component_not_applicable(self):
        g = disjoint_union(complete_graph(2), cycle_graph(3))
        rep = verify(g, poly(g))
        statuses = {c.name: c for c in rep.checks}
        assert statuses["a_delta"].status == NA
        assert "K2" in statuses["a_delta"].details
        assert rep.ok

    def test_wrong_polynomial_fails(self):
        rep = verify(C4, poly(K4))
        assert not rep.ok
        assert any(c.status == FAIL for c in rep.checks)

    def test_isolated_vertex(self):
        g = empty_graph(2)
        assert verify(g, poly(g)).ok

    def test_json(self):
        js = verify(C4, poly(C4)).to_json()
        json.dumps(js)
        assert {"check", "anchor", "status"} <= set(js["checks"][0])


def test_corpus_identities(corpus):
    for g in corpus:
        p = poly(g)
        rep = verify(g, p)
        assert rep.ok, (g, [c for c in rep.failures()])
