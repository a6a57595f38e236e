import itertools
import math

import pytest

from gracelab.digraph import FunctionalDigraph, all_value_tables, is_gracefully_labeled
from gracelab.genfun import (
    build_F_matrix,
    check_F_properties,
    check_P_properties,
    compute_F,
    compute_F_bruteforce,
    compute_P,
    compute_P_bruteforce,
    decode_exponent,
    det_poly,
    det_via_minor_expansion,
    encode_sequence,
    f_extremal_sequence,
    graceful_coefficient_F,
    graceful_sequence_exponent,
    p_extremal_sequence,
    tdmtt_check,
)
from gracelab.polyring import SparsePoly
from gracelab.seeds import Lcg, integer_matrix


def leibniz_det(matrix, zero, one):
    """n!-permutation-sum determinant; the oracle for det_via_minor_expansion."""
    n = len(matrix)
    total = zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = one
        for i in range(n):
            term = term * matrix[i][perm[i]]
        total = total + term if inversions % 2 == 0 else total - term
    return total


def is_tree_table(values):
    from gracelab.digraph import is_functional_tree

    return is_functional_tree(FunctionalDigraph(values))


class TestMatrixBuild:
    def test_n2_entries(self):
        m = build_F_matrix(2)
        assert m[0][0] == SparsePoly.monomial(1)
        assert m[0][1] == SparsePoly.monomial(3)

    def test_n3_corner(self):
        assert build_F_matrix(3)[0][2] == SparsePoly.monomial(16)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_symmetric(self, n):
        m = build_F_matrix(n)
        for i in range(n):
            for j in range(n):
                assert m[i][j] == m[j][i]


class TestComputeF:
    def test_n1(self):
        assert compute_F(1) == SparsePoly.monomial(1)

    def test_n2_expansion(self):
        assert compute_F(2) == SparsePoly([(2, 1), (4, 2), (6, 1)])

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_bruteforce(self, n):
        assert compute_F(n) == compute_F_bruteforce(n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_total_count(self, n):
        assert compute_F(n).eval_at_one() == n**n

    def test_diagonal_determinant_form(self):
        # det(diag(X*1)) of the row-sum diagonal equals the row-sum product
        for n in range(1, 5):
            matrix = build_F_matrix(n)
            zero = SparsePoly.zero()
            diag = []
            for i in range(n):
                row_sum = zero
                for entry in matrix[i]:
                    row_sum = row_sum + entry
                diag.append(
                    [row_sum if i == j else zero for j in range(n)]
                )
            assert det_poly(diag) == compute_F(n)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_exponent_digit_sums(self, n):
        for e, _ in compute_F(n).items():
            digits = []
            rest = e
            while rest:
                rest, d = divmod(rest, n + 1)
                digits.append(d)
            assert sum(digits) == n

    def test_identity_function_is_unique_minimum(self):
        for n in range(2, 6):
            assert compute_F(n).coefficient(n) == 1

    @pytest.mark.parametrize("n", range(2, 6))
    def test_term_count_bound(self, n):
        assert compute_F(n).term_count() <= math.comb(2 * n - 1, n)


class TestEncodeDecode:
    def test_six_vertex_sequence(self):
        assert encode_sequence((0, 1, 1, 2, 2, 3), 7) == 456

    def test_graceful_three(self):
        assert encode_sequence((0, 1, 2), 4) == 21

    def test_graceful_closed_form(self):
        for n in range(1, 8):
            assert graceful_sequence_exponent(n, n + 1) == ((n + 1) ** n - 1) // n

    def test_decode_inverts_encode(self):
        for n in range(1, 7):
            for labels in itertools.combinations_with_replacement(range(n), n):
                e = encode_sequence(labels, n + 1)
                assert decode_exponent(e, n + 1, n) == labels

    def test_decode_rejects_bad_digit_sum(self):
        # digits of 5 in base 4 are (1, 1), summing to 2, not n=3
        with pytest.raises(ValueError, match="not a label-sequence exponent"):
            decode_exponent(5, 4, 3)

    def test_decode_rejects_overflow_exponent(self):
        with pytest.raises(ValueError, match="not a label-sequence exponent"):
            decode_exponent(4**5, 4, 3)

    def test_encode_rejects_out_of_range_label(self):
        with pytest.raises(ValueError, match="outside"):
            encode_sequence((0, 3, 1), 4)


class TestGracefulCoefficient:
    def test_small_values(self):
        assert graceful_coefficient_F(2) == 2
        assert graceful_coefficient_F(3) == 6

    @pytest.mark.parametrize("n", range(2, 6))
    def test_matches_direct_count(self, n):
        direct = sum(
            1
            for values in all_value_tables(n)
            if is_gracefully_labeled(FunctionalDigraph(values))
        )
        assert graceful_coefficient_F(n) == direct


class TestDeterminant:
    def test_identity_matrix(self):
        one = SparsePoly.one()
        zero = SparsePoly.zero()
        m = [[one if i == j else zero for j in range(4)] for i in range(4)]
        assert det_poly(m) == one

    def test_two_by_two(self):
        a, b, c, d = (SparsePoly.monomial(e) for e in (1, 2, 5, 9))
        got = det_poly([[a, b], [c, d]])
        assert got == a * d - b * c

    @pytest.mark.parametrize("seed", (1, 2, 3))
    def test_matches_leibniz_on_random_monomials(self, seed):
        gen = Lcg(seed)
        for size in (4, 5):
            m = [
                [SparsePoly.monomial(gen.below(40), 1 + gen.below(5)) for _ in range(size)]
                for _ in range(size)
            ]
            zero, one = SparsePoly.zero(), SparsePoly.one()
            assert det_poly(m) == leibniz_det(m, zero, one)

    @pytest.mark.parametrize("seed", (1, 2))
    def test_matches_leibniz_on_integers(self, seed):
        m = integer_matrix(5, seed, -9, 9)
        assert det_via_minor_expansion(m, 0, 1) == leibniz_det(m, 0, 1)

    @pytest.mark.parametrize("seed", (3, 4))
    def test_matches_leibniz_on_multi_term_polynomials(self, seed):
        # entries with several signed terms exercise cancellation inside the
        # memoized expansion
        gen = Lcg(seed)
        m = [
            [
                SparsePoly(
                    (gen.below(12), gen.below(9) - 4) for _ in range(3)
                )
                for _ in range(4)
            ]
            for _ in range(4)
        ]
        zero, one = SparsePoly.zero(), SparsePoly.one()
        assert det_poly(m) == leibniz_det(m, zero, one)


class TestComputeP:
    def test_n2(self):
        assert compute_P(2) == SparsePoly.monomial(3, 2)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_bruteforce(self, n):
        assert compute_P(n) == compute_P_bruteforce(n)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_tree_count(self, n):
        assert compute_P(n).eval_at_one() == n ** (n - 1)

    def test_min_degree_n3(self):
        assert compute_P(3).min_degree() == 7

    @pytest.mark.parametrize("n", range(2, 7))
    def test_min_degree_attained_by_path(self, n):
        # the path f(i) = max(0, i-1) has one loop and n-1 label-1 edges
        path = tuple(max(0, i - 1) for i in range(n))
        exponent = sum(n ** abs(v - i) for i, v in enumerate(path))
        assert exponent == n * (n - 1) + 1 == compute_P(n).min_degree()

    @pytest.mark.parametrize("n", range(2, 6))
    def test_exponent_digit_sums_with_unit_root(self, n):
        # trees carry exactly one loop, so the base-n units digit is 1
        for e, _ in compute_P(n).items():
            digits = []
            rest = e
            while rest:
                rest, d = divmod(rest, n)
                digits.append(d)
            assert sum(digits) == n
            assert digits[0] == 1

    @pytest.mark.parametrize("n", range(2, 7))
    def test_graceful_tree_coefficient(self, n):
        direct = sum(
            1
            for values in all_value_tables(n)
            if is_gracefully_labeled(FunctionalDigraph(values))
            and is_tree_table(values)
        )
        e = graceful_sequence_exponent(n, n)
        assert compute_P_bruteforce(n).coefficient(e) == direct


class TestTdmtt:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_all_ones_gives_cayley_count(self, n):
        check = tdmtt_check([[1] * n] * n)
        assert check.left == check.right == n ** (n - 1)

    def test_two_by_two_primes(self):
        check = tdmtt_check([[2, 3], [5, 7]])
        assert check.left == check.right == 2 * 5 + 3 * 7

    @pytest.mark.parametrize("n", range(3, 7))
    @pytest.mark.parametrize("seed", (1, 2, 3))
    def test_random_matrices(self, n, seed):
        assert tdmtt_check(integer_matrix(n, seed, 1, 50)).equal


class TestPropertyReports:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_f_report_asserted_claims_pass(self, n):
        report = check_F_properties(n)
        assert report.ok
        by_claim = {c.claim: c for c in report.checks}
        assert by_claim["min_degree"].status == "pass"
        assert by_claim["min_degree_coefficient"].status == "pass"
        assert by_claim["max_degree_extremal_sequence"].status == "pass"
        assert by_claim["term_count_bound"].status == "pass"

    def test_f_statement_formula_known_discrepancy_at_n2(self):
        # the printed degree formula gives an empty sum at n=2; the extremal
        # sequence {1, 1} gives the true degree 6
        report = check_F_properties(2)
        by_claim = {c.claim: c for c in report.checks}
        row = by_claim["max_degree_statement_formula"]
        assert row.status == "discrepancy"
        assert row.predicted == "0"
        assert row.computed == "6"

    @pytest.mark.parametrize("n", range(2, 6))
    def test_p_report_asserted_claims_pass(self, n):
        report = check_P_properties(n)
        assert report.ok
        by_claim = {c.claim: c for c in report.checks}
        assert by_claim["min_degree"].status == "pass"
        assert by_claim["max_degree_extremal_sequence"].status == "pass"

    def test_p_statement_formulas_known_discrepancies_at_n3(self):
        # statement formula misses the root-loop digit (12 vs 13); the
        # variant printed with n-1 in place of n^(n-1) is further off (5)
        report = check_P_properties(3)
        by_claim = {c.claim: c for c in report.checks}
        statement = by_claim["max_degree_statement_formula"]
        assert (statement.predicted, statement.computed, statement.status) == (
            "12",
            "13",
            "discrepancy",
        )
        display = by_claim["max_degree_proof_display_formula"]
        assert (display.predicted, display.status) == ("5", "discrepancy")

    def test_extremal_sequences_are_label_multisets(self):
        assert f_extremal_sequence(2) == (1, 1)
        assert f_extremal_sequence(3) == (1, 2, 2)
        assert p_extremal_sequence(2) == (0, 1)
        assert p_extremal_sequence(4) == (0, 2, 2, 3)

    def test_report_doc_shape(self):
        doc = check_F_properties(3).to_doc()
        assert doc["which"] == "F"
        assert doc["ok"] is True
        assert {"claim", "predicted", "computed", "status"} == set(
            doc["checks"][0]
        )
