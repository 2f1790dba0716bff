from itertools import product

import pytest

from contactloci.oracle import (
    BudgetExceededError,
    NonIsolatedSingularityError,
    NonSmoothReductionError,
    SparseIntPoly,
    count_base,
    count_contact_jets,
    milnor_number_oracle,
    parse_poly,
    verify_stratification,
)

QUADRIC = parse_poly("x0^2+x1^2+x2^2")
CUBIC = parse_poly("x0^3+x1^3+x2^3")
QUARTIC = parse_poly("x0^4+x1^4+x2^4")
PERTURBED = parse_poly("x0^2+x1^2+x2^2+x0^3")


def brute_force_value_counts(poly, p):
    # reference count by direct evaluation of every point, nothing shared
    # with the library's evaluation path beyond arithmetic
    counts = {0: 0, 1: 0}
    for point in product(range(p), repeat=poly.nvars):
        total = 0
        for exps, coeff in poly.terms:
            term = coeff
            for x, e in zip(point, exps):
                term *= x ** e
            total += term
        value = total % p
        if value in counts:
            counts[value] += 1
    return counts


def test_parse_examples():
    assert QUADRIC.terms == (((0, 0, 2), 1), ((0, 2, 0), 1), ((2, 0, 0), 1))
    poly = parse_poly("3*x0^2-x1")
    assert poly.terms == (((0, 1), -1), ((2, 0), 3))
    assert parse_poly("x0", nvars=3).nvars == 3


def test_parse_combines_duplicate_monomials():
    assert parse_poly("x0+x0").terms == (((1,), 2),)
    with pytest.raises(ValueError):
        parse_poly("x0-x0")  # cancels to zero


@pytest.mark.parametrize("bad", ["", "x", "2x0", "x0^", "x0 + ", "y0", "x0 ** 2",
                                 "-x0", "5", "x0^2 ++ x1"])
def test_parse_rejects_ungrammatical_input(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


def test_parse_respects_declared_width():
    with pytest.raises(ValueError):
        parse_poly("x5", nvars=3)


def test_poly_doc_round_trip():
    doc = PERTURBED.to_doc()
    assert SparseIntPoly.from_doc(doc) == PERTURBED


def test_initial_form_and_partials():
    assert PERTURBED.min_total_degree() == 2
    assert PERTURBED.initial_form() == QUADRIC
    dx0 = PERTURBED.partial(0)
    assert dx0.terms == (((1, 0, 0), 2), ((2, 0, 0), 3))


def test_count_base_quadric():
    for p in (3, 5):
        reference = brute_force_value_counts(QUADRIC, p)
        cone, milnor = count_base(QUADRIC, p)
        assert cone == reference[0] - 1
        assert milnor == reference[1]
    assert count_base(QUADRIC, 3) == (8, 6)


def test_count_base_linear_form():
    linear = parse_poly("x0", nvars=3)
    for p in (3, 5):
        cone, milnor = count_base(linear, p)
        assert cone == p ** 2 - 1
        assert milnor == p ** 2


def test_count_base_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        count_base(PERTURBED, 3)


def test_empty_locus_below_degree():
    report = count_contact_jets(QUADRIC, 1, 3)
    assert report.total_count == 0
    assert report.by_order == ()
    assert report.matches


def test_stratified_counts_small_cases():
    report = count_contact_jets(QUADRIC, 2, 3)
    assert dict(report.by_order) == {1: report.milnor_count * 3 ** 3}
    assert report.matches

    report = count_contact_jets(QUADRIC, 3, 3)
    assert dict(report.by_order) == {1: report.cone_count * 3 ** 5}
    assert report.matches

    report = count_contact_jets(QUADRIC, 4, 3)
    assert set(dict(report.by_order)) == {1, 2}
    assert report.matches


def test_stratification_examples():
    assert verify_stratification(QUADRIC, 4, 3)
    assert verify_stratification(QUADRIC, 4, 5)
    assert verify_stratification(QUARTIC, 4, 3)
    assert verify_stratification(CUBIC, 3, 5)


def test_stratification_with_three_strata():
    report = count_contact_jets(QUADRIC, 6, 3)
    assert len(report.by_order) == 3
    assert report.matches


def test_counts_depend_only_on_the_initial_form():
    for m in (2, 3, 4):
        perturbed = count_contact_jets(PERTURBED, m, 5)
        plain = count_contact_jets(QUADRIC, m, 5)
        assert perturbed == plain


def test_mixed_monomial_perturbation_agrees_too():
    # a higher-order term involving several variables exercises the general
    # truncated-product evaluation
    mixed = SparseIntPoly.from_terms(3, [
        ((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1), ((1, 1, 1), 5)])
    for m in (2, 3, 4):
        assert count_contact_jets(mixed, m, 5) == count_contact_jets(QUADRIC, m, 5)


def test_total_is_sum_of_strata():
    report = count_contact_jets(QUADRIC, 4, 5)
    assert report.total_count == sum(c for _, c in report.by_order)


def test_total_count_matches_class_specialization():
    # the Grothendieck-ring class evaluated at L = p, [S] = projective point
    # count, [Mh] = fiber point count must reproduce the enumerated total
    from contactloci.contact import contact_class

    for poly, d in [(QUADRIC, 2), (CUBIC, 3), (PERTURBED, 2)]:
        for m in (2, 3, 4):
            for p in (3, 5):
                if d % p == 0:
                    continue
                report = count_contact_jets(poly, m, p)
                assert report.cone_count % (p - 1) == 0
                projective_points = report.cone_count // (p - 1)
                predicted = contact_class(3, d, m).specialize(
                    lef=p, surface=projective_points,
                    milnor_fiber=report.milnor_count)
                assert report.total_count == predicted, (str(poly), m, p)


def test_report_doc_round_trip():
    report = count_contact_jets(QUADRIC, 4, 3)
    from contactloci.oracle import JetCountReport
    assert JetCountReport.from_doc(report.to_doc()) == report


def test_non_smooth_reduction_is_detected():
    with pytest.raises(NonSmoothReductionError):
        count_contact_jets(CUBIC, 3, 3)  # p divides every partial coefficient


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        count_contact_jets(QUADRIC, 4, 7, budget=10)


def test_prime_validation():
    with pytest.raises(ValueError):
        count_contact_jets(QUADRIC, 3, 9)


@pytest.mark.parametrize("d,n", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (4, 3)])
def test_milnor_number_of_fermat_forms(d, n):
    terms = []
    for j in range(n):
        exps = [0] * n
        exps[j] = d
        terms.append((tuple(exps), 1))
    fermat = SparseIntPoly(n, tuple(terms))
    assert milnor_number_oracle(fermat) == (d - 1) ** n


def test_milnor_number_of_linear_form():
    assert milnor_number_oracle(parse_poly("x0", nvars=2)) == 0


def test_milnor_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        milnor_number_oracle(PERTURBED)


def test_non_isolated_singularity_is_detected():
    # x0^2 in two variables vanishes on a line together with its gradient
    degenerate = parse_poly("x0^2", nvars=2)
    with pytest.raises(NonIsolatedSingularityError):
        milnor_number_oracle(degenerate)
