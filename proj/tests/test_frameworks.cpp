#include <doctest.h>

#include <cmath>
#include <random>

#include "qcorr/errors.hpp"
#include "qcorr/frameworks.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/pauli.hpp"
#include "qcorr/states.hpp"
#include "support/oracles.hpp"

using namespace qcorr;

namespace {

// small lattice keeps unit tests fast; refinement recovers full precision
OptimizerSettings quick_settings() {
    OptimizerSettings s;
    s.grid_points = 400;
    return s;
}

const Direction kXAxis{1.0, 0.0, 0.0};
const Direction kYAxis{0.0, 1.0, 0.0};
const Direction kZAxis{0.0, 0.0, 1.0};

}  // namespace

TEST_CASE("per-direction quantum correlation of a bell-diagonal state") {
    // measuring axis j keeps c_j and erases the other two; the distance to
    // the measured state is the larger erased magnitude
    const TwoQubitState rho = build_bell_diagonal({0.3, 0.2, 0.1});
    CHECK(std::abs(q_at(rho, kXAxis) - 0.2) <= 1e-12);
    CHECK(std::abs(q_at(rho, kYAxis) - 0.3) <= 1e-12);
    CHECK(std::abs(q_at(rho, kZAxis) - 0.3) <= 1e-12);

    // every direction is equivalent for the equal-xy family
    const TwoQubitState star = build_rho_star(0.5);
    std::mt19937_64 rng(401);
    for (int rep = 0; rep < 5; ++rep) {
        CHECK(std::abs(q_at(star, oracles::random_direction(rng)) - 0.5) <= 1e-12);
    }

    // classical along x: measuring x reveals nothing
    const TwoQubitState classical = build_bell_diagonal({0.5, 0.0, 0.0});
    CHECK(q_at(classical, kXAxis) <= 1e-14);

    // cross-check a tilted direction against the charpoly oracle
    const Direction tilted = Direction::normalized(1.0, -2.0, 0.5);
    const ComplexMatrix chi = apply_local_measurement(rho.matrix(), tilted);
    CHECK(std::abs(q_at(rho, tilted) -
                   oracles::charpoly_trace_norm_distance(rho.matrix(), chi)) <= 1e-8);
}

TEST_CASE("per-direction classical correlation follows the kept component") {
    std::mt19937_64 rng(402);
    for (int rep = 0; rep < 10; ++rep) {
        const BellVector c = oracles::random_physical_bell(rng);
        const Direction n = oracles::random_direction(rng);
        const double mu = std::sqrt(c.x * c.x * n.x() * n.x() + c.y * c.y * n.y() * n.y() +
                                    c.z * c.z * n.z() * n.z());
        CHECK(std::abs(c_at(build_bell_diagonal(c), n) - mu) <= 1e-10);
    }

    const TwoQubitState star = build_rho_star(0.5);
    CHECK(c_at(star, kZAxis) <= 1e-14);
    CHECK(std::abs(c_at(star, kXAxis) - 0.5) <= 1e-12);

    // product states carry no correlation along any axis
    const ComplexMatrix prod =
        tensor_product(oracles::random_density(rng, 2), oracles::random_density(rng, 2));
    CHECK(c_at(TwoQubitState::from_matrix(prod), oracles::random_direction(rng)) <= 1e-12);
}

TEST_CASE("total correlation: fixed anchors") {
    // bell-diagonal: sum of |eigenvalue - 1/4|
    CHECK(std::abs(total(build_bell_diagonal({0.3, 0.2, 0.1})) - 0.3) <= 1e-12);
    CHECK(std::abs(total(build_bell_diagonal({-1.0, -1.0, -1.0})) - 1.5) <= 1e-12);

    std::mt19937_64 rng(403);
    const ComplexMatrix prod =
        tensor_product(oracles::random_density(rng, 2), oracles::random_density(rng, 2));
    CHECK(total(TwoQubitState::from_matrix(prod)) <= 1e-12);
}

TEST_CASE("global optimization recovers the closed-form optima") {
    const auto settings = quick_settings();

    const TwoQubitState rho = build_bell_diagonal({0.3, 0.2, 0.1});
    const OptimizationResult qmin = minimize_q(rho, settings);
    CHECK(std::abs(qmin.value - 0.2) <= 1e-8);
    // the optimum is measuring the strongest axis
    CHECK(std::abs(qmin.direction.x()) >= 0.999999);
    CHECK(qmin.evaluations > settings.grid_points);

    const OptimizationResult cmax = maximize_c(rho, settings);
    CHECK(std::abs(cmax.value - 0.3) <= 1e-8);
    CHECK(std::abs(cmax.direction.x()) >= 0.999999);

    // flat objective: any direction attains the optimum
    const TwoQubitState star = build_rho_star(0.5);
    CHECK(std::abs(minimize_q(star, settings).value - 0.5) <= 1e-9);
    const OptimizationResult star_c = maximize_c(star, settings);
    CHECK(std::abs(star_c.value - 0.5) <= 1e-8);
    CHECK(std::abs(star_c.direction.z()) <= 1e-3);

    const TwoQubitState mixed = build_bell_diagonal({0.0, 0.0, 0.0});
    CHECK(minimize_q(mixed, settings).value <= 1e-12);
    CHECK(maximize_c(mixed, settings).value <= 1e-12);
}

TEST_CASE("optimizer results are reproducible bit for bit") {
    const TwoQubitState star = build_rho_star(0.5);
    const auto settings = quick_settings();
    const OptimizationResult first = minimize_q(star, settings);
    const OptimizationResult second = minimize_q(star, settings);
    CHECK(first.value == second.value);
    CHECK(first.direction.x() == second.direction.x());
    CHECK(first.direction.y() == second.direction.y());
    CHECK(first.direction.z() == second.direction.z());
    CHECK(first.evaluations == second.evaluations);
}

TEST_CASE("optimizer settings are validated") {
    OptimizerSettings s;
    s.grid_points = 8;
    CHECK_THROWS_AS(validate(s), InputError);
    s = OptimizerSettings{};
    s.refine_tol = 0.0;
    CHECK_THROWS_AS(validate(s), InputError);
}

TEST_CASE("closed-form reference values") {
    const ClosedFormReference ref = closed_form_bell({0.3, 0.2, 0.1});
    CHECK(ref.q == 0.2);
    CHECK(ref.c == 0.3);
    CHECK(std::abs(ref.a_n - (std::sqrt(1.3) - 1.0)) <= 1e-15);
    CHECK(ref.b_n == ref.a_n);
    CHECK(std::abs(ref.c_prime - 2.0 * (std::sqrt(1.3) - 1.0)) <= 1e-15);

    // negative dominant component flips only the second Bloch vector
    const ClosedFormReference neg = closed_form_bell({-0.4, 0.2, 0.1});
    CHECK(neg.b_n == -neg.a_n);
    CHECK(neg.c == 0.4);

    const ClosedFormReference zero = closed_form_bell({0.0, 0.0, 0.0});
    CHECK(zero.q == 0.0);
    CHECK(zero.c == 0.0);
    CHECK(zero.c_prime == 0.0);
    CHECK(zero.b_n == 0.0);

    CHECK_THROWS_AS(closed_form_bell({1.0, 1.0, 1.0}), UnphysicalStateError);
}

TEST_CASE("closest product to a single-axis classical state") {
    // distance realized: 2(sqrt(1 + c) - 1), Bloch lengths sqrt(1 + c) - 1
    const double c = 0.5;
    const TwoQubitState chi = build_bell_diagonal({c, 0.0, 0.0});
    const TwoQubitState pi = closest_product_to_single_axis_classical(c, Axis::x);
    CHECK(pi.tag() == StateTag::product);
    const double expected = 2.0 * (std::sqrt(1.5) - 1.0);
    CHECK(std::abs(trace_norm_distance(chi.matrix(), pi.matrix()) - expected) <= 1e-12);

    // swapping which qubit carries the sign leaves the distance unchanged
    const TwoQubitState chi_neg = build_bell_diagonal({0.0, -c, 0.0});
    const TwoQubitState pi_neg = closest_product_to_single_axis_classical(-c, Axis::y);
    CHECK(std::abs(trace_norm_distance(chi_neg.matrix(), pi_neg.matrix()) - expected) <=
          1e-12);
    const double a = std::sqrt(1.5) - 1.0;
    PauliCoefficients flipped{};
    flipped[0][0] = 1.0;
    flipped[2][0] = -a;  // sign on the first qubit instead
    flipped[0][2] = a;
    flipped[2][2] = -a * a;
    CHECK(std::abs(trace_norm_distance(chi_neg.matrix(), pauli_compose(flipped)) -
                   expected) <= 1e-12);

    CHECK(closest_product_to_single_axis_classical(0.0, Axis::z)
              .matrix()
              .max_abs_diff(ComplexMatrix::identity(4).scaled(0.25)) == 0.0);
    CHECK_THROWS_AS(closest_product_to_single_axis_classical(1.5, Axis::x), InputError);
}

TEST_CASE("closest-product distance formula holds across strengths") {
    std::mt19937_64 rng(404);
    for (int rep = 0; rep < 20; ++rep) {
        const double c = 1e-3 + (1.0 - 1e-3) * oracles::uniform01(rng);
        const Axis axis = static_cast<Axis>(static_cast<int>(rng() % 3));
        BellVector v{};
        (axis == Axis::x ? v.x : axis == Axis::y ? v.y : v.z) = c;
        const TwoQubitState chi = build_bell_diagonal(v);
        const TwoQubitState pi = closest_product_to_single_axis_classical(c, axis);
        const double expected = 2.0 * (std::sqrt(1.0 + c) - 1.0);
        CHECK(std::abs(trace_norm_distance(chi.matrix(), pi.matrix()) - expected) <= 1e-12);
    }
}

TEST_CASE("numeric product search approaches the exact optimum") {
    const TwoQubitState chi = build_bell_diagonal({0.5, 0.0, 0.0});
    const double exact = 2.0 * (std::sqrt(1.5) - 1.0);
    const ProductSearchResult found = closest_product_search(chi.matrix(), 50, 11);
    CHECK(found.distance >= exact - 1e-9);  // nothing beats the true optimum
    CHECK(found.distance <= exact + 1e-4);
    CHECK(found.evaluations > 0);

    // a product target is its own optimum, found from the marginal start
    std::mt19937_64 rng(405);
    const ComplexMatrix prod =
        tensor_product(oracles::random_density(rng, 2), oracles::random_density(rng, 2));
    CHECK(closest_product_search(prod, 10, 12).distance <= 1e-6);
}

TEST_CASE("per-direction closest-product distance") {
    const TwoQubitState star = build_rho_star(0.5);
    const CPrimeValue pole = c_prime_at(star, kZAxis);
    CHECK_FALSE(pole.approximate);
    CHECK(pole.value <= 1e-12);

    const double equator_expected = 2.0 * (std::sqrt(1.5) - 1.0);
    CHECK(std::abs(c_prime_at(star, kXAxis).value - equator_expected) <= 1e-12);
    CHECK(std::abs(c_prime_at(star, kYAxis).value - equator_expected) <= 1e-12);

    // never exceeds the classical correlation along the same direction
    std::mt19937_64 rng(406);
    for (int rep = 0; rep < 10; ++rep) {
        const TwoQubitState rho = build_bell_diagonal(oracles::random_physical_bell(rng));
        const Direction n = oracles::random_direction(rng);
        CHECK(c_prime_at(rho, n).value <= c_at(rho, n) + 1e-9);
    }

    // non-bell-diagonal input falls back to the numeric search
    const ComplexMatrix general = oracles::random_density(rng, 4);
    const TwoQubitState rho_g = TwoQubitState::from_matrix(general);
    const Direction n = oracles::random_direction(rng);
    const CPrimeValue approx = c_prime_at(rho_g, n);
    CHECK(approx.approximate);
    CHECK(approx.value >= 0.0);
    CHECK(approx.value <= c_at(rho_g, n) + 1e-4);
}

TEST_CASE("framework comparison on a generic bell-diagonal state") {
    const TwoQubitState rho = build_bell_diagonal({0.3, 0.2, 0.1});
    const auto triples = evaluate_all_frameworks(rho, quick_settings());
    REQUIRE(triples.size() == 4);
    CHECK(triples[0].framework == Framework::measurement_based_a);
    CHECK(triples[1].framework == Framework::measurement_based_b);
    CHECK(triples[2].framework == Framework::measurement_independent);
    CHECK(triples[3].framework == Framework::independent_optimization);

    const CorrelationTriple& ind = triples[3];
    CHECK(std::abs(ind.q - 0.2) <= 1e-8);
    CHECK(std::abs(ind.c - 0.3) <= 1e-8);
    CHECK(std::abs(ind.t - 0.3) <= 1e-12);

    // with distinct magnitudes the same axis wins both optimizations, so the
    // shared-direction strategies agree with the independent one
    const CorrelationTriple& a = triples[0];
    CHECK(std::abs(a.q - ind.q) <= 1e-8);
    CHECK(std::abs(a.c - ind.c) <= 1e-6);

    const CorrelationTriple& mi = triples[2];
    CHECK(mi.available);
    CHECK_FALSE(mi.approximate);
    CHECK(mi.q == 0.2);
    CHECK(std::abs(mi.c - 2.0 * (std::sqrt(1.3) - 1.0)) <= 1e-15);
    CHECK(mi.t > 0.0);
    CHECK(mi.note.empty());

    // all three totals agree except the measurement-independent one, which
    // measures distance to a different anchor state
    CHECK(a.t == ind.t);
    CHECK(triples[1].t == ind.t);
}

TEST_CASE("framework comparison flags ambiguity and unavailability") {
    const auto star_triples = evaluate_all_frameworks(build_rho_star(0.5), quick_settings());
    CHECK(star_triples[0].note == "ambiguous under degeneracy");
    CHECK(star_triples[2].note == "ambiguous under degeneracy");  // tied magnitudes

    std::mt19937_64 rng(407);
    const ComplexMatrix prod =
        tensor_product(oracles::random_density(rng, 2), oracles::random_density(rng, 2));
    const auto prod_triples =
        evaluate_all_frameworks(TwoQubitState::from_matrix(prod), quick_settings());
    CHECK_FALSE(prod_triples[2].available);
    CHECK_FALSE(prod_triples[2].note.empty());
    CHECK(prod_triples[3].q <= 1e-8);
    CHECK(prod_triples[3].c <= 1e-8);
    CHECK(prod_triples[3].t <= 1e-12);

    // maximally mixed is bell-diagonal with all-zero correlations: available
    const auto mixed_triples =
        evaluate_all_frameworks(build_bell_diagonal({0.0, 0.0, 0.0}), quick_settings());
    CHECK(mixed_triples[2].available);
    CHECK(mixed_triples[2].q == 0.0);
    CHECK(mixed_triples[2].c == 0.0);
    CHECK(mixed_triples[2].t <= 1e-12);
}

TEST_CASE("correlation measures are invariant under local unitaries") {
    std::mt19937_64 rng(408);
    const auto settings = quick_settings();
    for (int rep = 0; rep < 3; ++rep) {
        const TwoQubitState rho =
            build_bell_diagonal(oracles::random_physical_bell(rng));
        const ComplexMatrix u =
            tensor_product(oracles::random_unitary2(rng), oracles::random_unitary2(rng));
        const TwoQubitState rotated =
            TwoQubitState::from_matrix(u * rho.matrix() * u.adjoint());

        CHECK(std::abs(total(rotated) - total(rho)) <= 1e-10);
        CHECK(std::abs(minimize_q(rotated, settings).value -
                       minimize_q(rho, settings).value) <= 1e-6);
        CHECK(std::abs(maximize_c(rotated, settings).value -
                       maximize_c(rho, settings).value) <= 1e-6);
    }
}
