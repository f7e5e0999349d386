#pragma once

#include <array>
#include <string>
#include <vector>

#include "laby/matrix.hpp"
#include "laby/path_engine.hpp"
#include "laby/pattern.hpp"
#include "laby/rational.hpp"
#include "laby/substitution.hpp"

namespace laby {

// 4x4 fold of a path matrix: add row E into row C and row F into row D,
// then drop the last two columns. Rows (A, B, CE, DF), columns (A, B, C, D).
ReducedPathMatrix reduce_path_matrix(const PathMatrix& matrix);
// same fold computed as a product with the two 0/1 projection matrices;
// second route for cross-checking the row-fold
ReducedPathMatrix reduce_via_projection(const PathMatrix& matrix);

// Fixed lower-bound matrix for blocked patterns of width m >= 4. "Virtual"
// because no pattern need realize it.
ReducedPathMatrix virtual_matrix(int width);

// Dyadic rational just below the optimal weight (sqrt(17)-3)/4, with
// c* < (sqrt(17)-3)/4 <= c* + 2^-40. All certified checks evaluate at this
// exact rational, which is itself an admissible weight in (0,1); no verdict
// ever depends on floating point or on the irrational optimum.
Rational certified_c();
// min(2c, (1-c)/(1+c)), the largest growth margin valid for every width
Rational default_kappa(const Rational& c);

struct InequalityReport {
    bool pass = false;
    std::array<Rational, 4> lhs{};  // reduced matrix applied to (1,1,1+c,1+c)
    std::array<Rational, 4> rhs{};
    std::string detail;
    std::string to_string() const;
};

// reduced matrix of a horizontally and vertically blocked pattern dominates
// the virtual matrix on the weight vector (1,1,1+c,1+c); refuses unblocked input
InequalityReport blocked_inequality_check(const Pattern& pattern, const Rational& c);
// the elementwise comparison itself, for callers that already hold a matrix
InequalityReport reduced_vector_inequality(const ReducedPathMatrix& reduced, int width,
                                           const Rational& c);

struct KappaReport {
    bool pass = false;
    bool coefficient_form_holds = false;  // kappa <= 2c and kappa(1+c) <= 1-c
    int first_failing_width = 0;          // 0 when every width passes
    std::string to_string() const;
};

// virtual-matrix growth margin: L(m)(1,1,1+c,1+c) >= (m+kappa)(1,1,1+c,1+c)
// for every width in [lo, hi]; both sides are exact rationals
KappaReport kappa_bound_check(int width_lo, int width_hi, const Rational& c,
                              const Rational& kappa);

struct ReducedProductReport {
    bool grid_matches_product = false;  // reduced matrix of the built set == ordered product
    bool fold_commutes = false;         // reduce(prod M_k) == prod reduce(M_k)
    ReducedPathMatrix from_grid;
    ReducedPathMatrix from_product;
    bool pass() const { return grid_matches_product && fold_commutes; }
};

// mixed plans only: the reduced matrix of the level-n set equals the ordered
// product of the per-level reduced matrices
ReducedProductReport reduced_product_check(const ConstructionPlan& plan, int n,
                                           const BuildOptions& options = {});

// Per-level growth of the normalized length vector
// v_n = prod_k (reduced(M_k)/m_k) * (1,1,1,1), with the certified lower bound
// (1/(1+c)) prod_k (1 + kappa/m_k) when every pattern is blocked (mixed case).
struct GrowthDiagnostics {
    bool mixed = false;
    bool all_blocked = false;
    bool bound_asserted = false;  // mixed and all patterns blocked
    Rational c;
    Rational kappa;

    struct Level {
        int level = 0;
        std::array<Rational, 4> v{};
        Rational min_entry;
        Rational lower_bound;
        Rational harmonic_partial;  // sum of 1/m_k, the divergence-condition term
        bool bound_holds = false;
    };
    std::vector<Level> levels;
    bool all_bounds_hold() const;
};

GrowthDiagnostics growth_diagnostics(const ConstructionPlan& plan, int n);

// d_n = log length_i(n) / log m(n) per exit pair, with running inf/sup.
// Lengths and sides stay exact; only the quotient is floating point.
struct DimensionEstimate {
    struct Level {
        int level = 0;
        std::array<BigInt, 6> lengths{};
        BigInt side;  // m(n)
        std::array<double, 6> d{};
    };
    std::vector<Level> levels;
    std::array<double, 6> inf_d{};
    std::array<double, 6> sup_d{};
};

DimensionEstimate box_dimension_estimate(const ConstructionPlan& plan, int n_max);

// Truncated exit-coordinate series: the top/bottom exit abscissa is
// sum_k (c_k - 1)/m(k), the left/right exit ordinate sum_k (m_k - r_k)/m(k),
// both within 1/m(N) after N terms.
struct ExitCoordinates {
    std::vector<Rational> top_abscissa_partials;
    std::vector<Rational> left_ordinate_partials;
    Rational error_bound;  // 1/m(N)
};

ExitCoordinates exit_coordinates(const ConstructionPlan& plan, int terms);

}  // namespace laby
