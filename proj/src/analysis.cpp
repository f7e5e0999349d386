#include "laby/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace laby {

ReducedPathMatrix reduce_path_matrix(const PathMatrix& matrix) {
    ReducedPathMatrix out;
    const std::size_t fold[4][2] = {{0, 0}, {1, 1}, {2, 4}, {3, 5}};  // A, B, C+E, D+F
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            out.at(r, c) = matrix.at(fold[r][0], c);
            if (fold[r][1] != fold[r][0]) out.at(r, c) += matrix.at(fold[r][1], c);
        }
    return out;
}

ReducedPathMatrix reduce_via_projection(const PathMatrix& matrix) {
    // left projection folds rows E,F into C,D; right projection keeps the
    // first four columns
    int left[4][6] = {{1, 0, 0, 0, 0, 0},
                      {0, 1, 0, 0, 0, 0},
                      {0, 0, 1, 0, 1, 0},
                      {0, 0, 0, 1, 0, 1}};
    int right[6][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                       {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    ReducedPathMatrix out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            BigInt acc;
            for (std::size_t p = 0; p < 6; ++p) {
                if (!left[i][p]) continue;
                for (std::size_t q = 0; q < 6; ++q)
                    if (right[q][j]) acc += matrix.at(p, q);
            }
            out.at(i, j) = acc;
        }
    return out;
}

ReducedPathMatrix virtual_matrix(int width) {
    if (width < 4)
        throw std::invalid_argument("virtual matrix needs width >= 4 (blocked patterns do not exist below)");
    ReducedPathMatrix out;
    const BigInt m(width);
    out.at(0, 0) = m - BigInt(2);
    out.at(0, 2) = BigInt(1);
    out.at(0, 3) = BigInt(1);
    out.at(1, 1) = m - BigInt(2);
    out.at(1, 2) = BigInt(1);
    out.at(1, 3) = BigInt(1);
    out.at(2, 0) = BigInt(1);
    out.at(2, 1) = BigInt(1);
    out.at(2, 2) = m - BigInt(1);
    out.at(3, 0) = BigInt(1);
    out.at(3, 1) = BigInt(1);
    out.at(3, 3) = m - BigInt(1);
    return out;
}

namespace {

unsigned __int128 isqrt_u128(unsigned __int128 n) {
    unsigned __int128 x = 0;
    unsigned __int128 bit = static_cast<unsigned __int128>(1) << 126;
    while (bit > n) bit >>= 2;
    while (bit) {
        if (n >= x + bit) {
            n -= x + bit;
            x = (x >> 1) + bit;
        } else {
            x >>= 1;
        }
        bit >>= 2;
    }
    return x;
}

std::array<Rational, 4> weight_vector(const Rational& c) {
    Rational one(1);
    return {one, one, one + c, one + c};
}

}  // namespace

Rational certified_c() {
    // floor(sqrt(17) * 2^38) via integer square root of 17 * 2^76
    unsigned __int128 arg = static_cast<unsigned __int128>(17) << 76;
    std::uint64_t root = static_cast<std::uint64_t>(isqrt_u128(arg));
    BigInt numerator = BigInt::from_uint64(root) - BigInt(3) * BigInt::pow(BigInt(2), 38);
    return Rational(numerator, BigInt::pow(BigInt(2), 40));
}

Rational default_kappa(const Rational& c) {
    Rational twice = Rational(2) * c;
    Rational ratio = (Rational(1) - c) / (Rational(1) + c);
    return std::min(twice, ratio);
}

std::string InequalityReport::to_string() const {
    std::ostringstream os;
    os << (pass ? "holds" : "FAILS");
    if (!detail.empty()) os << " (" << detail << ")";
    os << "\n  lhs:";
    for (const Rational& v : lhs) os << ' ' << v;
    os << "\n  rhs:";
    for (const Rational& v : rhs) os << ' ' << v;
    return os.str();
}

InequalityReport reduced_vector_inequality(const ReducedPathMatrix& reduced, int width,
                                           const Rational& c) {
    if (c <= Rational(0) || c >= Rational(1))
        throw std::invalid_argument("weight c must lie in (0,1)");
    InequalityReport report;
    report.lhs = reduced.apply(weight_vector(c));
    report.rhs = virtual_matrix(width).apply(weight_vector(c));
    report.pass = true;
    for (std::size_t i = 0; i < 4; ++i)
        if (report.lhs[i] < report.rhs[i]) report.pass = false;
    return report;
}

InequalityReport blocked_inequality_check(const Pattern& pattern, const Rational& c) {
    if (!is_horizontally_blocked(pattern) || !is_vertically_blocked(pattern))
        throw std::invalid_argument(
            "pattern '" + pattern.name() +
            "' is not both horizontally and vertically blocked; the bound does not apply");
    InequalityReport report =
        reduced_vector_inequality(reduce_path_matrix(path_matrix(pattern)), pattern.width(), c);
    report.detail = pattern.name() + ", width " + std::to_string(pattern.width());
    return report;
}

std::string KappaReport::to_string() const {
    std::ostringstream os;
    os << (pass ? "holds for every width" : "FAILS at width " + std::to_string(first_failing_width));
    os << "; coefficient form " << (coefficient_form_holds ? "holds" : "fails");
    return os.str();
}

KappaReport kappa_bound_check(int width_lo, int width_hi, const Rational& c,
                              const Rational& kappa) {
    if (width_lo < 4 || width_hi < width_lo)
        throw std::invalid_argument("width range must satisfy 4 <= lo <= hi");
    KappaReport report;
    // both sides are degree-1 in the width, so the two coefficient
    // comparisons decide the inequality for every width at once
    report.coefficient_form_holds =
        kappa <= Rational(2) * c && kappa * (Rational(1) + c) <= Rational(1) - c;

    report.pass = true;
    const std::array<Rational, 4> w = weight_vector(c);
    for (int m = width_lo; m <= width_hi; ++m) {
        std::array<Rational, 4> lhs = virtual_matrix(m).apply(w);
        Rational scale = Rational(m) + kappa;  // m (1 + kappa/m)
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            if (lhs[i] < scale * w[i]) ok = false;
        if (!ok) {
            report.pass = false;
            report.first_failing_width = m;
            break;
        }
    }
    return report;
}

ReducedProductReport reduced_product_check(const ConstructionPlan& plan, int n,
                                           const BuildOptions& options) {
    if (!plan.is_mixed())
        throw std::invalid_argument("reduced product formula applies to mixed plans only");
    if (n < 1 || n > plan.depth()) throw std::invalid_argument("level out of range");

    ReducedProductReport report;
    PathMatrix full_product;
    bool first = true;
    report.from_product = ReducedPathMatrix::identity();
    for (int k = 1; k <= n; ++k) {
        PathMatrix mk = path_matrix(plan.collection(k).members.front());
        report.from_product = report.from_product * reduce_path_matrix(mk);
        full_product = first ? mk : full_product * mk;
        first = false;
    }
    report.fold_commutes = reduce_path_matrix(full_product) == report.from_product;

    LabyrinthSet set = build_to_level(plan, n, options);
    report.from_grid = reduce_path_matrix(path_matrix(set.grid));
    report.grid_matches_product = report.from_grid == report.from_product;
    return report;
}

bool GrowthDiagnostics::all_bounds_hold() const {
    return std::all_of(levels.begin(), levels.end(),
                       [](const Level& l) { return l.bound_holds; });
}

GrowthDiagnostics growth_diagnostics(const ConstructionPlan& plan, int n) {
    if (n < 1 || n > plan.depth()) throw std::invalid_argument("level out of range");

    GrowthDiagnostics diag;
    diag.mixed = plan.is_mixed();
    diag.c = certified_c();
    diag.kappa = default_kappa(diag.c);
    diag.all_blocked = true;
    for (int k = 1; k <= n; ++k)
        for (const Pattern& p : plan.collection(k).members)
            if (!is_horizontally_blocked(p) || !is_vertically_blocked(p)) diag.all_blocked = false;
    diag.bound_asserted = diag.mixed && diag.all_blocked;

    // normalized vectors: reduced product route for mixed plans, full
    // recursion via the path cascade otherwise
    std::vector<std::array<Rational, 4>> vectors;
    if (diag.mixed) {
        ReducedPathMatrix product = ReducedPathMatrix::identity();
        BigInt denom(1);
        for (int k = 1; k <= n; ++k) {
            product = product * reduce_path_matrix(path_matrix(plan.collection(k).members.front()));
            denom = denom * BigInt(plan.width_at(k));
            std::array<BigInt, 4> sums = product.row_sums();
            std::array<Rational, 4> v;
            for (std::size_t i = 0; i < 4; ++i) v[i] = Rational(sums[i], denom);
            vectors.push_back(v);
        }
    } else {
        PathCascade cascade(plan);
        BigInt denom(plan.width_at(1));
        for (int k = 1; k <= n; ++k) {
            if (k > 1) {
                cascade.advance();
                denom = denom * BigInt(plan.width_at(k));
            }
            std::array<BigInt, 4> sums = reduce_path_matrix(cascade.matrix()).row_sums();
            std::array<Rational, 4> v;
            for (std::size_t i = 0; i < 4; ++i) v[i] = Rational(sums[i], denom);
            vectors.push_back(v);
        }
    }

    Rational bound_product = Rational(1) / (Rational(1) + diag.c);
    Rational harmonic;
    for (int k = 1; k <= n; ++k) {
        GrowthDiagnostics::Level level;
        level.level = k;
        level.v = vectors[static_cast<std::size_t>(k - 1)];
        level.min_entry = *std::min_element(level.v.begin(), level.v.end());
        bound_product *= Rational(1) + diag.kappa / Rational(plan.width_at(k));
        harmonic += Rational(1) / Rational(plan.width_at(k));
        level.lower_bound = bound_product;
        level.harmonic_partial = harmonic;
        level.bound_holds = !diag.bound_asserted || level.min_entry >= level.lower_bound;
        diag.levels.push_back(level);
    }
    return diag;
}

DimensionEstimate box_dimension_estimate(const ConstructionPlan& plan, int n_max) {
    if (n_max < 1 || n_max > plan.depth()) throw std::invalid_argument("level out of range");

    DimensionEstimate estimate;
    estimate.inf_d.fill(2.0);
    estimate.sup_d.fill(0.0);

    auto push_level = [&](int level, const std::array<BigInt, 6>& lengths, const BigInt& side) {
        DimensionEstimate::Level entry;
        entry.level = level;
        entry.lengths = lengths;
        entry.side = side;
        double log_side = side.log();
        for (std::size_t i = 0; i < 6; ++i) {
            entry.d[i] = lengths[i] == side ? 1.0 : lengths[i].log() / log_side;
            if (entry.d[i] < -1e-12 || entry.d[i] > 2.0 + 1e-12)
                throw std::logic_error("dimension estimate escaped [0,2]");
            estimate.inf_d[i] = std::min(estimate.inf_d[i], entry.d[i]);
            estimate.sup_d[i] = std::max(estimate.sup_d[i], entry.d[i]);
        }
        estimate.levels.push_back(entry);
    };

    if (plan.is_mixed()) {
        PathMatrix product;
        BigInt side(1);
        bool first = true;
        for (int k = 1; k <= n_max; ++k) {
            PathMatrix mk = path_matrix(plan.collection(k).members.front());
            product = first ? mk : product * mk;
            first = false;
            side = side * BigInt(plan.width_at(k));
            push_level(k, product.row_sums(), side);
        }
    } else {
        PathCascade cascade(plan);
        BigInt side(plan.width_at(1));
        push_level(1, cascade.matrix().row_sums(), side);
        for (int k = 2; k <= n_max; ++k) {
            cascade.advance();
            side = side * BigInt(plan.width_at(k));
            push_level(k, cascade.matrix().row_sums(), side);
        }
    }
    return estimate;
}

ExitCoordinates exit_coordinates(const ConstructionPlan& plan, int terms) {
    if (terms < 1 || terms > plan.depth())
        throw std::invalid_argument("term count out of range");
    ExitCoordinates coords;
    Rational top, left;
    BigInt side(1);
    for (int k = 1; k <= terms; ++k) {
        const Pattern& member = plan.collection(k).members.front();
        ExitScan scan = find_exits(member);
        if (!scan.ok())
            throw std::invalid_argument("pattern '" + member.name() + "' has no unique exits");
        side = side * BigInt(plan.width_at(k));
        top += Rational(BigInt(scan.positions->c - 1), side);
        left += Rational(BigInt(plan.width_at(k) - scan.positions->r), side);
        coords.top_abscissa_partials.push_back(top);
        coords.left_ordinate_partials.push_back(left);
    }
    coords.error_bound = Rational(BigInt(1), side);
    return coords;
}

}  // namespace laby
