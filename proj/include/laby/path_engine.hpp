#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "laby/matrix.hpp"
#include "laby/pattern.hpp"
#include "laby/rational.hpp"
#include "laby/substitution.hpp"

namespace laby {

// The six exit pairs: A top-bottom, B left-right, C top-right,
// D right-bottom, E bottom-left, F left-top. Squares inside a path carry the
// same six labels according to the sides of their two path neighbours
// (exit squares get a virtual neighbour outside the exit side).
enum class PathType : int { A = 0, B, C, D, E, F };

inline constexpr std::array<PathType, 6> kAllPathTypes = {
    PathType::A, PathType::B, PathType::C, PathType::D, PathType::E, PathType::F};

char path_type_letter(PathType type);
std::optional<PathType> parse_path_type(std::string_view text);
// stored orientation: first-named exit to second-named exit
std::pair<ExitName, ExitName> path_endpoints(PathType type);
// the path type connecting two distinct exits, ignoring orientation
PathType path_type_between(ExitName a, ExitName b);

const std::array<std::string, 6>& path_type_labels();
const std::array<std::string, 4>& reduced_row_labels();
const std::array<std::string, 4>& reduced_col_labels();

struct TypedPath {
    PathType kind = PathType::A;
    std::vector<SquareIndex> squares;
    std::vector<PathType> types;  // per-square type within this path
    std::size_t length() const { return squares.size(); }
};

// Unique tree path between the two exits named by `kind`.
// Requires a valid labyrinth pattern (or labyrinth-set grid).
TypedPath exit_path(const Pattern& pattern, PathType kind);
// path between any two exits, oriented from -> to
TypedPath exit_path(const Pattern& pattern, ExitName from, ExitName to);

// utility: the unique tree path between any two white squares; such paths
// carry no square types and no matrix semantics
std::vector<SquareIndex> tree_path(const Pattern& pattern, SquareIndex from, SquareIndex to);

// entry (i,j) = number of type-j squares in the type-i exit path
PathMatrix path_matrix(const Pattern& pattern);

// length vector = path matrix times the all-ones vector
std::array<BigInt, 6> path_length_vector(const PathMatrix& matrix);

// Q_{n,h}: type-j squares on path i of `set` that the rule sends to member h.
// The counting matrices sum to the path matrix of the set.
std::vector<CountingMatrix> counting_matrices(const LabyrinthSet& set,
                                              const PatternCollection& next,
                                              const AssignmentRule& rule);

struct RecursionReport {
    bool sum_ok = false;      // M(n) equals the sum of the counting matrices
    bool product_ok = false;  // M(n+1) equals sum_h Q_{n,h} * M_{n+1,h}
    std::vector<std::string> mismatches;
    bool pass() const { return sum_ok && product_ok; }
    std::string to_string() const;
};

RecursionReport verify_recursion(const PathMatrix& level_matrix,
                                 const std::vector<CountingMatrix>& counting,
                                 const std::vector<PathMatrix>& member_matrices,
                                 const PathMatrix& next_matrix);

// Replace each type-j square of `path` with the j-path of its assigned
// pattern; the concatenation is the corresponding path one level deeper.
TypedPath substitute_path(const TypedPath& path, const std::vector<const Pattern*>& per_square,
                          int next_width);

struct PathsIntersection {
    enum class Kind { SingleSquare, CommonSubpath };
    Kind kind = Kind::SingleSquare;
    std::vector<SquareIndex> squares;  // ordered along the top-bottom path
    bool contiguous_on_both = false;
    std::string to_string() const;
};

// intersection of the top-bottom and left-right paths; never empty for
// valid labyrinth patterns
PathsIntersection paths_intersection(const Pattern& pattern);

struct LengthSumReport {
    std::array<std::uint64_t, 6> lengths{};  // indexed by PathType
    bool holds = false;                      // A+B == max(E+C, F+D)
    std::string to_string() const;
};

LengthSumReport path_length_sum_identity(const Pattern& pattern);

using PolylinePoint = std::pair<Rational, Rational>;

// polyline through the centers of the level-n path squares, in [0,1]^2
std::vector<PolylinePoint> arc_approximation(const LabyrinthSet& set, ExitName from, ExitName to);
// exact length of an axis-aligned polyline
Rational polyline_length(const std::vector<PolylinePoint>& polyline);
// (k-1) / (2 m(n)) for a path of k squares in a level-n set
Rational arc_length_lower_bound(std::uint64_t path_length, const BigInt& side);
// every child path cell must lie inside a parent path cell
bool corridor_nested(const TypedPath& parent, const TypedPath& child, int next_width);

// Tracks the six exit paths across levels by substitution alone; no grid is
// built, so it reaches depths the grid cap forbids.
class PathCascade {
public:
    explicit PathCascade(const ConstructionPlan& plan);

    int level() const { return level_; }
    const TypedPath& path(PathType kind) const {
        return paths_[static_cast<std::size_t>(kind)];
    }
    PathMatrix matrix() const;  // tallied from the stored paths
    std::vector<CountingMatrix> counting_for_next() const;
    void advance();  // to the next plan level

private:
    const ConstructionPlan* plan_;
    int level_ = 1;
    std::array<TypedPath, 6> paths_;
};

}  // namespace laby
