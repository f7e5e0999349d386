#include "laby/path_engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace laby {

char path_type_letter(PathType type) { return "ABCDEF"[static_cast<int>(type)]; }

std::optional<PathType> parse_path_type(std::string_view text) {
    if (text.size() != 1) return std::nullopt;
    const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (ch < 'A' || ch > 'F') return std::nullopt;
    return static_cast<PathType>(ch - 'A');
}

std::pair<ExitName, ExitName> path_endpoints(PathType type) {
    switch (type) {
        case PathType::A: return {ExitName::Top, ExitName::Bottom};
        case PathType::B: return {ExitName::Left, ExitName::Right};
        case PathType::C: return {ExitName::Top, ExitName::Right};
        case PathType::D: return {ExitName::Right, ExitName::Bottom};
        case PathType::E: return {ExitName::Bottom, ExitName::Left};
        case PathType::F: return {ExitName::Left, ExitName::Top};
    }
    throw std::logic_error("bad path type");
}

PathType path_type_between(ExitName a, ExitName b) {
    for (PathType t : kAllPathTypes) {
        auto [p, q] = path_endpoints(t);
        if ((p == a && q == b) || (p == b && q == a)) return t;
    }
    throw std::invalid_argument("no path type connects an exit with itself");
}

const std::array<std::string, 6>& path_type_labels() {
    static const std::array<std::string, 6> labels = {"A", "B", "C", "D", "E", "F"};
    return labels;
}

const std::array<std::string, 4>& reduced_row_labels() {
    static const std::array<std::string, 4> labels = {"A", "B", "CE", "DF"};
    return labels;
}

const std::array<std::string, 4>& reduced_col_labels() {
    static const std::array<std::string, 4> labels = {"A", "B", "C", "D"};
    return labels;
}

namespace {

// which side of `from` the neighbour `to` lies on
ExitName side_towards(SquareIndex from, SquareIndex to) {
    if (to.col == from.col + 1 && to.row == from.row) return ExitName::Right;
    if (to.col == from.col - 1 && to.row == from.row) return ExitName::Left;
    if (to.col == from.col && to.row == from.row + 1) return ExitName::Top;
    if (to.col == from.col && to.row == from.row - 1) return ExitName::Bottom;
    throw std::logic_error("squares are not side-adjacent");
}

PathType classify(ExitName a, ExitName b) {
    if (a == b) throw std::logic_error("square type needs two distinct neighbour sides");
    auto has = [&](ExitName x) { return a == x || b == x; };
    if (has(ExitName::Top) && has(ExitName::Bottom)) return PathType::A;
    if (has(ExitName::Left) && has(ExitName::Right)) return PathType::B;
    if (has(ExitName::Top) && has(ExitName::Right)) return PathType::C;
    if (has(ExitName::Bottom) && has(ExitName::Right)) return PathType::D;
    if (has(ExitName::Left) && has(ExitName::Bottom)) return PathType::E;
    return PathType::F;  // left + top
}

// unique tree path between two white squares (breadth-first parent walk)
std::vector<SquareIndex> grid_path(const Pattern& grid, SquareIndex from, SquareIndex to) {
    const int m = grid.width();
    auto idx = [m](SquareIndex sq) { return static_cast<std::size_t>(sq.row) * m + sq.col; };
    std::vector<std::int32_t> parent(static_cast<std::size_t>(m) * m, -2);
    std::deque<SquareIndex> queue{from};
    parent[idx(from)] = -1;
    const int dc[4] = {1, -1, 0, 0};
    const int dr[4] = {0, 0, 1, -1};
    while (!queue.empty()) {
        SquareIndex v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int d = 0; d < 4; ++d) {
            SquareIndex w{v.col + dc[d], v.row + dr[d]};
            if (!grid.in_range(w.col, w.row) || !grid.is_white(w)) continue;
            if (parent[idx(w)] != -2) continue;
            parent[idx(w)] = static_cast<std::int32_t>(idx(v));
            queue.push_back(w);
        }
    }
    if (parent[idx(to)] == -2)
        throw std::logic_error("exits are not connected; input is not a labyrinth pattern");
    std::vector<SquareIndex> path;
    SquareIndex cur = to;
    while (true) {
        path.push_back(cur);
        std::int32_t p = parent[idx(cur)];
        if (p < 0) break;
        cur = {static_cast<int>(p % m), static_cast<int>(p / m)};
    }
    std::reverse(path.begin(), path.end());
    return path;
}

TypedPath typed_path_between(const Pattern& grid, SquareIndex from, SquareIndex to,
                             ExitName from_side, ExitName to_side, PathType kind) {
    TypedPath out;
    out.kind = kind;
    out.squares = grid_path(grid, from, to);
    if (out.squares.size() < 2)
        throw std::invalid_argument("degenerate single-square exit path; input rejected");
    out.types.reserve(out.squares.size());
    for (std::size_t i = 0; i < out.squares.size(); ++i) {
        ExitName prev = i == 0 ? from_side : side_towards(out.squares[i], out.squares[i - 1]);
        ExitName next = i + 1 == out.squares.size() ? to_side
                                                    : side_towards(out.squares[i], out.squares[i + 1]);
        out.types.push_back(classify(prev, next));
    }
    return out;
}

ExitScan require_valid(const Pattern& pattern) {
    ValidationReport report = validate_labyrinth_pattern(pattern);
    if (!report.pass())
        throw std::invalid_argument("paths are defined for labyrinth patterns only:\n" +
                                    report.to_string());
    return find_exits(pattern);
}

TypedPath exit_path_scanned(const Pattern& pattern, const ExitSet& exits, PathType kind) {
    auto [from_name, to_name] = path_endpoints(kind);
    return typed_path_between(pattern, exits.at(from_name), exits.at(to_name), from_name, to_name,
                              kind);
}

}  // namespace

TypedPath exit_path(const Pattern& pattern, PathType kind) {
    ExitScan scan = require_valid(pattern);
    return exit_path_scanned(pattern, *scan.exits, kind);
}

TypedPath exit_path(const Pattern& pattern, ExitName from, ExitName to) {
    if (from == to) throw std::invalid_argument("exit path needs two distinct exits");
    ExitScan scan = require_valid(pattern);
    return typed_path_between(pattern, scan.exits->at(from), scan.exits->at(to), from, to,
                              path_type_between(from, to));
}

std::vector<SquareIndex> tree_path(const Pattern& pattern, SquareIndex from, SquareIndex to) {
    if (!pattern.in_range(from.col, from.row) || !pattern.is_white(from) ||
        !pattern.in_range(to.col, to.row) || !pattern.is_white(to))
        throw std::invalid_argument("tree_path endpoints must be white squares");
    require_valid(pattern);
    return grid_path(pattern, from, to);
}

PathMatrix path_matrix(const Pattern& pattern) {
    ExitScan scan = require_valid(pattern);
    PathMatrix m;
    for (PathType kind : kAllPathTypes) {
        TypedPath path = exit_path_scanned(pattern, *scan.exits, kind);
        for (PathType t : path.types)
            m.at(static_cast<std::size_t>(kind), static_cast<std::size_t>(t)) += BigInt(1);
    }
    return m;
}

std::array<BigInt, 6> path_length_vector(const PathMatrix& matrix) { return matrix.row_sums(); }

std::vector<CountingMatrix> counting_matrices(const LabyrinthSet& set,
                                              const PatternCollection& next,
                                              const AssignmentRule& rule) {
    ExitScan scan = require_valid(set.grid);
    std::vector<CountingMatrix> out(next.member_count());
    for (PathType kind : kAllPathTypes) {
        TypedPath path = exit_path_scanned(set.grid, *scan.exits, kind);
        for (std::size_t i = 0; i < path.squares.size(); ++i) {
            int member = rule.member_for(path.squares[i], set.level, next.member_count());
            out[member].at(static_cast<std::size_t>(kind),
                           static_cast<std::size_t>(path.types[i])) += BigInt(1);
        }
    }
    return out;
}

std::string RecursionReport::to_string() const {
    std::ostringstream os;
    os << "counting-sum identity: " << (sum_ok ? "OK" : "FAIL") << '\n';
    os << "level-step identity:   " << (product_ok ? "OK" : "FAIL") << '\n';
    for (const std::string& m : mismatches) os << "  " << m << '\n';
    return os.str();
}

RecursionReport verify_recursion(const PathMatrix& level_matrix,
                                 const std::vector<CountingMatrix>& counting,
                                 const std::vector<PathMatrix>& member_matrices,
                                 const PathMatrix& next_matrix) {
    if (counting.size() != member_matrices.size())
        throw std::invalid_argument("one counting matrix per member pattern expected");
    RecursionReport report;

    CountingMatrix sum;
    for (const CountingMatrix& q : counting) sum += q;
    report.sum_ok = sum == level_matrix;

    PathMatrix combined;
    for (std::size_t h = 0; h < counting.size(); ++h) combined += counting[h] * member_matrices[h];
    report.product_ok = combined == next_matrix;

    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            if (!(sum.at(i, j) == level_matrix.at(i, j)))
                report.mismatches.push_back(
                    "sum(" + std::string(1, "ABCDEF"[i]) + "," + std::string(1, "ABCDEF"[j]) +
                    "): " + sum.at(i, j).to_string() + " vs " + level_matrix.at(i, j).to_string());
            if (!(combined.at(i, j) == next_matrix.at(i, j)))
                report.mismatches.push_back(
                    "step(" + std::string(1, "ABCDEF"[i]) + "," + std::string(1, "ABCDEF"[j]) +
                    "): " + combined.at(i, j).to_string() + " vs " + next_matrix.at(i, j).to_string());
        }
    return report;
}

TypedPath substitute_path(const TypedPath& path, const std::vector<const Pattern*>& per_square,
                          int next_width) {
    if (per_square.size() != path.squares.size())
        throw std::invalid_argument("substitute_path: one pattern per path square expected");
    const auto endpoints = path_endpoints(path.kind);

    TypedPath out;
    out.kind = path.kind;
    for (std::size_t i = 0; i < path.squares.size(); ++i) {
        const Pattern& p = *per_square[i];
        if (p.width() != next_width)
            throw std::invalid_argument("substitute_path: pattern width mismatch at seam");
        ExitName entry = i == 0 ? endpoints.first
                                : side_towards(path.squares[i], path.squares[i - 1]);
        ExitName exit = i + 1 == path.squares.size()
                            ? endpoints.second
                            : side_towards(path.squares[i], path.squares[i + 1]);
        if (classify(entry, exit) != path.types[i])
            throw std::logic_error("substitute_path: stored square type disagrees with geometry");

        ExitScan scan = find_exits(p);
        if (!scan.ok())
            throw std::invalid_argument("substitute_path: member pattern has no unique exits");
        TypedPath sub = typed_path_between(p, scan.exits->at(entry), scan.exits->at(exit), entry,
                                           exit, path_type_between(entry, exit));

        const long long base_col = static_cast<long long>(path.squares[i].col) * next_width;
        const long long base_row = static_cast<long long>(path.squares[i].row) * next_width;
        for (std::size_t k = 0; k < sub.squares.size(); ++k) {
            SquareIndex global{static_cast<int>(base_col + sub.squares[k].col),
                               static_cast<int>(base_row + sub.squares[k].row)};
            if (!out.squares.empty() && k == 0) {
                SquareIndex last = out.squares.back();
                int gap = std::abs(last.col - global.col) + std::abs(last.row - global.row);
                if (gap != 1)
                    throw std::logic_error("substitute_path: sub-paths do not meet at the seam");
            }
            out.squares.push_back(global);
            out.types.push_back(sub.types[k]);
        }
    }
    return out;
}

std::string PathsIntersection::to_string() const {
    std::ostringstream os;
    os << (kind == Kind::SingleSquare ? "single square" : "common subpath") << ": ";
    for (const SquareIndex& sq : squares) os << "(" << sq.col << "," << sq.row << ") ";
    return os.str();
}

PathsIntersection paths_intersection(const Pattern& pattern) {
    ExitScan scan = require_valid(pattern);
    TypedPath vertical = exit_path_scanned(pattern, *scan.exits, PathType::A);
    TypedPath horizontal = exit_path_scanned(pattern, *scan.exits, PathType::B);

    std::set<SquareIndex> horizontal_squares(horizontal.squares.begin(), horizontal.squares.end());
    PathsIntersection result;
    std::vector<std::size_t> positions_on_a;
    for (std::size_t i = 0; i < vertical.squares.size(); ++i)
        if (horizontal_squares.count(vertical.squares[i])) {
            result.squares.push_back(vertical.squares[i]);
            positions_on_a.push_back(i);
        }
    if (result.squares.empty())
        throw std::logic_error("path intersection is empty; invariant violated");

    if (result.squares.size() == 1) {
        result.kind = PathsIntersection::Kind::SingleSquare;
        result.contiguous_on_both = true;
        return result;
    }
    result.kind = PathsIntersection::Kind::CommonSubpath;

    bool contiguous_a = true;
    for (std::size_t i = 1; i < positions_on_a.size(); ++i)
        if (positions_on_a[i] != positions_on_a[i - 1] + 1) contiguous_a = false;

    std::map<SquareIndex, std::size_t> on_b;
    for (std::size_t i = 0; i < horizontal.squares.size(); ++i) on_b[horizontal.squares[i]] = i;
    std::vector<std::size_t> positions_on_b;
    for (const SquareIndex& sq : result.squares) positions_on_b.push_back(on_b.at(sq));
    std::sort(positions_on_b.begin(), positions_on_b.end());
    bool contiguous_b = true;
    for (std::size_t i = 1; i < positions_on_b.size(); ++i)
        if (positions_on_b[i] != positions_on_b[i - 1] + 1) contiguous_b = false;

    result.contiguous_on_both = contiguous_a && contiguous_b;
    return result;
}

std::string LengthSumReport::to_string() const {
    std::ostringstream os;
    os << "lengths";
    for (std::size_t i = 0; i < 6; ++i) os << ' ' << "ABCDEF"[i] << '=' << lengths[i];
    os << "; A+B " << (holds ? "==" : "!=") << " max(E+C, F+D)";
    return os.str();
}

LengthSumReport path_length_sum_identity(const Pattern& pattern) {
    ExitScan scan = require_valid(pattern);
    LengthSumReport report;
    for (PathType kind : kAllPathTypes)
        report.lengths[static_cast<std::size_t>(kind)] =
            exit_path_scanned(pattern, *scan.exits, kind).length();
    const auto& l = report.lengths;
    auto at = [&](PathType t) { return l[static_cast<std::size_t>(t)]; };
    report.holds = at(PathType::A) + at(PathType::B) ==
                   std::max(at(PathType::E) + at(PathType::C), at(PathType::F) + at(PathType::D));
    return report;
}

std::vector<PolylinePoint> arc_approximation(const LabyrinthSet& set, ExitName from, ExitName to) {
    TypedPath path = exit_path(set.grid, from, to);
    const BigInt side(set.side());
    const BigInt two_side = BigInt(2) * side;
    std::vector<PolylinePoint> polyline;
    polyline.reserve(path.squares.size());
    for (const SquareIndex& sq : path.squares)
        polyline.emplace_back(Rational(BigInt(2 * sq.col + 1), two_side),
                              Rational(BigInt(2 * sq.row + 1), two_side));
    return polyline;
}

Rational polyline_length(const std::vector<PolylinePoint>& polyline) {
    Rational total;
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        Rational dx = polyline[i].first - polyline[i - 1].first;
        Rational dy = polyline[i].second - polyline[i - 1].second;
        if (!dx.is_zero() && !dy.is_zero())
            throw std::invalid_argument("polyline_length: segments must be axis-aligned");
        total += dx.abs() + dy.abs();
    }
    return total;
}

Rational arc_length_lower_bound(std::uint64_t path_length, const BigInt& side) {
    if (path_length == 0) throw std::invalid_argument("path length must be >= 1");
    return Rational(BigInt::from_uint64(path_length - 1), BigInt(2) * side);
}

bool corridor_nested(const TypedPath& parent, const TypedPath& child, int next_width) {
    std::set<SquareIndex> parent_cells(parent.squares.begin(), parent.squares.end());
    for (const SquareIndex& sq : child.squares) {
        SquareIndex block{sq.col / next_width, sq.row / next_width};
        if (!parent_cells.count(block)) return false;
    }
    return true;
}

PathCascade::PathCascade(const ConstructionPlan& plan) : plan_(&plan) {
    const PatternCollection& first = plan.collection(1);
    if (first.members.size() != 1)
        throw std::invalid_argument("cascade needs a single level-1 pattern");
    ExitScan scan = require_valid(first.members.front());
    for (PathType kind : kAllPathTypes)
        paths_[static_cast<std::size_t>(kind)] =
            exit_path_scanned(first.members.front(), *scan.exits, kind);
}

PathMatrix PathCascade::matrix() const {
    PathMatrix m;
    for (PathType kind : kAllPathTypes)
        for (PathType t : paths_[static_cast<std::size_t>(kind)].types)
            m.at(static_cast<std::size_t>(kind), static_cast<std::size_t>(t)) += BigInt(1);
    return m;
}

std::vector<CountingMatrix> PathCascade::counting_for_next() const {
    if (level_ + 1 > plan_->depth())
        throw std::out_of_range("cascade is at the plan's last level");
    const PatternCollection& next = plan_->collection(level_ + 1);
    const AssignmentRule& rule = plan_->rule(level_ + 1);
    std::vector<CountingMatrix> out(next.member_count());
    for (PathType kind : kAllPathTypes) {
        const TypedPath& path = paths_[static_cast<std::size_t>(kind)];
        for (std::size_t i = 0; i < path.squares.size(); ++i) {
            int member = rule.member_for(path.squares[i], level_, next.member_count());
            out[member].at(static_cast<std::size_t>(kind),
                           static_cast<std::size_t>(path.types[i])) += BigInt(1);
        }
    }
    return out;
}

void PathCascade::advance() {
    if (level_ + 1 > plan_->depth())
        throw std::out_of_range("cascade is at the plan's last level");
    const PatternCollection& next = plan_->collection(level_ + 1);
    const AssignmentRule& rule = plan_->rule(level_ + 1);
    for (PathType kind : kAllPathTypes) {
        TypedPath& path = paths_[static_cast<std::size_t>(kind)];
        std::vector<const Pattern*> per_square;
        per_square.reserve(path.squares.size());
        for (const SquareIndex& sq : path.squares)
            per_square.push_back(&next.members[rule.member_for(sq, level_, next.member_count())]);
        path = substitute_path(path, per_square, next.width());
    }
    ++level_;
}

}  // namespace laby
