#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace laby {

// Cell coordinates: col counted from the left, row from the bottom, 0-based.
struct SquareIndex {
    int col = 0;
    int row = 0;
    auto operator<=>(const SquareIndex&) const = default;
};

// An m x m grid of white/black unit cells. The white squares are the
// pattern; everything else is black.
class Pattern {
public:
    Pattern() = default;
    Pattern(int width, std::vector<std::uint8_t> cells, std::string name);
    static Pattern from_white_squares(int width, const std::vector<SquareIndex>& whites,
                                      std::string name);
    // rows listed top-down, '.' white / '#' black
    static Pattern from_rows(const std::vector<std::string>& rows, std::string name);

    int width() const { return width_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool in_range(int col, int row) const {
        return col >= 0 && col < width_ && row >= 0 && row < width_;
    }
    bool is_white(int col, int row) const { return cells_[index(col, row)] != 0; }
    bool is_white(SquareIndex sq) const { return is_white(sq.col, sq.row); }

    std::vector<SquareIndex> white_squares() const;  // ordered by (row, col)
    std::size_t white_count() const;

    bool operator==(const Pattern& o) const { return width_ == o.width_ && cells_ == o.cells_; }

private:
    int width_ = 0;
    std::vector<std::uint8_t> cells_;  // row-major from the bottom row
    std::string name_;

    std::size_t index(int col, int row) const {
        return static_cast<std::size_t>(row) * width_ + col;
    }
};

// Pattern-file grammar: `pattern <name>`, `width <m>`, then m rows of m
// characters from {. #}; `%` starts a comment line; several patterns per file.
std::vector<Pattern> parse_patterns(std::string_view text,
                                    std::string_view source_name = "<input>");
// convenience for single-pattern sources
Pattern parse_pattern(std::string_view text, std::string_view source_name = "<input>");
std::vector<Pattern> load_pattern_file(const std::string& path);
std::string serialize_pattern(const Pattern& pattern);

// Adjacency graph of the white squares: edges join cells sharing a full side.
struct PatternGraph {
    std::vector<SquareIndex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, first < second
};

PatternGraph build_graph(const Pattern& pattern);
bool is_tree(const PatternGraph& graph);
// same predicate computed directly on the grid; used for large composed sets
bool grid_is_tree(const Pattern& pattern);

enum class ExitName { Top, Bottom, Left, Right };
std::string exit_name_string(ExitName name);
std::optional<ExitName> parse_exit_name(std::string_view text);

struct ExitSet {
    SquareIndex top, bottom, left, right;
    SquareIndex at(ExitName name) const;
};

// (r, c): row of the horizontal exit pair counted 1 = top row, column of the
// vertical pair counted 1 = leftmost column.
struct ExitPositions {
    int r = 0;
    int c = 0;
    bool operator==(const ExitPositions&) const = default;
};

struct ExitScan {
    std::optional<ExitSet> exits;
    std::optional<ExitPositions> positions;
    std::vector<int> vertical_pair_columns;  // every candidate column
    std::vector<int> horizontal_pair_rows;   // every candidate row (from bottom)
    bool ok() const { return exits.has_value(); }
    std::string failure_message() const;
};

ExitScan find_exits(const Pattern& pattern);

// no two diagonally opposite corners may both be white
bool check_corner_property(const Pattern& pattern);

struct AxiomCheck {
    std::string axiom;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::string subject;
    std::vector<AxiomCheck> checks;
    bool pass() const;
    std::string to_string() const;
};

// width >= 3, tree property, exits property, corner property
ValidationReport validate_labyrinth_pattern(const Pattern& pattern);

// The exit row (resp. column) contains at least one black cell. Requires a
// valid labyrinth pattern; blocked patterns only exist for width >= 4.
bool is_horizontally_blocked(const Pattern& pattern);
bool is_vertically_blocked(const Pattern& pattern);

}  // namespace laby
