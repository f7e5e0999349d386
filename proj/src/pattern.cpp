#include "laby/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace laby {

Pattern::Pattern(int width, std::vector<std::uint8_t> cells, std::string name)
    : width_(width), cells_(std::move(cells)), name_(std::move(name)) {
    if (width_ < 1) throw std::invalid_argument("Pattern: width must be >= 1");
    if (cells_.size() != static_cast<std::size_t>(width_) * width_)
        throw std::invalid_argument("Pattern: cell buffer does not match width");
    if (white_count() == 0) throw std::invalid_argument("Pattern: white set must be nonempty");
}

Pattern Pattern::from_white_squares(int width, const std::vector<SquareIndex>& whites,
                                    std::string name) {
    if (width < 1) throw std::invalid_argument("Pattern: width must be >= 1");
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(width) * width, 0);
    for (const SquareIndex& sq : whites) {
        if (sq.col < 0 || sq.col >= width || sq.row < 0 || sq.row >= width)
            throw std::invalid_argument("Pattern: white square out of range");
        cells[static_cast<std::size_t>(sq.row) * width + sq.col] = 1;
    }
    return Pattern(width, std::move(cells), std::move(name));
}

Pattern Pattern::from_rows(const std::vector<std::string>& rows, std::string name) {
    const int m = static_cast<int>(rows.size());
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        const std::string& line = rows[i];
        if (static_cast<int>(line.size()) != m)
            throw std::invalid_argument("Pattern: ragged rows");
        int row = m - 1 - i;  // first listed row is the top row
        for (int col = 0; col < m; ++col) {
            char ch = line[col];
            if (ch != '.' && ch != '#')
                throw std::invalid_argument("Pattern: illegal character in grid row");
            if (ch == '.') cells[static_cast<std::size_t>(row) * m + col] = 1;
        }
    }
    return Pattern(m, std::move(cells), std::move(name));
}

std::vector<SquareIndex> Pattern::white_squares() const {
    std::vector<SquareIndex> out;
    out.reserve(white_count());
    for (int row = 0; row < width_; ++row)
        for (int col = 0; col < width_; ++col)
            if (is_white(col, row)) out.push_back({col, row});
    return out;
}

std::size_t Pattern::white_count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

namespace {

[[noreturn]] void parse_fail(std::string_view source, std::size_t line_no,
                             const std::string& message) {
    std::ostringstream os;
    os << source << ":" << line_no << ": " << message;
    throw std::runtime_error(os.str());
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Pattern> parse_patterns(std::string_view text, std::string_view source_name) {
    std::vector<Pattern> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;

    std::optional<std::string> pending_name;
    std::optional<int> pending_width;
    std::vector<std::string> pending_rows;
    std::size_t block_line = 0;

    auto flush = [&]() {
        if (!pending_name) return;
        if (!pending_width)
            parse_fail(source_name, block_line, "pattern '" + *pending_name + "' has no width line");
        if (static_cast<int>(pending_rows.size()) != *pending_width)
            parse_fail(source_name, block_line,
                       "pattern '" + *pending_name + "' expects " +
                           std::to_string(*pending_width) + " grid rows, got " +
                           std::to_string(pending_rows.size()));
        try {
            out.push_back(Pattern::from_rows(pending_rows, *pending_name));
        } catch (const std::exception& e) {
            parse_fail(source_name, block_line, e.what());
        }
        pending_name.reset();
        pending_width.reset();
        pending_rows.clear();
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '%') continue;

        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword == "pattern") {
            flush();
            std::string name;
            ls >> name;
            if (name.empty()) parse_fail(source_name, line_no, "pattern line needs a name");
            pending_name = name;
            block_line = line_no;
        } else if (keyword == "width") {
            if (!pending_name) parse_fail(source_name, line_no, "width line outside a pattern block");
            int m = 0;
            if (!(ls >> m) || m < 1) parse_fail(source_name, line_no, "width must be a positive integer");
            pending_width = m;
        } else {
            if (!pending_name || !pending_width)
                parse_fail(source_name, line_no, "grid row outside a pattern block");
            if (static_cast<int>(line.size()) != *pending_width)
                parse_fail(source_name, line_no,
                           "grid row has " + std::to_string(line.size()) + " cells, width is " +
                               std::to_string(*pending_width));
            for (char ch : line)
                if (ch != '.' && ch != '#')
                    parse_fail(source_name, line_no, std::string("illegal cell character '") + ch + "'");
            if (static_cast<int>(pending_rows.size()) == *pending_width)
                parse_fail(source_name, line_no, "too many grid rows for declared width");
            pending_rows.push_back(line);
        }
    }
    flush();
    if (out.empty())
        parse_fail(source_name, line_no, "no pattern definitions found");
    return out;
}

Pattern parse_pattern(std::string_view text, std::string_view source_name) {
    std::vector<Pattern> all = parse_patterns(text, source_name);
    if (all.size() != 1)
        throw std::runtime_error(std::string(source_name) + ": expected exactly one pattern, got " +
                                 std::to_string(all.size()));
    return all.front();
}

std::vector<Pattern> load_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_patterns(buf.str(), path);
}

std::string serialize_pattern(const Pattern& pattern) {
    std::ostringstream os;
    os << "pattern " << (pattern.name().empty() ? "unnamed" : pattern.name()) << '\n';
    os << "width " << pattern.width() << '\n';
    for (int row = pattern.width() - 1; row >= 0; --row) {
        for (int col = 0; col < pattern.width(); ++col)
            os << (pattern.is_white(col, row) ? '.' : '#');
        os << '\n';
    }
    return os.str();
}

PatternGraph build_graph(const Pattern& pattern) {
    PatternGraph g;
    g.vertices = pattern.white_squares();
    std::vector<std::size_t> id(static_cast<std::size_t>(pattern.width()) * pattern.width(), 0);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        id[static_cast<std::size_t>(g.vertices[i].row) * pattern.width() + g.vertices[i].col] = i;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const SquareIndex v = g.vertices[i];
        // look right and up only, so each side-sharing pair appears once
        if (v.col + 1 < pattern.width() && pattern.is_white(v.col + 1, v.row))
            g.edges.emplace_back(i, id[static_cast<std::size_t>(v.row) * pattern.width() + v.col + 1]);
        if (v.row + 1 < pattern.width() && pattern.is_white(v.col, v.row + 1))
            g.edges.emplace_back(i, id[static_cast<std::size_t>(v.row + 1) * pattern.width() + v.col]);
    }
    for (auto& e : g.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    return g;
}

bool is_tree(const PatternGraph& graph) {
    if (graph.vertices.empty()) return false;
    if (graph.edges.size() != graph.vertices.size() - 1) return false;
    std::vector<std::vector<std::size_t>> adj(graph.vertices.size());
    for (auto [a, b] : graph.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::uint8_t> seen(graph.vertices.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == graph.vertices.size();
}

bool grid_is_tree(const Pattern& pattern) {
    const int m = pattern.width();
    std::size_t whites = 0, edges = 0;
    SquareIndex start{-1, -1};
    for (int row = 0; row < m; ++row)
        for (int col = 0; col < m; ++col) {
            if (!pattern.is_white(col, row)) continue;
            ++whites;
            if (start.col < 0) start = {col, row};
            if (col + 1 < m && pattern.is_white(col + 1, row)) ++edges;
            if (row + 1 < m && pattern.is_white(col, row + 1)) ++edges;
        }
    if (whites == 0 || edges != whites - 1) return false;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(m) * m, 0);
    std::vector<SquareIndex> stack{start};
    seen[static_cast<std::size_t>(start.row) * m + start.col] = 1;
    std::size_t visited = 1;
    const int dc[4] = {1, -1, 0, 0};
    const int dr[4] = {0, 0, 1, -1};
    while (!stack.empty()) {
        SquareIndex v = stack.back();
        stack.pop_back();
        for (int d = 0; d < 4; ++d) {
            int col = v.col + dc[d], row = v.row + dr[d];
            if (!pattern.in_range(col, row) || !pattern.is_white(col, row)) continue;
            std::size_t idx = static_cast<std::size_t>(row) * m + col;
            if (!seen[idx]) {
                seen[idx] = 1;
                ++visited;
                stack.push_back({col, row});
            }
        }
    }
    return visited == whites;
}

std::string exit_name_string(ExitName name) {
    switch (name) {
        case ExitName::Top: return "top";
        case ExitName::Bottom: return "bottom";
        case ExitName::Left: return "left";
        case ExitName::Right: return "right";
    }
    return "?";
}

std::optional<ExitName> parse_exit_name(std::string_view text) {
    if (text == "top") return ExitName::Top;
    if (text == "bottom") return ExitName::Bottom;
    if (text == "left") return ExitName::Left;
    if (text == "right") return ExitName::Right;
    return std::nullopt;
}

SquareIndex ExitSet::at(ExitName name) const {
    switch (name) {
        case ExitName::Top: return top;
        case ExitName::Bottom: return bottom;
        case ExitName::Left: return left;
        case ExitName::Right: return right;
    }
    return top;
}

std::string ExitScan::failure_message() const {
    std::ostringstream os;
    os << "vertical exit pairs in columns {";
    for (std::size_t i = 0; i < vertical_pair_columns.size(); ++i)
        os << (i ? "," : "") << vertical_pair_columns[i];
    os << "}, horizontal exit pairs in rows {";
    for (std::size_t i = 0; i < horizontal_pair_rows.size(); ++i)
        os << (i ? "," : "") << horizontal_pair_rows[i];
    os << "}; need exactly one of each";
    return os.str();
}

ExitScan find_exits(const Pattern& pattern) {
    ExitScan scan;
    const int m = pattern.width();
    for (int col = 0; col < m; ++col)
        if (pattern.is_white(col, m - 1) && pattern.is_white(col, 0))
            scan.vertical_pair_columns.push_back(col);
    for (int row = 0; row < m; ++row)
        if (pattern.is_white(0, row) && pattern.is_white(m - 1, row))
            scan.horizontal_pair_rows.push_back(row);
    if (scan.vertical_pair_columns.size() == 1 && scan.horizontal_pair_rows.size() == 1) {
        int col = scan.vertical_pair_columns.front();
        int row = scan.horizontal_pair_rows.front();
        scan.exits = ExitSet{{col, m - 1}, {col, 0}, {0, row}, {m - 1, row}};
        scan.positions = ExitPositions{m - row, col + 1};
    }
    return scan;
}

bool check_corner_property(const Pattern& pattern) {
    const int m = pattern.width();
    if (pattern.is_white(0, 0) && pattern.is_white(m - 1, m - 1)) return false;
    if (pattern.is_white(0, m - 1) && pattern.is_white(m - 1, 0)) return false;
    return true;
}

bool ValidationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const AxiomCheck& c : checks)
        if (!c.pass) ++failed;
    os << subject << ": "
       << (pass() ? "all checks pass" : std::to_string(failed) + " check(s) failed") << '\n';
    for (const AxiomCheck& c : checks) {
        os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.axiom;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << '\n';
    }
    return os.str();
}

ValidationReport validate_labyrinth_pattern(const Pattern& pattern) {
    ValidationReport report;
    report.subject = pattern.name().empty() ? "pattern" : pattern.name();

    bool width_ok = pattern.width() >= 3;
    report.checks.push_back({"width >= 3", width_ok, "width " + std::to_string(pattern.width())});

    bool tree = grid_is_tree(pattern);
    report.checks.push_back(
        {"tree property", tree,
         tree ? "" : "white-square graph is not a tree (disconnected or has a cycle)"});

    ExitScan scan = find_exits(pattern);
    std::string exit_detail;
    if (scan.ok()) {
        exit_detail = "(r,c)=(" + std::to_string(scan.positions->r) + "," +
                      std::to_string(scan.positions->c) + ")";
    } else {
        exit_detail = scan.failure_message();
    }
    report.checks.push_back({"exits property", scan.ok(), exit_detail});

    bool corner = check_corner_property(pattern);
    report.checks.push_back(
        {"corner property", corner, corner ? "" : "two diagonally opposite corners are white"});
    return report;
}

namespace {
const Pattern& require_labyrinth(const Pattern& pattern) {
    ValidationReport report = validate_labyrinth_pattern(pattern);
    if (!report.pass())
        throw std::invalid_argument("blockedness is defined for labyrinth patterns only: " +
                                    report.to_string());
    return pattern;
}
}  // namespace

bool is_horizontally_blocked(const Pattern& pattern) {
    require_labyrinth(pattern);
    int row = find_exits(pattern).exits->left.row;
    for (int col = 0; col < pattern.width(); ++col)
        if (!pattern.is_white(col, row)) return true;
    return false;
}

bool is_vertically_blocked(const Pattern& pattern) {
    require_labyrinth(pattern);
    int col = find_exits(pattern).exits->top.col;
    for (int row = 0; row < pattern.width(); ++row)
        if (!pattern.is_white(col, row)) return true;
    return false;
}

}  // namespace laby
