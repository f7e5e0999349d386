#include "laby/substitution.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace laby {

int PatternCollection::width() const {
    if (members.empty()) throw std::logic_error("PatternCollection: no members");
    return members.front().width();
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int AssignmentRule::member_for(SquareIndex sq, int level, std::size_t member_count) const {
    if (member_count == 0) throw std::logic_error("AssignmentRule: empty collection");
    switch (kind) {
        case Kind::Constant:
            if (constant_member < 0 || constant_member >= static_cast<int>(member_count))
                throw std::out_of_range("AssignmentRule: constant member index out of range");
            return constant_member;
        case Kind::ExplicitMap: {
            auto it = square_map.find(sq);
            if (it == square_map.end())
                throw std::out_of_range("AssignmentRule: map does not cover white square (" +
                                        std::to_string(sq.col) + "," + std::to_string(sq.row) + ")");
            if (it->second < 0 || it->second >= static_cast<int>(member_count))
                throw std::out_of_range("AssignmentRule: mapped member index out of range");
            return it->second;
        }
        case Kind::Parity: {
            long long v = static_cast<long long>(sq.col) + sq.row + parity_offset;
            long long s = static_cast<long long>(member_count);
            return static_cast<int>(((v % s) + s) % s);
        }
        case Kind::SeededRandom: {
            std::uint64_t h = splitmix64(seed + static_cast<std::uint64_t>(level));
            h = splitmix64(h + static_cast<std::uint64_t>(static_cast<std::uint32_t>(sq.col)));
            h = splitmix64(h + static_cast<std::uint64_t>(static_cast<std::uint32_t>(sq.row)));
            return static_cast<int>(h % member_count);
        }
    }
    throw std::logic_error("AssignmentRule: unknown kind");
}

std::string AssignmentRule::describe() const {
    switch (kind) {
        case Kind::Constant: return "constant " + std::to_string(constant_member + 1);
        case Kind::ExplicitMap: return "map (" + std::to_string(square_map.size()) + " squares)";
        case Kind::Parity: return "parity " + std::to_string(parity_offset);
        case Kind::SeededRandom: return "random seed=" + std::to_string(seed);
    }
    return "?";
}

bool ConstructionPlan::is_mixed() const {
    return std::all_of(collections.begin(), collections.end(),
                       [](const PatternCollection& c) { return c.members.size() == 1; });
}

ValidationReport validate_collection_consistency(const ConstructionPlan& plan) {
    ValidationReport report;
    report.subject = plan.name.empty() ? "plan" : plan.name;

    if (plan.collections.empty()) {
        report.checks.push_back({"plan nonempty", false, "plan has no levels"});
        return report;
    }
    const std::size_t first_members = plan.collections.front().members.size();
    report.checks.push_back({"first level has a single pattern", first_members == 1,
                             first_members == 1 ? "" : "level 1 lists " +
                                 std::to_string(first_members) + " patterns"});

    for (const PatternCollection& coll : plan.collections) {
        const std::string where = "level " + std::to_string(coll.level);
        if (coll.members.empty()) {
            report.checks.push_back({where + " nonempty", false, "no patterns"});
            continue;
        }

        bool members_ok = true;
        std::string member_detail;
        for (const Pattern& p : coll.members) {
            ValidationReport v = validate_labyrinth_pattern(p);
            if (!v.pass()) {
                members_ok = false;
                member_detail += (member_detail.empty() ? "" : "; ") + p.name() + " fails";
            }
        }
        report.checks.push_back({where + " members are labyrinth patterns", members_ok, member_detail});
        if (!members_ok) continue;

        // exits consistency: one width and one exits positions pair per collection
        bool exits_ok = true;
        std::string exits_detail;
        int width = coll.members.front().width();
        ExitPositions pos = *find_exits(coll.members.front()).positions;
        for (const Pattern& p : coll.members) {
            if (p.width() != width) {
                exits_ok = false;
                exits_detail += p.name() + " has width " + std::to_string(p.width()) + "; ";
            } else if (!(*find_exits(p).positions == pos)) {
                ExitPositions q = *find_exits(p).positions;
                exits_detail += p.name() + " has (r,c)=(" + std::to_string(q.r) + "," +
                                std::to_string(q.c) + "); ";
                exits_ok = false;
            }
        }
        if (exits_ok)
            exits_detail = "width " + std::to_string(width) + ", (r,c)=(" + std::to_string(pos.r) +
                           "," + std::to_string(pos.c) + ")";
        report.checks.push_back({where + " exits consistency", exits_ok, exits_detail});

        // corner consistency: a white corner in any member forbids a white
        // square at the diagonally opposite corner in every member
        bool corner_ok = true;
        std::string corner_detail;
        const int m = width;
        const std::pair<SquareIndex, SquareIndex> diagonals[2] = {
            {{0, 0}, {m - 1, m - 1}}, {{0, m - 1}, {m - 1, 0}}};
        for (const auto& [a, b] : diagonals) {
            const Pattern* has_a = nullptr;
            const Pattern* has_b = nullptr;
            for (const Pattern& p : coll.members) {
                if (p.is_white(a)) has_a = &p;
                if (p.is_white(b)) has_b = &p;
            }
            if (has_a && has_b) {
                corner_ok = false;
                corner_detail += has_a->name() + " and " + has_b->name() +
                                 " occupy diagonally opposite corners; ";
            }
        }
        report.checks.push_back({where + " corner consistency", corner_ok, corner_detail});
    }
    return report;
}

LabyrinthSet make_base(const ConstructionPlan& plan) {
    if (plan.collections.empty()) throw std::invalid_argument("plan has no levels");
    const PatternCollection& first = plan.collection(1);
    if (first.members.size() != 1)
        throw std::invalid_argument("level 1 must hold exactly one pattern");
    LabyrinthSet set;
    set.level = 1;
    set.widths = {first.width()};
    set.grid = first.members.front();
    return set;
}

LabyrinthSet compose_level(const LabyrinthSet& current, const PatternCollection& next,
                           const AssignmentRule& rule) {
    const int m = next.width();
    const int old_side = current.side();
    const long long new_side = static_cast<long long>(old_side) * m;
    if (new_side > (1 << 20))
        throw std::length_error("compose_level: grid would exceed 2^20 cells per side");

    std::vector<std::uint8_t> cells(static_cast<std::size_t>(new_side) * new_side, 0);
    LabyrinthSet out;
    out.level = current.level + 1;
    out.widths = current.widths;
    out.widths.push_back(m);
    out.trace = current.trace;
    out.verified = current.verified;

    for (const SquareIndex& sq : current.grid.white_squares()) {
        int member = rule.member_for(sq, current.level, next.member_count());
        out.trace.push_back({current.level, sq, member});
        const Pattern& p = next.members[member];
        const long long base_col = static_cast<long long>(sq.col) * m;
        const long long base_row = static_cast<long long>(sq.row) * m;
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                if (p.is_white(c, r))
                    cells[static_cast<std::size_t>(base_row + r) * new_side + base_col + c] = 1;
    }
    out.grid = Pattern(static_cast<int>(new_side), std::move(cells),
                       current.grid.name() + "*" + std::to_string(m));
    return out;
}

Pattern coarsen(const Pattern& grid, int last_width) {
    if (last_width < 1 || grid.width() % last_width != 0)
        throw std::invalid_argument("coarsen: width is not divisible by the last level width");
    const int prev_side = grid.width() / last_width;
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(prev_side) * prev_side, 0);
    for (int row = 0; row < grid.width(); ++row)
        for (int col = 0; col < grid.width(); ++col)
            if (grid.is_white(col, row))
                cells[static_cast<std::size_t>(row / last_width) * prev_side + col / last_width] = 1;
    return Pattern(prev_side, std::move(cells), grid.name() + "/coarse");
}

namespace {

// tree check of the level-n graph restricted to the cells inside two
// adjacent parent squares
bool pair_subgraph_is_tree(const Pattern& next_grid, int m, SquareIndex a, SquareIndex b) {
    auto inside = [&](int col, int row) {
        int pc = col / m, pr = row / m;
        return (pc == a.col && pr == a.row) || (pc == b.col && pr == b.row);
    };
    std::size_t whites = 0, edges = 0;
    SquareIndex start{-1, -1};
    auto scan_block = [&](SquareIndex blk) {
        for (int r = blk.row * m; r < (blk.row + 1) * m; ++r)
            for (int c = blk.col * m; c < (blk.col + 1) * m; ++c) {
                if (!next_grid.is_white(c, r)) continue;
                ++whites;
                if (start.col < 0) start = {c, r};
                if (c + 1 < next_grid.width() && next_grid.is_white(c + 1, r) && inside(c + 1, r))
                    ++edges;
                if (r + 1 < next_grid.width() && next_grid.is_white(c, r + 1) && inside(c, r + 1))
                    ++edges;
            }
    };
    scan_block(a);
    scan_block(b);
    if (whites == 0 || edges != whites - 1) return false;

    std::vector<SquareIndex> stack{start};
    std::map<std::pair<int, int>, bool> seen;
    seen[{start.col, start.row}] = true;
    std::size_t visited = 1;
    const int dc[4] = {1, -1, 0, 0};
    const int dr[4] = {0, 0, 1, -1};
    while (!stack.empty()) {
        SquareIndex v = stack.back();
        stack.pop_back();
        for (int d = 0; d < 4; ++d) {
            int col = v.col + dc[d], row = v.row + dr[d];
            if (!next_grid.in_range(col, row) || !next_grid.is_white(col, row) || !inside(col, row))
                continue;
            if (!seen[{col, row}]) {
                seen[{col, row}] = true;
                ++visited;
                stack.push_back({col, row});
            }
        }
    }
    return visited == whites;
}

}  // namespace

ValidationReport validate_pairwise_tree_consistency(const Pattern& prev, const Pattern& next_grid) {
    if (next_grid.width() % prev.width() != 0)
        throw std::invalid_argument("pairwise consistency: grid widths do not nest");
    const int m = next_grid.width() / prev.width();

    ValidationReport report;
    report.subject = next_grid.name();
    bool all_ok = true;
    std::string detail;
    int checked = 0;
    for (const SquareIndex& v : prev.white_squares()) {
        const SquareIndex candidates[2] = {{v.col + 1, v.row}, {v.col, v.row + 1}};
        for (const SquareIndex& w : candidates) {
            if (!prev.in_range(w.col, w.row) || !prev.is_white(w)) continue;
            ++checked;
            if (!pair_subgraph_is_tree(next_grid, m, v, w)) {
                all_ok = false;
                detail += "(" + std::to_string(v.col) + "," + std::to_string(v.row) + ")-(" +
                          std::to_string(w.col) + "," + std::to_string(w.row) + ") ";
            }
        }
    }
    report.checks.push_back({"pairwise tree consistency", all_ok,
                             all_ok ? std::to_string(checked) + " neighbour pairs"
                                    : "cycle or split across pairs: " + detail});
    return report;
}

ValidationReport validate_pairwise_tree_consistency(const LabyrinthSet& set) {
    if (set.level < 2)
        throw std::invalid_argument("pairwise consistency needs a set of level >= 2");
    Pattern prev = coarsen(set.grid, set.widths.back());
    return validate_pairwise_tree_consistency(prev, set.grid);
}

LabyrinthSet build_to_level(const ConstructionPlan& plan, int n, const BuildOptions& options) {
    if (n < 1 || n > plan.depth())
        throw std::invalid_argument("build level out of range: " + std::to_string(n));
    long long side = 1;
    for (int k = 1; k <= n; ++k) {
        side *= plan.width_at(k);
        if (side > options.grid_cap)
            throw std::length_error("grid cap exceeded: level " + std::to_string(n) + " needs " +
                                    std::to_string(side) + " cells per side, cap is " +
                                    std::to_string(options.grid_cap));
    }

    ValidationReport consistency = validate_collection_consistency(plan);
    if (!consistency.pass()) {
        if (!options.force)
            throw std::runtime_error("plan violates the consistency assumptions:\n" +
                                     consistency.to_string());
    }

    LabyrinthSet set = make_base(plan);
    set.verified = consistency.pass();
    for (int k = 2; k <= n; ++k) {
        Pattern prev = set.grid;
        set = compose_level(set, plan.collection(k), plan.rule(k));
        if (options.check_pairwise) {
            ValidationReport pairwise = validate_pairwise_tree_consistency(prev, set.grid);
            if (!pairwise.pass()) {
                if (!options.force)
                    throw std::runtime_error("substitution violates pairwise tree consistency:\n" +
                                             pairwise.to_string());
                set.verified = false;
            }
        }
    }
    return set;
}

std::string serialize_trace(const LabyrinthSet& set) {
    std::vector<TraceEntry> sorted = set.trace;
    std::sort(sorted.begin(), sorted.end(), [](const TraceEntry& a, const TraceEntry& b) {
        return std::tie(a.level, a.square.row, a.square.col) <
               std::tie(b.level, b.square.row, b.square.col);
    });
    std::ostringstream os;
    for (const TraceEntry& t : sorted)
        os << t.level << ' ' << t.square.col << ' ' << t.square.row << ' ' << t.member + 1 << '\n';
    return os.str();
}

void add_to_library(PatternLibrary& library, const std::vector<Pattern>& patterns) {
    for (const Pattern& p : patterns) {
        auto it = library.find(p.name());
        if (it != library.end()) {
            // the same file may reach the library twice (command line and a
            // plan's load directive); only conflicting definitions are errors
            if (it->second == p) continue;
            throw std::runtime_error("conflicting definitions for pattern name: " + p.name());
        }
        library.emplace(p.name(), p);
    }
}

std::map<SquareIndex, int> load_assignment_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open assignment map: " + path);
    std::map<SquareIndex, int> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '%') continue;
        int col = 0, row = 0, member = 0;
        try {
            col = std::stoi(first);
        } catch (...) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected <col> <row> <member>");
        }
        if (!(ls >> row >> member) || member < 1)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected <col> <row> <member>, member 1-based");
        out[{col, row}] = member - 1;
    }
    return out;
}

namespace {

[[noreturn]] void plan_fail(const std::string& source, std::size_t line_no, const std::string& msg) {
    throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + msg);
}

}  // namespace

ConstructionPlan parse_plan(const std::string& text, const std::string& source_name,
                            const std::string& base_dir, PatternLibrary library) {
    ConstructionPlan plan;
    plan.name = std::filesystem::path(source_name).stem().string();

    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    bool in_level = false;

    auto current = [&]() -> PatternCollection& { return plan.collections.back(); };

    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream ls(raw);
        std::string keyword;
        if (!(ls >> keyword) || keyword[0] == '%') continue;

        if (keyword == "load") {
            std::string file;
            if (!(ls >> file)) plan_fail(source_name, line_no, "load needs a file path");
            std::filesystem::path p(file);
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            add_to_library(library, load_pattern_file(p.string()));
        } else if (keyword == "level") {
            int k = 0;
            if (!(ls >> k)) plan_fail(source_name, line_no, "level needs an index");
            if (k != plan.depth() + 1)
                plan_fail(source_name, line_no,
                          "levels must be declared in order 1..N; expected " +
                              std::to_string(plan.depth() + 1));
            plan.collections.push_back(PatternCollection{k, {}});
            plan.rules.push_back(AssignmentRule{});
            in_level = true;
        } else if (keyword == "use") {
            if (!in_level) plan_fail(source_name, line_no, "use outside a level block");
            std::string name;
            while (ls >> name) {
                auto it = library.find(name);
                if (it == library.end())
                    plan_fail(source_name, line_no, "unknown pattern name: " + name);
                current().members.push_back(it->second);
            }
            if (current().members.empty())
                plan_fail(source_name, line_no, "use lists no pattern names");
        } else if (keyword == "assign") {
            if (!in_level) plan_fail(source_name, line_no, "assign outside a level block");
            std::string kind;
            if (!(ls >> kind)) plan_fail(source_name, line_no, "assign needs a rule kind");
            AssignmentRule rule;
            if (kind == "constant") {
                std::string name;
                if (!(ls >> name)) plan_fail(source_name, line_no, "assign constant needs a name");
                rule.kind = AssignmentRule::Kind::Constant;
                int found = -1;
                for (std::size_t i = 0; i < current().members.size(); ++i)
                    if (current().members[i].name() == name) found = static_cast<int>(i);
                if (found < 0)
                    plan_fail(source_name, line_no,
                              "assign constant: '" + name + "' is not used at this level");
                rule.constant_member = found;
            } else if (kind == "map") {
                std::string file;
                if (!(ls >> file)) plan_fail(source_name, line_no, "assign map needs a file path");
                std::filesystem::path p(file);
                if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
                rule.kind = AssignmentRule::Kind::ExplicitMap;
                rule.square_map = load_assignment_map(p.string());
            } else if (kind == "parity") {
                int offset = 0;
                if (!(ls >> offset)) plan_fail(source_name, line_no, "assign parity needs an offset");
                rule.kind = AssignmentRule::Kind::Parity;
                rule.parity_offset = offset;
            } else if (kind == "random") {
                std::string spec;
                if (!(ls >> spec) || spec.rfind("seed=", 0) != 0)
                    plan_fail(source_name, line_no, "assign random needs seed=<u64>");
                rule.kind = AssignmentRule::Kind::SeededRandom;
                try {
                    rule.seed = std::stoull(spec.substr(5));
                } catch (...) {
                    plan_fail(source_name, line_no, "bad seed value: " + spec.substr(5));
                }
            } else {
                plan_fail(source_name, line_no, "unknown assign kind: " + kind);
            }
            plan.rules.back() = rule;
        } else {
            plan_fail(source_name, line_no, "unknown directive: " + keyword);
        }
    }
    if (plan.collections.empty()) plan_fail(source_name, line_no, "plan declares no levels");
    for (const PatternCollection& coll : plan.collections)
        if (coll.members.empty())
            throw std::runtime_error(source_name + ": level " + std::to_string(coll.level) +
                                     " lists no patterns");
    return plan;
}

ConstructionPlan load_plan_file(const std::string& path, PatternLibrary library) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open plan file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string dir = std::filesystem::path(path).parent_path().string();
    if (dir.empty()) dir = ".";
    return parse_plan(buf.str(), path, dir, std::move(library));
}

}  // namespace laby
