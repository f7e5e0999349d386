#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "laby/pattern.hpp"

namespace laby {

// One level of the construction: the patterns a square may be refined by.
// All members must share one width and one exits positions pair.
struct PatternCollection {
    int level = 1;
    std::vector<Pattern> members;

    int width() const;
    std::size_t member_count() const { return members.size(); }
};

// splitmix64 finalizer; the seeded-random rule chains it over
// (seed, level, col, row) so traces reproduce across platforms.
std::uint64_t splitmix64(std::uint64_t z);

// Decides which member pattern refines each white square of a level.
struct AssignmentRule {
    enum class Kind { Constant, ExplicitMap, Parity, SeededRandom };

    Kind kind = Kind::Constant;
    int constant_member = 0;                // 0-based
    std::map<SquareIndex, int> square_map;  // 0-based members
    int parity_offset = 0;
    std::uint64_t seed = 0;

    // 0-based member index for the white square `sq` of the level-`level` set
    int member_for(SquareIndex sq, int level, std::size_t member_count) const;
    std::string describe() const;
};

struct ConstructionPlan {
    std::string name;
    std::vector<PatternCollection> collections;  // index k-1 holds level k
    std::vector<AssignmentRule> rules;           // rules[0] is ignored

    int depth() const { return static_cast<int>(collections.size()); }
    const PatternCollection& collection(int level) const { return collections.at(level - 1); }
    const AssignmentRule& rule(int level) const { return rules.at(level - 1); }
    int width_at(int level) const { return collection(level).width(); }
    bool is_mixed() const;  // every collection has exactly one member
};

// exits consistency and corner consistency per collection, plus s_1 = 1
ValidationReport validate_collection_consistency(const ConstructionPlan& plan);

struct TraceEntry {
    int level = 0;  // level of the refined square
    SquareIndex square;
    int member = 0;  // 0-based
    auto operator<=>(const TraceEntry&) const = default;
};

// The level-n set of white squares, kept as a grid of width prod(m_k)
// together with the assignment trace that reproduces it.
struct LabyrinthSet {
    int level = 1;
    std::vector<int> widths;  // m_1 .. m_n
    Pattern grid;
    std::vector<TraceEntry> trace;
    bool verified = true;  // consistency checks ran and passed during the build

    int side() const { return grid.width(); }
};

struct BuildOptions {
    int grid_cap = 4096;  // maximum cells per side
    bool force = false;   // build on despite consistency violations (result unverified)
    bool check_pairwise = true;
};

LabyrinthSet make_base(const ConstructionPlan& plan);
// one substitution step; every white square W of `current` is replaced by the
// white cells of its assigned member pattern, placed inside W's block
LabyrinthSet compose_level(const LabyrinthSet& current, const PatternCollection& next,
                           const AssignmentRule& rule);
LabyrinthSet build_to_level(const ConstructionPlan& plan, int n, const BuildOptions& options = {});

// parent-level grid: a coarse cell is white iff its block contains a white cell
Pattern coarsen(const Pattern& grid, int last_width);

// For every edge (W, W') of the level-(n-1) graph, the level-n graph
// restricted to the cells inside W and W' must be a tree.
ValidationReport validate_pairwise_tree_consistency(const LabyrinthSet& set);
ValidationReport validate_pairwise_tree_consistency(const Pattern& prev, const Pattern& next_grid);

std::string serialize_trace(const LabyrinthSet& set);

// Named patterns the plan parser resolves `use` lines against.
using PatternLibrary = std::map<std::string, Pattern>;
void add_to_library(PatternLibrary& library, const std::vector<Pattern>& patterns);

// Plan-file grammar: optional `load <pattern-file>` lines, then `level <k>`
// blocks with `use <name> ...` and one
//   assign constant <name> | assign map <file> | assign parity <offset> |
//   assign random seed=<u64>
// Relative paths resolve against the plan file's directory.
ConstructionPlan parse_plan(const std::string& text, const std::string& source_name,
                            const std::string& base_dir, PatternLibrary library);
ConstructionPlan load_plan_file(const std::string& path, PatternLibrary library = {});

// map-file lines: <col> <row> <member>, member 1-based within the level's collection
std::map<SquareIndex, int> load_assignment_map(const std::string& path);

}  // namespace laby
