#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

using laby::AssignmentRule;
using laby::ConstructionPlan;
using laby::Pattern;
using laby::PatternCollection;
using laby::SquareIndex;

Pattern plus3() {
    return Pattern::from_rows({"#.#",  //
                               "...",  //
                               "#.#"},
                              "plus3");
}

Pattern base4() {
    return Pattern::from_rows({"..##",  //
                               "#...",  //
                               "..#.",  //
                               ".###"},
                              "base4");
}

Pattern tile4_a() {
    return Pattern::from_rows({"#...",  //
                               "..#.",  //
                               "##..",  //
                               "##.#"},
                              "tile4_a");
}

Pattern tile4_b() {
    return Pattern::from_rows({"#..#",  //
                               "..#.",  //
                               "#...",  //
                               "##.#"},
                              "tile4_b");
}

Pattern open4_a() {
    return Pattern::from_rows({".###",  //
                               "....",  //
                               ".#.#",  //
                               ".#.#"},
                              "open4_a");
}

Pattern open5() {
    return Pattern::from_rows({"#.###",  //
                               "#...#",  //
                               "#.###",  //
                               "#.#.#",  //
                               "....."},
                              "open5");
}

Pattern open4_b() {
    return Pattern::from_rows({"##.#",  //
                               "....",  //
                               ".#.#",  //
                               "##.."},
                              "open4_b");
}

Pattern snake5() {
    return Pattern::from_rows({"##.##",  //
                               "...##",  //
                               ".##..",  //
                               "....#",  //
                               "##.##"},
                              "snake5");
}

Pattern cyclepair_a() {
    return Pattern::from_rows({"#.##",  //
                               "....",  //
                               "#.#.",  //
                               "#.##"},
                              "cyclepair_a");
}

Pattern cyclepair_b() {
    return Pattern::from_rows({"#.##",  //
                               "....",  //
                               ".###",  //
                               "..##"},
                              "cyclepair_b");
}

namespace {

struct Rect {
    int x1, y1, x2, y2;  // half-open cell ranges
};

Pattern from_black_rects(int width, const std::vector<Rect>& rects, std::string name) {
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(width) * width, 1);
    for (const Rect& r : rects)
        for (int y = r.y1; y < r.y2; ++y)
            for (int x = r.x1; x < r.x2; ++x)
                cells[static_cast<std::size_t>(y) * width + x] = 0;
    return Pattern(width, std::move(cells), std::move(name));
}

std::vector<SquareIndex> cells_of_rects(const std::vector<Rect>& rects) {
    std::vector<SquareIndex> out;
    for (const Rect& r : rects)
        for (int y = r.y1; y < r.y2; ++y)
            for (int x = r.x1; x < r.x2; ++x) out.push_back({x, y});
    return out;
}

}  // namespace

Pattern supermixed16_grid() {
    // black rectangles of the reference drawing, cell units, origin bottom-left
    const std::vector<Rect> blacks = {
        {0, 8, 4, 12},   {4, 0, 16, 4},   {8, 4, 12, 8},   {8, 12, 16, 16},
        {0, 0, 2, 2},    {0, 3, 1, 4},    {2, 2, 3, 3},    {3, 0, 4, 1},
        {0, 4, 2, 6},    {0, 7, 1, 8},    {2, 6, 3, 7},    {3, 4, 4, 5},
        {4, 8, 6, 10},   {4, 11, 5, 12},  {6, 10, 7, 11},  {7, 8, 8, 9},
        {4, 12, 6, 14},  {4, 15, 5, 16},  {6, 14, 7, 15},  {7, 12, 8, 13},
        {12, 4, 14, 6},  {12, 7, 13, 8},  {14, 6, 15, 7},  {15, 4, 16, 5},
        {0, 12, 1, 14},  {0, 15, 1, 16},  {1, 12, 2, 13},  {2, 14, 3, 15},
        {3, 12, 4, 13},  {3, 15, 4, 16},  {4, 4, 5, 6},    {4, 7, 5, 8},
        {5, 4, 6, 5},    {6, 6, 7, 7},    {7, 4, 8, 5},    {7, 7, 8, 8},
        {8, 8, 9, 10},   {8, 11, 9, 12},  {9, 8, 10, 9},   {10, 10, 11, 11},
        {11, 8, 12, 9},  {11, 11, 12, 12},{12, 8, 13, 10}, {12, 11, 13, 12},
        {13, 8, 14, 9},  {14, 10, 15, 11},{15, 8, 16, 9},  {15, 11, 16, 12}};
    return from_black_rects(16, blacks, "supermixed16");
}

std::vector<SquareIndex> supermixed16_d_corridor() {
    return cells_of_rects({{2, 0, 3, 2},
                           {3, 1, 4, 4},
                           {2, 3, 3, 6},
                           {3, 5, 4, 7},
                           {4, 6, 5, 7},
                           {5, 6, 6, 8},
                           {6, 7, 7, 10},
                           {7, 9, 8, 11},
                           {8, 10, 10, 11},
                           {9, 9, 12, 10},
                           {11, 10, 14, 11},
                           {13, 9, 15, 10},
                           {14, 7, 15, 9},
                           {15, 6, 16, 8}});
}

std::vector<SquareIndex> tile4_a_corridor_top_bottom() {
    return cells_of_rects({{2, 0, 3, 2}, {2, 3, 3, 4}, {3, 1, 4, 4}});
}

std::vector<SquareIndex> tile4_a_corridor_bottom_right() {
    return cells_of_rects({{2, 0, 3, 2}, {3, 1, 4, 3}});
}

std::vector<SquareIndex> tile4_b_corridor_left_right() {
    return cells_of_rects({{0, 2, 2, 3}, {1, 1, 4, 2}, {3, 2, 4, 3}});
}

std::vector<SquareIndex> tile4_b_corridor_left_top() {
    return cells_of_rects({{0, 2, 2, 3}, {1, 3, 3, 4}});
}

AssignmentRule supermixed16_rule() {
    AssignmentRule rule;
    rule.kind = AssignmentRule::Kind::ExplicitMap;
    rule.square_map = {{{0, 0}, 0}, {{0, 1}, 0}, {{1, 2}, 0}, {{1, 3}, 0}, {{3, 1}, 0},
                       {{0, 3}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 1}};
    return rule;
}

ConstructionPlan supermixed16_plan() {
    ConstructionPlan plan;
    plan.name = "supermixed16";
    plan.collections.push_back({1, {base4()}});
    plan.rules.push_back({});
    plan.collections.push_back({2, {tile4_a(), tile4_b()}});
    plan.rules.push_back(supermixed16_rule());
    return plan;
}

ConstructionPlan self_similar_plan(const Pattern& p, int depth) {
    ConstructionPlan plan;
    plan.name = p.name() + "_x" + std::to_string(depth);
    for (int k = 1; k <= depth; ++k) {
        plan.collections.push_back({k, {p}});
        plan.rules.push_back({});  // constant member 0
    }
    return plan;
}

ConstructionPlan mixed_plan(const std::vector<Pattern>& per_level) {
    if (per_level.empty()) throw std::invalid_argument("mixed plan needs at least one level");
    ConstructionPlan plan;
    plan.name = "mixed";
    for (std::size_t k = 0; k < per_level.size(); ++k) {
        plan.collections.push_back({static_cast<int>(k + 1), {per_level[k]}});
        plan.rules.push_back({});
    }
    return plan;
}

ConstructionPlan supermixed64_plan() {
    ConstructionPlan plan = supermixed16_plan();
    plan.name = "supermixed64";
    plan.collections.push_back({3, {tile4_a(), tile4_b()}});
    AssignmentRule random_rule;
    random_rule.kind = AssignmentRule::Kind::SeededRandom;
    random_rule.seed = 7;
    plan.rules.push_back(random_rule);
    return plan;
}

}  // namespace fixtures
