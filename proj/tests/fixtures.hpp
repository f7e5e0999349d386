#pragma once

#include <vector>

#include "laby/pattern.hpp"
#include "laby/substitution.hpp"

namespace fixtures {

// the 3x3 cross: the smallest labyrinth pattern, fully unblocked
laby::Pattern plus3();

// three mutually related blocked width-4 patterns; `base4` seeds the
// two-level supermixed fixture, `tile4_a` / `tile4_b` refine it
laby::Pattern base4();
laby::Pattern tile4_a();
laby::Pattern tile4_b();

// three valid but unblocked patterns (widths 4, 5, 4)
laby::Pattern open4_a();
laby::Pattern open5();
laby::Pattern open4_b();

// blocked width-5 snake, used for mixed-width plans
laby::Pattern snake5();

// two valid width-4 patterns whose side-by-side placement closes a cycle;
// they defeat pairwise tree consistency while passing every per-pattern axiom
laby::Pattern cyclepair_a();
laby::Pattern cyclepair_b();

// 16x16 reference grid for the two-level supermixed fixture, expanded from
// an independent rectangle encoding (not composed by the code under test)
laby::Pattern supermixed16_grid();
// the bottom-right-exit corridor of that grid, 32 cells
std::vector<laby::SquareIndex> supermixed16_d_corridor();

// corridors of single tiles, same provenance
std::vector<laby::SquareIndex> tile4_a_corridor_top_bottom();
std::vector<laby::SquareIndex> tile4_a_corridor_bottom_right();
std::vector<laby::SquareIndex> tile4_b_corridor_left_right();
std::vector<laby::SquareIndex> tile4_b_corridor_left_top();

// member assignment of the supermixed fixture: 0-based member per white
// square of the base pattern (member 0 = tile4_a, member 1 = tile4_b)
laby::AssignmentRule supermixed16_rule();

// plans used across the suites
laby::ConstructionPlan supermixed16_plan();                  // base4 then {tile4_a, tile4_b}
laby::ConstructionPlan self_similar_plan(const laby::Pattern& p, int depth);
laby::ConstructionPlan mixed_plan(const std::vector<laby::Pattern>& per_level);
laby::ConstructionPlan supermixed64_plan();                  // three levels, random third rule

}  // namespace fixtures
