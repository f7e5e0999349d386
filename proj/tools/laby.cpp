#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laby/analysis.hpp"
#include "laby/path_engine.hpp"
#include "laby/pattern.hpp"
#include "laby/render.hpp"
#include "laby/substitution.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kUsageError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

// a pattern file starts with `pattern`, a plan file with `level` or `load`
bool looks_like_pattern_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword) || keyword[0] == '%') continue;
        return keyword == "pattern";
    }
    return false;
}

struct PlanArgs {
    std::string plan_file;
    std::vector<std::string> pattern_files;
    std::optional<std::uint64_t> seed_override;
    int cap = 4096;
    bool force = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--plan", plan_file, "plan file")->required();
        cmd->add_option("--patterns", pattern_files, "extra pattern files to resolve names against");
        cmd->add_option("--seed", seed_override, "override the seed of every random rule");
        cmd->add_option("--cap", cap, "maximum grid cells per side");
        cmd->add_flag("--force", force, "build on despite consistency violations");
    }

    laby::ConstructionPlan load() const {
        laby::PatternLibrary library;
        for (const std::string& file : pattern_files)
            laby::add_to_library(library, laby::load_pattern_file(file));
        laby::ConstructionPlan plan = laby::load_plan_file(plan_file, std::move(library));
        if (seed_override)
            for (laby::AssignmentRule& rule : plan.rules)
                if (rule.kind == laby::AssignmentRule::Kind::SeededRandom)
                    rule.seed = *seed_override;
        return plan;
    }

    laby::BuildOptions build_options() const { return {cap, force, true}; }
};

int run_validate(const std::vector<std::string>& files) {
    bool all_pass = true;
    laby::PatternLibrary library;
    std::vector<std::pair<std::string, std::string>> plans;  // path, text

    for (const std::string& file : files) {
        std::string text = read_file(file);
        if (looks_like_pattern_file(text))
            laby::add_to_library(library, laby::parse_patterns(text, file));
        else
            plans.emplace_back(file, text);
    }

    for (const auto& [name, pattern] : library) {
        laby::ValidationReport report = laby::validate_labyrinth_pattern(pattern);
        if (report.pass()) {
            laby::ExitPositions pos = *laby::find_exits(pattern).positions;
            bool h = laby::is_horizontally_blocked(pattern);
            bool v = laby::is_vertically_blocked(pattern);
            std::string blocked = h && v ? "h+v" : h ? "h" : v ? "v" : "none";
            std::cout << name << ": labyrinth: yes, blocked: " << blocked << ", exits (r,c)=("
                      << pos.r << "," << pos.c << ")\n";
        } else {
            all_pass = false;
            std::cout << report.to_string();
        }
    }

    for (const auto& [path, text] : plans) {
        std::string dir = std::filesystem::path(path).parent_path().string();
        laby::ConstructionPlan plan =
            laby::parse_plan(text, path, dir.empty() ? "." : dir, library);
        laby::ValidationReport report = laby::validate_collection_consistency(plan);
        std::cout << report.to_string();
        if (!report.pass()) all_pass = false;
    }
    return all_pass ? kOk : kValidationFailure;
}

int run_build(const PlanArgs& args, int level, const std::string& out) {
    laby::ConstructionPlan plan = args.load();
    int n = level > 0 ? level : plan.depth();
    laby::LabyrinthSet set = laby::build_to_level(plan, n, args.build_options());
    set.grid.set_name(plan.name + "_level_" + std::to_string(n));
    std::string grid_text = laby::serialize_pattern(set.grid);
    if (out.empty()) {
        std::cout << grid_text;
    } else {
        write_file(out, grid_text);
        write_file(out + ".trace", laby::serialize_trace(set));
        std::cerr << "wrote " << out << " (" << set.side() << "x" << set.side() << ", "
                  << set.grid.white_count() << " white cells)"
                  << (set.verified ? "" : " [unverified]") << "\n";
    }
    return set.verified ? kOk : kValidationFailure;
}

void print_matrix(const laby::PathMatrix& matrix, const std::string& format) {
    if (format == "csv")
        std::cout << matrix.to_csv(laby::path_type_labels(), laby::path_type_labels());
    else
        std::cout << matrix.to_text();
}

int run_matrices(const PlanArgs& args, int level, bool verify, const std::string& format) {
    laby::ConstructionPlan plan = args.load();
    int n = level > 0 ? level : plan.depth();

    std::vector<laby::LabyrinthSet> sets;
    sets.push_back(laby::build_to_level(plan, 1, args.build_options()));
    for (int k = 2; k <= n; ++k) {
        sets.push_back(laby::compose_level(sets.back(), plan.collection(k), plan.rule(k)));
        auto pairwise =
            laby::validate_pairwise_tree_consistency(sets[k - 2].grid, sets[k - 1].grid);
        if (!pairwise.pass() && !args.force)
            throw std::runtime_error("substitution violates pairwise tree consistency:\n" +
                                     pairwise.to_string());
    }

    laby::PathMatrix level_matrix = laby::path_matrix(sets.back().grid);
    print_matrix(level_matrix, format);

    if (!verify) return kOk;

    bool all_ok = true;
    for (int k = 1; k < n; ++k) {
        const laby::PatternCollection& next = plan.collection(k + 1);
        std::vector<laby::CountingMatrix> counting =
            laby::counting_matrices(sets[k - 1], next, plan.rule(k + 1));
        std::vector<laby::PathMatrix> members;
        for (const laby::Pattern& p : next.members) members.push_back(laby::path_matrix(p));
        laby::RecursionReport report =
            laby::verify_recursion(laby::path_matrix(sets[k - 1].grid), counting, members,
                                   laby::path_matrix(sets[k].grid));
        std::cout << "step " << k << " -> " << k + 1 << ":\n" << report.to_string();
        if (!report.pass()) all_ok = false;
    }
    if (plan.is_mixed() && n >= 1) {
        laby::ReducedProductReport reduced = laby::reduced_product_check(plan, n, args.build_options());
        std::cout << "reduced product identity: " << (reduced.pass() ? "OK" : "FAIL") << "\n";
        if (!reduced.pass()) all_ok = false;
    }
    return all_ok ? kOk : kValidationFailure;
}

int run_path(const PlanArgs& args, int level, const std::string& kind_text,
             const std::string& format) {
    auto kind = laby::parse_path_type(kind_text);
    if (!kind) throw std::runtime_error("unknown path kind: " + kind_text);
    laby::ConstructionPlan plan = args.load();
    int n = level > 0 ? level : plan.depth();
    laby::LabyrinthSet set = laby::build_to_level(plan, n, args.build_options());
    laby::TypedPath path = laby::exit_path(set.grid, *kind);
    if (format == "csv") std::cout << "col,row,type\n";
    for (std::size_t i = 0; i < path.squares.size(); ++i) {
        const char sep = format == "csv" ? ',' : ' ';
        std::cout << path.squares[i].col << sep << path.squares[i].row << sep
                  << laby::path_type_letter(path.types[i]) << "\n";
    }
    return kOk;
}

int run_growth(const PlanArgs& args, int levels, const std::string& format) {
    laby::ConstructionPlan plan = args.load();
    int n = levels > 0 ? levels : plan.depth();
    laby::GrowthDiagnostics diag = laby::growth_diagnostics(plan, n);
    if (format == "csv") {
        std::cout << "level,vA,vB,vCE,vDF,min,lower_bound,harmonic\n";
        for (const auto& l : diag.levels)
            std::cout << l.level << ',' << l.v[0] << ',' << l.v[1] << ',' << l.v[2] << ','
                      << l.v[3] << ',' << l.min_entry << ',' << l.lower_bound << ','
                      << l.harmonic_partial << "\n";
    } else {
        std::cout << (diag.mixed ? "mixed plan" : "supermixed plan")
                  << (diag.all_blocked ? ", all patterns blocked" : ", unblocked patterns present")
                  << "; lower bound " << (diag.bound_asserted ? "asserted" : "reported only")
                  << "\n";
        for (const auto& l : diag.levels) {
            std::cout << "level " << l.level << ": min v = " << l.min_entry << " ("
                      << l.min_entry.to_double() << ")";
            if (diag.bound_asserted)
                std::cout << ", bound " << l.lower_bound.to_double()
                          << (l.bound_holds ? " holds" : " VIOLATED");
            std::cout << ", sum 1/m = " << l.harmonic_partial << "\n";
        }
    }
    return diag.bound_asserted && !diag.all_bounds_hold() ? kValidationFailure : kOk;
}

int run_dimension(const PlanArgs& args, int levels, const std::string& format) {
    laby::ConstructionPlan plan = args.load();
    int n = levels > 0 ? levels : plan.depth();
    laby::DimensionEstimate estimate = laby::box_dimension_estimate(plan, n);

    auto show = [](double d) {
        std::ostringstream os;
        if (d == 1.0)
            os << 1;
        else
            os << d;
        return os.str();
    };

    if (format == "csv") {
        std::cout << "level,dA,dB,dC,dD,dE,dF\n";
        for (const auto& l : estimate.levels) {
            std::cout << l.level;
            for (double d : l.d) std::cout << ',' << show(d);
            std::cout << "\n";
        }
        std::cout << "inf";
        for (double d : estimate.inf_d) std::cout << ',' << show(d);
        std::cout << "\nsup";
        for (double d : estimate.sup_d) std::cout << ',' << show(d);
        std::cout << "\n";
    } else {
        for (const auto& l : estimate.levels)
            std::cout << show(l.d[0]) << "\n";  // top-bottom estimate per level
    }
    return kOk;
}

int run_exits(const PlanArgs& args, int terms, const std::string& format) {
    laby::ConstructionPlan plan = args.load();
    int n = terms > 0 ? terms : plan.depth();
    laby::ExitCoordinates coords = laby::exit_coordinates(plan, n);
    if (format == "csv") {
        std::cout << "terms,top_abscissa,left_ordinate,error_bound\n";
        for (int k = 0; k < n; ++k)
            std::cout << k + 1 << ',' << coords.top_abscissa_partials[k] << ','
                      << coords.left_ordinate_partials[k] << ','
                      << (k + 1 == n ? coords.error_bound.to_string() : "") << "\n";
    } else {
        std::cout << "top/bottom abscissa partial sums:";
        for (const auto& p : coords.top_abscissa_partials) std::cout << ' ' << p;
        std::cout << "\nleft/right ordinate partial sums:";
        for (const auto& p : coords.left_ordinate_partials) std::cout << ' ' << p;
        std::cout << "\nerror bound " << coords.error_bound << "\n";
    }
    return kOk;
}

int run_render(const PlanArgs& args, int level, const std::string& out,
               const std::string& kind_text, bool polyline, int canvas) {
    laby::ConstructionPlan plan = args.load();
    int n = level > 0 ? level : plan.depth();
    laby::LabyrinthSet set = laby::build_to_level(plan, n, args.build_options());

    laby::RenderSpec spec;
    spec.canvas = canvas;
    std::optional<laby::TypedPath> corridor;
    std::optional<std::vector<laby::PolylinePoint>> line;
    if (!kind_text.empty()) {
        auto kind = laby::parse_path_type(kind_text);
        if (!kind) throw std::runtime_error("unknown path kind: " + kind_text);
        spec.kind = *kind;
        spec.target = laby::RenderSpec::Target::PathCorridor;
        corridor = laby::exit_path(set.grid, *kind);
        if (polyline) {
            auto [from, to] = laby::path_endpoints(*kind);
            line = laby::arc_approximation(set, from, to);
        }
    } else {
        spec.target = laby::RenderSpec::Target::Set;
    }
    std::string svg = laby::render_svg(spec, set.grid, corridor ? &*corridor : nullptr,
                                       line ? &*line : nullptr);
    if (out.empty())
        std::cout << svg;
    else
        write_file(out, svg);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify and render supermixed labyrinth sets"};
    app.require_subcommand(1);

    std::vector<std::string> validate_files;
    CLI::App* validate = app.add_subcommand("validate", "check pattern and plan files");
    validate->add_option("files", validate_files, "pattern / plan files")->required();

    PlanArgs build_args, matrices_args, path_args, growth_args, dimension_args, exits_args,
        render_args;
    int build_level = 0, matrices_level = 0, path_level = 0, growth_levels = 0,
        dimension_levels = 0, exits_terms = 0, render_level = 0;
    std::string build_out, matrices_format = "text", path_kind, path_format = "text",
                growth_format = "text", dimension_format = "text", exits_format = "text",
                render_out, render_kind;
    bool matrices_verify = false, render_polyline = false;
    int render_canvas = 512;

    CLI::App* build = app.add_subcommand("build", "construct a labyrinth set grid");
    build_args.attach(build);
    build->add_option("--level", build_level, "target level (default: plan depth)");
    build->add_option("--out", build_out, "output grid file; a .trace sidecar is written next to it");

    CLI::App* matrices = app.add_subcommand("matrices", "path matrix of a built set");
    matrices_args.attach(matrices);
    matrices->add_option("--level", matrices_level, "target level");
    matrices->add_flag("--verify", matrices_verify, "check the counting identities exactly");
    matrices->add_option("--format", matrices_format, "text|csv");

    CLI::App* path = app.add_subcommand("path", "exit-to-exit path of a built set");
    path_args.attach(path);
    path->add_option("--level", path_level, "target level");
    path->add_option("--kind", path_kind, "path kind A..F")->required();
    path->add_option("--format", path_format, "text|csv");

    CLI::App* growth = app.add_subcommand("growth", "normalized length growth diagnostics");
    growth_args.attach(growth);
    growth->add_option("--levels", growth_levels, "levels to report");
    growth->add_option("--format", growth_format, "text|csv");

    CLI::App* dimension = app.add_subcommand("dimension", "box-dimension estimates per level");
    dimension_args.attach(dimension);
    dimension->add_option("--levels", dimension_levels, "levels to report");
    dimension->add_option("--format", dimension_format, "text|csv");

    CLI::App* exits = app.add_subcommand("exits", "exit-coordinate series partial sums");
    exits_args.attach(exits);
    exits->add_option("--terms", exits_terms, "number of series terms");
    exits->add_option("--format", exits_format, "text|csv");

    CLI::App* render = app.add_subcommand("render", "SVG of a set, corridor or polyline");
    render_args.attach(render);
    render->add_option("--level", render_level, "target level");
    render->add_option("--out", render_out, "output SVG file (default stdout)");
    render->add_option("--kind", render_kind, "draw the corridor of this path kind");
    render->add_flag("--polyline", render_polyline, "overlay the center polyline");
    render->add_option("--canvas", render_canvas, "canvas size in pixels (>= 64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsageError;
    }

    try {
        if (validate->parsed()) return run_validate(validate_files);
        if (build->parsed()) return run_build(build_args, build_level, build_out);
        if (matrices->parsed())
            return run_matrices(matrices_args, matrices_level, matrices_verify, matrices_format);
        if (path->parsed()) return run_path(path_args, path_level, path_kind, path_format);
        if (growth->parsed()) return run_growth(growth_args, growth_levels, growth_format);
        if (dimension->parsed())
            return run_dimension(dimension_args, dimension_levels, dimension_format);
        if (exits->parsed()) return run_exits(exits_args, exits_terms, exits_format);
        if (render->parsed())
            return run_render(render_args, render_level, render_out, render_kind, render_polyline,
                              render_canvas);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
