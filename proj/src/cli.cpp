#include "tricover/cli.hpp"

#include "tricover/bounds.hpp"
#include "tricover/methods.hpp"
#include "tricover/plan_io.hpp"
#include "tricover/svg_render.hpp"
#include "tricover/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace tricover {

namespace {

struct CoverArgs {
    int n = 1;
    std::string d_text;
    std::string method = "auto";
    int j = -1;  // -1 = not given
    bool force = false;
    std::string out_path;
};

struct VerifyArgs {
    std::string plan_path;
    int sample = 0;
    std::uint64_t seed = 0;
};

struct RenderArgs {
    std::string plan_path;
    std::string out_path;
    bool no_target = false;
    bool labels = false;
    std::string frame = "simplex";
};

struct SweepArgs {
    int n_min = 2;
    int n_max = 4;
    int grid_points = 9;
    std::string out_path;
};

Rational parse_d_or_throw(const std::string& text) {
    auto d = parse_rational(text);
    if (!d) throw CLI::ValidationError("--d", "expected a rational like 2/3, 0.3 or 0");
    if (*d < 0 || *d >= 1) throw CLI::ValidationError("--d", "d must be in [0, 1)");
    return *d;
}

CoveringPlan build_plan(const CoverArgs& a, const Rational& d) {
    const bool has_j = a.j >= 0;
    if (a.method == "auto") {
        if (d == 0) return grid_cover(a.n);
        return consolidated_cover(a.n, d);
    }
    if (a.method == "grid") {
        if (d != 0) throw std::invalid_argument("grid covers exactly d = 0; pick another method");
        return grid_cover(a.n);
    }
    if (a.method == "naive") return naive_cover(a.n, d);
    if (a.method == "bottom_pair") return bottom_pair_cover(a.n, d, a.force);
    if (a.method == "bottom_pairs") return bottom_pairs_cover(a.n, d);
    if (a.method == "t2_block") return t2_block_cover(a.n, d, a.force);
    if (a.method == "even") {
        return has_j ? even_cover(a.n, d, a.j, a.force) : even_cover_auto(a.n, d);
    }
    if (a.method == "odd") {
        return has_j ? odd_cover(a.n, d, a.j, a.force) : odd_cover_auto(a.n, d);
    }
    throw std::invalid_argument("unknown method " + a.method);
}

int cmd_cover(const CoverArgs& a, std::ostream& out, std::ostream& err) {
    Rational d = parse_d_or_throw(a.d_text);
    CoveringPlan plan;
    try {
        plan = build_plan(a, d);
    } catch (const ThresholdExceeded& e) {
        err << "error: " << e.what() << " (pass --force to emit the gapped plan)\n";
        return kExitThreshold;
    }
    if (!a.out_path.empty()) save_plan(plan, a.out_path);
    out << "method=" << method_name(plan.method) << " j=" << (plan.j ? std::to_string(*plan.j) : "-")
        << " count=" << plan.count() << " threshold=" << format_rational(plan_threshold(plan))
        << "\n";
    return kExitOk;
}

void print_report(const CoverageReport& r, std::ostream& out, const char* label) {
    out << label << ": covered=" << (r.covered ? "true" : "false");
    if (r.witness) {
        out << " witness=(" << format_rational(r.witness->x) << ", "
            << format_rational(r.witness->y) << ")";
    }
    if (r.checked_method == CheckMethod::ExactSlab) {
        out << " critical_levels=" << r.critical_levels;
    }
    out << "\n";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    CoveringPlan plan = load_plan(a.plan_path);
    TargetTriangle target = plan.target();
    CoverageReport exact = verify_coverage(plan, target);
    print_report(exact, out, "exact");
    if (a.sample > 0) {
        CoverageReport sampled = sample_check(plan, target, a.seed, a.sample);
        print_report(sampled, out, "sampling");
    }
    return exact.covered ? kExitOk : kExitGap;
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
    CoveringPlan plan = load_plan(a.plan_path);
    RenderOptions opts;
    opts.show_target = !a.no_target;
    opts.labels = a.labels;
    opts.equilateral = a.frame == "equilateral";
    save_svg(plan, a.out_path, opts);
    out << "wrote " << a.out_path << " (" << plan.count() << " triangles)\n";
    return kExitOk;
}

int cmd_bounds(int n, std::ostream& out) {
    out << "p,even_threshold,odd_threshold\n";
    for (int p = 1; p <= n; ++p) {
        out << p << ',' << format_rational(threshold_even(n, p)) << ',';
        if (p < n) {
            out << format_rational(threshold_odd(n, p));
        } else {
            out << '-';
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    if (a.n_min < 1 || a.n_max < a.n_min) {
        throw std::invalid_argument("sweep: need 1 <= n-min <= n-max");
    }
    if (a.grid_points < 1) throw std::invalid_argument("sweep: grid-points must be >= 1");

    std::ofstream csv(a.out_path);
    if (!csv) throw std::invalid_argument("sweep: cannot write " + a.out_path);
    csv << "n,d,k_min,method,verified\n";
    int rows = 0;
    for (int n = a.n_min; n <= a.n_max; ++n) {
        for (int i = 1; i <= a.grid_points; ++i) {
            Rational d(BigInt(i), BigInt(a.grid_points + 1));
            MinimalCount mc = k_min(n, d);
            CoveringPlan plan = consolidated_cover(n, d);
            CoverageReport report = verify_coverage(plan, plan.target());
            csv << n << ',' << format_rational(d) << ',' << mc.count << ','
                << method_name(plan.method) << ',' << (report.covered ? "true" : "false")
                << '\n';
            ++rows;
        }
    }
    out << "wrote " << rows << " rows to " << a.out_path << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coverings of a side-(n+d) triangle by homothetic unit triangles,\n"
                 "with exact rational verification."};
    app.name("tricover");
    app.require_subcommand(1);

    CoverArgs cover;
    CLI::App* cover_cmd = app.add_subcommand(
        "cover", "Generate a covering plan and print its summary");
    cover_cmd->add_option("--n", cover.n, "Integer part of the side length")
        ->required()
        ->check(CLI::PositiveNumber);
    cover_cmd->add_option("--d", cover.d_text, "Fractional part, e.g. 2/3 or 0.3")->required();
    cover_cmd->add_option("--method", cover.method, "Construction to use")
        ->check(CLI::IsMember({"auto", "grid", "naive", "bottom_pair", "bottom_pairs", "t2_block",
                               "even", "odd"}))
        ->capture_default_str();
    cover_cmd->add_option("--j", cover.j, "Row parameter for even/odd (default: optimal)");
    cover_cmd->add_flag("--force", cover.force, "Emit the plan even beyond its threshold");
    cover_cmd->add_option("--out", cover.out_path, "Write the plan JSON here");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Exactly check that a plan covers its target");
    verify_cmd->add_option("plan", verify.plan_path, "Plan JSON file")->required();
    verify_cmd->add_option("--sample", verify.sample, "Also run the sampling oracle");
    verify_cmd->add_option("--seed", verify.seed, "Sampling seed")->capture_default_str();

    RenderArgs render;
    CLI::App* render_cmd = app.add_subcommand("render", "Draw a plan as SVG");
    render_cmd->add_option("plan", render.plan_path, "Plan JSON file")->required();
    render_cmd->add_option("--out", render.out_path, "Output SVG path")->required();
    render_cmd->add_flag("--no-target", render.no_target, "Skip the target outline");
    render_cmd->add_flag("--labels", render.labels, "Number the placements");
    render_cmd->add_option("--frame", render.frame, "Display frame")
        ->check(CLI::IsMember({"simplex", "equilateral"}))
        ->capture_default_str();

    int bounds_n = 1;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Print the per-p threshold table");
    bounds_cmd->add_option("--n", bounds_n, "Integer part of the side length")
        ->required()
        ->check(CLI::PositiveNumber);

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Tabulate minimal counts over a d grid as CSV");
    sweep_cmd->add_option("--n-min", sweep.n_min, "Smallest n")->required();
    sweep_cmd->add_option("--n-max", sweep.n_max, "Largest n")->required();
    sweep_cmd->add_option("--grid-points", sweep.grid_points, "Interior d values per n")
        ->required();
    sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
        if (cover_cmd->parsed()) return cmd_cover(cover, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify, out);
        if (render_cmd->parsed()) return cmd_render(render, out);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_n, out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PlanIoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace tricover
