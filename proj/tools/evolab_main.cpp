// evolab: discrete evolute/involute laboratory.
//   evolab run        iterate a transform, write trace artifacts
//   evolab verify     run theorem verification suites
//   evolab transform  apply one transform to a polygon
//   evolab render     render polygons to SVG
// Exit codes: 0 ok, 1 verification failure, 2 usage error,
// 3 terminal geometric event.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "evolab/dynamics.hpp"
#include "evolab/generators.hpp"
#include "evolab/io.hpp"
#include "evolab/rng.hpp"
#include "evolab/svg.hpp"
#include "evolab/verify.hpp"

using nlohmann::json;
using namespace evolab;

namespace {

geom::Polygon resolve_input(const std::string& input, const std::string& genspec,
                            uint64_t seed) {
    if (!input.empty()) return io::load_polygon(input);
    if (!genspec.empty()) {
        auto rng = SplitMix64::stream(seed, 0);
        return gen::from_spec(genspec, rng);
    }
    throw Error("need --input or --gen");
}

json run_summary(const dynamics::IterationTrace& trace, uint64_t seed) {
    json j;
    j["seed"] = seed;
    j["steps"] = trace.steps.size() - 1;
    j["classification"] = dynamics::to_string(trace.classification);
    if (trace.period_estimate) j["period_estimate"] = *trace.period_estimate;
    if (trace.terminal_event) j["terminal_event"] = *trace.terminal_event;
    size_t n = trace.steps.size();
    if (n >= 3)
        j["final_residual_period2"] =
            dynamics::sup_vertex_distance(trace.steps[n - 1], trace.steps[n - 3]);
    if (!trace.scale_log.empty()) j["last_scale_log"] = trace.scale_log.back();
    // lag-4 rotation alignment over the trailing half: frequency of near
    // rotational repeats and the mean angle (the pentagon "saw" signature);
    // the construction shifts vertex labels, so try all cyclic relabelings
    if (n >= 12) {
        int hits = 0, total = 0;
        double angle_sum = 0;
        for (size_t i = n / 2; i + 4 < n; ++i) {
            const auto& A = trace.steps[i];
            const auto& B = trace.steps[i + 4];
            dynamics::RotationFit best{0.0, 1e300};
            for (int rev = 0; rev < 2; ++rev) {
                for (int shift = 0; shift < A.size(); ++shift) {
                    std::vector<geom::CoorientedLine> rel;
                    for (int k = 0; k < A.size(); ++k)
                        rel.push_back(B.line(rev ? shift - k : shift + k));
                    auto fit = dynamics::rotation_alignment(A, geom::Polygon(rel));
                    if (fit.residual < best.residual) best = fit;
                }
            }
            ++total;
            if (best.residual < 1e-6) {
                ++hits;
                angle_sum += std::abs(best.angle);
            }
        }
        if (total > 0) {
            j["lag4_rotation_fraction"] = static_cast<double>(hits) / total;
            if (hits > 0) j["lag4_rotation_angle"] = angle_sum / hits;
        }
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete evolutes, involutes and their dynamics"};
    app.require_subcommand(1);

    std::string input, genspec, csv_path, jsonl_path, svg_path, out_path;
    std::string transform_name = "p_evolute";
    uint64_t seed = 1;
    int steps = 100;
    int trials = 0;
    double tol = 0;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "polygon JSON file");
        cmd->add_option("--gen", genspec, "generator spec, e.g. random-ngon:6");
        cmd->add_option("--seed", seed, "RNG seed");
    };

    auto* run = app.add_subcommand("run", "iterate a transform and record the trace");
    add_io(run);
    run->add_option("--transform", transform_name,
                    "p_evolute|a_o_evolute|a_c_evolute|p_evolvent|a_evolvent");
    run->add_option("--steps", steps, "iteration count");
    run->add_option("--csv", csv_path, "trace CSV output");
    run->add_option("--jsonl", jsonl_path, "per-step polygon JSONL output");
    run->add_option("--svg", svg_path, "overlay SVG of first/last steps");

    auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
    std::string criterion = "all";
    verify->add_option("criterion", criterion, "criterion name or 'all'");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--trials", trials, "trial count override");
    verify->add_option("--tol", tol, "tolerance override (reporting only)");
    bool list = false;
    verify->add_flag("--list", list, "list criterion names");

    auto* transform = app.add_subcommand("transform", "apply one transform");
    add_io(transform);
    transform->add_option("--transform", transform_name, "transform name");
    transform->add_option("--out", out_path, "output polygon JSON (default stdout)");
    transform->add_option("--svg", svg_path, "input+output overlay SVG");

    auto* render = app.add_subcommand("render", "render polygons to SVG");
    add_io(render);
    render->add_option("--svg", svg_path, "SVG output path")->required();
    bool markers = false, arrows = false;
    render->add_flag("--markers", markers, "vertex markers");
    render->add_flag("--arrows", arrows, "coorientation arrows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            auto tr = dynamics::transform_from_string(transform_name);
            if (!tr) {
                std::cerr << "unknown transform '" << transform_name << "'\n";
                return 2;
            }
            geom::Polygon P = resolve_input(input, genspec, seed);
            auto trace = dynamics::iterate(*tr, P, steps);
            std::string header = "# seed=" + std::to_string(seed) +
                                 " transform=" + transform_name + "\n";
            if (!csv_path.empty())
                io::write_file(csv_path, header + io::trace_to_csv(trace));
            if (!jsonl_path.empty()) {
                json meta = {{"seed", seed}, {"transform", transform_name}};
                io::write_file(jsonl_path, meta.dump() + "\n" + io::trace_to_jsonl(trace));
            }
            if (!svg_path.empty() && trace.steps.size() >= 2)
                io::write_file(svg_path,
                               svg::render({trace.steps.front(), trace.steps.back()}));
            std::cout << run_summary(trace, seed).dump(2) << "\n";
            return trace.terminal_event ? 3 : 0;
        }

        if (verify->parsed()) {
            if (list) {
                for (const auto& n : verify::criterion_names()) std::cout << n << "\n";
                return 0;
            }
            int failures = 0;
            auto names = criterion == "all" ? verify::criterion_names()
                                            : std::vector<std::string>{criterion};
            for (const auto& n : names) {
                auto r = verify::run_criterion(n, seed, trials);
                if (tol > 0 && r.measured >= 0) r.pass = r.measured < tol;
                std::cout << verify::format_line(r) << "\n";
                if (!r.pass) ++failures;
            }
            return failures ? 1 : 0;
        }

        if (transform->parsed()) {
            auto tr = dynamics::transform_from_string(transform_name);
            if (!tr) {
                std::cerr << "unknown transform '" << transform_name << "'\n";
                return 2;
            }
            geom::Polygon P = resolve_input(input, genspec, seed);
            geom::Polygon Q = dynamics::apply_transform(*tr, P);
            json j = io::polygon_to_json(Q);
            if (out_path.empty())
                std::cout << j.dump(2) << "\n";
            else
                io::write_file(out_path, j.dump(2) + "\n");
            if (!svg_path.empty()) io::write_file(svg_path, svg::render({P, Q}));
            return 0;
        }

        if (render->parsed()) {
            geom::Polygon P = resolve_input(input, genspec, seed);
            svg::Options opt;
            opt.vertex_markers = markers;
            opt.coorientation_arrows = arrows;
            io::write_file(svg_path, svg::render({P}, opt));
            return 0;
        }
    } catch (const Collapsed& e) {
        std::cerr << "terminal event: " << e.what() << "\n";
        return 3;
    } catch (const EvoluteParallelSides& e) {
        std::cerr << "terminal event: " << e.what() << "\n";
        return 3;
    } catch (const NoEvolvent& e) {
        std::cerr << "terminal event: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
