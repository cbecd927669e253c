#include "slicedev/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicedev/json_io.hpp"
#include "slicedev/suites.hpp"
#include "slicedev/svg.hpp"

namespace slicedev {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
}

PlaneSpec parse_plane(const std::string& text) {
    double nx, ny, nz, d;
    char trailing;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &nx, &ny, &nz, &d, &trailing) != 4)
        throw std::invalid_argument("plane must be given as nx,ny,nz,d");
    return PlaneSpec({nx, ny, nz}, d);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

// ---- slice ----------------------------------------------------------------

struct SliceArgs {
    std::string polytope_path, plane_text, out_path;
};

int cmd_slice(const SliceArgs& args) {
    const Polytope poly = load_off(read_file(args.polytope_path));
    const SliceResult result = slice(poly, parse_plane(args.plane_text));
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    emit(args.out_path, to_json(result).dump(2) + "\n");
    return kExitPass;
}

// ---- develop --------------------------------------------------------------

struct DevelopArgs {
    std::string slice_path, polytope_path, plane_text;
    std::string side = "right";
    std::string svg_path, out_path;
    bool dump_indicatrix = false;
};

int cmd_develop(const DevelopArgs& args) {
    SliceResult sliced;
    if (!args.slice_path.empty()) {
        sliced = slice_result_from_json(nlohmann::json::parse(read_file(args.slice_path)));
    } else if (!args.polytope_path.empty() && !args.plane_text.empty()) {
        const Polytope poly = load_off(read_file(args.polytope_path));
        sliced = slice(poly, parse_plane(args.plane_text));
        for (const auto& w : sliced.warnings) std::cerr << "warning: " << w << "\n";
    } else {
        throw std::invalid_argument("give either --slice or --polytope with --plane");
    }

    const SliceTheoremReport report = verify_slice_result(sliced);
    if (report.degenerate) {
        std::cout << "slice is degenerate (" << to_string(report.variant)
                  << "): develops unchanged, nothing to verify: PASS\n";
        emit(args.out_path, nlohmann::json({{"variant", to_string(report.variant)},
                                            {"degenerate_id", sliced.degenerate_id}})
                                    .dump(2) +
                                "\n");
        return kExitPass;
    }

    std::cout << "angle bounds: " << (report.angle_bounds_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "surface angle sums: " << (report.surface_sums_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "valid reconfiguration: " << (report.reconfiguration_valid ? "PASS" : "FAIL")
              << "\n";
    std::cout << "development simple: " << (report.right_simple ? "PASS" : "FAIL") << "\n";
    std::cout << "left development simple (reported only): "
              << (report.left_simple ? "PASS" : "FAIL") << "\n";

    nlohmann::json out;
    if (args.side == "right") out = to_json(*report.right);
    else if (args.side == "left") out = to_json(*report.left);
    else if (args.side == "both")
        out = nlohmann::json::array({to_json(*report.right), to_json(*report.left)});
    else throw std::invalid_argument("side must be right, left or both");
    emit(args.out_path, out.dump(2) + "\n");

    if (!args.svg_path.empty()) {
        const Reconfiguration rec = as_reconfiguration(*sliced.curve);
        const Chain section = configure({rec.lengths, rec.alpha});
        const Development& shown =
            args.side == "left" ? *report.left : *report.right;
        write_file(args.svg_path,
                   render_development_svg(shown, section, forbidden_disk({rec.lengths, rec.alpha})));
    }
    if (args.dump_indicatrix)
        std::cout << to_json(build_indicatrix(report.right->chain)).dump(2) << "\n";

    return report.passed ? kExitPass : kExitInvariant;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    int trials = 1000;
    std::uint64_t seed = 42;
    std::string report_path;
    bool serial = false;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.trials < 1) throw std::invalid_argument("trials must be >= 1");
    RunConfig cfg;
    cfg.seed = args.seed;
    cfg.trials = args.trials;
    cfg.parallel = !args.serial;
    cfg.pairwise_trials = std::min(cfg.trials, cfg.pairwise_trials);
    cfg.projection_trials = std::min(cfg.trials, cfg.projection_trials);
    cfg.sandwich_trials = std::min(cfg.trials, cfg.sandwich_trials);

    RunConfig base_cfg = cfg;
    base_cfg.trials = std::min(cfg.trials, 100);

    bool ok = true;
    nlohmann::json out;
    auto run_arm = [&] {
        const ArmSuiteReport arm = run_arm_suite(cfg);
        const BaseCaseReport base = run_base_case_suite(base_cfg);
        ok = ok && arm.passed() && base.passed();
        nlohmann::json j = to_json(arm);
        j["base2link"] = to_json(base);
        std::cout << "arm suite: " << (arm.passed() ? "PASS" : "FAIL") << " ("
                  << arm.trials << " trials, min margin " << arm.min_margin << ")\n";
        std::cout << "2-link base case: " << (base.passed() ? "PASS" : "FAIL") << " ("
                  << base.trials << " trials)\n";
        return j;
    };
    auto run_ind = [&] {
        const IndicatrixSuiteReport ind = run_indicatrix_suite(cfg);
        ok = ok && ind.passed();
        std::cout << "indicatrix suite: " << (ind.passed() ? "PASS" : "FAIL") << " ("
                  << ind.trials << " trials)\n";
        return to_json(ind);
    };
    auto run_slice = [&] {
        const SliceSuiteReport sl = run_slice_suite(cfg);
        ok = ok && sl.passed();
        std::cout << "slice suite: " << (sl.passed() ? "PASS" : "FAIL") << " (" << sl.curves
                  << " curves, " << sl.degenerate << " degenerate)\n";
        return to_json(sl);
    };

    if (args.suite == "arm") out = run_arm();
    else if (args.suite == "indicatrix") out = run_ind();
    else if (args.suite == "slice") out = run_slice();
    else if (args.suite == "all") {
        out = {{"seed", args.seed},
               {"trials", args.trials},
               {"suites",
                {{"arm", run_arm()}, {"indicatrix", run_ind()}, {"slice", run_slice()}}}};
    } else {
        throw std::invalid_argument("suite must be arm, slice, indicatrix or all");
    }

    if (!args.report_path.empty()) write_file(args.report_path, out.dump(2) + "\n");
    return ok ? kExitPass : kExitInvariant;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
    std::string shape;
    int points = 32;
    std::uint64_t seed = 1;
    std::string out_path;
};

int cmd_gen(const GenArgs& args) {
    Polytope poly;
    if (args.shape == "cube") poly = make_cube();
    else if (args.shape == "tetra") poly = make_tetrahedron();
    else if (args.shape == "random-hull") {
        if (args.points < 4)
            throw std::invalid_argument("random-hull needs at least 4 points");
        poly = random_hull(args.points, args.seed);
    } else {
        throw std::invalid_argument("shape must be cube, tetra or random-hull");
    }
    emit(args.out_path, to_off(poly));
    return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"slice curves of convex polytopes and their planar developments"};
    app.require_subcommand(1);

    SliceArgs slice_args;
    auto* sc_slice = app.add_subcommand("slice", "intersect a polytope with a plane");
    sc_slice->add_option("--polytope", slice_args.polytope_path, "OFF file")->required();
    sc_slice->add_option("--plane", slice_args.plane_text, "plane as nx,ny,nz,d")->required();
    sc_slice->add_option("--out", slice_args.out_path, "output JSON path (default stdout)");

    DevelopArgs dev_args;
    auto* sc_dev = app.add_subcommand("develop", "develop a slice curve onto the plane");
    sc_dev->add_option("--slice", dev_args.slice_path, "slice JSON from the slice command");
    sc_dev->add_option("--polytope", dev_args.polytope_path, "OFF file");
    sc_dev->add_option("--plane", dev_args.plane_text, "plane as nx,ny,nz,d");
    sc_dev->add_option("--side", dev_args.side, "right|left|both")->capture_default_str();
    sc_dev->add_option("--svg", dev_args.svg_path, "write an SVG figure");
    sc_dev->add_option("--out", dev_args.out_path, "output JSON path (default stdout)");
    sc_dev->add_flag("--dump-indicatrix", dev_args.dump_indicatrix,
                     "print the development's tangent indicatrix as JSON");

    VerifyArgs verify_args;
    auto* sc_verify = app.add_subcommand("verify", "run the randomized property suites");
    sc_verify->add_option("--suite", verify_args.suite, "arm|slice|indicatrix|all")
        ->capture_default_str();
    sc_verify->add_option("--trials", verify_args.trials, "trials per suite")
        ->capture_default_str();
    sc_verify->add_option("--seed", verify_args.seed, "master seed")->capture_default_str();
    sc_verify->add_option("--report", verify_args.report_path, "write the report JSON here");
    sc_verify->add_flag("--serial", verify_args.serial, "use the serial reference runner");

    GenArgs gen_args;
    auto* sc_gen = app.add_subcommand("gen", "generate a convex OFF mesh");
    sc_gen->add_option("--shape", gen_args.shape, "cube|tetra|random-hull")->required();
    sc_gen->add_option("--points", gen_args.points, "points for random-hull")
        ->capture_default_str();
    sc_gen->add_option("--seed", gen_args.seed, "sampling seed")->capture_default_str();
    sc_gen->add_option("--out", gen_args.out_path, "output OFF path (default stdout)");

    try {
        apply_tolerance_env();
        app.parse(argc, argv);
        if (sc_slice->parsed()) return cmd_slice(slice_args);
        if (sc_dev->parsed()) return cmd_develop(dev_args);
        if (sc_verify->parsed()) return cmd_verify(verify_args);
        if (sc_gen->parsed()) return cmd_gen(gen_args);
        return kExitValidation;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const OffParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

}  // namespace slicedev
