// angmax CLI: single-point transform evaluation, angular maximal profiles,
// verification experiments, and kernel-splitting diagnostics.
//
// Exit codes: 0 success, 1 verification flags failed, 2 configuration error,
// 3 domain error (valid config, inadmissible evaluation point).

#include "angmax/family.hpp"
#include "angmax/format.hpp"
#include "angmax/kernel_split.hpp"
#include "angmax/kernels.hpp"
#include "angmax/maximal.hpp"
#include "angmax/oracle.hpp"
#include "angmax/report.hpp"
#include "angmax/transforms.hpp"
#include "angmax/verify.hpp"
#include "angmax/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>

namespace {

using namespace angmax;

struct Options {
    std::string f_source;
    std::string kind = "poisson";
    double x = 0.0, y = 1.0;
    double rho = 1.0, theta = 0.0;
    std::string z;
    std::string grid = "1e-3,1e3,2048";
    std::vector<std::string> p{"2"};
    std::uint64_t seed = 12345;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string out_dir;
    std::string format = "both";
    double lambda = 0.1;
    std::string experiment;
    int coarse = 512, layers = 24, refine = 40;
};

using FuncInput = std::variant<SimpleFunction, ExpFunction>;

FuncInput parse_function(const std::string& src)
{
    if (src.empty()) throw CLI::ValidationError("--f", "missing function source");
    if (src.rfind("fixture:", 0) == 0) {
        const std::string name = src.substr(8);
        try {
            return fixture(name);
        } catch (const std::invalid_argument&) {
            return exp_fixture(name);
        }
    }
    if (src.front() == '{') return SimpleFunction::from_json(src);
    std::ifstream in(src);
    if (!in) throw CLI::ValidationError("--f", "cannot open file: " + src);
    std::stringstream ss;
    ss << in.rdbuf();
    return SimpleFunction::from_json(ss.str());
}

RadialGrid parse_grid(const std::string& spec)
{
    double lo = 0.0, hi = 0.0;
    int count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(spec);
    if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ',' || c2 != ',')
        throw CLI::ValidationError("--grid", "expected rho_min,rho_max,count");
    return RadialGrid(lo, hi, count);
}

complexd parse_complex(const std::string& spec)
{
    double re = 0.0, im = 0.0;
    char c = 0;
    std::istringstream ss(spec);
    if (!(ss >> re)) throw CLI::ValidationError("--z", "expected re,im");
    if (ss >> c && c == ',') ss >> im;
    return {re, im};
}

double parse_p(const std::string& s)
{
    if (s == "inf") return std::numeric_limits<double>::infinity();
    return std::stod(s);
}

std::string out_directory(const Options& opt)
{
    if (!opt.out_dir.empty()) return opt.out_dir;
    if (const char* env = std::getenv("ANGMAX_OUT")) return env;
    return ".";
}

void write_file(const std::string& dir, const std::string& name, const std::string& content)
{
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string csv_preamble(const ordered_json& config_echo)
{
    return std::string("# ") + kVersion + "\n# config: " + config_echo.dump() + "\n";
}

int cmd_transform(const Options& opt)
{
    const FuncInput fin = parse_function(opt.f_source);
    const TransformKind kind = kind_from_name(opt.kind);

    ordered_json echo{{"command", "transform"}, {"kind", opt.kind}, {"f", opt.f_source}};
    complexd value;
    std::string point_cols, point_vals;

    if (std::holds_alternative<ExpFunction>(fin)) {
        if (kind != TransformKind::LaplaceRay)
            throw std::domain_error("exponential fixtures support the laplace kind only");
        const auto& g = std::get<ExpFunction>(fin);
        const complexd z = opt.z.empty()
                               ? complexd{opt.rho * std::cos(opt.theta), opt.rho * std::sin(opt.theta)}
                               : parse_complex(opt.z);
        value = laplace_exp(g, z);
        echo["rho"] = std::abs(z);
        echo["theta"] = std::atan2(z.imag(), z.real());
        point_cols = "rho,theta";
        point_vals = format_double(std::abs(z)) + "," + format_double(std::atan2(z.imag(), z.real()));
    } else {
        const auto& f = std::get<SimpleFunction>(fin);
        switch (kind) {
            case TransformKind::Poisson:
                value = poisson(f, opt.x, opt.y);
                echo["x"] = opt.x;
                echo["y"] = opt.y;
                point_cols = "x,y";
                point_vals = format_double(opt.x) + "," + format_double(opt.y);
                break;
            case TransformKind::Stieltjes:
            case TransformKind::CauchyIntegral: {
                const complexd z = parse_complex(opt.z);
                value = (kind == TransformKind::Stieltjes) ? stieltjes(f, z) : cauchy_integral(f, z);
                echo["z"] = ordered_json{z.real(), z.imag()};
                point_cols = "z_re,z_im";
                point_vals = format_double(z.real()) + "," + format_double(z.imag());
                break;
            }
            case TransformKind::LaplaceRay:
                value = laplace_ray(f, opt.rho, opt.theta);
                echo["rho"] = opt.rho;
                echo["theta"] = opt.theta;
                point_cols = "rho,theta";
                point_vals = format_double(opt.rho) + "," + format_double(opt.theta);
                break;
            case TransformKind::Hilbert:
                value = hilbert(f, opt.x);
                echo["x"] = opt.x;
                point_cols = "x";
                point_vals = format_double(opt.x);
                break;
        }
    }

    const std::string dir = out_directory(opt);
    if (opt.format == "csv" || opt.format == "both") {
        std::string csv = csv_preamble(echo);
        csv += point_cols + ",value_re,value_im\n";
        csv += point_vals + "," + format_complex(value) + "\n";
        write_file(dir, "transform.csv", csv);
    }
    if (opt.format == "json" || opt.format == "both") {
        ordered_json j{{"version", kVersion},
                       {"config", echo},
                       {"value", ordered_json{value.real(), value.imag()}}};
        write_file(dir, "transform.json", dump_json(j));
    }
    std::cout << "value = " << format_complex(value) << "\n";
    return 0;
}

int cmd_maxprofile(const Options& opt)
{
    const FuncInput fin = parse_function(opt.f_source);
    const TransformKind kind = kind_from_name(opt.kind);
    const RadialGrid grid = parse_grid(opt.grid);
    AngleSearchConfig cfg;
    cfg.coarse_count = opt.coarse;
    cfg.boundary_layers = opt.layers;
    cfg.refine_iters = opt.refine;
    const Sector sector = natural_sector(kind);

    ordered_json echo{{"command", "maxprofile"},
                      {"kind", opt.kind},
                      {"f", opt.f_source},
                      {"grid", ordered_json{{"rho_min", grid.rho_min},
                                            {"rho_max", grid.rho_max},
                                            {"count", grid.count}}},
                      {"search", ordered_json{{"coarse_count", cfg.coarse_count},
                                              {"boundary_layers", cfg.boundary_layers},
                                              {"refine_iters", cfg.refine_iters}}},
                      {"jobs", opt.jobs}};

    RadialProfile prof =
        std::holds_alternative<ExpFunction>(fin)
            ? max_profile(kind, std::get<ExpFunction>(fin), grid, sector, cfg, opt.jobs)
            : max_profile(kind, std::get<SimpleFunction>(fin), grid, sector, cfg, opt.jobs);

    ordered_json summary{{"version", kVersion}, {"config", echo}};
    const double prof_max = *std::max_element(prof.values.begin(), prof.values.end());
    summary["profile_max"] = prof_max;

    ordered_json norms = ordered_json::array();
    for (const std::string& ps : opt.p) {
        const double p = parse_p(ps);
        const ProfileNorm out = lp_norm_profile(prof, p, TailPolicy::Report);
        double in_norm = std::holds_alternative<ExpFunction>(fin)
                             ? std::get<ExpFunction>(fin).lp_norm(p)
                             : std::get<SimpleFunction>(fin).lp_norm(p);
        ordered_json entry{{"p", ps},
                           {"profile_norm", out.value},
                           {"input_norm", in_norm},
                           {"ratio", in_norm > 0.0 ? out.value / in_norm : 0.0},
                           {"tail_fraction", out.tail_fraction}};
        norms.push_back(entry);
    }
    summary["norms"] = norms;

    if (prof_max > 0.0) {
        std::vector<double> lambdas;
        for (int i = 0; i < 64; ++i)
            lambdas.push_back(prof_max * std::pow(1e-3, 1.0 - i / 63.0));
        summary["weak_norm"] = distribution(prof, lambdas).weak_norm;
    } else {
        summary["weak_norm"] = 0.0;
    }

    const std::string dir = out_directory(opt);
    if (opt.format == "csv" || opt.format == "both")
        write_file(dir, "maxprofile.csv", csv_preamble(echo) + prof.to_csv());
    if (opt.format == "json" || opt.format == "both")
        write_file(dir, "maxprofile_summary.json", dump_json(summary));
    std::cout << "profile_max = " << format_double(prof_max) << "\n";
    return 0;
}

int cmd_verify(const Options& opt)
{
    using namespace angmax::verify;

    RunOptions run{parse_grid(opt.grid), AngleSearchConfig{}, opt.jobs};
    run.search.coarse_count = opt.coarse;
    run.search.boundary_layers = opt.layers;
    run.search.refine_iters = opt.refine;

    Report rep;
    if (opt.experiment == "theorem1") {
        FunctionFamily fam{FamilyConfig{100, 6, 4.0, 2.0, true, opt.seed}, {"indicator01"}};
        rep = run_theorem1(fam, run, {1.0, 2.0, 4.0, 8.0});
    } else if (opt.experiment == "theorem2") {
        FunctionFamily fam{FamilyConfig{100, 6, 4.0, 2.0, true, opt.seed}, {"indicator01"}};
        rep = run_theorem2(fam, run);
    } else if (opt.experiment == "theorem3") {
        FunctionFamily fam{FamilyConfig{40, 6, 4.0, 2.0, false, opt.seed}, {"comb"}};
        rep = run_theorem3(fam, run);
    } else if (opt.experiment == "theorem4") {
        FunctionFamily fam{FamilyConfig{20, 6, 4.0, 2.0, false, opt.seed}, {"comb", "step3"}};
        rep = run_theorem4(fam, run);
    } else if (opt.experiment == "ray-hy") {
        FunctionFamily fam{FamilyConfig{10, 6, 4.0, 2.0, true, opt.seed}, {"comb", "indicator01"}};
        const double edge = 0.5 * kPi - 1e-3;
        rep = run_ray_hy(fam, {1.0, 2.0},
                         {-edge, -1.1780972450961724, -0.7853981633974483, -0.39269908169872414,
                          0.0, 0.39269908169872414, 0.7853981633974483, 1.1780972450961724, edge},
                         RadialGrid(1e-6, 1e6, 4096), true);
    } else if (opt.experiment == "cauchy-rep") {
        std::vector<std::pair<std::string, SimpleFunction>> fixtures;
        for (const char* n : {"indicator01", "twobump", "step3", "comb"})
            fixtures.emplace_back(n, fixture(n));
        FunctionFamily fam{FamilyConfig{6, 5, 3.0, 2.0, true, opt.seed}, {}};
        for (auto& [id, f] : fam.members()) {
            std::vector<double> bp = f.breakpoints();
            bp.front() = 0.0; // anchor the support at zero for the tail term
            fixtures.emplace_back("anchored-" + id, SimpleFunction(bp, f.values()));
        }
        rep = run_cauchy_rep(fixtures, complexd{1.0, 0.0}, -0.25 * kPi, 0.25 * kPi, 1e3, 10000);
    } else if (opt.experiment == "identity-sec4") {
        std::vector<complexd> pts;
        for (double x : {-0.7, 0.35, 0.8, 1.6, 3.1})
            for (double y : {0.4, 0.9, 1.7, 2.6}) pts.emplace_back(x, y);
        rep = run_identity_sec4(fixture("step3"), pts);
    } else if (opt.experiment == "splitting") {
        FunctionFamily fam{FamilyConfig{12, 6, 4.0, 2.0, true, opt.seed}, {"indicator01"}};
        std::vector<double> radii;
        for (int i = 0; i < 24; ++i) radii.push_back(1e-2 * std::pow(1e4, i / 23.0));
        rep = run_splitting_suite(fam, radii, opt.lambda, run);
    } else if (opt.experiment == "lemma1") {
        rep = run_lemma1(50);
    } else {
        std::cerr << "unknown experiment: " << opt.experiment << "\n";
        return 2;
    }

    rep.config["command"] = ordered_json{{"experiment", opt.experiment},
                                         {"seed", opt.seed},
                                         {"jobs", opt.jobs},
                                         {"kernel_backend",
                                          kernels::backend_name(kernels::active_backend())}};

    const std::string dir = out_directory(opt);
    const std::string base = "verify_" + opt.experiment;
    if (opt.format == "json" || opt.format == "both")
        write_file(dir, base + ".json", rep.to_json());
    if (opt.format == "csv" || opt.format == "both")
        write_file(dir, base + ".csv", rep.rows_csv());

    std::cout << "experiment " << opt.experiment << ": "
              << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.rows.size() << " rows)\n";
    for (const std::string& fl : rep.flags) std::cout << "  flag: " << fl << "\n";
    return rep.passed() ? 0 : 1;
}

int cmd_kernel_split(const Options& opt)
{
    const FuncInput fin = parse_function(opt.f_source);
    if (!std::holds_alternative<SimpleFunction>(fin))
        throw std::domain_error("kernel-split requires a simple function");
    const auto& f = std::get<SimpleFunction>(fin);

    const SplitGeometry geom(opt.rho, opt.theta);
    const SplitConvolutions sc = split_convolutions(f, geom);
    const double g = poisson(f, geom.x_star, geom.y_star).real();
    const PhiMass mass = phi_mass(geom.y_star, geom.delta);

    ordered_json echo{{"command", "kernel-split"},
                      {"f", opt.f_source},
                      {"R", opt.rho},
                      {"theta_star", opt.theta},
                      {"lambda", opt.lambda}};
    ordered_json j{{"version", kVersion},
                   {"config", echo},
                   {"R", geom.R},
                   {"theta_star", geom.theta_star},
                   {"x_star", geom.x_star},
                   {"y_star", geom.y_star},
                   {"delta", geom.delta},
                   {"g", g},
                   {"g1", sc.g1},
                   {"g2", sc.g2},
                   {"split_residual", std::fabs(sc.g1 + sc.g2 - g)},
                   {"phi_mass", mass.closed_form},
                   {"exclusion_radius", p2_threshold_radius(f.lp_norm(1.0), 0.5 * opt.lambda)}};

    const std::string dir = out_directory(opt);
    if (opt.format == "json" || opt.format == "both")
        write_file(dir, "kernel_split.json", dump_json(j));
    if (opt.format == "csv" || opt.format == "both") {
        std::string csv = csv_preamble(echo);
        csv += "R,theta_star,x_star,y_star,delta,g,g1,g2,phi_mass\n";
        csv += format_double(geom.R) + "," + format_double(geom.theta_star) + "," +
               format_double(geom.x_star) + "," + format_double(geom.y_star) + "," +
               format_double(geom.delta) + "," + format_double(g) + "," + format_double(sc.g1) +
               "," + format_double(sc.g2) + "," + format_double(mass.closed_form) + "\n";
        write_file(dir, "kernel_split.csv", csv);
    }
    std::cout << "g = " << format_double(g) << " (g1 = " << format_double(sc.g1)
              << ", g2 = " << format_double(sc.g2) << ")\n";
    return 0;
}

void apply_config_file(const std::string& path, Options& opt)
{
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("f")) opt.f_source = j["f"].get<std::string>();
    if (j.contains("kind")) opt.kind = j["kind"].get<std::string>();
    if (j.contains("x")) opt.x = j["x"].get<double>();
    if (j.contains("y")) opt.y = j["y"].get<double>();
    if (j.contains("rho")) opt.rho = j["rho"].get<double>();
    if (j.contains("theta")) opt.theta = j["theta"].get<double>();
    if (j.contains("z")) opt.z = j["z"].get<std::string>();
    if (j.contains("grid")) opt.grid = j["grid"].get<std::string>();
    if (j.contains("p")) opt.p = j["p"].get<std::vector<std::string>>();
    if (j.contains("seed")) opt.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("jobs")) opt.jobs = j["jobs"].get<int>();
    if (j.contains("out")) opt.out_dir = j["out"].get<std::string>();
    if (j.contains("format")) opt.format = j["format"].get<std::string>();
    if (j.contains("lambda")) opt.lambda = j["lambda"].get<double>();
    if (j.contains("coarse_count")) opt.coarse = j["coarse_count"].get<int>();
    if (j.contains("boundary_layers")) opt.layers = j["boundary_layers"].get<int>();
    if (j.contains("refine_iters")) opt.refine = j["refine_iters"].get<int>();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string(kVersion) + " - angular maximal transforms"};
    app.require_subcommand(1);

    Options opt;

    // config file first, flags override
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];

    try {
        if (!config_path.empty()) apply_config_file(config_path, opt);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--f", opt.f_source, "function: inline JSON, file path, or fixture:NAME");
        sub->add_option("--kind", opt.kind, "poisson|stieltjes|laplace|cauchy|hilbert");
        sub->add_option("--x", opt.x);
        sub->add_option("--y", opt.y);
        sub->add_option("--rho", opt.rho);
        sub->add_option("--theta", opt.theta);
        sub->add_option("--z", opt.z, "complex point re,im");
        sub->add_option("--grid", opt.grid, "rho_min,rho_max,count");
        sub->add_option("--p", opt.p, "exponents (inf allowed)");
        sub->add_option("--seed", opt.seed);
        sub->add_option("--jobs", opt.jobs);
        sub->add_option("--out", opt.out_dir, "output directory (env ANGMAX_OUT)");
        sub->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json", "both"}));
        sub->add_option("--lambda", opt.lambda);
        sub->add_option("--coarse-count", opt.coarse);
        sub->add_option("--boundary-layers", opt.layers);
        sub->add_option("--refine-iters", opt.refine);
    };

    CLI::App* transform = app.add_subcommand("transform", "evaluate one transform at one point");
    CLI::App* maxprofile = app.add_subcommand("maxprofile", "angular maximal profile over a grid");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification experiment");
    CLI::App* ksplit = app.add_subcommand("kernel-split", "kernel splitting at one radius/angle");
    for (CLI::App* sub : {transform, maxprofile, verify_cmd, ksplit}) add_common(sub);
    verify_cmd->add_option("experiment", opt.experiment,
                           "theorem1|theorem2|theorem3|theorem4|ray-hy|cauchy-rep|"
                           "identity-sec4|splitting|lemma1")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(transform)) return cmd_transform(opt);
        if (app.got_subcommand(maxprofile)) return cmd_maxprofile(opt);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(opt);
        if (app.got_subcommand(ksplit)) return cmd_kernel_split(opt);
    } catch (const CLI::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
