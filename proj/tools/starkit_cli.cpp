// Command-line front end: closure / decompose / spectral / fpp jobs over
// JSON matrix files, with plain-text reports ending in a machine-readable
// JSON block.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starkit/fpp_lab.hpp"
#include "starkit/spectral.hpp"
#include "starkit/structure.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace starkit;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitInconsistency = 4;
constexpr int kExitPrecondition = 5;
constexpr int kExitParams = 6;

struct FileParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    double tol = 1e-9;
    double cluster_tol = 1e-7;
    std::uint64_t seed = 0;
    std::size_t max_iter = 200;
    std::string out_dir = ".";
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FileParseError(path + ": " + e.what());
    }
    if (!j.contains("n") || !j.contains("entries"))
        throw FileParseError(path + ": expected fields n, entries");
    const std::size_t n = j["n"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (n == 0 || !entries.is_array() || entries.size() != n * n)
        throw FileParseError(path + ": entries length must be n^2");
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto& e = entries[k];
        if (!e.is_array() || e.size() != 2)
            throw FileParseError(path + ": entries must be [re, im] pairs");
        m(k / n, k % n) = cplx{e[0].get<double>(), e[1].get<double>()};
    }
    if (!m.all_finite()) throw FileParseError(path + ": non-finite entry");
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const cplx& e : m.entries()) entries.push_back({e.real(), e.imag()});
    return json{{"n", m.rows()}, {"entries", entries}};
}

std::vector<ComplexMatrix> load_all(const std::vector<std::string>& paths) {
    if (paths.empty()) throw FileParseError("no input files");
    std::vector<ComplexMatrix> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(load_matrix(p));
    return out;
}

void print_json_block(const json& j) {
    std::cout << "--- machine readable ---\n" << j.dump(2) << "\n";
}

int run_closure(const std::vector<std::string>& paths, const JobConfig& cfg) {
    const std::vector<ComplexMatrix> mats = load_all(paths);
    const StarAlgebra alg = generate(mats, cfg.tol);
    const ComplexMatrix e = unit(alg, cfg.tol);

    std::cout << "closure report\n";
    std::cout << "ambient dimension: " << alg.ambient_dim << "\n";
    std::cout << "algebra dimension: " << alg.dim() << "\n";
    std::cout << "basis count: " << alg.basis.size() << "\n";
    std::cout << "unit present: yes (rank " << projection_rank(e, cfg.tol) << ")\n";

    print_json_block(json{{"ambient_dim", alg.ambient_dim},
                          {"dim", alg.dim()},
                          {"basis_count", alg.basis.size()},
                          {"unit_rank", projection_rank(e, cfg.tol)}});
    return 0;
}

int run_decompose(const std::vector<std::string>& paths, const JobConfig& cfg) {
    const std::vector<ComplexMatrix> mats = load_all(paths);
    const StarAlgebra alg = generate(mats, cfg.tol);
    const BlockStructure bs = block_structure(alg, cfg.seed, cfg.tol);
    const MatrixUnits units = matrix_units(alg, bs, cfg.tol);
    const TheoremReport report = theorem_report(alg, cfg.seed, cfg.tol);

    std::size_t dim_sum = 0;
    for (std::size_t dk : bs.block_sizes) dim_sum += dk * dk;

    std::cout << "structure report\n";
    std::cout << "algebra dimension: " << alg.dim() << "\n";
    std::cout << "blocks: " << bs.block_count() << "\n";
    for (std::size_t k = 0; k < bs.block_count(); ++k)
        std::cout << "  block " << k + 1 << ": d=" << bs.block_sizes[k]
                  << " m=" << bs.multiplicities[k] << "\n";
    std::cout << "sum d_k^2: " << dim_sum << "\n";
    std::cout << "abelian: " << (report.abelian ? "true" : "false") << "\n";
    std::cout << "note: " << report.fpp_note << "\n";

    json blocks = json::array();
    for (std::size_t k = 0; k < bs.block_count(); ++k) {
        json unit_list = json::array();
        for (std::size_t i = 0; i < bs.block_sizes[k]; ++i)
            for (std::size_t j = 0; j < bs.block_sizes[k]; ++j)
                unit_list.push_back({{"i", i}, {"j", j},
                                     {"matrix", matrix_to_json(units.blocks[k][i][j])}});
        blocks.push_back({{"d", bs.block_sizes[k]},
                          {"m", bs.multiplicities[k]},
                          {"matrix_units", unit_list}});
    }
    print_json_block(json{{"dim", alg.dim()},
                          {"total_d", bs.total_d},
                          {"abelian", report.abelian},
                          {"blocks", blocks},
                          {"seed", cfg.seed}});
    return 0;
}

int run_spectral(const std::string& path, const JobConfig& cfg) {
    const ComplexMatrix a = load_matrix(path);
    const SpectralDecomposition dec = spectral_decompose(a, cfg.cluster_tol);
    const DimensionIdentity id = cstar_dimension_identity(a, cfg.tol);

    std::cout << "spectral report\n";
    std::cout << "clusters: " << dec.cluster_count() << "\n";
    for (std::size_t j = 0; j < dec.cluster_count(); ++j)
        std::cout << "  lambda_" << j + 1 << " = " << fmt(dec.lambdas[j]) << "\n";
    const bool has_kernel = dec.kernel_projection.hs_norm() > 0.5;
    std::cout << "kernel projection: " << (has_kernel ? "nonzero" : "zero") << "\n";

    fs::create_directories(cfg.out_dir);
    json residuals = json::array();
    for (std::size_t j = 0; j < dec.cluster_count(); ++j) {
        const ComplexMatrix lag = lagrange_projector(a, dec, j);
        const double res = (lag - dec.projections[j]).hs_norm();
        residuals.push_back(res);
        std::cout << "  lagrange residual_" << j + 1 << " = " << fmt(res) << "\n";
        std::ofstream out(fs::path(cfg.out_dir) / ("projector_" + std::to_string(j + 1) + ".json"));
        out << matrix_to_json(dec.projections[j]).dump(2) << "\n";
    }
    std::cout << "dim C*(A,I): " << id.dim_with_unit << "\n";
    std::cout << "|spec(A)|: " << id.spectrum_size << "\n";

    json lambdas = json::array();
    for (double lam : dec.lambdas) lambdas.push_back(lam);
    print_json_block(json{{"lambdas", lambdas},
                          {"kernel_nonzero", has_kernel},
                          {"lagrange_residuals", residuals},
                          {"dim_with_unit", id.dim_with_unit},
                          {"spectrum_size", id.spectrum_size}});
    return 0;
}

void write_trace(const IterationTrace& trace, const std::string& out_dir,
                 const std::string& name) {
    fs::create_directories(out_dir);
    std::ofstream out(fs::path(out_dir) / name);
    out << "step,displacement,norm\n";
    for (std::size_t t = 0; t < trace.steps; ++t)
        out << t << "," << fmt(trace.displacements[t]) << "," << fmt(trace.norms[t]) << "\n";
}

int run_fpp_c0(std::size_t m, double lambda, const JobConfig& cfg) {
    const std::vector<cplx> fixed = c0_fixed_point(m);
    const std::vector<cplx> mapped = goebel_c0_map(fixed);
    std::vector<cplx> diff(m);
    for (std::size_t i = 0; i < m; ++i) diff[i] = mapped[i] - fixed[i];
    const double residual = sup_norm(diff);

    const IterationTrace trace = iterate(
        [](const std::vector<cplx>& x) { return goebel_c0_map(x); },
        std::vector<cplx>(m, cplx{0.0, 0.0}), cfg.max_iter, lambda);
    write_trace(trace, cfg.out_dir, "trace_c0.csv");

    const double tail = fixed.back().real();
    std::cout << "fpp c0 summary: m=" << m << " fixed_point_residual=" << fmt(residual)
              << " tail_coordinate=" << fmt(tail) << "\n";
    std::cout << "note: the truncation has a fixed point (Brouwer); its tail coordinate "
                 "stays at 1/2 for every m, so no limit lies in the sequence space with "
                 "vanishing tails\n";
    print_json_block(json{{"m", m},
                          {"fixed_point_residual", residual},
                          {"tail_coordinate", tail},
                          {"steps", trace.steps}});
    return 0;
}

int run_fpp_cs(std::size_t grid_points, double lambda, const JobConfig& cfg) {
    const GridSpace grid = uniform_grid(grid_points);
    const GridFunction b = default_multiplier(grid);

    GridFunction a;
    a.values.assign(grid_points, cplx{1.0, 0.0});
    const IterationTrace trace = iterate(
        [&](const std::vector<cplx>& x) {
            GridFunction f;
            f.values = x;
            return goebel_cs_map(grid, b, f).values;
        },
        a.values, cfg.max_iter, lambda);
    write_trace(trace, cfg.out_dir, "trace_cs.csv");

    const auto profile = cs_fixed_point_profile({grid});
    std::cout << "fpp cs summary: grid=" << grid_points
              << " discrete_lipschitz=" << fmt(profile.front().discrete_lipschitz) << "\n";
    std::cout << "note: the discrete fixed point is the base-point indicator; its "
                 "Lipschitz constant diverges under refinement, so no continuous limit "
                 "exists\n";
    print_json_block(json{{"grid_size", grid_points},
                          {"discrete_lipschitz", profile.front().discrete_lipschitz},
                          {"steps", trace.steps}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-algebra toolkit"};
    app.require_subcommand(1);

    JobConfig cfg;
    app.add_option("--tol", cfg.tol, "rank/membership tolerance")->check(CLI::PositiveNumber);
    app.add_option("--cluster-tol", cfg.cluster_tol, "eigenvalue cluster tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "pseudorandom seed");
    app.add_option("--max-iter", cfg.max_iter, "iteration steps");
    app.add_option("--out", cfg.out_dir, "output directory");

    std::vector<std::string> closure_files, decompose_files;
    std::string spectral_file;
    auto* closure = app.add_subcommand("closure", "generated *-algebra of matrix files");
    closure->add_option("files", closure_files, "matrix JSON files")->required();

    auto* decompose = app.add_subcommand("decompose", "block structure and matrix units");
    decompose->add_option("files", decompose_files, "matrix JSON files")->required();

    auto* spectral = app.add_subcommand("spectral", "spectral decomposition of a Hermitian matrix");
    spectral->add_option("file", spectral_file, "matrix JSON file")->required();

    auto* fpp = app.add_subcommand("fpp", "nonexpansive fixed-point demonstrations");
    fpp->require_subcommand(1);
    std::size_t c0_m = 8, cs_points = 16;
    double lambda = 0.5;
    auto* c0 = fpp->add_subcommand("c0", "truncated sequence-space map");
    c0->add_option("--m", c0_m, "truncation length");
    c0->add_option("--lambda", lambda, "averaging parameter");
    auto* cs = fpp->add_subcommand("cs", "grid function-space map");
    cs->add_option("--grid-points", cs_points, "uniform grid size");
    cs->add_option("--lambda", lambda, "averaging parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitParams;
    }

    try {
        if (closure->parsed()) return run_closure(closure_files, cfg);
        if (decompose->parsed()) return run_decompose(decompose_files, cfg);
        if (spectral->parsed()) return run_spectral(spectral_file, cfg);
        if (fpp->parsed()) {
            if (c0->parsed()) {
                if (c0_m == 0 || lambda <= 0.0 || lambda > 1.0) {
                    std::cerr << "error: invalid fpp parameters\n";
                    return kExitParams;
                }
                return run_fpp_c0(c0_m, lambda, cfg);
            }
            if (cs->parsed()) {
                if (cs_points < 2 || lambda <= 0.0 || lambda > 1.0) {
                    std::cerr << "error: invalid fpp parameters\n";
                    return kExitParams;
                }
                return run_fpp_cs(cs_points, lambda, cfg);
            }
        }
    } catch (const FileParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ClosureOverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const StructuralError& e) {
        std::cerr << "structural inconsistency: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ShapeError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParams;
}
