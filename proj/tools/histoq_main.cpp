#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "histoq/classify.hpp"
#include "histoq/conditionals.hpp"
#include "histoq/ensemble.hpp"
#include "histoq/free_particle.hpp"
#include "histoq/spacetime.hpp"
#include "histoq/spin.hpp"
#include "histoq/three_box.hpp"
#include "histoq/two_slit.hpp"
#include "histoq/version.hpp"
#include "model_file.hpp"
#include "report.hpp"

namespace {

using namespace histoq;
using cli::Cell;
using cli::cell;
using cli::empty_cell;
using cli::Report;

struct CommonOptions {
    std::string out = "-";
    std::string format = "csv";
    ToleranceSpec tol;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--out", common.out, "Output path, or '-' for stdout")->capture_default_str();
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--tol-md", common.tol.md, "Medium-decoherence residual threshold")
        ->capture_default_str();
    cmd->add_option("--tol-rlp", common.tol.rlp, "Imaginary-part threshold for real linear positivity")
        ->capture_default_str();
    cmd->add_option("--tol-lp", common.tol.lp, "Negative-probability threshold for linear positivity")
        ->capture_default_str();
}

void emit(const Report& report, const CommonOptions& common) {
    std::ostringstream buffer;
    if (common.format == "json")
        report.write_json(buffer);
    else
        report.write_csv(buffer);
    if (common.out == "-") {
        std::cout << buffer.str();
    } else {
        std::ofstream file(common.out, std::ios::binary);
        if (!file) throw InvalidInput("cannot open output file " + common.out);
        file << buffer.str();
    }
}

Report base_report(std::string command) {
    Report report;
    report.command = std::move(command);
    report.version = kVersion;
    return report;
}

// ---------------------------------------------------------------- threebox

void run_threebox(const CommonOptions& common) {
    const ThreeBoxModel m = three_box_model();
    Report report = base_report("threebox");
    report.columns = {"table", "label", "value", "provenance"};

    const HistorySet four = three_box_four_set(m);
    for (std::size_t i = 0; i < four.size(); ++i)
        report.add_row({cell("four"), cell(four.labels()[i]),
                        cell(candidate_probability(m.psi, four[i])), cell("Eq. 4.20")});

    const HistorySet eight = three_box_eight_set(m);
    for (std::size_t i = 0; i < eight.size(); ++i)
        report.add_row({cell("eight"), cell(eight.labels()[i]),
                        cell(candidate_probability(m.psi, eight[i])), cell("Eq. 4.22")});

    const ClassOperator phi(m.p_phi.matrix());
    const auto conditional = [&](const Projector& a, const Projector& b) {
        return conditional_probability(
            m.psi, ClassOperator(CMatrix(m.p_phi.matrix() * a.matrix() * b.matrix())), phi);
    };
    report.add_row({cell("conditional"), cell("(A,B|Φ)"), cell(conditional(m.p_a, m.p_b)),
                    cell("Eq. 4.26")});
    report.add_row({cell("conditional"), cell("(A,B̄|Φ)"), cell(conditional(m.p_a, m.p_b_bar)),
                    cell("Eq. 4.26")});
    report.add_row({cell("conditional"), cell("(Ā,B|Φ)"), cell(conditional(m.p_a_bar, m.p_b)),
                    cell("Eq. 4.26")});
    report.add_row({cell("conditional"), cell("(Ā,B̄|Φ)"), cell(conditional(m.p_a_bar, m.p_b_bar)),
                    cell("Eq. 4.26")});

    const Classification four_class = classify_set(m.psi, four, common.tol);
    const Classification eight_class = classify_set(m.psi, eight, common.tol);
    report.add_row({cell("classification"), cell("four_set"), cell(verdict_name(four_class.verdict)),
                    cell("Sec. IV.C")});
    report.add_row({cell("classification"), cell("eight_set"),
                    cell(verdict_name(eight_class.verdict)), cell("Sec. IV.C")});
    emit(report, common);
}

// -------------------------------------------------------------------- spin

struct SpinOptions {
    double delta = M_PI / 2.0;
    int theta_points = 101;
    int phi_points = 99;
    bool full_phi = false;
};

void run_spin(const CommonOptions& common, const SpinOptions& opt) {
    if (opt.theta_points < 1 || opt.phi_points < 1)
        throw InvalidInput("spin: grids must be nonempty");
    Report report = base_report("spin");
    report.parameters = {{"delta", cell(opt.delta)},
                         {"theta_points", cell(static_cast<double>(opt.theta_points))},
                         {"phi_points", cell(static_cast<double>(opt.phi_points))},
                         {"full_phi", cell(opt.full_phi)}};
    report.columns = {"theta",  "phi",  "p_pp",    "p_pm",        "p_mp",
                      "p_mm",   "lp_flag", "md_residual", "provenance"};

    std::vector<double> thetas, phis;
    for (int i = 0; i < opt.theta_points; ++i)
        thetas.push_back(opt.theta_points == 1 ? 0.0 : M_PI * i / (opt.theta_points - 1.0));
    if (opt.full_phi) {
        for (int j = 0; j < opt.phi_points; ++j) phis.push_back(2.0 * M_PI * j / opt.phi_points);
    } else {
        // the published plots restrict to 0 < phi < pi; symmetries give the rest
        for (int j = 1; j <= opt.phi_points; ++j) phis.push_back(M_PI * j / (opt.phi_points + 1.0));
    }

    const SpinGeometry g{opt.delta};
    for (double theta : thetas) {
        for (double phi : phis) {
            const auto p = spin_candidate_probabilities({theta, phi}, g);
            const auto d = spin_md_offdiagonals({theta, phi}, g);
            const bool lp = std::min(std::min(p[0], p[1]), std::min(p[2], p[3])) >= -1e-14;
            const double md_residual = std::max(std::abs(d[0]), std::abs(d[1]));
            report.add_row({cell(theta), cell(phi), cell(p[0]), cell(p[1]), cell(p[2]), cell(p[3]),
                            cell(lp), cell(md_residual), cell("Eq. 4.14; Eq. 4.15")});
        }
    }
    emit(report, common);
}

// ----------------------------------------------------------------- twoslit

struct TwoSlitOptions {
    double kd = 60.0;
    double kD = 60.0;
    std::string table = "densities";
    int samples = 601;
    double y_min = -2.0;
    double y_max = 2.0;
    bool y_range_given = false;
    double bin_width = 0.0;  // 0: one fringe spacing
    std::vector<double> widths;
};

void run_twoslit(const CommonOptions& common, TwoSlitOptions opt) {
    if (!(opt.kd > 0.0) || !(opt.kD > 0.0)) throw InvalidInput("twoslit: kd and kD must be positive");
    if (opt.table == "binwidth" && !opt.y_range_given) {
        // sub-fringe positivity is a central-fringe statement; default to the
        // axis neighborhood unless the caller picked a range
        opt.y_min = -0.45;
        opt.y_max = 0.45;
    }
    if (!(opt.y_min < opt.y_max)) throw InvalidInput("twoslit: empty y range");
    // d = 1 fixes the length unit; kd and kD then determine k and D
    const TwoSlitGeometry g{1.0, opt.kD / opt.kd, opt.kd, 1.0};
    const double fringe = 2.0 * M_PI * g.big_d / (g.k * g.d);

    Report report = base_report("twoslit");
    report.parameters = {{"kd", cell(opt.kd)},
                         {"kD", cell(opt.kD)},
                         {"table", cell(opt.table)},
                         {"y_min", cell(opt.y_min)},
                         {"y_max", cell(opt.y_max)},
                         {"fringe_spacing", cell(fringe)}};

    if (opt.table == "densities") {
        if (opt.samples < 2) throw InvalidInput("twoslit: need at least two samples");
        report.columns = {"y", "w_upper", "w_lower", "w_total", "provenance"};
        for (int i = 0; i < opt.samples; ++i) {
            const double y = opt.y_min + (opt.y_max - opt.y_min) * i / (opt.samples - 1.0);
            const TwoSlitDensities w = two_slit_densities(y, g);
            report.add_row(
                {cell(y), cell(w.upper), cell(w.lower), cell(w.total), cell("Eq. 4.6; Eq. 4.7")});
        }
    } else if (opt.table == "bins") {
        const double width = opt.bin_width > 0.0 ? opt.bin_width : fringe;
        report.columns = {"bin_lo", "bin_hi", "p_upper", "p_lower", "provenance"};
        for (double lo = opt.y_min; lo < opt.y_max - 1e-12; lo += width) {
            const double hi = std::min(lo + width, opt.y_max);
            report.add_row({cell(lo), cell(hi), cell(two_slit_bin_probability(lo, hi, Slit::Upper, g)),
                            cell(two_slit_bin_probability(lo, hi, Slit::Lower, g)), cell("Eq. 4.8")});
        }
    } else if (opt.table == "binwidth") {
        std::vector<double> widths = opt.widths;
        if (widths.empty())
            for (double f = 2.0; f >= 0.295; f -= 0.1) widths.push_back(f * fringe);
        const BinWidthScan scan = min_lp_binwidth(g, opt.y_min, opt.y_max, widths);
        report.columns = {"record", "width", "passes", "provenance"};
        for (std::size_t i = 0; i < scan.tested_widths.size(); ++i)
            report.add_row({cell("tested"), cell(scan.tested_widths[i]),
                            cell(static_cast<bool>(scan.width_passes[i])), cell("Sec. IV.A")});
        report.add_row({cell("fringe_spacing"), cell(scan.fringe_spacing), empty_cell(),
                        cell("Sec. IV.A")});
        if (scan.passing_width)
            report.add_row({cell("passing_width"), cell(*scan.passing_width), cell(true),
                            cell("Sec. IV.A")});
        else
            report.add_row({cell("passing_width"), empty_cell(), cell(false), cell("Sec. IV.A")});
    } else {
        throw InvalidInput("twoslit: unknown table " + opt.table);
    }
    emit(report, common);
}

// ---------------------------------------------------------------- particle

struct ParticleOptions {
    double lambda_over_sigma = 1e-2;
    double delta_max = 10.0;
    int points = 100;
};

void run_particle(const CommonOptions& common, const ParticleOptions& opt) {
    if (opt.points < 1) throw InvalidInput("particle: need at least one point");
    if (!(opt.lambda_over_sigma > 0.0)) throw InvalidInput("particle: lambda must be positive");
    const GaussianPacket packet{1.0, 1.0, 0.0, 0.0};
    const double lambda = opt.lambda_over_sigma * packet.sigma;

    Report report = base_report("particle");
    report.parameters = {{"lambda_over_sigma", cell(opt.lambda_over_sigma)},
                         {"delta_max", cell(opt.delta_max)},
                         {"points", cell(static_cast<double>(opt.points))}};
    report.columns = {"delta", "p_localized", "p_not_localized", "provenance"};
    for (int i = 0; i < opt.points; ++i) {
        const double delta = opt.points == 1 ? opt.delta_max
                                             : opt.delta_max * (i + 1.0) / opt.points;
        const double p = localization_probability(delta, packet, lambda);
        report.add_row({cell(delta), cell(p), cell(1.0 - p), cell("Eq. 4.38")});
    }
    emit(report, common);
}

// --------------------------------------------------------------- spacetime

struct SpacetimeOptions {
    double k0_sigma = -20.0;
    double x_min = -2.0;
    double x_max = 6.0;
    int points = 50;
};

void run_spacetime(const CommonOptions& common, const SpacetimeOptions& opt) {
    if (opt.points < 1) throw InvalidInput("spacetime: need at least one point");
    if (!(opt.x_min <= opt.x_max)) throw InvalidInput("spacetime: empty X range");
    const double sigma = 1.0, mass = 1.0;
    const double k0 = opt.k0_sigma / sigma;
    if (std::abs(k0) < 1e-9) throw InvalidInput("spacetime: K0 must be nonzero");
    // T chosen so the packet starts at X0 = X + 5 sigma, about an eighth of
    // the spreading time
    const double t = 5.0 * sigma / std::abs(k0) * sigma * mass;

    Report report = base_report("spacetime");
    report.parameters = {{"k0_sigma", cell(opt.k0_sigma)},
                         {"x_min", cell(opt.x_min)},
                         {"x_max", cell(opt.x_max)},
                         {"points", cell(static_cast<double>(opt.points))},
                         {"time", cell(t)}};
    report.columns = {"x",         "p_remain", "p_cross", "re_overlap",
                      "abs_overlap", "valid",    "provenance"};
    for (int i = 0; i < opt.points; ++i) {
        const double x = opt.points == 1
                             ? opt.x_min
                             : opt.x_min + (opt.x_max - opt.x_min) * i / (opt.points - 1.0);
        const GaussianPacket packet{sigma, mass, x - k0 * t / mass, k0};
        const auto remain = spacetime_remain_probability(packet, t);
        const auto overlap = spacetime_decoherence(packet, t);
        report.add_row({cell(x), cell(remain.p_remain), cell(remain.p_cross),
                        cell(overlap.d.real()), cell(std::abs(overlap.d)),
                        cell(remain.in_regime && overlap.approximation_valid),
                        cell("Eq. 4.56; Eq. 4.60")});
    }
    emit(report, common);
}

// ---------------------------------------------------------------- ensemble

struct EnsembleOptions {
    double amplitude = 0.5;
    double phase = M_PI / 4.0;
    int n_max = 200;
};

void run_ensemble(const CommonOptions& common, const EnsembleOptions& opt) {
    if (opt.amplitude < 0.0 || opt.amplitude > 1.0)
        throw InvalidInput("ensemble: amplitude must be in [0, 1]");
    if (opt.n_max < 1) throw InvalidInput("ensemble: n_max must be at least 1");
    const cdouble z = std::polar(opt.amplitude, opt.phase);

    Report report = base_report("ensemble");
    report.parameters = {{"amplitude", cell(opt.amplitude)},
                         {"phase", cell(opt.phase)},
                         {"n_max", cell(static_cast<double>(opt.n_max))}};
    report.columns = {"record", "N", "n_C", "p", "provenance"};

    const PositivityHorizon horizon = ensemble_positivity_horizon(z, opt.n_max);
    const int table_limit = horizon.horizon.value_or(opt.n_max);
    for (int n_total = 1; n_total <= table_limit; ++n_total)
        for (int n_c = 0; n_c <= n_total; ++n_c)
            report.add_row({cell("p"), cell(static_cast<double>(n_total)),
                            cell(static_cast<double>(n_c)),
                            cell(ensemble_candidate_probability({z, n_total, n_c})),
                            cell("Sec. III.D")});
    if (horizon.horizon)
        report.add_row({cell("horizon"), cell(static_cast<double>(*horizon.horizon)),
                        cell(static_cast<double>(horizon.witness_n_c)), cell(horizon.witness_value),
                        cell("Sec. III.D")});
    else
        report.add_row({cell("horizon"), cell("none"), empty_cell(), empty_cell(),
                        cell("Sec. III.D")});
    emit(report, common);
}

// ---------------------------------------------------------------- classify

void run_classify(const CommonOptions& common, const std::string& model_path) {
    const cli::ModelFile model = cli::load_model_file(model_path);
    const HistorySet set = model.build_history_set();
    const Classification c = classify_set(model.psi, set, common.tol);

    Report report = base_report("classify");
    report.parameters = {{"model", cell(model_path)},
                         {"tol_md", cell(common.tol.md)},
                         {"tol_rlp", cell(common.tol.rlp)},
                         {"tol_lp", cell(common.tol.lp)}};
    report.columns = {"record", "label", "value", "provenance"};
    report.add_row({cell("verdict"), empty_cell(), cell(verdict_name(c.verdict)), cell("Sec. VI")});
    report.add_row({cell("md_residual"), empty_cell(), cell(c.md_residual), cell("Eq. 3.4")});
    report.add_row({cell("rlp_residual"), empty_cell(), cell(c.rlp_residual), cell("Eq. 3.18")});
    report.add_row({cell("lp_violation"), empty_cell(), cell(c.lp_violation), cell("Eq. 1.6")});
    report.add_row({cell("sum_residual"), empty_cell(), cell(c.sum_residual), cell("Eq. 2.4")});
    if (c.md_witness)
        report.add_row({cell("md_witness"),
                        cell(set.labels()[static_cast<std::size_t>(c.md_witness->first)] + "," +
                             set.labels()[static_cast<std::size_t>(c.md_witness->second)]),
                        empty_cell(), cell("Eq. 3.4")});
    report.add_row({cell("lp_witness"), cell(set.labels()[static_cast<std::size_t>(c.lp_witness)]),
                    cell(c.probabilities[static_cast<std::size_t>(c.lp_witness)]), cell("Eq. 1.6")});
    for (std::size_t i = 0; i < set.size(); ++i) {
        report.add_row({cell("p"), cell(set.labels()[i]), cell(c.probabilities[i]), cell("Eq. 3.1")});
        report.add_row({cell("im"), cell(set.labels()[i]), cell(c.imag_parts[i]), cell("Eq. 3.18")});
        report.add_row({cell("p_branch"), cell(set.labels()[i]),
                        cell(c.branch_norm_probabilities[i]), cell("Eq. 3.5")});
    }
    emit(report, common);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"histoq: candidate probabilities and decoherence conditions for coarse-grained "
                 "histories of closed quantum systems"};
    app.require_subcommand(1);

    CommonOptions common;
    SpinOptions spin_opt;
    TwoSlitOptions twoslit_opt;
    ParticleOptions particle_opt;
    SpacetimeOptions spacetime_opt;
    EnsembleOptions ensemble_opt;
    std::string model_path;

    CLI::App* threebox = app.add_subcommand("threebox", "Three-box model tables and verdicts");
    add_common(threebox, common);
    threebox->callback([&] { run_threebox(common); });

    CLI::App* spin = app.add_subcommand("spin", "Two-time spin-1/2 positivity scan");
    add_common(spin, common);
    spin->add_option("--delta", spin_opt.delta, "Angle between the two spin axes")
        ->capture_default_str();
    spin->add_option("--theta-points", spin_opt.theta_points, "Polar grid size")
        ->capture_default_str();
    spin->add_option("--phi-points", spin_opt.phi_points, "Azimuthal grid size")
        ->capture_default_str();
    spin->add_flag("--full-phi", spin_opt.full_phi, "Cover [0, 2 pi) instead of (0, pi)");
    spin->callback([&] { run_spin(common, spin_opt); });

    CLI::App* twoslit = app.add_subcommand("twoslit", "Two-slit candidate densities and bins");
    add_common(twoslit, common);
    twoslit->add_option("--kd", twoslit_opt.kd, "Wave number times slit separation")
        ->capture_default_str();
    twoslit->add_option("--kD", twoslit_opt.kD, "Wave number times screen distance")
        ->capture_default_str();
    twoslit->add_option("--table", twoslit_opt.table, "densities, bins, or binwidth")
        ->check(CLI::IsMember({"densities", "bins", "binwidth"}))
        ->capture_default_str();
    twoslit->add_option("--samples", twoslit_opt.samples, "Density sample count")
        ->capture_default_str();
    auto* y_min_opt =
        twoslit->add_option("--y-min", twoslit_opt.y_min, "Screen range start")->capture_default_str();
    auto* y_max_opt =
        twoslit->add_option("--y-max", twoslit_opt.y_max, "Screen range end")->capture_default_str();
    twoslit->add_option("--bin-width", twoslit_opt.bin_width,
                        "Bin width for the bins table (default: one fringe)");
    twoslit->add_option("--widths", twoslit_opt.widths,
                        "Descending bin widths for the binwidth table");
    twoslit->callback([&, y_min_opt, y_max_opt] {
        twoslit_opt.y_range_given = y_min_opt->count() > 0 || y_max_opt->count() > 0;
        run_twoslit(common, twoslit_opt);
    });

    CLI::App* particle = app.add_subcommand("particle", "Free-particle localization probabilities");
    add_common(particle, common);
    particle->add_option("--lambda-over-sigma", particle_opt.lambda_over_sigma,
                         "Oscillation wavelength over packet width")
        ->capture_default_str();
    particle->add_option("--delta-max", particle_opt.delta_max, "Largest window half-width, sigma units")
        ->capture_default_str();
    particle->add_option("--points", particle_opt.points, "Sweep size")->capture_default_str();
    particle->callback([&] { run_particle(common, particle_opt); });

    CLI::App* spacetime = app.add_subcommand("spacetime", "Always-remains-positive spacetime histories");
    add_common(spacetime, common);
    spacetime->add_option("--k0-sigma", spacetime_opt.k0_sigma, "Packet momentum in 1/sigma units")
        ->capture_default_str();
    spacetime->add_option("--x-min", spacetime_opt.x_min, "Smallest final center, sigma units")
        ->capture_default_str();
    spacetime->add_option("--x-max", spacetime_opt.x_max, "Largest final center, sigma units")
        ->capture_default_str();
    spacetime->add_option("--points", spacetime_opt.points, "Sweep size")->capture_default_str();
    spacetime->callback([&] { run_spacetime(common, spacetime_opt); });

    CLI::App* ensemble = app.add_subcommand("ensemble", "Ensemble positivity horizon scan");
    add_common(ensemble, common);
    ensemble->add_option("--amplitude", ensemble_opt.amplitude, "|<Psi|C1|Psi>|")
        ->capture_default_str();
    ensemble->add_option("--phase", ensemble_opt.phase, "arg <Psi|C1|Psi>")->capture_default_str();
    ensemble->add_option("--n-max", ensemble_opt.n_max, "Largest ensemble size scanned")
        ->capture_default_str();
    ensemble->callback([&] { run_ensemble(common, ensemble_opt); });

    CLI::App* classify = app.add_subcommand("classify", "Classify a history set from a model file");
    add_common(classify, common);
    classify->add_option("model", model_path, "JSON model file")->required();
    classify->callback([&] { run_classify(common, model_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
