#include "pwapprox/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pwapprox/diagnostics.hpp"
#include "pwapprox/engines.hpp"
#include "pwapprox/signals.hpp"
#include "pwapprox/spectral_ops.hpp"

namespace pw::harness {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& scope,
                    const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ConfigError("config: unknown key '" + (scope.empty() ? it.key() : scope + "." + it.key()) + "'");
    }
}

template <class T>
void load(const json& obj, const char* key, T& target) {
    if (obj.contains(key)) {
        try {
            target = obj.at(key).get<T>();
        } catch (const json::exception&) {
            throw ConfigError(std::string("config: bad value for key '") + key + "'");
        }
    }
}

} // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

    reject_unknown(j, "", {"experiment", "grid_m", "sequence", "system", "signal", "stages",
                           "t_grid", "engine", "oversampling", "walsh", "inclusive_limit",
                           "exploratory", "kernel_refine", "n_max", "phi_hat_length",
                           "worst_case_sigma", "out", "gram_out"});

    ExperimentConfig cfg;
    load(j, "experiment", cfg.experiment);
    load(j, "grid_m", cfg.grid_m);
    load(j, "engine", cfg.engine);
    load(j, "oversampling", cfg.oversampling);
    load(j, "inclusive_limit", cfg.inclusive_limit);
    load(j, "exploratory", cfg.exploratory);
    load(j, "kernel_refine", cfg.kernel_refine);
    load(j, "n_max", cfg.n_max);
    load(j, "phi_hat_length", cfg.phi_hat_length);
    load(j, "worst_case_sigma", cfg.worst_case_sigma);
    load(j, "out", cfg.out);
    load(j, "gram_out", cfg.gram_out);
    load(j, "stages", cfg.stages);

    if (j.contains("sequence")) {
        const json& s = j.at("sequence");
        if (!s.is_object()) throw ConfigError("config: 'sequence' must be an object");
        reject_unknown(s, "sequence", {"rule", "delta", "seed", "K"});
        load(s, "rule", cfg.sequence.rule);
        load(s, "delta", cfg.sequence.delta);
        load(s, "seed", cfg.sequence.seed);
        load(s, "K", cfg.sequence.window);
    }
    if (j.contains("system")) {
        const json& s = j.at("system");
        if (!s.is_object()) throw ConfigError("config: 'system' must be an object");
        reject_unknown(s, "system", {"kind", "cutoff", "omega", "t", "N"});
        load(s, "kind", cfg.system.kind);
        load(s, "cutoff", cfg.system.cutoff);
        load(s, "omega", cfg.system.omega);
        load(s, "t", cfg.system.t);
        load(s, "N", cfg.system.stage);
    }
    if (j.contains("signal")) {
        const json& s = j.at("signal");
        if (!s.is_object()) throw ConfigError("config: 'signal' must be an object");
        reject_unknown(s, "signal", {"kind", "seed", "sigma"});
        load(s, "kind", cfg.signal.kind);
        load(s, "seed", cfg.signal.seed);
        load(s, "sigma", cfg.signal.sigma);
    }
    if (j.contains("t_grid")) {
        const json& g = j.at("t_grid");
        if (g.is_array()) {
            cfg.t_grid.explicit_points = g.get<std::vector<double>>();
        } else if (g.is_object()) {
            reject_unknown(g, "t_grid", {"min", "max", "count"});
            load(g, "min", cfg.t_grid.t_min);
            load(g, "max", cfg.t_grid.t_max);
            load(g, "count", cfg.t_grid.count);
        } else {
            throw ConfigError("config: 't_grid' must be an object or an array");
        }
    }
    if (j.contains("walsh")) {
        const json& w = j.at("walsh");
        if (!w.is_object()) throw ConfigError("config: 'walsh' must be an object");
        reject_unknown(w, "walsh", {"max_level", "both_limits"});
        load(w, "max_level", cfg.walsh_max_level);
        load(w, "both_limits", cfg.walsh_both_limits);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ExperimentConfig::resolved_json() const {
    json j;
    j["experiment"] = experiment;
    j["grid_m"] = grid_m;
    j["sequence"] = {{"rule", sequence.rule},
                     {"delta", sequence.delta},
                     {"seed", sequence.seed},
                     {"K", sequence.window}};
    j["system"] = {{"kind", system.kind},
                   {"cutoff", system.cutoff},
                   {"omega", system.omega},
                   {"t", system.t},
                   {"N", system.stage}};
    j["signal"] = {{"kind", signal.kind}, {"seed", signal.seed}, {"sigma", signal.sigma}};
    j["stages"] = stages;
    if (t_grid.explicit_points.empty())
        j["t_grid"] = {{"min", t_grid.t_min}, {"max", t_grid.t_max}, {"count", t_grid.count}};
    else
        j["t_grid"] = t_grid.explicit_points;
    j["engine"] = engine;
    j["oversampling"] = oversampling;
    j["walsh"] = {{"max_level", walsh_max_level}, {"both_limits", walsh_both_limits}};
    j["inclusive_limit"] = inclusive_limit;
    j["exploratory"] = exploratory;
    j["kernel_refine"] = kernel_refine;
    j["n_max"] = n_max;
    j["phi_hat_length"] = phi_hat_length;
    j["worst_case_sigma"] = worst_case_sigma;
    // output paths are I/O destinations, not experiment parameters
    return j.dump();
}

namespace {

SpectralGrid make_grid(const ExperimentConfig& cfg) {
    if (cfg.grid_m < 2 || (cfg.grid_m & (cfg.grid_m - 1)) != 0)
        throw ConfigError("config: 'grid_m' must be a power of two >= 2");
    return SpectralGrid(cfg.grid_m);
}

Spectrum make_signal(const ExperimentConfig& cfg, const SpectralGrid& grid) {
    const SignalSpec& s = cfg.signal;
    if (s.kind == "constant") return make_constant(grid);
    if (s.kind == "triangle") return make_triangle(grid, s.sigma);
    if (s.kind == "bandlimited_random") return make_bandlimited_random(grid, s.seed, s.sigma);
    throw ConfigError("config: unknown 'signal.kind' value '" + s.kind + "'");
}

int max_stage(const std::vector<int>& stages) {
    return *std::max_element(stages.begin(), stages.end());
}

TransferFunction make_system(const ExperimentConfig& cfg, const SpectralGrid& grid,
                             const ReconstructionBank* bank) {
    const SystemSpec& s = cfg.system;
    if (s.kind == "identity") return identity_transfer(grid);
    if (s.kind == "hilbert") return hilbert_transfer(grid);
    if (s.kind == "lowpass") return lowpass_transfer(grid, s.cutoff);
    if (s.kind == "adversarial") {
        if (bank == nullptr)
            throw ConfigError("config: 'system.kind' adversarial needs a sampling sequence");
        int n = s.stage;
        if (n < 0) {
            if (cfg.stages.empty()) throw ConfigError("config: 'system.N' required");
            n = max_stage(cfg.stages);
        }
        return adversarial_transfer(*bank, s.omega, s.t, n);
    }
    throw ConfigError("config: unknown 'system.kind' value '" + s.kind + "'");
}

std::string join_flags(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ';';
        out += tokens[i];
    }
    return out;
}

void begin_report(csv::Document& doc, const ExperimentConfig& cfg) {
    doc.comment("pwapprox report");
    doc.comment("subcommand = " + cfg.experiment);
    doc.comment("config = " + cfg.resolved_json());
}

void require_stages(const ExperimentConfig& cfg) {
    if (cfg.stages.empty()) throw ConfigError("config: 'stages' must be a nonempty list");
    for (int n : cfg.stages)
        if (n < 0) throw ConfigError("config: 'stages' entries must be >= 0");
}

std::vector<std::string> engine_row(const std::string& engine, const SupErrorRow& r,
                                    const std::string& flags) {
    return {engine,
            csv::format_int(r.stage),
            csv::format_double(r.worst.t),
            csv::format_double(r.worst.value.real()),
            csv::format_double(r.worst.value.imag()),
            csv::format_double(r.worst.reference.real()),
            csv::format_double(r.worst.reference.imag()),
            csv::format_double(r.sup_error),
            flags};
}

} // namespace

SamplingSequence make_sequence(const ExperimentConfig& cfg, int required_window) {
    SamplingSequence seq;
    if (cfg.sequence.rule == "equidistant") {
        seq.rule = SamplingRule::equidistant;
    } else if (cfg.sequence.rule == "kadec") {
        seq.rule = SamplingRule::kadec;
        seq.delta = cfg.sequence.delta;
        seq.seed = cfg.sequence.seed;
    } else {
        throw ConfigError("config: unknown 'sequence.rule' value '" + cfg.sequence.rule + "'");
    }
    seq.window = cfg.sequence.window;
    if (required_window > seq.window)
        throw ConfigError("config: 'sequence.K' = " + std::to_string(seq.window) +
                          " is smaller than the largest requested stage " +
                          std::to_string(required_window));
    return seq;
}

std::vector<double> make_time_grid(const ExperimentConfig& cfg) {
    if (!cfg.t_grid.explicit_points.empty()) {
        const std::vector<double>& p = cfg.t_grid.explicit_points;
        for (std::size_t i = 1; i < p.size(); ++i)
            if (!(p[i - 1] < p[i]))
                throw ConfigError("config: 't_grid' list must be strictly increasing");
        return p;
    }
    if (cfg.t_grid.count == 0) throw ConfigError("config: 't_grid.count' must be positive");
    return uniform_time_grid(cfg.t_grid.t_min, cfg.t_grid.t_max, cfg.t_grid.count);
}

csv::Document run_reconstruct(const ExperimentConfig& cfg) {
    require_stages(cfg);
    const SpectralGrid grid = make_grid(cfg);
    const Spectrum f = make_signal(cfg, grid);
    const std::vector<double> t_grid = make_time_grid(cfg);
    const std::vector<int>& stages = cfg.stages;

    std::vector<std::string> flag_tokens;
    if (cfg.exploratory) flag_tokens.push_back("exploratory");

    csv::Document doc;
    begin_report(doc, cfg);
    doc.header({"engine", "N", "t", "value_re", "value_im", "ref_re", "ref_im", "abs_error",
                "flags"});

    if (cfg.engine == "sampling") {
        const int need = std::max(max_stage(stages), std::max(cfg.system.stage, 0));
        const SamplingSequence seq = make_sequence(cfg, need);
        const ReconstructionBank bank = build_bank(seq, grid, cfg.phi_hat_length);
        const TransferFunction T = make_system(cfg, grid, &bank);
        if (seq.rule == SamplingRule::kadec) flag_tokens.push_back("kadec");
        const std::string flags = join_flags(flag_tokens);

        const auto rows = sup_error_scan(
            [&](int N, double t) { return sampling_system_approx(f, T, bank, N, t); }, stages,
            t_grid);
        for (const auto& r : rows) doc.row(engine_row("sampling", r, flags));
    } else if (cfg.engine == "oversampled") {
        if (!(cfg.oversampling >= 1.0))
            throw ConfigError("config: 'oversampling' must be >= 1");
        const TransferFunction T = make_system(cfg, grid, nullptr);
        std::vector<std::string> tokens = flag_tokens;
        tokens.push_back("a=" + csv::format_double(cfg.oversampling));
        const std::string flags = join_flags(tokens);

        const auto rows = sup_error_scan(
            [&](int N, double t) { return shannon_oversampled(f, T, cfg.oversampling, N, t); },
            stages, t_grid);
        for (const auto& r : rows) doc.row(engine_row("oversampled", r, flags));
    } else {
        throw ConfigError("config: unknown 'engine' value '" + cfg.engine + "'");
    }
    return doc;
}

csv::Document run_walsh_converge(const ExperimentConfig& cfg) {
    require_stages(cfg);
    const SpectralGrid grid = make_grid(cfg);
    const Spectrum f = make_signal(cfg, grid);
    const std::vector<double> t_grid = make_time_grid(cfg);

    const int top = max_stage(cfg.stages);
    if (top > 30) throw ConfigError("config: 'stages' too large for walsh-converge");
    const unsigned max_index = 1u << top;
    const WalshSystem sys(grid, max_index);
    const TransferFunction T = make_system(cfg, grid, nullptr);

    std::vector<DyadicLimit> limits;
    if (cfg.walsh_both_limits)
        limits = {DyadicLimit::classical, DyadicLimit::inclusive};
    else
        limits = {cfg.inclusive_limit ? DyadicLimit::inclusive : DyadicLimit::classical};

    csv::Document doc;
    begin_report(doc, cfg);
    doc.header({"engine", "N", "t", "value_re", "value_im", "ref_re", "ref_im", "abs_error",
                "flags"});

    for (DyadicLimit limit : limits) {
        std::vector<std::string> tokens;
        if (cfg.exploratory) tokens.push_back("exploratory");
        tokens.push_back(limit == DyadicLimit::inclusive ? "inclusive" : "classical");
        const std::string flags = join_flags(tokens);

        const auto rows_a = sup_error_scan(
            [&](int N, double t) { return walsh_dyadic_approx_a(f, T, sys, N, t, limit); },
            cfg.stages, t_grid);
        for (const auto& r : rows_a) doc.row(engine_row("walsh_a", r, flags));

        const auto rows_b = sup_error_scan(
            [&](int N, double t) { return walsh_dyadic_approx_b(f, T, sys, N, t, limit); },
            cfg.stages, t_grid);
        for (const auto& r : rows_b) doc.row(engine_row("walsh_b", r, flags));
    }
    return doc;
}

csv::Document run_divergence(const ExperimentConfig& cfg) {
    require_stages(cfg);
    const SpectralGrid grid = make_grid(cfg);
    const int build_n = cfg.system.stage >= 0 ? cfg.system.stage : max_stage(cfg.stages);
    const SamplingSequence seq = make_sequence(cfg, std::max(max_stage(cfg.stages), build_n));
    const ReconstructionBank bank = build_bank(seq, grid, cfg.phi_hat_length);
    const TransferFunction T = adversarial_transfer(bank, cfg.system.omega, cfg.system.t, build_n);

    const bool equi = seq.rule == SamplingRule::equidistant;
    std::vector<std::string> tokens;
    if (cfg.exploratory || !equi) tokens.push_back("exploratory");
    if (cfg.kernel_refine > 1) tokens.push_back("refine=" + csv::format_int(cfg.kernel_refine));
    const std::string flags = join_flags(tokens);

    csv::Document doc;
    begin_report(doc, cfg);
    doc.header({"row", "sequence", "omega", "N", "l1_value", "worst_value", "worst_argmax_omega",
                "dirichlet_grid", "slope", "intercept", "residual", "flags"});

    const std::string seq_name = equi ? "equidistant" : "kadec";
    std::vector<double> kernel_vals, worst_vals, stage_vals;
    for (int N : cfg.stages) {
        const double l1 = kernel_l1(bank, cfg.system.omega, N, KernelConfig{cfg.kernel_refine});
        const WorstCase wc =
            worst_case_signal_value(T, bank, N, cfg.system.t, cfg.worst_case_sigma);
        kernel_vals.push_back(l1);
        worst_vals.push_back(wc.value);
        stage_vals.push_back(static_cast<double>(N));
        doc.row({"probe", seq_name, csv::format_double(cfg.system.omega), csv::format_int(N),
                 csv::format_double(l1), csv::format_double(wc.value),
                 csv::format_double(wc.argmax_omega),
                 equi ? csv::format_double(dirichlet_lebesgue_on_grid(N, grid)) : std::string{},
                 "", "", "", flags});
    }

    const auto fit_row = [&](const char* name, const std::vector<double>& vals) {
        try {
            const GrowthFit fit = growth_fit(stage_vals, vals);
            doc.row({name, seq_name, csv::format_double(cfg.system.omega), "", "", "", "", "",
                     csv::format_double(fit.slope), csv::format_double(fit.intercept),
                     csv::format_double(fit.residual), flags});
        } catch (const InputError&) {
            doc.row({"warning", seq_name, csv::format_double(cfg.system.omega), "", "", "", "",
                     "", "", "", "", "fit omitted: need 3 stages with ln N >= 1"});
        }
    };
    fit_row("fit_kernel", kernel_vals);
    fit_row("fit_worst", worst_vals);
    return doc;
}

csv::Document run_lebesgue(const ExperimentConfig& cfg) {
    require_stages(cfg);
    static const double kAsym = 4.0 / (kPi * kPi);

    csv::Document doc;
    begin_report(doc, cfg);
    doc.header({"N", "value", "value_over_logN", "ratio_to_asymptote", "flags"});
    for (int N : cfg.stages) {
        const double v = dirichlet_lebesgue(N);
        std::string over_log, ratio;
        if (N >= 2) {
            const double r = v / std::log(static_cast<double>(N));
            over_log = csv::format_double(r);
            ratio = csv::format_double(r / kAsym);
        }
        doc.row({csv::format_int(N), csv::format_double(v), over_log, ratio,
                 cfg.exploratory ? "exploratory" : ""});
    }
    return doc;
}

csv::Document run_riesz(const ExperimentConfig& cfg) {
    if (cfg.n_max < 1) throw ConfigError("config: 'n_max' must be >= 1");
    const SpectralGrid grid = make_grid(cfg);
    const SamplingSequence seq = make_sequence(cfg, cfg.n_max);
    const ReconstructionBank bank = build_bank(seq, grid, cfg.phi_hat_length);
    const RieszEstimate est = riesz_bounds_estimate(bank, cfg.n_max);

    if (!cfg.gram_out.empty()) {
        const std::vector<cdouble> g = gram_matrix(bank, cfg.n_max);
        const int dim = 2 * cfg.n_max + 1;
        csv::Document gm;
        gm.comment("pwapprox gram matrix");
        gm.comment("config = " + cfg.resolved_json());
        gm.header({"j", "k", "re", "im"});
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                const cdouble v = g[static_cast<std::size_t>(r) * dim + c];
                gm.row({csv::format_int(r - cfg.n_max), csv::format_int(c - cfg.n_max),
                        csv::format_double(v.real()), csv::format_double(v.imag())});
            }
        gm.write(cfg.gram_out);
    }

    csv::Document doc;
    begin_report(doc, cfg);
    doc.comment("A = " + csv::format_double(est.lower));
    doc.comment("B = " + csv::format_double(est.upper));
    doc.header({"index", "eigenvalue"});
    for (std::size_t i = 0; i < est.eigenvalues.size(); ++i)
        doc.row({csv::format_int(static_cast<long long>(i)),
                 csv::format_double(est.eigenvalues[i])});
    return doc;
}

csv::Document run_export_kernel(const ExperimentConfig& cfg) {
    const SpectralGrid grid = make_grid(cfg);
    int build_n = cfg.system.stage;
    if (build_n < 0) {
        if (cfg.stages.empty()) throw ConfigError("config: 'system.N' required for export-kernel");
        build_n = max_stage(cfg.stages);
    }
    const SamplingSequence seq = make_sequence(cfg, build_n);
    const ReconstructionBank bank = build_bank(seq, grid, cfg.phi_hat_length);
    const TransferFunction T = adversarial_transfer(bank, cfg.system.omega, cfg.system.t, build_n);

    csv::Document doc;
    begin_report(doc, cfg);
    doc.header({"omega", "re", "im"});
    for (std::size_t m = 0; m < grid.size(); ++m)
        doc.row({csv::format_double(grid.node(m)), csv::format_double(T.values[m].real()),
                 csv::format_double(T.values[m].imag())});
    return doc;
}

csv::Document run(const ExperimentConfig& cfg) {
    if (cfg.grid_m < 2 || (cfg.grid_m & (cfg.grid_m - 1)) != 0)
        throw ConfigError("config: 'grid_m' must be a power of two >= 2");
    if (cfg.experiment == "reconstruct") return run_reconstruct(cfg);
    if (cfg.experiment == "walsh-converge") return run_walsh_converge(cfg);
    if (cfg.experiment == "divergence") return run_divergence(cfg);
    if (cfg.experiment == "lebesgue") return run_lebesgue(cfg);
    if (cfg.experiment == "riesz") return run_riesz(cfg);
    if (cfg.experiment == "export-kernel") return run_export_kernel(cfg);
    throw ConfigError("config: unknown 'experiment' value '" + cfg.experiment + "'");
}

} // namespace pw::harness
