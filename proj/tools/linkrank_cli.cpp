// Command-line front end: ingestion, synthetic generation, ranking,
// degree/attachment analysis, benchmarking and convergence comparison.
// Every run resolves its configuration (defaults < config file < flags),
// writes artifacts atomically and drops a manifest with input digests so
// reruns are reproducible and silent overwrites detectable.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linkrank/eval.hpp"
#include "linkrank/hits.hpp"
#include "linkrank/netanalysis.hpp"
#include "linkrank/pagerank.hpp"
#include "linkrank/traderank.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace linkrank;

namespace {

// ---------------------------------------------------------------- output

struct Formatter {
    int digits = 6;
    std::string operator()(double v) const {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
        return buf;
    }
};

void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string file_digest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(buf.str())));
    return hex;
}

// ------------------------------------------------------------ run config

struct CommonOptions {
    std::string config_file;
    RunConfig cfg;
    bool full_precision = false;

    Formatter formatter() const { return Formatter{full_precision ? 17 : 6}; }
};

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "alpha")
                cfg.alpha = std::stod(value);
            else if (key == "beta")
                cfg.beta = std::stod(value);
            else if (key == "zeta")
                cfg.zeta = std::stod(value);
            else if (key == "c" || key == "blend_c")
                cfg.blend_c = std::stod(value);
            else if (key == "tolerance")
                cfg.tolerance = std::stod(value);
            else if (key == "max_iterations")
                cfg.max_iterations = std::stoi(value);
            else if (key == "seed" || key == "rng_seed")
                cfg.rng_seed = std::stoull(value);
            else if (key == "weighted_degrees")
                cfg.weighted_degrees = value == "true" || value == "1";
            else
                throw std::runtime_error("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("config line " + std::to_string(lineno) + ": bad value '" +
                                     value + "' for " + key);
        }
    }
}

// Flags overriding config-file values: register each option against a local
// staging variable and copy back only the ones the user actually passed.
struct ConfigFlags {
    double alpha, beta, zeta, blend_c, tolerance;
    int max_iterations;
    std::uint64_t seed;
    bool count_degrees = false;

    CLI::Option* alpha_opt = nullptr;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* zeta_opt = nullptr;
    CLI::Option* c_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
    CLI::Option* iter_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* count_opt = nullptr;

    void attach(CLI::App* app) {
        alpha_opt = app->add_option("--alpha", alpha, "PageRank teleport mix in (0,1)");
        beta_opt = app->add_option("--beta", beta, "trade ranking link balance in (0,1)");
        zeta_opt = app->add_option("--zeta", zeta, "positivity smoothing in (0,1)");
        c_opt = app->add_option("--c", blend_c, "reserved-resource blend weight in (0,1)");
        tol_opt = app->add_option("--tolerance", tolerance, "residual threshold");
        iter_opt = app->add_option("--max-iterations", max_iterations, "iteration cap");
        seed_opt = app->add_option("--seed", seed, "generator seed");
        count_opt = app->add_flag("--count-degrees", count_degrees,
                                  "trade degrees as transaction counts instead of volumes");
    }

    void apply(RunConfig& cfg) const {
        if (alpha_opt->count())
            cfg.alpha = alpha;
        if (beta_opt->count())
            cfg.beta = beta;
        if (zeta_opt->count())
            cfg.zeta = zeta;
        if (c_opt->count())
            cfg.blend_c = blend_c;
        if (tol_opt->count())
            cfg.tolerance = tolerance;
        if (iter_opt->count())
            cfg.max_iterations = max_iterations;
        if (seed_opt->count())
            cfg.rng_seed = seed;
        if (count_opt->count())
            cfg.weighted_degrees = false;
    }
};

json config_json(const RunConfig& cfg) {
    return json{{"alpha", cfg.alpha},
                {"beta", cfg.beta},
                {"zeta", cfg.zeta},
                {"blend_c", cfg.blend_c},
                {"tolerance", cfg.tolerance},
                {"max_iterations", cfg.max_iterations},
                {"rng_seed", cfg.rng_seed},
                {"weighted_degrees", cfg.weighted_degrees}};
}

// ------------------------------------------------------------- manifests

void write_manifest(const fs::path& manifest_path, const std::string& subcommand,
                    const RunConfig& cfg, const json& args,
                    const std::vector<fs::path>& inputs, const std::vector<std::string>& outputs) {
    json inputs_json = json::array();
    for (const auto& in : inputs)
        inputs_json.push_back({{"path", in.string()}, {"digest", file_digest(in)}});

    if (fs::exists(manifest_path)) {
        try {
            std::ifstream old_file(manifest_path);
            const json old = json::parse(old_file);
            for (const auto& old_in : old.at("inputs")) {
                for (const auto& new_in : inputs_json) {
                    if (old_in.at("path") == new_in.at("path") &&
                        old_in.at("digest") != new_in.at("digest")) {
                        std::cerr << "warning: input " << new_in.at("path").get<std::string>()
                                  << " changed since the previous run recorded in "
                                  << manifest_path.string() << "; overwriting artifacts\n";
                    }
                }
            }
        } catch (const std::exception&) {
            std::cerr << "warning: unreadable manifest " << manifest_path.string()
                      << "; overwriting\n";
        }
    }

    json manifest{{"tool", "linkrank"},
                  {"subcommand", subcommand},
                  {"config", config_json(cfg)},
                  {"args", args},
                  {"inputs", inputs_json},
                  {"outputs", outputs}};
    atomic_write(manifest_path, manifest.dump(2) + "\n");
}

// ------------------------------------------------------------ table text

std::string scores_table(const Network& net, const std::vector<double>& scores,
                         const Formatter& fmt) {
    const auto order = ordering_of(scores);
    std::vector<int> by_rank(net.vertex_count());
    for (int i = 0; i < net.vertex_count(); ++i)
        by_rank[order.ranks[i] - 1] = i;
    std::ostringstream out;
    out << "# id\tscore\trank\n";
    for (int pos = 0; pos < net.vertex_count(); ++pos) {
        const int v = by_rank[pos];
        out << net.id_of(v) << '\t' << fmt(scores[v]) << '\t' << pos + 1 << '\n';
    }
    return out.str();
}

std::string trace_table(const ConvergenceTrace& trace, const Formatter& fmt) {
    std::ostringstream out;
    out << "# iteration\tresidual\n";
    for (std::size_t i = 0; i < trace.residuals.size(); ++i)
        out << i + 1 << '\t' << fmt(trace.residuals[i]) << '\n';
    return out.str();
}

Network load_network(const fs::path& path, NetworkMode mode) {
    return ingest_edge_list(read_edge_list_file(path.string()), mode);
}

std::string network_text(const Network& net) {
    std::ostringstream out;
    write_edge_list(out, net);
    return out.str();
}

// ------------------------------------------------------------ subcommands

struct IngestArgs {
    std::string input;
    std::string mode = "trading";
    std::string out_dir = ".";
    bool split = false;
};

int run_ingest(const IngestArgs& a, CommonOptions& common) {
    const NetworkMode mode = a.mode == "www" ? NetworkMode::Www : NetworkMode::Trading;
    const auto rows = read_edge_list_file(a.input);
    std::vector<std::string> outputs;
    if (a.split) {
        const auto nets = split_by_resource(rows);
        for (const auto& [label, net] : nets) {
            const std::string name = "edges_" + label + ".tsv";
            atomic_write(fs::path(a.out_dir) / name, network_text(net));
            outputs.push_back(name);
            std::cout << label << ": vertices=" << net.vertex_count()
                      << " edges=" << net.adjacency().nonzeros() << '\n';
        }
    } else {
        const auto net = ingest_edge_list(rows, mode);
        atomic_write(fs::path(a.out_dir) / "edges.tsv", network_text(net));
        outputs.push_back("edges.tsv");
        std::cout << "vertices=" << net.vertex_count()
                  << " edges=" << net.adjacency().nonzeros() << '\n';
    }
    write_manifest(fs::path(a.out_dir) / "manifest.json", "ingest", common.cfg,
                   json{{"input", a.input}, {"mode", a.mode}, {"split", a.split}}, {a.input},
                   outputs);
    return 0;
}

struct GenerateArgs {
    std::string model;
    int n = 0;
    int m = 3;
    double p = 0.01;
    double avg_degree = 8.0;
    int snapshots = 0;
    bool symmetrize = false;
    std::string attachment = "preferential";
    std::string out_dir = ".";
    std::string name;
};

int run_generate(const GenerateArgs& a, CommonOptions& common) {
    const std::uint64_t seed = common.cfg.rng_seed;
    std::vector<std::string> outputs;
    std::string base = a.name;
    if (a.model == "ba") {
        if (base.empty())
            base = "ba_n" + std::to_string(a.n) + "_m" + std::to_string(a.m) + "_s" +
                   std::to_string(seed);
        GrowthOptions opt;
        opt.symmetrize = a.symmetrize;
        if (a.attachment == "uniform")
            opt.attachment = AttachmentRule::Uniform;
        else if (a.attachment != "preferential")
            throw std::runtime_error("unknown attachment rule '" + a.attachment + "'");
        if (a.snapshots > 1) {
            opt.snapshot_sizes.clear();
            for (int i = 1; i <= a.snapshots; ++i)
                opt.snapshot_sizes.push_back(static_cast<int>(
                    static_cast<long long>(a.n) * i / a.snapshots));
        }
        const auto history = generate_growth(a.n, a.m, seed, opt);
        if (a.snapshots > 1) {
            int idx = 0;
            for (const auto& snap : history.snapshots) {
                const std::string name = base + "_snap" + std::to_string(++idx) + "_n" +
                                         std::to_string(snap.vertex_count()) + ".tsv";
                atomic_write(fs::path(a.out_dir) / name, network_text(snap));
                outputs.push_back(name);
            }
        }
        atomic_write(fs::path(a.out_dir) / (base + ".tsv"),
                     network_text(history.final_network()));
        outputs.push_back(base + ".tsv");
    } else if (a.model == "er") {
        if (base.empty()) {
            std::ostringstream nm;
            nm << "er_n" << a.n << "_p" << a.p << "_s" << seed;
            base = nm.str();
        }
        atomic_write(fs::path(a.out_dir) / (base + ".tsv"),
                     network_text(generate_er(a.n, a.p, seed)));
        outputs.push_back(base + ".tsv");
    } else if (a.model == "webgraph") {
        if (base.empty()) {
            std::ostringstream nm;
            nm << "web_n" << a.n << "_d" << a.avg_degree << "_s" << seed;
            base = nm.str();
        }
        atomic_write(fs::path(a.out_dir) / (base + ".tsv"),
                     network_text(generate_webgraph(a.n, a.avg_degree, seed)));
        outputs.push_back(base + ".tsv");
    } else {
        throw std::runtime_error("unknown model '" + a.model + "'");
    }
    for (const auto& name : outputs)
        std::cout << "wrote " << (fs::path(a.out_dir) / name).string() << '\n';
    write_manifest(fs::path(a.out_dir) / "manifest.json", "generate", common.cfg,
                   json{{"model", a.model},
                        {"n", a.n},
                        {"m", a.m},
                        {"p", a.p},
                        {"avg_degree", a.avg_degree},
                        {"snapshots", a.snapshots},
                        {"symmetrize", a.symmetrize},
                        {"attachment", a.attachment}},
                   {}, outputs);
    return 0;
}

struct RankArgs {
    std::string algo;
    std::string input;
    std::string mode;
    std::string reserved_file;
    std::string out_dir = ".";
};

int run_rank(const RankArgs& a, CommonOptions& common) {
    std::string mode = a.mode;
    if (mode.empty())
        mode = (a.algo == "traderank" || a.algo == "buyer-seller") ? "trading" : "www";
    const auto net = load_network(a.input, mode == "www" ? NetworkMode::Www
                                                         : NetworkMode::Trading);
    const auto fmt = common.formatter();
    std::vector<std::string> outputs;
    auto emit = [&](const std::string& stem, const RankResult& r) {
        atomic_write(fs::path(a.out_dir) / (stem + "_scores.tsv"),
                     scores_table(net, r.scores, fmt));
        atomic_write(fs::path(a.out_dir) / (stem + "_residuals.tsv"),
                     trace_table(r.trace, fmt));
        outputs.push_back(stem + "_scores.tsv");
        outputs.push_back(stem + "_residuals.tsv");
        std::cout << stem << ": iterations=" << r.iterations
                  << " converged=" << (r.converged ? "yes" : "no") << '\n';
    };

    if (a.algo == "pagerank") {
        emit("pagerank", pagerank(net, common.cfg));
    } else if (a.algo == "hits") {
        const auto r = hits(net, common.cfg);
        emit("authority", r.authority);
        emit("hub", r.hub);
    } else if (a.algo == "hits-accel") {
        const auto r = hits_accelerated(net, common.cfg);
        emit("authority", r.authority);
        emit("hub", r.hub);
    } else if (a.algo == "traderank") {
        auto r = trade_rank(net, common.cfg);
        if (!a.reserved_file.empty()) {
            BlendInput blend;
            blend.blend_c = common.cfg.blend_c;
            blend.reserved.assign(net.vertex_count(), 0.0);
            for (const auto& rec : read_edge_list_file(a.reserved_file)) {
                // (id, amount) records parse as source=id, target=amount
                const int v = net.index_of(rec.source);
                if (v < 0)
                    throw std::runtime_error("reserved file names unknown vertex '" +
                                             rec.source + "'");
                blend.reserved[v] += std::stod(rec.target);
            }
            r = blend_reserved(r, blend);
        }
        emit("traderank", r);
    } else if (a.algo == "buyer-seller") {
        const auto r = buyer_seller(net, common.cfg);
        emit("buyer", r.buyer);
        emit("seller", r.seller);
    } else {
        throw std::runtime_error("unknown algorithm '" + a.algo + "'");
    }

    std::vector<fs::path> inputs{a.input};
    if (!a.reserved_file.empty())
        inputs.push_back(a.reserved_file);
    write_manifest(fs::path(a.out_dir) / "manifest.json", "rank", common.cfg,
                   json{{"algo", a.algo},
                        {"input", a.input},
                        {"mode", mode},
                        {"reserved", a.reserved_file}},
                   inputs, outputs);
    return 0;
}

struct AnalyzeArgs {
    bool degree_dist = false;
    bool pa_test = false;
    std::vector<std::string> inputs;
    std::string direction = "total";
    std::string out_dir = ".";
};

int run_analyze(const AnalyzeArgs& a, CommonOptions& common) {
    const auto fmt = common.formatter();
    std::vector<std::string> outputs;
    std::vector<fs::path> input_paths(a.inputs.begin(), a.inputs.end());
    json args{{"direction", a.direction}, {"inputs", a.inputs}};

    if (a.degree_dist == a.pa_test)
        throw std::runtime_error("choose exactly one of --degree-dist / --pa-test");

    if (a.degree_dist) {
        if (a.inputs.size() != 1)
            throw std::runtime_error("--degree-dist expects exactly one --input");
        DegreeDirection dir = DegreeDirection::Total;
        if (a.direction == "in")
            dir = DegreeDirection::In;
        else if (a.direction == "out")
            dir = DegreeDirection::Out;
        else if (a.direction != "total")
            throw std::runtime_error("unknown direction '" + a.direction + "'");
        const auto net = load_network(a.inputs[0], NetworkMode::Trading);
        const auto profile = degree_profile(net, dir);

        std::ostringstream dist;
        dist << "# degree\tfrequency\n";
        for (const auto& [k, f] : profile.frequencies)
            dist << k << '\t' << fmt(f) << '\n';
        atomic_write(fs::path(a.out_dir) / "degree_dist.tsv", dist.str());
        outputs.push_back("degree_dist.tsv");

        std::ostringstream summary;
        summary << "vertices\t" << net.vertex_count() << '\n'
                << "mean_degree\t" << fmt(profile.mean_degree) << '\n'
                << "poisson_mean\t" << fmt(profile.poisson_mean) << '\n'
                << "poisson_loglik\t" << fmt(profile.poisson_loglik) << '\n';
        if (profile.gamma_defined) {
            summary << "powerlaw_exponent\t" << fmt(profile.gamma) << '\n'
                    << "fit_k_range\t" << profile.fit_k_min << ".." << profile.fit_k_max << '\n'
                    << "fit_points\t" << profile.fit_points << '\n'
                    << "powerlaw_loglik\t" << fmt(profile.powerlaw_loglik) << '\n';
        } else {
            summary << "powerlaw_exponent\tundefined\n";
        }
        atomic_write(fs::path(a.out_dir) / "degree_fit.txt", summary.str());
        outputs.push_back("degree_fit.txt");
        std::cout << summary.str();
    } else {
        if (a.inputs.size() < 2)
            throw std::runtime_error("--pa-test expects at least two ordered snapshot inputs");
        GrowthHistory history;
        for (const auto& path : a.inputs)
            history.snapshots.push_back(load_network(path, NetworkMode::Trading));
        const auto fit = pa_exponent_fit(history);
        std::ostringstream bins;
        bins << "# mean_degree\tmean_degree_change\n";
        for (const auto& [k, dk] : fit.bin_means)
            bins << fmt(k) << '\t' << fmt(dk) << '\n';
        atomic_write(fs::path(a.out_dir) / "pa_bins.tsv", bins.str());
        outputs.push_back("pa_bins.tsv");
        std::cout << "attachment_exponent\t" << fmt(fit.exponent) << '\n';
    }

    write_manifest(fs::path(a.out_dir) / "manifest.json", "analyze", common.cfg, args,
                   input_paths, outputs);
    return 0;
}

struct BenchmarkArgs {
    std::string datasets_dir;
    std::string out_file = "report.csv";
};

int run_benchmark(const BenchmarkArgs& a, CommonOptions& common) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.datasets_dir)) {
        if (!entry.is_regular_file())
            continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".tsv" || ext == ".csv" || ext == ".txt" || ext == ".edges")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw std::runtime_error("no edge-list files (*.tsv|*.csv|*.txt|*.edges) in " +
                                 a.datasets_dir);

    std::vector<std::pair<std::string, Network>> datasets;
    for (const auto& f : files)
        datasets.emplace_back(f.stem().string(), load_network(f, NetworkMode::Trading));

    const auto report = benchmark(datasets, common.cfg);
    std::ostringstream out;
    report.write_csv(out, common.full_precision ? 17 : 6);
    atomic_write(a.out_file, out.str());
    std::cout << "wrote " << a.out_file << " (" << report.rows.size() << " datasets)\n";

    write_manifest(fs::path(a.out_file).string() + ".manifest.json", "benchmark", common.cfg,
                   json{{"datasets", a.datasets_dir}, {"out", a.out_file}}, files,
                   {fs::path(a.out_file).filename().string()});
    return 0;
}

struct CompareArgs {
    std::string algos = "hits,hits-accel";
    std::string input;
    std::string mode = "www";
    std::string out_dir = ".";
};

int run_compare(const CompareArgs& a, CommonOptions& common) {
    const auto net = load_network(a.input, a.mode == "trading" ? NetworkMode::Trading
                                                               : NetworkMode::Www);
    std::vector<std::string> algos;
    std::stringstream ss(a.algos);
    std::string item;
    while (std::getline(ss, item, ','))
        algos.push_back(item);
    if (algos.size() < 2)
        throw std::runtime_error("--algos needs at least two comma-separated names");

    std::vector<ConvergenceTrace> traces;
    for (const auto& algo : algos) {
        if (algo == "pagerank")
            traces.push_back(pagerank(net, common.cfg).trace);
        else if (algo == "hits")
            traces.push_back(hits(net, common.cfg).authority.trace);
        else if (algo == "hits-accel")
            traces.push_back(hits_accelerated(net, common.cfg).authority.trace);
        else if (algo == "traderank")
            traces.push_back(trade_rank(net, common.cfg).trace);
        else
            throw std::runtime_error("unknown algorithm '" + algo + "'");
        std::cout << algo << ": iterations=" << traces.back().residuals.size() << '\n';
    }

    const auto fmt = common.formatter();
    std::size_t longest = 0;
    for (const auto& t : traces)
        longest = std::max(longest, t.residuals.size());
    std::ostringstream out;
    out << "# iteration";
    for (const auto& algo : algos)
        out << '\t' << algo;
    out << '\n';
    for (std::size_t i = 0; i < longest; ++i) {
        out << i + 1;
        for (const auto& t : traces) {
            out << '\t';
            if (i < t.residuals.size())
                out << fmt(t.residuals[i]);
        }
        out << '\n';
    }
    atomic_write(fs::path(a.out_dir) / "convergence.tsv", out.str());
    std::cout << "wrote " << (fs::path(a.out_dir) / "convergence.tsv").string() << '\n';

    write_manifest(fs::path(a.out_dir) / "manifest.json", "compare-convergence", common.cfg,
                   json{{"algos", a.algos}, {"input", a.input}, {"mode", a.mode}}, {a.input},
                   {"convergence.tsv"});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-structure ranking for weighted directed networks"};
    app.require_subcommand(1);

    CommonOptions common;
    IngestArgs ingest_args;
    GenerateArgs generate_args;
    RankArgs rank_args;
    AnalyzeArgs analyze_args;
    BenchmarkArgs benchmark_args;
    CompareArgs compare_args;
    std::map<const CLI::App*, ConfigFlags> flags;
    std::map<const CLI::App*, std::string> config_files;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_files[sub], "key=value config file");
        sub->add_flag("--full-precision", common.full_precision,
                      "print 17 significant digits instead of 6");
        flags[sub].attach(sub);
    };

    auto* ingest_cmd = app.add_subcommand("ingest", "validate and normalize an edge list");
    ingest_cmd->add_option("--input", ingest_args.input, "edge-list file")->required();
    ingest_cmd->add_option("--mode", ingest_args.mode, "www | trading")
        ->check(CLI::IsMember({"www", "trading"}));
    ingest_cmd->add_flag("--split", ingest_args.split, "one output per resource label");
    ingest_cmd->add_option("--out", ingest_args.out_dir, "output directory");
    add_common(ingest_cmd);

    auto* generate_cmd = app.add_subcommand("generate", "write synthetic networks");
    generate_cmd->add_option("--model", generate_args.model, "ba | er | webgraph")->required();
    generate_cmd->add_option("--n", generate_args.n, "vertex count")->required();
    generate_cmd->add_option("--m", generate_args.m, "edges per new vertex (ba)");
    generate_cmd->add_option("--p", generate_args.p, "edge probability (er)");
    generate_cmd->add_option("--avg-degree", generate_args.avg_degree,
                             "target average degree (webgraph)");
    generate_cmd->add_option("--snapshots", generate_args.snapshots,
                             "also write this many growth snapshots (ba)");
    generate_cmd->add_flag("--symmetrize", generate_args.symmetrize,
                           "emit both edge directions (ba)");
    generate_cmd->add_option("--attachment", generate_args.attachment,
                             "preferential | uniform (ba)")
        ->check(CLI::IsMember({"preferential", "uniform"}));
    generate_cmd->add_option("--out", generate_args.out_dir, "output directory");
    generate_cmd->add_option("--name", generate_args.name, "output basename override");
    add_common(generate_cmd);

    auto* rank_cmd = app.add_subcommand("rank", "rank a network");
    rank_cmd
        ->add_option("--algo", rank_args.algo,
                     "pagerank | hits | hits-accel | traderank | buyer-seller")
        ->required();
    rank_cmd->add_option("--input", rank_args.input, "edge-list file")->required();
    rank_cmd->add_option("--mode", rank_args.mode, "www | trading (default by algorithm)")
        ->check(CLI::IsMember({"www", "trading"}));
    rank_cmd->add_option("--reserved", rank_args.reserved_file,
                         "(id, amount) file blended into traderank scores");
    rank_cmd->add_option("--out", rank_args.out_dir, "output directory");
    add_common(rank_cmd);

    auto* analyze_cmd = app.add_subcommand("analyze", "degree and attachment analysis");
    analyze_cmd->add_flag("--degree-dist", analyze_args.degree_dist, "degree distribution + fits");
    analyze_cmd->add_flag("--pa-test", analyze_args.pa_test,
                          "attachment exponent from ordered snapshots");
    analyze_cmd->add_option("--input", analyze_args.inputs,
                            "edge-list file (repeat for --pa-test snapshots)")
        ->required();
    analyze_cmd->add_option("--direction", analyze_args.direction, "in | out | total");
    analyze_cmd->add_option("--out", analyze_args.out_dir, "output directory");
    add_common(analyze_cmd);

    auto* benchmark_cmd = app.add_subcommand("benchmark", "iteration/similarity table");
    benchmark_cmd->add_option("--datasets", benchmark_args.datasets_dir, "directory of edge lists")
        ->required();
    benchmark_cmd->add_option("--out", benchmark_args.out_file, "report CSV path");
    add_common(benchmark_cmd);

    auto* compare_cmd = app.add_subcommand("compare-convergence", "residual traces side by side");
    compare_cmd->add_option("--algos", compare_args.algos, "comma-separated algorithm list");
    compare_cmd->add_option("--input", compare_args.input, "edge-list file")->required();
    compare_cmd->add_option("--mode", compare_args.mode, "www | trading")
        ->check(CLI::IsMember({"www", "trading"}));
    compare_cmd->add_option("--out", compare_args.out_dir, "output directory");
    add_common(compare_cmd);

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (!config_files[sub].empty())
            apply_config_file(config_files[sub], common.cfg);
        flags[sub].apply(common.cfg);
        common.cfg.validate();

        if (name == "ingest")
            return run_ingest(ingest_args, common);
        if (name == "generate")
            return run_generate(generate_args, common);
        if (name == "rank")
            return run_rank(rank_args, common);
        if (name == "analyze")
            return run_analyze(analyze_args, common);
        if (name == "benchmark")
            return run_benchmark(benchmark_args, common);
        if (name == "compare-convergence")
            return run_compare(compare_args, common);
        std::cerr << "linkrank: unknown subcommand " << name << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "linkrank " << name << ": " << e.what() << '\n';
        return 1;
    }
}
