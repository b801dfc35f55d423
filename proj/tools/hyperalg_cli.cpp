/**
 * hyperalg -- hyperdimensional computing library
 *
 * Command-line front end: seeded, reproducible experiment runs with CSV and
 * JSON-manifest outputs. Subcommands: concentration, capacity, encode,
 * roundtrip. Every invocation requires --seed; identical invocations write
 * byte-identical files at any parallelism level (HYPERALG_THREADS).
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hyperalg/capacity.hpp"
#include "hyperalg/encoders.hpp"
#include "hyperalg/graph.hpp"
#include "hyperalg/report.hpp"
#include "hyperalg/sequence.hpp"
#include "hyperalg/serialize.hpp"

using namespace hyperalg;

namespace {

constexpr int EXIT_RUNTIME = 1;
constexpr int EXIT_CONFIG = 2;

// "2..50" or "2,5,10"
std::vector<std::size_t> parse_lengths(const std::string& text) {
    std::vector<std::size_t> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::size_t lo = std::stoull(text.substr(0, dots));
        const std::size_t hi = std::stoull(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw CLI::ValidationError("--lengths", "bad range " + text);
        for (std::size_t m = lo; m <= hi; ++m) out.push_back(m);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
        if (out.back() < 1) throw CLI::ValidationError("--lengths", "lengths must be >= 1");
    }
    if (out.empty()) throw CLI::ValidationError("--lengths", "no lengths given");
    return out;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
        if (out.back() < 1) throw CLI::ValidationError("--dims", "dimensions must be >= 1");
    }
    if (out.empty()) throw CLI::ValidationError("--dims", "no dimensions given");
    return out;
}

std::vector<ModelName> parse_models(const std::string& text) {
    std::vector<ModelName> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(model_from_string(item));
    }
    if (out.empty()) throw CLI::ValidationError("--model", "no models given");
    return out;
}

// pre-parse pass over the config file so schema errors carry line numbers
void validate_config_file(const std::string& path, const CLI::App& app) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    std::string section;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = line;
        const auto comment = t.find_first_of("#;");
        if (comment != std::string::npos) t = t.substr(0, comment);
        const auto first = t.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = t.find_last_not_of(" \t\r");
        t = t.substr(first, last - first + 1);
        if (t.front() == '[' && t.back() == ']') {
            section = t.substr(1, t.size() - 2);
            if (section != "default" && section != "global" &&
                app.get_subcommand_no_throw(section) == nullptr) {
                std::cerr << path << ":" << lineno << ": unknown section [" << section << "]\n";
                std::exit(EXIT_CONFIG);
            }
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            std::cerr << path << ":" << lineno << ": expected key=value, got '" << t << "'\n";
            std::exit(EXIT_CONFIG);
        }
        std::string key = t.substr(0, t.find_last_not_of(" \t", eq - 1) + 1);
        const CLI::App* scope = &app;
        if (!section.empty() && section != "default" && section != "global") {
            const CLI::App* sub = app.get_subcommand_no_throw(section);
            if (sub != nullptr) scope = sub;
        }
        if (scope->get_option_no_throw("--" + key) == nullptr) {
            std::cerr << path << ":" << lineno << ": unknown key '" << key << "' in section ["
                      << (section.empty() ? "global" : section) << "]\n";
            std::exit(EXIT_CONFIG);
        }
    }
}

std::vector<std::string> tokenize_text(const std::string& content, const std::string& mode) {
    std::vector<std::string> tokens;
    if (mode == "byte") {
        for (unsigned char c : content) tokens.push_back(std::to_string(c));
        return tokens;
    }
    if (mode == "char") {
        // UTF-8 code points
        for (std::size_t i = 0; i < content.size();) {
            const auto c = static_cast<unsigned char>(content[i]);
            std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xe ? 3 : 4;
            len = std::min(len, content.size() - i);
            tokens.push_back(content.substr(i, len));
            i += len;
        }
        return tokens;
    }
    if (mode == "whitespace") {
        std::stringstream ss(content);
        std::string word;
        while (ss >> word) tokens.push_back(word);
        return tokens;
    }
    throw CLI::ValidationError("--tokens", "unknown tokenization mode " + mode);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::pair<std::string, std::string>> base_config(std::uint64_t seed) {
    return {{"seed", std::to_string(seed)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperdimensional computing experiment harness"};
    app.set_config("--config", "", "flat key=value config file; flags override keys");
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "master seed; required, no hidden entropy")->required();

    // concentration
    auto* conc = app.add_subcommand("concentration",
                                    "pairwise cosine concentration of random bipolar vectors");
    std::string conc_dims = "128,1024,8192";
    std::size_t conc_count = 2000;
    std::size_t conc_cap = 200000;
    std::string conc_out = "concentration.csv";
    std::string conc_samples_out;
    conc->add_option("--dims", conc_dims, "comma-separated dimensions");
    conc->add_option("--count", conc_count, "random vectors per dimension");
    conc->add_option("--pair-cap", conc_cap, "uniform pair subsample above this count");
    conc->add_option("--out", conc_out, "summary CSV path");
    conc->add_option("--samples-out", conc_samples_out,
                     "full similarity table path (default: <out>.samples.csv)");

    // capacity
    auto* cap = app.add_subcommand("capacity", "sequence-recovery accuracy vs length");
    std::string cap_models = "bsc,map,fhrr";
    std::size_t cap_dim = 256, cap_items = 64, cap_runs = 5, cap_trials = 25,
                cap_stats_trials = 1500;
    std::string cap_lengths = "2..50";
    std::string cap_out = "capacity.csv";
    cap->add_option("--model", cap_models, "comma-separated models (bsc,map,fhrr,...)");
    cap->add_option("--dim", cap_dim, "hypervector dimension D");
    cap->add_option("--items", cap_items, "item memory size N");
    cap->add_option("--lengths", cap_lengths, "sweep, e.g. 2..50 or 2,10,20");
    cap->add_option("--runs", cap_runs, "independently seeded item memories");
    cap->add_option("--trials", cap_trials, "sequences per run per length");
    cap->add_option("--stats-trials", cap_stats_trials, "detection-stat estimation trials");
    cap->add_option("--out", cap_out, "CSV output path");

    // roundtrip
    auto* rt = app.add_subcommand("roundtrip", "s = a o b + c o d recovery check");
    std::string rt_model = "bsc";
    std::size_t rt_dim = 1024, rt_items = 64, rt_trials = 1000;
    std::string rt_out = "roundtrip.csv";
    rt->add_option("--model", rt_model, "model name");
    rt->add_option("--dim", rt_dim, "hypervector dimension D");
    rt->add_option("--items", rt_items, "item memory size N");
    rt->add_option("--trials", rt_trials, "trial count");
    rt->add_option("--out", rt_out, "CSV output path");

    // encode
    auto* enc = app.add_subcommand("encode", "text / vector / graph file to hypervector file");
    std::string enc_input, enc_out = "encoded.json";
    std::string enc_kind = "text";
    std::string enc_model = "map";
    std::size_t enc_dim = 1024;
    std::size_t enc_ngram = 3;
    std::string enc_tokens = "char";
    std::string enc_format = "json";
    std::size_t enc_levels = 16;
    enc->add_option("--input", enc_input, "input file path")->required();
    enc->add_option("--kind", enc_kind, "text | vector | graph");
    enc->add_option("--model", enc_model, "model name");
    enc->add_option("--dim", enc_dim, "hypervector dimension D");
    enc->add_option("--ngram", enc_ngram, "n-gram size for text inputs");
    enc->add_option("--tokens", enc_tokens, "byte | char | whitespace");
    enc->add_option("--levels", enc_levels, "level count for vector inputs");
    enc->add_option("--format", enc_format, "json | packed");
    enc->add_option("--out", enc_out, "output path");

    // pre-validate any config file for line-numbered diagnostics
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--config" && i + 1 < argc)
            validate_config_file(argv[i + 1], app);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : EXIT_CONFIG;
    }

    try {
        if (conc->parsed()) {
            ConcentrationConfig config;
            config.dims = parse_dims(conc_dims);
            config.count = conc_count;
            config.pair_cap = conc_cap;
            config.seed = seed;
            const auto result = run_concentration_experiment(config);
            const std::string samples_path =
                conc_samples_out.empty() ? conc_out + ".samples.csv" : conc_samples_out;
            atomic_write_file(conc_out, concentration_summary_csv(result));
            atomic_write_file(samples_path, concentration_samples_csv(result));
            auto items = base_config(seed);
            items.emplace_back("dims", json_quote(conc_dims));
            items.emplace_back("count", std::to_string(conc_count));
            items.emplace_back("pair_cap", std::to_string(conc_cap));
            atomic_write_file(conc_out + ".manifest.json",
                              manifest_json("concentration", items, {conc_out, samples_path}));
            for (const auto& d : result.per_dim)
                std::cout << "D=" << d.dim << " fitted std " << format_double(d.stddev)
                          << " (1/sqrt(D) = "
                          << format_double(1.0 / std::sqrt(static_cast<double>(d.dim))) << ")\n";
            return 0;
        }
        if (cap->parsed()) {
            CapacityConfig config;
            config.models = parse_models(cap_models);
            config.dim = cap_dim;
            config.items = cap_items;
            config.lengths = parse_lengths(cap_lengths);
            config.runs = cap_runs;
            config.trials = cap_trials;
            config.stats_trials = cap_stats_trials;
            config.seed = seed;
            const auto curve = run_sequence_recovery_experiment(config);
            atomic_write_file(cap_out, capacity_csv(curve));
            auto items = base_config(seed);
            items.emplace_back("models", json_quote(cap_models));
            items.emplace_back("dim", std::to_string(cap_dim));
            items.emplace_back("items", std::to_string(cap_items));
            items.emplace_back("lengths", json_quote(cap_lengths));
            items.emplace_back("runs", std::to_string(cap_runs));
            items.emplace_back("trials", std::to_string(cap_trials));
            items.emplace_back("stats_trials", std::to_string(cap_stats_trials));
            atomic_write_file(cap_out + ".manifest.json",
                              manifest_json("capacity", items, {cap_out}));
            std::cout << "wrote " << curve.points.size() << " sweep points to " << cap_out
                      << "\n";
            return 0;
        }
        if (rt->parsed()) {
            RoundtripConfig config;
            config.model = model_from_string(rt_model);
            config.dim = rt_dim;
            config.items = rt_items;
            config.trials = rt_trials;
            config.seed = seed;
            const auto report = run_roundtrip_check(config);
            atomic_write_file(rt_out, roundtrip_csv(config, report));
            auto items = base_config(seed);
            items.emplace_back("model", json_quote(rt_model));
            items.emplace_back("dim", std::to_string(rt_dim));
            items.emplace_back("items", std::to_string(rt_items));
            items.emplace_back("trials", std::to_string(rt_trials));
            atomic_write_file(rt_out + ".manifest.json",
                              manifest_json("roundtrip", items, {rt_out}));
            std::cout << "success rate " << format_double(report.success_rate) << ", margin "
                      << format_double(report.mean_margin) << "\n";
            return 0;
        }
        if (enc->parsed()) {
            const auto model = ModelAlgebra::make(model_from_string(enc_model), enc_dim, seed);
            Hypervector result = Hypervector::zeros(model.space());
            if (enc_kind == "text") {
                const auto tokens = tokenize_text(slurp(enc_input), enc_tokens);
                ItemMemory symbols(model.space(), model.metric());
                for (const auto& t : tokens) {
                    if (!symbols.contains(t)) {
                        RngStream rng(seed, "sym/" + t);
                        symbols.add(t, model.random_atom(rng));
                    }
                }
                result = encode_ngram_stats(model, symbols, tokens, enc_ngram);
            } else if (enc_kind == "vector") {
                // one CSV row of numbers
                std::stringstream ss(slurp(enc_input));
                std::vector<double> values;
                std::string cell;
                while (std::getline(ss, cell, ',')) {
                    if (cell.find_first_not_of(" \t\r\n") == std::string::npos) continue;
                    values.push_back(std::stod(cell));
                }
                if (values.empty()) throw std::runtime_error("no numbers in " + enc_input);
                double lo = values[0], hi = values[0];
                for (double v : values) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                if (lo == hi) hi = lo + 1.0;
                RngStream rng(seed, "vec-levels");
                const LevelCodebook cb(model.space(), enc_levels, LevelScheme::flip, lo, hi,
                                       rng);
                result = encode_vector_compositional(model, values, cb,
                                                     VectorRoleScheme::random_roles, seed);
            } else if (enc_kind == "graph") {
                // edge list: one "u v" or "u v ->" per line
                std::stringstream ss(slurp(enc_input));
                std::vector<GraphEdge> edges;
                ItemMemory nodes(model.space(), model.metric());
                std::string line;
                while (std::getline(ss, line)) {
                    std::stringstream ls(line);
                    GraphEdge e;
                    std::string arrow;
                    if (!(ls >> e.from >> e.to)) continue;
                    if (ls >> arrow && arrow == "->") e.directed = true;
                    for (const auto& id : {e.from, e.to}) {
                        if (!nodes.contains(id)) {
                            RngStream rng(seed, "node/" + id);
                            nodes.add(id, model.random_atom(rng));
                        }
                    }
                    edges.push_back(std::move(e));
                }
                if (edges.empty()) throw std::runtime_error("no edges in " + enc_input);
                result = encode_graph(model, nodes, edges);
            } else {
                std::cerr << "unknown --kind '" << enc_kind << "'\n";
                return EXIT_CONFIG;
            }
            if (enc_format == "packed") {
                hv_to_packed(result, enc_out);
            } else if (enc_format == "json") {
                atomic_write_file(enc_out, hv_to_json(result) + "\n");
            } else {
                std::cerr << "unknown --format '" << enc_format << "'\n";
                return EXIT_CONFIG;
            }
            auto items = base_config(seed);
            items.emplace_back("input", json_quote(enc_input));
            items.emplace_back("kind", json_quote(enc_kind));
            items.emplace_back("model", json_quote(enc_model));
            items.emplace_back("dim", std::to_string(enc_dim));
            items.emplace_back("ngram", std::to_string(enc_ngram));
            items.emplace_back("tokens", json_quote(enc_tokens));
            atomic_write_file(enc_out + ".manifest.json",
                              manifest_json("encode", items, {enc_out}));
            std::cout << "wrote " << enc_out << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return EXIT_CONFIG;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return EXIT_CONFIG;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_RUNTIME;
    }
    return EXIT_CONFIG;
}
