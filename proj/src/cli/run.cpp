#include "ttlab/cli/run.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ttlab/cli/cache.hpp"
#include "ttlab/cli/report.hpp"
#include "ttlab/codec.hpp"
#include "ttlab/construct.hpp"
#include "ttlab/error.hpp"

namespace ttlab::cli {

namespace {

struct Invocation
{
    std::string command;
    Json params;
    std::function<Json()> compute;
};

GraphMode parse_mode(const std::string & s) { return s == "digraph" ? GraphMode::Digraph : GraphMode::Oriented; }

Digraph read_graph(const std::string & path)
{
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    }
    else {
        std::ifstream in(path);
        if (! in)
            throw Error("cannot read graph file '" + path + "'");
        buffer << in.rdbuf();
    }
    return decode(buffer.str());
}

const CLI::Validator & weight_validator()
{
    static const CLI::Validator v(
        [](std::string & value) -> std::string {
            try {
                Weight::parse(value);
                return {};
            }
            catch (const Error & e) {
                return e.what();
            }
        },
        "{2|log3|P/Q}", "weight");
    return v;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Exact small-n computations on digraphs forbidding blow-ups of transitive tournaments", "ttlab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    std::string cache_dir;
    int threads = 1;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache-dir", cache_dir, std::string("Result cache directory (default: $") + kCacheDirEnv + ")");
    app.add_option("--threads", threads, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);

    const auto modes = CLI::IsMember({"oriented", "digraph"});
    int n = 0, r = 0, k = 0, t = 0;
    std::string graph_path, weight_text = "2";
    // one per subcommand: default_val writes through to the bound variable
    std::string ex_mode, free_mode, partite_mode, ratio_mode;
    bool naive = false;

    auto * gen = app.add_subcommand("gen", "Construct a graph and print its TDG encoding");
    gen->require_subcommand(1);
    gen->fallthrough();
    auto * gen_dtr = gen->add_subcommand("dtr", "DT_r(n): balanced complete r-partite digraph");
    gen_dtr->add_option("--n", n)->required()->check(CLI::Range(0, kMaxVertices));
    gen_dtr->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    auto * gen_blowup = gen->add_subcommand("blowup", "T_k^t: blow-up of a transitive tournament");
    gen_blowup->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    gen_blowup->add_option("--t", t)->required()->check(CLI::PositiveNumber);

    auto * check = app.add_subcommand("check", "Test a graph for a copy of T_k^t");
    check->add_option("--graph", graph_path, "TDG file, or - for stdin")->required();
    check->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    check->add_option("--t", t)->required()->check(CLI::PositiveNumber);

    auto * ex = app.add_subcommand("ex", "Weighted extremal number ex_a(n, T_k^t)");
    ex->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    ex->add_option("--k", k)->required()->check(CLI::Range(2, kMaxVertices));
    ex->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    ex->add_option("--weight", weight_text, "2, log3 or P/Q in (3/2, 2]")->check(weight_validator());
    ex->add_option("--mode", ex_mode)->check(modes)->default_val("digraph");
    ex->add_flag("--naive", naive, "Use the unpruned enumeration");

    auto * count = app.add_subcommand("count", "Exact labelled counts");
    count->require_subcommand(1);
    count->fallthrough();
    auto * count_free_cmd = count->add_subcommand("free", "T_k^t-free graphs on [n]");
    count_free_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    count_free_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    count_free_cmd->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    count_free_cmd->add_option("--mode", free_mode)->check(modes)->default_val("oriented");
    auto * count_partite_cmd = count->add_subcommand("partite", "Graphs with an r-partition into T_2^t-free parts");
    count_partite_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    count_partite_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    count_partite_cmd->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    count_partite_cmd->add_option("--mode", partite_mode)->check(modes)->default_val("oriented");

    auto * ratio = app.add_subcommand("ratio", "Free count against partite count for T_{r+1}^t");
    ratio->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    ratio->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    ratio->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    ratio->add_option("--mode", ratio_mode)->check(modes)->default_val("oriented");

    auto * mh = app.add_subcommand("mh", "Container density m(T_k^t) and exponent 2 - 1/m");
    mh->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    mh->add_option("--t", t)->required()->check(CLI::PositiveNumber);
    mh->add_option("--n", n, "Evaluate n^(2-1/m) log2 n at this n")->check(CLI::PositiveNumber);

    auto * editdist = app.add_subcommand("editdist", "Arc changes needed to reach DT_r(n)");
    editdist->add_option("--graph", graph_path, "TDG file, or - for stdin")->required();
    editdist->add_option("--r", r)->required()->check(CLI::PositiveNumber);

    std::vector<const char *> argv{"ttlab"};
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    }
    catch (const CLI::ParseError & e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

    try {
        Invocation job;
        if (gen_dtr->parsed()) {
            job = {"gen dtr", Json{{"n", n}, {"r", r}}, [&] { return graph_result(make_dtr(n, r)); }};
        }
        else if (gen_blowup->parsed()) {
            job = {"gen blowup", Json{{"k", k}, {"t", t}}, [&] { return graph_result(blowup(k, t)); }};
        }
        else if (check->parsed()) {
            Digraph g = read_graph(graph_path);
            job = {"check", Json{{"graph", encode(g)}, {"k", k}, {"t", t}},
                   [g, &k, &t] { return check_result(g, BlowupSpec{k, t}); }};
        }
        else if (ex->parsed()) {
            Weight w = Weight::parse(weight_text);
            job = {naive ? "ex naive" : "ex",
                   Json{{"n", n}, {"k", k}, {"t", t}, {"weight", w.to_string()}, {"mode", ex_mode}},
                   [&, w] {
                       ExtremalOptions opts{parse_mode(ex_mode), threads};
                       BlowupSpec spec{k, t};
                       return extremal_result(naive ? extremal_naive(n, spec, w, opts) : extremal(n, spec, w, opts));
                   }};
        }
        else if (count_free_cmd->parsed()) {
            job = {"count free", Json{{"n", n}, {"k", k}, {"t", t}, {"mode", free_mode}}, [&] {
                       return count_result(count_free(n, BlowupSpec{k, t}, parse_mode(free_mode), {threads}), "free");
                   }};
        }
        else if (count_partite_cmd->parsed()) {
            job = {"count partite", Json{{"n", n}, {"r", r}, {"t", t}, {"mode", partite_mode}}, [&] {
                       return count_result(count_partite(n, r, t, parse_mode(partite_mode), {threads}), "partite");
                   }};
        }
        else if (ratio->parsed()) {
            job = {"ratio", Json{{"n", n}, {"r", r}, {"t", t}, {"mode", ratio_mode}},
                   [&] { return ratio_result(ratio_report(n, r, t, parse_mode(ratio_mode), {threads})); }};
        }
        else if (mh->parsed()) {
            Json params{{"k", k}, {"t", t}};
            if (n > 0)
                params["n"] = n;
            job = {"mh", params, [&] { return density_result(container_exponent(n, BlowupSpec{k, t}), n > 0); }};
        }
        else {
            Digraph g = read_graph(graph_path);
            job = {"editdist", Json{{"graph", encode(g)}, {"r", r}},
                   [g, &r] { return edit_distance_result(edit_distance_to_dtr(g, r)); }};
        }

        std::optional<ResultCache> cache;
        if (cache_dir.empty())
            if (const char * env = std::getenv(kCacheDirEnv); env && *env)
                cache_dir = env;
        if (! cache_dir.empty())
            cache.emplace(cache_dir);

        std::string key = Json{{"command", job.command}, {"params", job.params}, {"version", kVersion}}.dump();
        if (cache) {
            if (auto hit = cache->lookup(key)) {
                out << render(Json::parse(hit->value), format);
                return kSuccess;
            }
        }

        auto start = std::chrono::steady_clock::now();
        Json result = job.compute();
        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

        Json record;
        record["command"] = job.command;
        record["params"] = job.params;
        record["result"] = std::move(result);
        record["version"] = kVersion;
        record["runtime_ms"] = elapsed.count();

        if (cache && ! cache->store(CacheEntry{key, record.dump(), utc_timestamp()}))
            err << "warning: cache directory '" << cache->directory().string()
                << "' is not writable; result not cached\n";

        out << render(record, format);
        return kSuccess;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

} // namespace ttlab::cli
