#include "holeforge/color_pipeline.hpp"
#include "holeforge/dimacs.hpp"
#include "holeforge/generate.hpp"
#include "holeforge/json_report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace hf = holeforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;       // audit claims failed / no result
constexpr int kExitUsage = 2;      // bad arguments or malformed input
constexpr int kExitOutOfClass = 3; // membership required but absent
constexpr int kExitViolation = 4;  // theorem counterexample candidate

uint64_t seed_fallback()
{
    if (const char* env = std::getenv("HOLEFORGE_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

json stamped(json j)
{
    j["schema"] = 1;
    return j;
}

void print_json(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

// ordered fan-out over a file corpus; worker results land by index
template <typename Result, typename Fn>
std::vector<Result> parallel_map(const std::vector<std::string>& inputs,
    int jobs, Fn&& fn)
{
    std::vector<Result> results(inputs.size());
    if (jobs <= 1 || inputs.size() <= 1) {
        for (size_t i = 0; i < inputs.size(); ++i)
            results[i] = fn(inputs[i]);
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next++; i < inputs.size(); i = next++)
            results[i] = fn(inputs[i]);
    };
    int count = std::min<int>(jobs, int(inputs.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < count; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    return results;
}

int default_jobs()
{
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

std::optional<hf::HoleEmbedding> nth_hole(
    const hf::Graph& g, int length, int index)
{
    hf::Pattern p = length == 7 ? hf::Pattern::C7 : hf::Pattern::C5;
    auto e = hf::find_induced(g, p, index);
    if (!e)
        return std::nullopt;
    return hf::HoleEmbedding::from_embedding(*e);
}

struct FileOutcome {
    int exit_code = kExitOk;
    json body;
};

int worst_exit(const std::vector<FileOutcome>& outcomes)
{
    int code = kExitOk;
    for (const auto& o : outcomes) {
        // out-of-class dominates plain failures
        if (o.exit_code == kExitOutOfClass)
            return kExitOutOfClass;
        code = std::max(code, o.exit_code);
    }
    return code;
}

int cmd_classify(const std::string& path)
{
    hf::Graph g = hf::read_dimacs_file(path);
    json j = hf::to_json(hf::class_report(g));
    j["file"] = path;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    print_json(stamped(j));
    return kExitOk;
}

FileOutcome run_audit(const std::string& path, int hole_length, int index)
{
    FileOutcome out;
    hf::Graph g = hf::read_dimacs_file(path);
    out.body["file"] = path;
    auto hole = nth_hole(g, hole_length, index);
    if (!hole) {
        out.body["error"]
            = "graph has no induced C" + std::to_string(hole_length);
        out.exit_code = kExitOutOfClass;
        return out;
    }
    try {
        hf::AuditReport report;
        if (hole_length == 7) {
            auto part = hf::build_c7_partition(g, *hole);
            report = hf::audit_c7(g, part);
            out.body["partition"] = hf::to_json(part);
        } else {
            auto part = hf::build_c5_partition(g, *hole);
            report = hf::audit_c5(g, part);
            out.body["partition"] = hf::to_json(part);
        }
        out.body["audit"] = hf::to_json(report);
        if (!report.all_pass())
            out.exit_code = kExitFail;
    } catch (const hf::UnclassifiableVertex& e) {
        out.body["error"] = e.what();
        out.body["vertex"] = e.vertex + 1;
        out.body["witness"] = hf::to_json(e.witness);
        out.exit_code = kExitOutOfClass;
    }
    return out;
}

int cmd_partition(const std::string& path, int hole_length, int index)
{
    hf::Graph g = hf::read_dimacs_file(path);
    auto hole = nth_hole(g, hole_length, index);
    json j;
    j["file"] = path;
    if (!hole) {
        j["error"] = "graph has no induced C" + std::to_string(hole_length);
        print_json(stamped(j));
        return kExitOutOfClass;
    }
    try {
        if (hole_length == 7)
            j["partition"] = hf::to_json(hf::build_c7_partition(g, *hole));
        else
            j["partition"] = hf::to_json(hf::build_c5_partition(g, *hole));
    } catch (const hf::UnclassifiableVertex& e) {
        j["error"] = e.what();
        j["vertex"] = e.vertex + 1;
        j["witness"] = hf::to_json(e.witness);
        print_json(stamped(j));
        return kExitOutOfClass;
    }
    print_json(stamped(j));
    return kExitOk;
}

int cmd_cwd_build(const std::string& path)
{
    hf::Graph g = hf::read_dimacs_file(path);
    hf::ClassReport rep = hf::class_report(g);
    json j;
    j["file"] = path;
    if (!rep.member || !rep.c7_present) {
        j["error"] = rep.member ? "graph contains no C7"
                                : "graph is not (4K1,C4,C6)-free";
        if (!rep.member) {
            const hf::PatternHit& hit = rep.four_k1.present ? rep.four_k1
                : rep.c4.present                            ? rep.c4
                                                            : rep.c6;
            j["witness"] = hf::to_json(*hit.witness);
        }
        print_json(stamped(j));
        return kExitOutOfClass;
    }
    auto hole = hf::HoleEmbedding::from_embedding(*rep.c7.witness);
    hf::NearUniformPartition nu = hf::c7_uniform_sets(g, hole);
    hf::CwdExpression expr = hf::build_from_near_uniform(g, nu);
    bool round_trip = hf::evaluate(expr).matches_induced(g, g.full_set());
    j["k"] = int(nu.sets.size());
    j["width"] = hf::width(expr);
    j["round_trip"] = round_trip;
    j["expression"] = expr.to_text();
    print_json(stamped(j));
    return round_trip ? kExitOk : kExitFail;
}

int cmd_decompose(const std::string& path)
{
    hf::Graph g = hf::read_dimacs_file(path);
    hf::DecompTree t = hf::decompose(g);
    json j = hf::to_json(g, t);
    j["file"] = path;
    print_json(stamped(j));
    return kExitOk;
}

FileOutcome run_color(const std::string& path, const std::string& mode)
{
    FileOutcome out;
    hf::Graph g = hf::read_dimacs_file(path);
    out.body["file"] = path;
    auto solution_lines = [&](const hf::Coloring& c) {
        json sol = json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            sol.push_back("s " + std::to_string(v + 1) + " "
                + std::to_string(c.color[v] + 1));
        return sol;
    };
    if (mode == "exact") {
        auto [k, coloring] = hf::exact_chromatic(g);
        out.body["colors"] = k;
        out.body["mode"] = "exact";
        out.body["solution"] = solution_lines(coloring);
        return out;
    }
    hf::ClassReport rep = hf::class_report(g);
    if (!rep.member) {
        const hf::PatternHit& hit = rep.four_k1.present ? rep.four_k1
            : rep.c4.present                            ? rep.c4
                                                        : rep.c6;
        out.body["error"] = "graph is not (4K1,C4,C6)-free";
        out.body["witness"] = hf::to_json(*hit.witness);
        out.exit_code = kExitOutOfClass;
        return out;
    }
    try {
        auto [coloring, trace] = hf::color_in_class(g);
        out.body["colors"] = coloring.count;
        out.body["mode"] = "pipeline";
        out.body["solution"] = solution_lines(coloring);
        out.body["trace"] = hf::to_json(trace);
    } catch (const hf::StructureViolation& e) {
        out.body["error"] = "structure violation";
        out.body["detail"] = e.detail;
        out.body["witness_graph"] = hf::write_dimacs(e.atom);
        out.body["atom_vertex_map"] = hf::vertices_json(e.original_ids);
        out.exit_code = kExitViolation;
    }
    return out;
}

int cmd_generate(int n, uint64_t seed, const std::string& require, int count,
    const std::string& out_dir)
{
    std::optional<hf::Pattern> req;
    if (require == "c5")
        req = hf::Pattern::C5;
    else if (require == "c7")
        req = hf::Pattern::C7;
    std::filesystem::create_directories(out_dir);
    int written = 0;
    for (int i = 0; i < count; ++i) {
        uint64_t draw_seed = seed + uint64_t(i);
        auto g = hf::random_in_class(n, draw_seed, req);
        if (!g) {
            std::cout << "c no in-class graph for n=" << n
                      << " seed=" << draw_seed
                      << " within the attempt budget\n";
            continue;
        }
        std::string name = "g_n" + std::to_string(n) + "_s"
            + std::to_string(draw_seed)
            + (require.empty() ? "" : "_" + require) + ".col";
        std::filesystem::path out = std::filesystem::path(out_dir) / name;
        hf::write_dimacs_file(*g, out.string());
        std::cout << out.string() << '\n';
        ++written;
    }
    return written == count ? kExitOk : kExitFail;
}

int cmd_enumerate(int n, bool dedup, const std::string& out_dir)
{
    long count = 0;
    std::optional<std::filesystem::path> dir;
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        dir = out_dir;
    }
    hf::enumerate_small(
        n,
        [&](const hf::Graph& g) {
            if (dir) {
                std::string name = "enum_n" + std::to_string(n) + "_"
                    + std::to_string(count) + ".col";
                hf::write_dimacs_file(g, (*dir / name).string());
            }
            ++count;
        },
        dedup);
    json j = {{"n", n}, {"dedup", dedup}, {"count", count}};
    print_json(stamped(j));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"holeforge: structure engine for (4K1,C4,C6)-free graphs"};
    app.require_subcommand(1);

    std::string file, hole = "c7", mode = "pipeline", require, out_dir;
    std::string trace_path;
    std::vector<std::string> files;
    int n = 0, index = 0, count = 1, jobs = default_jobs();
    bool dedup = false;
    uint64_t seed = seed_fallback();

    auto* classify = app.add_subcommand("classify", "class membership report");
    classify->add_option("file", file)->required();

    auto* partition
        = app.add_subcommand("partition", "hole neighborhood partition");
    partition->add_option("file", file)->required();
    partition->add_option("--hole", hole)->check(CLI::IsMember({"c5", "c7"}));
    partition->add_option("--index", index)->check(CLI::NonNegativeNumber);

    auto* audit = app.add_subcommand("audit", "check the structure claims");
    audit->add_option("files", files)->required();
    audit->add_option("--hole", hole)->check(CLI::IsMember({"c5", "c7"}));
    audit->add_option("--index", index)->check(CLI::NonNegativeNumber);
    audit->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* cwd = app.add_subcommand(
        "cwd-build", "clique-width expression from the C7 partition");
    cwd->add_option("file", file)->required();

    auto* decom = app.add_subcommand("decompose", "clique cutset tree");
    decom->add_option("file", file)->required();

    auto* color = app.add_subcommand("color", "vertex coloring");
    color->add_option("files", files)->required();
    color->add_option("--mode", mode)
        ->check(CLI::IsMember({"pipeline", "exact"}));
    color->add_option("--trace", trace_path);
    color->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("generate", "seeded in-class graphs");
    gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed);
    gen->add_option("--require", require)->check(CLI::IsMember({"c5", "c7"}));
    gen->add_option("--count", count)->check(CLI::PositiveNumber);
    gen->add_option("--out", out_dir)->default_val("corpus");

    auto* enumerate
        = app.add_subcommand("enumerate", "all small in-class graphs");
    enumerate->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--dedup", dedup);
    enumerate->add_option("--out", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed())
            return cmd_classify(file);
        if (partition->parsed())
            return cmd_partition(file, hole == "c7" ? 7 : 5, index);
        if (audit->parsed()) {
            auto outcomes = parallel_map<FileOutcome>(
                files, jobs, [&](const std::string& f) {
                    return run_audit(f, hole == "c7" ? 7 : 5, index);
                });
            json reports = json::array();
            for (const auto& o : outcomes)
                reports.push_back(o.body);
            print_json(stamped(json{{"reports", reports}}));
            return worst_exit(outcomes);
        }
        if (cwd->parsed())
            return cmd_cwd_build(file);
        if (decom->parsed())
            return cmd_decompose(file);
        if (color->parsed()) {
            auto outcomes = parallel_map<FileOutcome>(files, jobs,
                [&](const std::string& f) { return run_color(f, mode); });
            json traces = json::array();
            for (size_t i = 0; i < outcomes.size(); ++i) {
                const auto& o = outcomes[i];
                if (outcomes.size() > 1)
                    std::cout << "c file " << files[i] << '\n';
                if (o.body.contains("solution")) {
                    for (const auto& line : o.body["solution"])
                        std::cout << line.get<std::string>() << '\n';
                } else {
                    std::cerr << o.body.dump(2) << '\n';
                }
                traces.push_back(o.body);
            }
            if (!trace_path.empty()) {
                std::ofstream out(trace_path);
                out << stamped(json{{"reports", traces}}).dump(2) << '\n';
            }
            return worst_exit(outcomes);
        }
        if (gen->parsed())
            return cmd_generate(n, seed, require, count, out_dir);
        if (enumerate->parsed())
            return cmd_enumerate(n, dedup, out_dir);
    } catch (const hf::DimacsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
