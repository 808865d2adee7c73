#include "insep/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "insep/count_cache.hpp"
#include "insep/criteria.hpp"
#include "insep/errors.hpp"
#include "insep/render.hpp"
#include "insep/text_format.hpp"

namespace insep {

namespace {

std::string join(std::span<const int> values, char sep) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k != 0) out += sep;
        out += std::to_string(values[k]);
    }
    return out;
}

std::string describe(const EnumerationRecord& r) {
    return format_theta(r.theta) + " g=" + std::to_string(r.g) + " type=" + join(r.type.lengths, ',');
}

std::string describe(const FailedStage& f) {
    switch (f.stage) {
        case Stage::TestB: return "testB pair (" + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
        case Stage::TestC: return "testC quadrant " + std::to_string(f.i);
        case Stage::PartialDiagonal:
            return "partial diagonal " + std::to_string(f.j) + " in quadrant " + std::to_string(f.i);
        default: return to_string(f.stage);
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + path);
    out << content;
}

std::unique_ptr<CountCache> open_cache(const std::optional<std::string>& flag) {
    if (auto dir = CountCache::resolve_dir(flag)) return std::make_unique<CountCache>(*dir);
    return nullptr;
}

std::array<int, 4> parse_type(const std::string& text) {
    std::array<int, 4> out{};
    std::stringstream in(text);
    std::string item;
    std::size_t k = 0;
    while (std::getline(in, item, ',')) {
        if (k == 4) throw ValidationError("type needs exactly four lengths");
        try {
            out[k++] = std::stoi(item);
        } catch (const std::exception&) {
            throw ValidationError("bad type entry '" + item + "'");
        }
    }
    if (k != 4) throw ValidationError("type needs exactly four lengths");
    return out;
}

struct Options {
    int max_n = 0;
    int n = 0;
    int jobs = 1;
    std::string format = "table";
    std::string emit = "theta";
    std::string theta;
    std::string points;
    std::string out_file;
    std::string out_dir = ".";
    std::string render_format;
    std::string type;
    std::optional<std::string> cache;
    bool witness = false;
};

int run_count(const Options& o, std::ostream& out) {
    const auto format = parse_count_format(o.format);
    if (!format) throw ValidationError("unknown format '" + o.format + "'");
    const auto cache = open_cache(o.cache);
    std::vector<CountRow> rows;
    for (int n = 1; n <= o.max_n; ++n) {
        const auto records = enumerate_cached(n, o.jobs, cache.get());
        rows.push_back(summarize(n, records));
    }
    out << emit_counts(rows, *format);
    return kExitOk;
}

int run_enumerate(const Options& o, std::ostream& out) {
    const auto cache = open_cache(o.cache);
    const auto records = enumerate_cached(o.n, o.jobs, cache.get());
    std::size_t k = 0;
    for (const auto& r : records) {
        ++k;
        if (o.emit == "theta") {
            out << describe(r) << '\n';
        } else if (o.emit == "ascii") {
            out << describe(r) << '\n' << render(r.theta, RenderFormat::Ascii) << '\n';
        } else if (o.emit == "svg") {
            const std::string file = o.out_dir + "/n" + std::to_string(o.n) + "_" + std::to_string(k) + ".svg";
            write_file(file, render(r.theta, RenderFormat::Svg));
            out << file << ' ' << describe(r) << '\n';
        } else {
            throw ValidationError("unknown emit mode '" + o.emit + "'");
        }
    }
    return kExitOk;
}

int run_check(const Options& o, std::ostream& out) {
    const Theta theta = parse_theta(o.theta);
    const Metrics m = metrics(theta);
    const CriteriaReport report = evaluate_criteria(theta);
    auto pass = [](bool ok) { return ok ? "pass" : "fail"; };

    out << "theta " << format_theta(theta) << '\n'
        << "n " << m.n << '\n'
        << "sums " << join(m.sums, ',') << '\n'
        << "type " << join(m.lengths, ',') << " variation " << m.variation << '\n'
        << "g " << stabilizer_order(theta) << '\n'
        << "test0 " << pass(report.test0) << '\n'
        << "testA " << pass(report.testA) << '\n'
        << "testB " << pass(report.testB) << '\n'
        << "testC " << pass(report.testC) << '\n';
    if (report.first_failure) {
        out << "criterion separable (" << describe(*report.first_failure) << ")\n";
    } else {
        out << "criterion inseparable\n";
    }

    const auto witness = find_friendly_path(realize(theta));
    if (witness) {
        out << "oracle separable " << format_path(*witness) << '\n';
    } else {
        out << "oracle inseparable\n";
    }
    // Without a proper quartering theta is not the representation of its
    // own realisation, so only then is the comparison meaningful.
    if (report.testA && report.inseparable() == witness.has_value()) {
        out << "INCONSISTENT: criterion and oracle disagree\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_oracle(const Options& o, std::ostream& out) {
    const PointSet set = read_points_file(o.points);
    if (set.empty()) {
        out << "separable\n" << format_path(*find_friendly_path(set)) << '\n';
        return kExitOk;
    }
    const Verdict v = classify_point_set(set);
    if (v.inseparable) {
        out << "inseparable\n";
    } else {
        out << "separable\n" << format_path(*v.witness) << '\n';
    }
    if (v.theta) out << "theta " << format_theta(*v.theta) << '\n';
    if (v.failed_stage) out << "stage " << describe(*v.failed_stage) << '\n';
    return kExitOk;
}

int run_render(const Options& o, std::ostream& out) {
    if (o.theta.empty() == o.points.empty()) throw ValidationError("give exactly one of --theta and --points");
    const PointSet set = o.theta.empty() ? read_points_file(o.points) : realize(parse_theta(o.theta));

    RenderFormat format = RenderFormat::Ascii;
    if (o.render_format == "svg" || (o.render_format.empty() && o.out_file.ends_with(".svg"))) {
        format = RenderFormat::Svg;
    } else if (!o.render_format.empty() && o.render_format != "ascii") {
        throw ValidationError("unknown render format '" + o.render_format + "'");
    }
    RenderOptions opt;
    if (o.witness) opt.path = find_friendly_path(set);
    const std::string doc = render(set, format, opt);
    if (o.out_file.empty() || o.out_file == "-") {
        out << doc;
    } else {
        write_file(o.out_file, doc);
    }
    return kExitOk;
}

int run_family(const Options& o, std::ostream& out) {
    const auto records = search_by_type(o.n, parse_type(o.type), o.jobs);
    for (const auto& r : records) out << describe(r) << '\n';
    out << "count " << records.size() << '\n';
    return kExitOk;
}

// Criterion-based counts next to oracle-only counts over every representation.
int run_census(const Options& o, std::ostream& out) {
    int status = kExitOk;
    out << "n c chat oracle_c oracle_chat\n";
    for (int n = 1; n <= o.max_n; ++n) {
        const auto crit = enumerate_inseparable(n, EnumerationOptions{o.jobs, std::nullopt});
        const auto orc = enumerate_by_oracle(n, o.jobs);
        const CountRow a = summarize(n, crit), b = summarize(n, orc);
        out << n << ' ' << a.c << ' ' << a.chat << ' ' << b.c << ' ' << b.chat << '\n';
        std::set<Theta, ThetaLess> in_crit, in_orc;
        for (const auto& r : crit) in_crit.insert(r.theta);
        for (const auto& r : orc) in_orc.insert(r.theta);
        for (const auto& r : orc) {
            if (!in_crit.contains(r.theta)) out << "  oracle only: " << describe(r) << '\n';
        }
        for (const auto& r : crit) {
            if (!in_orc.contains(r.theta)) out << "  criterion only: " << describe(r) << '\n';
        }
        if (a != b || in_crit != in_orc) status = kExitInconsistent;
    }
    return status;
}

int run_tseq(const Options& o, std::ostream& out, std::ostream& err) {
    const auto rec = t_sequence(o.max_n);
    const auto gen = t_genfun(o.max_n);
    int status = kExitOk;
    for (int n = 1; n <= o.max_n; ++n) {
        const auto k = static_cast<std::size_t>(n - 1);
        if (rec[k] != gen[k] || rec[k] != t_direct(n)) {
            err << "t(" << n << ") disagrees between recurrence, generating function and direct count\n";
            status = kExitInconsistent;
        }
        out << n << ' ' << rec[k] << '\n';
    }
    return status;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Friendly paths and inseparable lattice point sets"};
    app.require_subcommand(1);
    Options o;
    const int default_jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    o.jobs = default_jobs;

    auto* count = app.add_subcommand("count", "c(n) and chat(n) for n = 1..max-n");
    count->add_option("--max-n", o.max_n)->required()->check(CLI::Range(1, 200));
    count->add_option("--format", o.format, "table, csv, bfile-c or bfile-chat");
    count->add_option("--jobs", o.jobs)->check(CLI::Range(1, 1024));
    count->add_option("--cache", o.cache, "cache directory (INSEP_CACHE_DIR overrides)");

    auto* enumerate = app.add_subcommand("enumerate", "list inseparable sets of size n up to symmetry");
    enumerate->add_option("--n", o.n)->required()->check(CLI::Range(1, 200));
    enumerate->add_option("--emit", o.emit, "theta, svg or ascii");
    enumerate->add_option("--out-dir", o.out_dir, "directory for --emit svg");
    enumerate->add_option("--jobs", o.jobs)->check(CLI::Range(1, 1024));
    enumerate->add_option("--cache", o.cache);

    auto* check = app.add_subcommand("check", "run the criterion and the path oracle on a representation");
    check->add_option("--theta", o.theta)->required();

    auto* oracle = app.add_subcommand("oracle", "decide a point set given as a JSON file of [x,y] pairs");
    oracle->add_option("--points", o.points)->required();

    auto* rend = app.add_subcommand("render", "draw a representation or point set");
    rend->add_option("--theta", o.theta);
    rend->add_option("--points", o.points);
    rend->add_option("--out", o.out_file, "output file, '-' for stdout");
    rend->add_option("--format", o.render_format, "svg or ascii (default from --out extension)");
    rend->add_flag("--witness", o.witness, "overlay a friendly path if one exists");

    auto* family = app.add_subcommand("family", "inseparable sets of size n with a given type multiset");
    family->add_option("--type", o.type, "four comma-separated lengths")->required();
    family->add_option("--n", o.n)->required()->check(CLI::Range(1, 200));
    family->add_option("--jobs", o.jobs)->check(CLI::Range(1, 1024));

    auto* tseq = app.add_subcommand("tseq", "compositions into four parts up to symmetry");
    tseq->add_option("--max-n", o.max_n)->required()->check(CLI::Range(1, 2000));

    auto* census = app.add_subcommand("census", "compare criterion counts with an oracle-only search (slow)");
    census->add_option("--max-n", o.max_n)->required()->check(CLI::Range(1, 40));
    census->add_option("--jobs", o.jobs)->check(CLI::Range(1, 1024));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(o, out);
        if (enumerate->parsed()) return run_enumerate(o, out);
        if (check->parsed()) return run_check(o, out);
        if (oracle->parsed()) return run_oracle(o, out);
        if (rend->parsed()) return run_render(o, out);
        if (family->parsed()) return run_family(o, out);
        if (tseq->parsed()) return run_tseq(o, out, err);
        if (census->parsed()) return run_census(o, out);
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace insep
