#include "cli.hpp"

#include <cfenv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mbf/mbf.hpp"

namespace mbf::cli {

namespace {

constexpr unsigned sweep_limit = 6;  // full sweeps and counts stay desk-scale here

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string format_bits(const TruthTable& t) { return t.bit_string(); }

std::string format_hex(const TruthTable& t) {
    if (t.dim().value() < 2)
        throw ParseError("hex function text needs at least four table bits (n >= 2)");
    std::string out = "x";
    for (VecIndex p = 0; p < t.size(); p += 4) {
        int digit = 0;
        for (int b = 0; b < 4; ++b) digit = (digit << 1) | int(t.bit(p + b));
        out += "0123456789abcdef"[digit];
    }
    return out;
}

TruthTable parse_function(std::string_view text, Dimension n) {
    if (!text.empty() && text.front() == 'x') {
        if (n.value() < 2)
            throw ParseError("hex function text needs at least four table bits (n >= 2)");
        const VecIndex want = n.cube_size() / 4;
        if (text.size() - 1 != want)
            throw ParseError("hex function text must hold exactly 2^n/4 digits");
        TruthTable t(n);
        for (std::size_t k = 1; k < text.size(); ++k) {
            const int digit = hex_digit(text[k]);
            if (digit < 0) throw ParseError("bad hex digit in function text");
            for (int b = 0; b < 4; ++b)
                t.set_bit((k - 1) * 4 + b, (digit >> (3 - b)) & 1);
        }
        return t;
    }
    if (text.size() != n.cube_size())
        throw ParseError("function text must hold exactly 2^n bits");
    TruthTable t(n);
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] == '1')
            t.set_bit(p, true);
        else if (text[p] != '0')
            throw ParseError("function text may hold only '0' and '1'");
    }
    return t;
}

namespace {

std::string format_index_list(const std::vector<VecIndex>& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(v[k]);
    }
    return out + "]";
}

std::vector<VecIndex> parse_index_list(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("expected a bracketed index list");
    std::vector<VecIndex> out;
    std::string body(text.substr(1, text.size() - 2));
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad index in list: " + item);
        }
        if (used != item.size()) throw ParseError("bad index in list: " + item);
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::string format_ident_record(const IdentRecord& r) {
    return "n=" + std::to_string(r.n) + " minT=" + format_index_list(r.min_true) +
           " maxF=" + format_index_list(r.max_false) + " q=" + std::to_string(r.queries);
}

IdentRecord parse_ident_record(std::string_view line) {
    IdentRecord r;
    std::stringstream ss{std::string(line)};
    std::string field;
    int seen = 0;
    while (ss >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError("bad record field: " + field);
        const std::string key = field.substr(0, eq);
        const std::string val = field.substr(eq + 1);
        if (key == "n") {
            r.n = static_cast<unsigned>(std::stoul(val));
        } else if (key == "minT") {
            r.min_true = parse_index_list(val);
        } else if (key == "maxF") {
            r.max_false = parse_index_list(val);
        } else if (key == "q") {
            r.queries = std::stoull(val);
        } else {
            throw ParseError("unknown record field: " + key);
        }
        ++seen;
    }
    if (seen != 4) throw ParseError("record needs the fields n, minT, maxF, q");
    return r;
}

std::string format_fixed2(double value) {
    const double scaled = std::nearbyint(value * 100.0);
    const long long cents = static_cast<long long>(scaled);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%lld.%02lld", cents / 100, std::llabs(cents % 100));
    return buf;
}

namespace {

struct GenerateOpts {
    unsigned n = 0;
    std::string from;
    std::uint64_t limit = 0;
    std::string format = "bits";
    bool force = false;
};

int cmd_generate(const GenerateOpts& opt, std::ostream& out, std::ostream& err) {
    const Dimension n(opt.n);
    if (opt.n > sweep_limit && !opt.force) {
        err << "generate: n > " << sweep_limit
            << " produces an astronomically long stream; pass --force to insist\n";
        return exit_scale;
    }
    const bool hex = opt.format == "hex";
    if (hex && opt.n < 2) {
        err << "generate: hex output needs n >= 2\n";
        return exit_parse;
    }
    GenConfig cfg{n, std::nullopt, std::nullopt, {}};
    if (!opt.from.empty()) {
        TruthTable t = parse_function(opt.from, n);
        cfg.resume_from = MonotoneTable(std::move(t));
    }
    std::uint64_t emitted = 0;
    cfg.emit = [&](const TruthTable& t) {
        out << (hex ? format_hex(t) : format_bits(t)) << '\n';
        ++emitted;
        return opt.limit == 0 || emitted < opt.limit;
    };
    gen_all(cfg);
    return exit_ok;
}

struct CountOpts {
    unsigned n = 0;
    unsigned threads = 1;
};

int cmd_count(const CountOpts& opt, std::ostream& out, std::ostream& err) {
    if (opt.n > sweep_limit) {
        err << "count: supported for n <= " << sweep_limit
            << "; the larger counts are published as OEIS A000372\n";
        return exit_scale;
    }
    out << "M_" << opt.n << " = " << dedekind_count(Dimension(opt.n), opt.threads)
        << '\n';
    return exit_ok;
}

struct IdentifyOpts {
    unsigned n = 0;
    std::string fun;
    std::string min_true;
};

int cmd_identify(const IdentifyOpts& opt, std::ostream& out, std::ostream& err) {
    const Dimension n(opt.n);
    IdentRecord rec;
    rec.n = opt.n;
    if (!opt.fun.empty()) {
        TruthTable t = parse_function(opt.fun, n);
        TableOracle oracle(MonotoneTable(std::move(t)));
        const IdentResult r = identify(oracle);
        rec.min_true = r.min_true;
        rec.max_false = r.max_false;
        rec.queries = r.queries;
    } else {
        if (opt.n > 32) {
            err << "identify: the minimal-true oracle form supports n <= 32\n";
            return exit_scale;
        }
        std::vector<VecIndex> set;
        std::stringstream ss(opt.min_true);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(item, &used);
            } catch (const std::exception&) {
                throw ParseError("identify: bad index: " + item);
            }
            if (used != item.size()) throw ParseError("identify: bad index: " + item);
            set.push_back(v);
        }
        if (set.empty()) throw ParseError("identify: --minT needs at least one index");
        MinTrueOracle oracle(std::move(set), n);
        const IdentResult r = identify(oracle);
        rec.min_true = r.min_true;
        rec.max_false = r.max_false;
        rec.queries = r.queries;
    }
    out << format_ident_record(rec) << '\n';
    return exit_ok;
}

struct VerifyOpts {
    unsigned n = 0;
    std::string out_dir;
    unsigned threads = 1;
};

void write_whole_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
}

int cmd_verify(const VerifyOpts& opt, std::ostream& out, std::ostream& err) {
    if (opt.n > sweep_limit) {
        err << "verify: supported for n <= " << sweep_limit << '\n';
        return exit_scale;
    }
    const SweepReport rep = verify_sweep(Dimension(opt.n), opt.threads);

    out << "n,total,q_max,q_ave,peak_tpi_max,peak_tpc_max\n";
    out << rep.n << ',' << rep.total << ',' << rep.q_max << ','
        << format_fixed2(rep.q_ave) << ',' << rep.peak_tpi_max << ','
        << rep.peak_tpc_max << '\n';

    if (!opt.out_dir.empty()) {
        const std::filesystem::path dir(opt.out_dir);
        std::filesystem::create_directories(dir);

        std::string q_csv = "q,count\n";
        for (std::size_t q = 0; q < rep.q_histogram.size(); ++q)
            if (rep.q_histogram[q])
                q_csv += std::to_string(q) + ',' + std::to_string(rep.q_histogram[q]) + '\n';
        write_whole_file(dir / "q_histogram.csv", q_csv);

        std::string r_csv = "# ratio histogram of 100*q/(n*m); excluded functions: " +
                            std::to_string(rep.ratio_excluded) +
                            " (no defined ratio: constant zero, and both constants at n=0)\n"
                            "ratio_percent,count\n";
        for (std::size_t bin = 0; bin < rep.ratio_histogram.size(); ++bin)
            if (rep.ratio_histogram[bin])
                r_csv += std::to_string(bin) + ',' +
                         std::to_string(rep.ratio_histogram[bin]) + '\n';
        write_whole_file(dir / "ratio_histogram.csv", r_csv);
    }

    if (rep.bound_violations > 0) {
        err << "verify: " << rep.bound_violations
            << " function(s) exceeded the n*m query budget\n";
        return exit_bound;
    }
    return exit_ok;
}

struct MatrixOpts {
    unsigned n = 0;
    bool transpose = false;
};

int cmd_matrix(const MatrixOpts& opt, std::ostream& out, std::ostream& err) {
    if (opt.n > sweep_limit) {
        err << "matrix: printable up to n = " << sweep_limit << '\n';
        return exit_scale;
    }
    const auto m = PrecedenceMatrix::build(Dimension(opt.n));
    const VecIndex size = Dimension(opt.n).cube_size();
    for (VecIndex i = 0; i < size; ++i) {
        for (VecIndex j = 0; j < size; ++j) {
            if (j) out << ' ';
            out << (opt.transpose ? m.at(j, i) : m.at(i, j));
        }
        out << '\n';
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Monotone Boolean function toolkit: lexicographic generation, counting, "
        "membership-query identification and precedence-matrix inspection"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* g = app.add_subcommand("generate",
                                 "Stream all monotone functions of n variables in "
                                 "lexicographic order");
    g->add_option("--n", gen.n, "number of variables")->required();
    g->add_option("--from", gen.from, "resume strictly after this function");
    g->add_option("--limit", gen.limit, "stop after this many lines");
    g->add_option("--format", gen.format, "bits (default) or hex")
        ->check(CLI::IsMember({"bits", "hex"}));
    g->add_flag("--force", gen.force, "allow n beyond the sweep limit");

    CountOpts cnt;
    auto* c = app.add_subcommand("count", "Count the monotone functions of n variables");
    c->add_option("--n", cnt.n, "number of variables")->required();
    c->add_option("--threads", cnt.threads, "worker threads")->check(CLI::PositiveNumber);

    IdentifyOpts ident;
    auto* i = app.add_subcommand("identify",
                                 "Recover the defining sets of a monotone function by "
                                 "membership queries");
    i->add_option("--n", ident.n, "number of variables")->required();
    auto* fun_opt = i->add_option("--fun", ident.fun, "function text (bits or xHEX)");
    auto* mint_opt =
        i->add_option("--minT", ident.min_true, "comma-separated minimal-true indices");
    fun_opt->excludes(mint_opt);

    VerifyOpts ver;
    auto* v = app.add_subcommand("verify",
                                 "Identify every function of n variables and check "
                                 "exact recovery and the query budget");
    v->add_option("--n", ver.n, "number of variables")->required();
    v->add_option("--out", ver.out_dir, "directory for the histogram CSV files");
    v->add_option("--threads", ver.threads, "worker threads")->check(CLI::PositiveNumber);

    MatrixOpts mat;
    auto* m = app.add_subcommand("matrix", "Print the precedence matrix of the n-cube");
    m->add_option("--n", mat.n, "number of variables")->required();
    m->add_flag("--transpose", mat.transpose, "print the transposed matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (g->parsed()) return cmd_generate(gen, out, err);
        if (c->parsed()) return cmd_count(cnt, out, err);
        if (i->parsed()) {
            if (ident.fun.empty() == ident.min_true.empty()) {
                err << "identify: exactly one of --fun / --minT is required\n";
                return exit_parse;
            }
            return cmd_identify(ident, out, err);
        }
        if (v->parsed()) return cmd_verify(ver, out, err);
        if (m->parsed()) return cmd_matrix(mat, out, err);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return exit_parse;
    } catch (const RecoveryError& e) {
        err << e.what() << '\n';
        return exit_mismatch;
    } catch (const ScaleError& e) {
        err << e.what() << '\n';
        return exit_scale;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_semantic;
    } catch (const std::out_of_range& e) {
        err << e.what() << '\n';
        return exit_semantic;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    return exit_ok;
}

}  // namespace mbf::cli
