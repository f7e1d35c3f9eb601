#include "stacksort/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "stacksort/special_functions.hpp"
#include "stacksort/transforms.hpp"

namespace stacksort::cli {

namespace {

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

Json counts_json(const std::vector<BigInt>& counts) {
    Json a = Json::array();
    for (const auto& c : counts) a.push_back(c.get_str());
    return a;
}

std::string join_counts(const std::vector<BigInt>& counts) {
    std::string s;
    for (const auto& c : counts) {
        if (!s.empty()) s += ' ';
        s += c.get_str();
    }
    return s;
}

Json range_json(const std::vector<unsigned>& ns) {
    Json a = Json::array();
    for (unsigned n : ns) a.push_back(n);
    return a;
}

Json rationals_json(const std::vector<BigRational>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(r.to_string());
    return a;
}

void require_positive(const std::vector<unsigned>& ns, std::string_view what) {
    if (ns.empty()) throw UsageError(std::string(what) + ": empty range");
    for (unsigned n : ns)
        if (n == 0) throw UsageError(std::string(what) + ": n must be positive");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "";
    return j.dump();
}

bool all_scalars(const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& e) { return e.is_primitive(); });
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        if (all_scalars(j)) {
            std::string s;
            for (const auto& e : j) {
                if (!s.empty()) s += ' ';
                s += scalar_text(e);
            }
            out.emplace_back(prefix, s);
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
        }
    } else {
        out.emplace_back(prefix, scalar_text(j));
    }
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::violation: return "violation";
        case Status::usage_error: return "usage_error";
    }
    return "usage_error";
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::violation: return 1;
        case Status::usage_error: return 2;
    }
    return 2;
}

Json poly_json(const RationalPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"coeffs", coeffs}};
}

Json certificate_json(const RootCertificate& c) {
    return Json{{"degree", c.degree},
                {"real_roots", c.real_root_count},
                {"real_rooted", c.is_real_rooted},
                {"squarefree", c.is_squarefree},
                {"negative", c.negative_roots},
                {"zero", c.zero_root_multiplicity},
                {"positive", c.positive_roots}};
}

Json to_json(const RunReport& r) {
    return Json{{"command", r.command},
                {"parameters", r.parameters},
                {"results", r.results},
                {"status", to_string(r.status)}};
}

std::string to_csv(const RunReport& r) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    std::vector<std::string> columns;
    for (const auto& entry : r.results) {
        auto& row = rows.emplace_back();
        flatten(entry, "", row);
        for (const auto& [key, value] : row)
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) os << ',';
            const auto it = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return kv.first == columns[i]; });
            if (it != row.end()) os << csv_escape(it->second);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_text(const RunReport& r) {
    std::string s;
    for (const auto& line : r.text) s += line + '\n';
    s += "status: " + to_string(r.status) + '\n';
    return s;
}

std::string render(const RunReport& r, Format f) {
    switch (f) {
        case Format::json: return to_json(r).dump(2) + '\n';
        case Format::csv: return to_csv(r);
        case Format::text: return to_text(r);
    }
    return to_text(r);
}

std::vector<unsigned> parse_range(std::string_view text) {
    std::vector<unsigned> out;
    auto number = [&](std::string_view s) -> unsigned {
        if (s.empty()) throw UsageError("bad range '" + std::string(text) + "'");
        unsigned long v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw UsageError("bad range '" + std::string(text) + "'");
            v = v * 10 + static_cast<unsigned long>(c - '0');
            if (v > 100000) throw UsageError("range value too large in '" + std::string(text) + "'");
        }
        return static_cast<unsigned>(v);
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto part = text.substr(pos, comma - pos);
        const auto dots = part.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(number(part));
        } else {
            const unsigned lo = number(part.substr(0, dots));
            const unsigned hi = number(part.substr(dots + 2));
            if (lo > hi) throw UsageError("empty range '" + std::string(part) + "'");
            for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<BigRational> parse_rational_list(std::string_view text) {
    std::vector<BigRational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        try {
            out.push_back(BigRational::parse(text.substr(pos, comma - pos)));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        pos = comma + 1;
    }
    return out;
}

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "text") return Format::text;
    throw UsageError("unknown format '" + std::string(text) + "' (json, csv, text)");
}

TableMethod parse_table_method(std::string_view text) {
    if (text == "brute_force" || text == "brute") return TableMethod::brute_force;
    if (text == "closed_form" || text == "closed") return TableMethod::closed_form;
    if (text == "both") return TableMethod::both;
    throw UsageError("unknown method '" + std::string(text) + "' (brute_force, closed_form, both)");
}

RunReport cmd_sort(const Word& word, unsigned times) {
    RunReport r;
    r.command = "sort";
    r.parameters = Json{{"word", word.to_string()}, {"times", times}};
    if (times == 0) throw UsageError("--times must be positive");
    Word w = word;
    for (unsigned i = 1; i <= times; ++i) {
        w = stack_sort(w);
        Json letters = Json::array();
        for (Letter a : w.letters()) letters.push_back(a);
        r.results.push_back(Json{{"step", i}, {"word", letters}});
        r.text.push_back(w.to_string());
    }
    return r;
}

RunReport cmd_table(unsigned n, unsigned t, TableMethod method, const GlobalOptions& opts) {
    RunReport r;
    r.command = "table";
    static const char* names[] = {"brute_force", "closed_form", "both"};
    r.parameters = Json{{"n", n}, {"t", t}, {"method", names[static_cast<int>(method)]}};
    if (n == 0 || t == 0) throw UsageError("--n and --t must be positive");

    std::vector<DescentTable> tables;
    try {
        if (method != TableMethod::closed_form) tables.push_back(table_brute_force(n, t, opts.enumeration()));
        if (method != TableMethod::brute_force) tables.push_back(table_closed_form(n, t, opts.enumeration()));
    } catch (const UnsupportedClosedForm& e) {
        throw UsageError(e.what());
    }
    for (const auto& table : tables) {
        r.results.push_back(Json{{"n", n},
                                 {"t", t},
                                 {"method", to_string(table.method)},
                                 {"counts", counts_json(table.counts)},
                                 {"polynomial", poly_json(to_polynomial(table))}});
        r.text.push_back(to_string(table.method) + ": " + join_counts(table.counts));
    }
    if (tables.size() == 2) {
        const bool match = tables[0].counts == tables[1].counts;
        r.results.push_back(Json{{"match", match}});
        r.text.push_back(std::string("match: ") + (match ? "true" : "false"));
        if (!match) r.fail();
    }
    return r;
}

RunReport cmd_certify(std::string_view target, const std::vector<unsigned>& ns, const GlobalOptions& opts) {
    RunReport r;
    r.command = "certify";
    r.parameters = Json{{"target", std::string(target)}, {"n", range_json(ns)}};
    require_positive(ns, "certify");

    struct Entry {
        Json json;
        std::string line;
        bool ok;
    };
    std::function<Entry(unsigned)> one;
    if (target == "narayana" || target == "w2") {
        const unsigned t = target == "narayana" ? 1 : 2;
        one = [t](unsigned n) {
            const auto p = descent_polynomial(n, t, CountMethod::closed_form);
            const auto cert = certify(p);
            // Narayana polynomials are also asserted simple-rooted.
            const bool ok = cert.is_real_rooted && (t == 2 || cert.is_squarefree);
            return Entry{Json{{"n", n}, {"polynomial", poly_json(p)}, {"certificate", certificate_json(cert)}, {"ok", ok}},
                         "n=" + std::to_string(n) + " degree=" + std::to_string(cert.degree) +
                             " real_roots=" + std::to_string(cert.real_root_count) +
                             " squarefree=" + (cert.is_squarefree ? "yes" : "no") + (ok ? " ok" : " FAIL"),
                         ok};
        };
    } else if (target == "pipeline") {
        one = [](unsigned n) {
            const auto report = theorem2_pipeline(n);
            Json stages = Json::array();
            std::string line = "n=" + std::to_string(n) + ":";
            for (const auto& s : report.stages) {
                Json stage{{"name", s.name}, {"detail", s.detail}, {"passed", s.passed}, {"polynomial", poly_json(s.poly)}};
                if (s.certificate) stage["certificate"] = certificate_json(*s.certificate);
                stages.push_back(std::move(stage));
                line += " " + s.name + (s.passed ? "=ok" : "=FAIL");
            }
            std::string final_coeffs;
            for (const auto& c : report.final_poly.coeffs()) final_coeffs += (final_coeffs.empty() ? "" : " ") + c.to_string();
            line += " final=[" + final_coeffs + "]";
            return Entry{Json{{"n", n}, {"ok", report.ok()}, {"failed_stage", report.failed_stage},
                              {"stages", stages}, {"final", poly_json(report.final_poly)}},
                         line, report.ok()};
        };
    } else if (target == "interlacing-narayana") {
        one = [](unsigned n) {
            const bool ok = strictly_interlaces(descent_polynomial(n, 1, CountMethod::closed_form),
                                                descent_polynomial(n + 1, 1, CountMethod::closed_form));
            return Entry{Json{{"n", n}, {"interlaces", ok}, {"ok", ok}},
                         "W_{" + std::to_string(n) + ",1} vs W_{" + std::to_string(n + 1) +
                             ",1}: " + (ok ? "interlace" : "FAIL"),
                         ok};
        };
    } else {
        throw UsageError("unknown certify target '" + std::string(target) +
                         "' (narayana, w2, pipeline, interlacing-narayana)");
    }

    const auto entries = parallel_map(ns.size(), opts.jobs, [&](std::size_t i) { return one(ns[i]); });
    for (const auto& e : entries) {
        r.results.push_back(e.json);
        r.text.push_back(e.line);
        if (!e.ok) r.fail();
    }
    return r;
}

RunReport cmd_identities(std::string_view which, const std::vector<unsigned>& ns,
                         const std::vector<BigRational>& rs, const std::vector<BigRational>& alphas,
                         const std::vector<BigRational>& betas, const GlobalOptions& opts) {
    RunReport r;
    r.command = "identities";
    r.parameters = Json{{"which", std::string(which)}, {"n", range_json(ns)}};
    if (ns.empty()) throw UsageError("identities: empty range");

    struct Point {
        unsigned n;
        BigRational a;
        BigRational b;
    };
    std::vector<Point> grid;
    std::function<std::pair<Json, std::string>(const Point&, bool&)> check;

    if (which == "lemma2") {
        r.parameters["r"] = rationals_json(rs);
        require_positive(ns, "lemma2");
        for (const auto& x : rs)
            if (x.sign() <= 0) throw UsageError("lemma2 identity needs r > 0");
        for (unsigned n : ns)
            for (const auto& x : rs) grid.push_back({n, x, 0});
        check = [](const Point& p, bool& ok) {
            const auto id = verify_lemma2_identity(p.n, p.a);
            const bool in_unit = count_real_roots_closed(id.sides[0], 0, 1) == static_cast<int>(p.n) &&
                                 certify(id.sides[0]).is_real_rooted;
            ok = id.holds && in_unit;
            Json sides = Json::array();
            for (const auto& s : id.sides) sides.push_back(poly_json(s));
            return std::pair{Json{{"n", p.n}, {"r", p.a.to_string()}, {"holds", id.holds},
                                  {"zeros_in_unit_interval", in_unit}, {"sides", sides}},
                             "n=" + std::to_string(p.n) + " r=" + p.a.to_string() +
                                 (id.holds ? " identity ok" : " identity FAIL") +
                                 (in_unit ? ", zeros in [0,1]" : ", zeros NOT in [0,1]")};
        };
    } else if (which == "post-lemma") {
        require_positive(ns, "post-lemma");
        for (unsigned n : ns) grid.push_back({n, 0, 0});
        check = [](const Point& p, bool& ok) {
            const auto id = verify_post_lemma_identity(p.n);
            ok = id.holds;
            Json sides = Json::array();
            for (const auto& s : id.sides) sides.push_back(poly_json(s));
            return std::pair{Json{{"n", p.n}, {"holds", id.holds}, {"sides", sides}},
                             "n=" + std::to_string(p.n) + (ok ? " ok" : " FAIL")};
        };
    } else if (which == "jacobi-eq2") {
        r.parameters["alpha"] = rationals_json(alphas);
        r.parameters["beta"] = rationals_json(betas);
        for (unsigned n : ns)
            for (const auto& a : alphas) {
                try {
                    JacobiParams{a, 0, n}.validate();
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                for (const auto& b : betas) grid.push_back({n, a, b});
            }
        check = [](const Point& p, bool& ok) {
            ok = verify_eq2_consistency({p.a, p.b, p.n});
            return std::pair{Json{{"n", p.n}, {"alpha", p.a.to_string()}, {"beta", p.b.to_string()}, {"holds", ok}},
                             "n=" + std::to_string(p.n) + " alpha=" + p.a.to_string() + " beta=" +
                                 p.b.to_string() + (ok ? " ok" : " FAIL")};
        };
    } else if (which == "narayana-jacobi") {
        for (unsigned n : ns) grid.push_back({n, 0, 0});
        check = [](const Point& p, bool& ok) {
            ok = verify_narayana_jacobi(p.n);
            return std::pair{Json{{"n", p.n}, {"holds", ok}}, "n=" + std::to_string(p.n) + (ok ? " ok" : " FAIL")};
        };
    } else {
        throw UsageError("unknown identity '" + std::string(which) +
                         "' (lemma2, post-lemma, jacobi-eq2, narayana-jacobi)");
    }

    struct Outcome {
        Json json;
        std::string line;
        bool ok;
    };
    const auto outcomes = parallel_map(grid.size(), opts.jobs, [&](std::size_t i) {
        bool ok = false;
        auto [json, line] = check(grid[i], ok);
        return Outcome{std::move(json), std::move(line), ok};
    });
    for (const auto& o : outcomes) {
        r.results.push_back(o.json);
        r.text.push_back(o.line);
        if (!o.ok) r.fail();
    }
    return r;
}

RunReport cmd_conjecture(unsigned n_max, const GlobalOptions& opts) {
    RunReport r;
    r.command = "conjecture";
    r.parameters = Json{{"n_max", n_max}};
    if (n_max == 0) throw UsageError("--n-max must be positive");
    EnumerationOptions enumeration = opts.enumeration();
    if (!opts.max_n_explicit) enumeration.limit.max_n = std::min(enumeration.limit.max_n, kConjectureDefaultMaxN);
    if (n_max > enumeration.limit.max_n)
        throw UsageError("conjecture scan capped at n = " + std::to_string(enumeration.limit.max_n) +
                         " (raise with --max-n)");

    std::vector<std::string> counterexamples;
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto tables = tables_all_t(n, enumeration);
        for (const auto& table : tables) {
            const auto p = to_polynomial(table);
            const auto cert = certify(p);
            r.results.push_back(Json{{"n", n},
                                     {"t", table.t},
                                     {"counts", counts_json(table.counts)},
                                     {"certificate", certificate_json(cert)},
                                     {"real_rooted", cert.is_real_rooted}});
            r.text.push_back("n=" + std::to_string(n) + " t=" + std::to_string(table.t) + " [" +
                             join_counts(table.counts) + "] " + (cert.is_real_rooted ? "real-rooted" : "NOT REAL-ROOTED"));
            if (!cert.is_real_rooted) {
                counterexamples.push_back("n=" + std::to_string(n) + " t=" + std::to_string(table.t));
                r.fail();
            }
        }
    }
    if (!counterexamples.empty()) {
        r.text.push_back("COUNTEREXAMPLES to real-rootedness:");
        for (const auto& c : counterexamples) r.text.push_back("  " + c);
    }
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"t-stack sortable permutations by descents, with exact real-rootedness certificates",
                 "stacksort"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    std::string format = "text";
    std::optional<std::size_t> max_n;
    app.add_option("--format", format, "Output format: json, csv or text");
    app.add_option("--jobs", opts.jobs, "Worker threads (0 = available parallelism)");
    app.add_option("--max-n", max_n, "Enumeration cap (default 12, or STACKSORT_MAX_N)");

    std::string word;
    unsigned times = 1;
    auto* sort = app.add_subcommand("sort", "Apply the stack-sorting map repeatedly");
    sort->add_option("--word", word, "Letters separated by spaces or commas")->required();
    sort->add_option("--times", times, "Number of passes");

    unsigned n = 0;
    unsigned t = 1;
    std::string method = "brute_force";
    auto* table = app.add_subcommand("table", "Descent table W_t(n,k)");
    table->add_option("--n", n, "Permutation length")->required();
    table->add_option("--t", t, "Number of stack passes");
    table->add_option("--method", method, "brute_force, closed_form or both");

    std::string target;
    std::string n_range;
    auto* cert = app.add_subcommand("certify", "Certify real-rootedness or interlacing");
    cert->add_option("--target", target, "narayana, w2, pipeline, interlacing-narayana")->required();
    cert->add_option("--n", n_range, "n values, e.g. 1..20 or 3,5")->required();

    std::string which;
    std::string r_list = "1/2,1,2,7/3";
    std::string alpha_list = "-1/2,1/3,1";
    std::string beta_list = "-1/3,1,5/2";
    auto* ids = app.add_subcommand("identities", "Check hypergeometric and Jacobi identities");
    ids->add_option("--which", which, "lemma2, post-lemma, jacobi-eq2, narayana-jacobi")->required();
    ids->add_option("--n", n_range, "n values, e.g. 0..15")->required();
    ids->add_option("--r", r_list, "r values for lemma2");
    ids->add_option("--alpha", alpha_list, "alpha values for jacobi-eq2");
    ids->add_option("--beta", beta_list, "beta values for jacobi-eq2");

    unsigned n_max = 0;
    auto* conj = app.add_subcommand("conjecture", "Scan W_{n,t}(x) for real-rootedness, t = 1..n-1");
    conj->add_option("--n-max", n_max, "Largest n")->required();

    RunReport report;
    Format fmt = Format::text;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return exit_code(Status::usage_error);
    }

    try {
        fmt = parse_format(format);
        if (max_n) {
            if (*max_n == 0) throw UsageError("--max-n must be positive");
            opts.limit.max_n = *max_n;
            opts.max_n_explicit = true;
        }
        if (*sort) {
            report.command = "sort";
            Word w;
            try {
                w = Word::parse(word);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            report = cmd_sort(w, times);
        } else if (*table) {
            report.command = "table";
            report = cmd_table(n, t, parse_table_method(method), opts);
        } else if (*cert) {
            report.command = "certify";
            report = cmd_certify(target, parse_range(n_range), opts);
        } else if (*ids) {
            report.command = "identities";
            report = cmd_identities(which, parse_range(n_range), parse_rational_list(r_list),
                                    parse_rational_list(alpha_list), parse_rational_list(beta_list), opts);
        } else if (*conj) {
            report.command = "conjecture";
            report = cmd_conjecture(n_max, opts);
        }
    } catch (const UsageError& e) {
        report.status = Status::usage_error;
        report.results = Json::array({Json{{"error", e.what()}}});
        report.text = {std::string("usage error: ") + e.what()};
        if (fmt != Format::text) err << "usage error: " << e.what() << '\n';
    } catch (const EnumerationLimitError& e) {
        report.status = Status::usage_error;
        report.results = Json::array({Json{{"error", e.what()}}});
        report.text = {std::string("usage error: ") + e.what()};
        if (fmt != Format::text) err << "usage error: " << e.what() << '\n';
    }
    out << render(report, fmt);
    return exit_code(report.status);
}

}  // namespace stacksort::cli
