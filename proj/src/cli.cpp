#include "algcensus/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "algcensus/census.hpp"
#include "algcensus/density.hpp"
#include "algcensus/farey.hpp"
#include "algcensus/gaps.hpp"
#include "algcensus/lattice.hpp"
#include "algcensus/parallel.hpp"
#include "algcensus/report.hpp"

namespace algcensus::cli {
namespace {

using njson = nlohmann::ordered_json;

// user or file input that fails validation; maps to exit code 2
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// workload outside the built-in envelope and --force not given; exit code 3
struct EnvelopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_rat(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string fmt_ll(long long v) { return std::to_string(v); }

// ---- input parsing -------------------------------------------------------------

// exact rational from "p/q", an integer, or a decimal string
Rat parse_rat(const std::string& s) {
    if (s.empty()) throw BadInput("empty number");
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            const Int num(s.substr(0, slash));
            const Int den(s.substr(slash + 1));
            if (den == 0) throw BadInput("zero denominator in '" + s + "'");
            return Rat(num) / Rat(den);
        } catch (const std::exception&) {
            throw BadInput("bad rational '" + s + "'");
        }
    }
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    Int num = 0, den = 1;
    bool any = false, frac = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (frac) throw BadInput("bad number '" + s + "'");
            frac = true;
            continue;
        }
        if (s[i] < '0' || s[i] > '9') throw BadInput("bad number '" + s + "'");
        num = num * 10 + (s[i] - '0');
        if (frac) den *= 10;
        any = true;
    }
    if (!any) throw BadInput("bad number '" + s + "'");
    Rat r = Rat(num) / Rat(den);
    return neg ? -r : r;
}

struct Endpoint {
    int inf = 0;  // -1, 0, +1
    Rat value;

    ExtRational ext() const {
        if (inf < 0) return ExtRational::neg_inf();
        if (inf > 0) return ExtRational::pos_inf();
        return ExtRational::finite(value);
    }
    double as_double() const {
        if (inf != 0) return inf < 0 ? -INFINITY : INFINITY;
        return static_cast<double>(value);
    }
    std::string text() const {
        if (inf != 0) return inf < 0 ? "-inf" : "inf";
        return fmt_rat(value);
    }
};

Endpoint parse_endpoint(const std::string& s) {
    Endpoint e;
    if (s == "inf" || s == "+inf") {
        e.inf = 1;
    } else if (s == "-inf") {
        e.inf = -1;
    } else {
        e.value = parse_rat(s);
    }
    return e;
}

struct Interval {
    Endpoint lo, hi;

    HalfOpenInterval half_open() const { return HalfOpenInterval(lo.ext(), hi.ext()); }
};

Interval parse_interval(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw BadInput("interval must be 'lo,hi'");
    Interval iv{parse_endpoint(s.substr(0, comma)), parse_endpoint(s.substr(comma + 1))};
    try {
        iv.half_open();
    } catch (const std::exception&) {
        throw BadInput("interval endpoints must satisfy lo < hi");
    }
    return iv;
}

std::vector<long long> parse_heights(const std::string& s) {
    std::vector<long long> qs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            const long long q = std::stoll(tok, &pos);
            if (pos != tok.size() || q < 1) throw BadInput("");
            qs.push_back(q);
        } catch (const std::exception&) {
            throw BadInput("bad height list entry '" + tok + "'");
        }
    }
    if (qs.empty()) throw BadInput("height list is empty");
    return qs;
}

struct Grid {
    double lo = 0, hi = 0, step = 0;

    std::vector<double> points() const {
        std::vector<double> ts;
        for (int i = 0;; ++i) {
            const double t = lo + i * step;
            if (t > hi + step * 1e-9) break;
            ts.push_back(t);
            if (ts.size() > 100001) throw BadInput("grid has too many points");
        }
        return ts;
    }
};

Grid parse_grid(const std::string& s) {
    Grid g;
    const auto c1 = s.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        s.find(':', c2 + 1) != std::string::npos)
        throw BadInput("grid must be 't0:t1:step'");
    try {
        size_t p = 0;
        const std::string a = s.substr(0, c1), b = s.substr(c1 + 1, c2 - c1 - 1),
                          c = s.substr(c2 + 1);
        g.lo = std::stod(a, &p);
        if (p != a.size()) throw BadInput("");
        g.hi = std::stod(b, &p);
        if (p != b.size()) throw BadInput("");
        g.step = std::stod(c, &p);
        if (p != c.size()) throw BadInput("");
    } catch (const std::exception&) {
        throw BadInput("grid must be 't0:t1:step' with numeric fields");
    }
    if (!(g.step > 0)) throw BadInput("grid step must be positive");
    if (g.hi < g.lo) throw BadInput("grid end before start");
    return g;
}

// a/b with b >= 1; plain integers read as a/1
std::pair<long long, long long> parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    try {
        size_t p = 0;
        if (slash == std::string::npos) {
            const long long a = std::stoll(s, &p);
            if (p != s.size()) throw BadInput("");
            return {a, 1};
        }
        const std::string as = s.substr(0, slash), bs = s.substr(slash + 1);
        const long long a = std::stoll(as, &p);
        if (p != as.size()) throw BadInput("");
        const long long b = std::stoll(bs, &p);
        if (p != bs.size()) throw BadInput("");
        return {a, b};
    } catch (const std::exception&) {
        throw BadInput("bad rational '" + s + "' (want a/b)");
    }
}

// ---- envelope ------------------------------------------------------------------

long long census_height_cap(int n) {
    switch (n) {
        case 1: return 2000;
        case 2: return 100;
        case 3: return 30;
        case 4: return 12;
        default: return 6;
    }
}

void check_census_envelope(int n, long long Q, bool force) {
    const long long cap = census_height_cap(n);
    if (Q > cap && !force)
        throw EnvelopeError("height " + std::to_string(Q) + " exceeds the degree-" +
                            std::to_string(n) + " envelope (max " + std::to_string(cap) +
                            "); pass --force to run anyway");
}

long long lattice_height_cap(int dim) {
    switch (dim) {
        case 2: return 2000;
        case 3: return 200;
        case 4: return 50;
        case 5: return 20;
        default: return 10;
    }
}

// ---- output --------------------------------------------------------------------

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::string out;
        for (size_t i = 0; i < header.size(); ++i) {
            if (i) out += ',';
            out += header[i];
        }
        out += '\n';
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += row[i];
            }
            out += '\n';
        }
        return out;
    }
};

njson envelope_json(const std::string& command, njson params, njson results) {
    njson e;
    e["schema"] = "algcensus/1";
    e["command"] = command;
    e["params"] = std::move(params);
    e["results"] = std::move(results);
    return e;
}

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "cannot open output file '" << path << "'\n";
        return 2;
    }
    f << payload;
    return 0;
}

// ---- shared flags ----------------------------------------------------------------

struct Common {
    unsigned long long seed = 0;
    std::string threads = "auto";
    std::string output;
    std::string format = "csv";
    bool force = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "random seed recorded with the run");
    sub->add_option("--threads", c.threads,
                    "worker count, or 'auto' (ALGCENSUS_THREADS overrides)");
    sub->add_option("--output", c.output, "write to this file instead of stdout");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--force", c.force, "run even outside the built-in size envelope");
}

void apply_threads(const Common& c) {
    if (std::getenv("ALGCENSUS_THREADS") != nullptr) return;  // env wins
    if (c.threads == "auto") return;
    try {
        size_t pos = 0;
        const int t = std::stoi(c.threads, &pos);
        if (pos != c.threads.size() || t < 1) throw BadInput("");
        set_thread_count(t);
    } catch (const std::exception&) {
        throw BadInput("--threads wants a positive integer or 'auto'");
    }
}

constexpr long long kBudget = 1 << 14;

long long shard_plan(int n, long long Q) { return n == 1 ? Q : Q * (2 * Q + 1); }

// ---- subcommand payloads ---------------------------------------------------------

struct CensusArgs {
    Common common;
    int degree = 0;
    long long height = 0;
    std::string interval = "-inf,inf";
    int bins = 1;
    bool by_k = false;
    bool reducible = false;
};

int run_census(const CensusArgs& a) {
    check_census_envelope(a.degree, a.height, a.common.force);
    const Interval iv = parse_interval(a.interval);
    njson params;
    params["degree"] = a.degree;
    params["height"] = a.height;
    params["interval"] = njson::array({iv.lo.text(), iv.hi.text()});
    params["seed"] = a.common.seed;

    Table t;
    njson results;

    if (a.reducible) {
        if (a.degree < 2) throw BadInput("--count-reducible needs degree >= 2");
        const auto cs = census(a.degree, a.height);
        const long long red = count_reducible(a.degree, a.height);
        t.header = {"degree", "height", "prime_polys", "reducible_count", "algebraic_numbers"};
        t.rows.push_back({fmt_ll(a.degree), fmt_ll(a.height), fmt_ll(cs->prime_poly_count()),
                          fmt_ll(red), fmt_ll(cs->root_count())});
        results["degree"] = a.degree;
        results["height"] = a.height;
        results["prime_polys"] = cs->prime_poly_count();
        results["reducible_count"] = red;
        results["algebraic_numbers"] = cs->root_count();
        results["partitions"] = shard_plan(a.degree, a.height);
    } else if (a.by_k) {
        const auto cs = census(a.degree, a.height);
        const auto hist = cs->roots_per_poly(iv.half_open());
        long long phi = cs->count_in(iv.half_open());
        t.header = {"k", "polys"};
        njson by_k;
        for (int k = 1; k <= a.degree; ++k) {
            const auto it = hist.find(k);
            const long long c = it == hist.end() ? 0 : it->second;
            t.rows.push_back({fmt_ll(k), fmt_ll(c)});
            by_k[std::to_string(k)] = c;
        }
        results["phi"] = phi;
        results["by_k"] = std::move(by_k);
        results["partitions"] = shard_plan(a.degree, a.height);
    } else {
        if (a.bins < 1) throw BadInput("--bins wants a positive count");
        if (a.bins > 1 && (iv.lo.inf != 0 || iv.hi.inf != 0))
            throw BadInput("binning needs finite endpoints");
        if (a.bins > 100000) throw BadInput("too many bins");
        const auto cs = census(a.degree, a.height);
        const auto hoi = iv.half_open();
        const long long phi = cs->count_in(hoi);
        std::vector<long long> counts;
        std::vector<Endpoint> edges;
        if (a.bins == 1) {
            counts.push_back(phi);
            edges = {iv.lo, iv.hi};
        } else {
            counts = cs->bin_counts(hoi, a.bins);
            const Rat lo = iv.lo.value, w = (iv.hi.value - iv.lo.value);
            for (int i = 0; i <= a.bins; ++i)
                edges.push_back(Endpoint{0, lo + w * i / a.bins});
        }
        const double qn = std::pow(static_cast<double>(a.height), a.degree);
        t.header = {"bin_lo", "bin_hi", "count", "main_term", "residual", "residual_over_Qn"};
        njson bins = njson::array();
        njson per_bin = njson::array();
        for (size_t i = 0; i < counts.size(); ++i) {
            const double main = main_term(a.degree, a.height, edges[i].as_double(),
                                          edges[i + 1].as_double(), kBudget);
            const double res = static_cast<double>(counts[i]) - main;
            t.rows.push_back({edges[i].text(), edges[i + 1].text(), fmt_ll(counts[i]),
                              fmt_double(main), fmt_double(res), fmt_double(res / qn)});
            njson row;
            row["bin_lo"] = edges[i].text();
            row["bin_hi"] = edges[i + 1].text();
            row["count"] = counts[i];
            row["main_term"] = main;
            row["residual"] = res;
            row["residual_over_Qn"] = res / qn;
            bins.push_back(std::move(row));
            per_bin.push_back(counts[i]);
        }
        const auto hist = cs->roots_per_poly(hoi);
        njson by_k;
        for (int k = 1; k <= a.degree; ++k) {
            const auto it = hist.find(k);
            by_k[std::to_string(k)] = it == hist.end() ? 0 : it->second;
        }
        results["phi"] = phi;
        results["by_k"] = std::move(by_k);
        results["per_bin"] = std::move(per_bin);
        results["bins"] = std::move(bins);
        if (iv.lo.inf < 0 && iv.hi.inf > 0) results["total_A_n"] = cs->root_count();
        results["partitions"] = shard_plan(a.degree, a.height);
        params["bins"] = a.bins;
    }

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("census", std::move(params), std::move(results)).dump(2) + "\n"
            : t.csv();
    return write_output(a.common.output, payload);
}

struct DensityArgs {
    Common common;
    int degree = 0;
    std::string grid;
    long long budget = kBudget;
    bool sphere = false;
};

int run_density(const DensityArgs& a) {
    if (a.budget < 64) throw BadInput("--budget must be at least 64");
    if (a.budget > (1LL << 20) && !a.common.force)
        throw EnvelopeError("budget beyond 2^20 is outside the envelope; pass --force");
    const Grid g = parse_grid(a.grid);
    const auto ts = g.points();

    njson params;
    params["degree"] = a.degree;
    params["grid"] = a.grid;
    params["budget"] = a.budget;
    params["sphere"] = a.sphere;
    params["seed"] = a.common.seed;

    DensityGrid dg;
    dg.n = a.degree;
    for (double t : ts)
        dg.points.emplace_back(t, a.sphere ? phi_sphere_est(a.degree, t)
                                           : phi_auto(a.degree, t, a.budget));

    Table tab;
    tab.header = a.sphere
                     ? std::vector<std::string>{"t", "value", "abs_error", "method"}
                     : std::vector<std::string>{"t", "value", "abs_error", "method",
                                                "closed_form"};
    njson pts = njson::array();
    const double radius = a.degree >= 2 ? closed_form_radius(a.degree) : 1e300;
    for (const auto& [t, est] : dg.points) {
        std::vector<std::string> row{fmt_double(t), fmt_double(est.value),
                                     fmt_double(est.abs_error), to_string(est.method)};
        njson jrow;
        jrow["t"] = t;
        jrow["value"] = est.value;
        jrow["abs_error"] = est.abs_error;
        jrow["method"] = to_string(est.method);
        if (!a.sphere) {
            std::string cf;
            if (a.degree == 1) {
                cf = fmt_double(phi1(t));
                jrow["closed_form"] = phi1(t);
            } else if (std::fabs(t) <= radius) {
                cf = fmt_double(phi_closed(a.degree, t));
                jrow["closed_form"] = phi_closed(a.degree, t);
            } else {
                jrow["closed_form"] = nullptr;
            }
            row.push_back(cf);
        }
        tab.rows.push_back(std::move(row));
        pts.push_back(std::move(jrow));
    }
    njson results;
    results["points"] = std::move(pts);

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("density", std::move(params), std::move(results)).dump(2) + "\n"
            : tab.csv();
    return write_output(a.common.output, payload);
}

struct CompareArgs {
    Common common;
    int degree = 0;
    long long height = 0;
    int bins = 40;
};

int run_compare(const CompareArgs& a) {
    if (a.height < 2) throw BadInput("--height must be at least 2");
    if (a.bins < 1 || a.bins > 100000) throw BadInput("--bins out of range");
    check_census_envelope(a.degree, a.height, a.common.force);

    const Rat lo(-2), hi(2);
    const HalfOpenInterval hoi(ExtRational::finite(lo), ExtRational::finite(hi));
    const auto cs = census(a.degree, a.height);
    const auto counts = cs->bin_counts(hoi, a.bins);
    const int l = remainder_log_exponent(a.degree);
    const double scale = std::pow(static_cast<double>(a.height), a.degree) *
                         std::pow(std::log(static_cast<double>(a.height)), l);

    njson params;
    params["degree"] = a.degree;
    params["height"] = a.height;
    params["bins"] = a.bins;
    params["range"] = njson::array({fmt_rat(lo), fmt_rat(hi)});
    params["seed"] = a.common.seed;

    Table t;
    t.header = {"bin_lo", "bin_hi", "count", "main_term", "residual", "residual_norm"};
    njson bins = njson::array();
    long long total = 0;
    double total_main = 0, max_norm = 0;
    for (int i = 0; i < a.bins; ++i) {
        const Rat blo = lo + (hi - lo) * i / a.bins;
        const Rat bhi = lo + (hi - lo) * (i + 1) / a.bins;
        const double main = main_term(a.degree, a.height, static_cast<double>(blo),
                                      static_cast<double>(bhi), kBudget);
        const double res = static_cast<double>(counts[i]) - main;
        const double norm = res / scale;
        total += counts[i];
        total_main += main;
        max_norm = std::max(max_norm, std::fabs(norm));
        t.rows.push_back({fmt_rat(blo), fmt_rat(bhi), fmt_ll(counts[i]), fmt_double(main),
                          fmt_double(res), fmt_double(norm)});
        njson row;
        row["bin_lo"] = fmt_rat(blo);
        row["bin_hi"] = fmt_rat(bhi);
        row["count"] = counts[i];
        row["main_term"] = main;
        row["residual"] = res;
        row["residual_norm"] = norm;
        bins.push_back(std::move(row));
    }
    t.rows.push_back({fmt_rat(lo), fmt_rat(hi), fmt_ll(total), fmt_double(total_main),
                      fmt_double(static_cast<double>(total) - total_main),
                      fmt_double(max_norm)});
    njson results;
    results["bins"] = std::move(bins);
    njson summary;
    summary["total_count"] = total;
    summary["total_main_term"] = total_main;
    summary["max_residual_norm"] = max_norm;
    results["summary"] = std::move(summary);

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("compare", std::move(params), std::move(results)).dump(2) + "\n"
            : t.csv();
    return write_output(a.common.output, payload);
}

struct FareyArgs {
    Common common;
    long long height = 0;
    bool discrepancy = false;
    bool extremal = false;
};

int run_farey(const FareyArgs& a) {
    if (a.height < 1) throw BadInput("--height must be positive");
    const bool summary = a.discrepancy || a.extremal;
    if (!a.common.force) {
        if (!summary && a.height > 1000)
            throw EnvelopeError("full listing beyond height 1000 needs --force");
        if ((a.discrepancy || a.extremal) && a.height > 1000)
            throw EnvelopeError("discrepancy/extremal beyond height 1000 needs --force");
        if (a.height > 100000) throw EnvelopeError("height beyond 100000 needs --force");
    }
    if (a.extremal && a.height < 2)
        throw BadInput("--extremal needs height >= 2");

    njson params;
    params["height"] = a.height;
    params["seed"] = a.common.seed;

    Table t;
    njson results;
    results["count"] = farey_count(a.height);
    if (summary) {
        t.header = {"height", "count"};
        std::vector<std::string> row{fmt_ll(a.height), fmt_ll(farey_count(a.height))};
        if (a.discrepancy) {
            const Rat d = discrepancy(a.height);
            t.header.push_back("discrepancy");
            row.push_back(fmt_rat(d));
            results["discrepancy"] = fmt_rat(d);
        }
        if (a.extremal) {
            const double r = extremal_gap_ratio(a.height);
            t.header.push_back("extremal_ratio");
            row.push_back(fmt_double(r));
            results["extremal_ratio"] = r;
        }
        t.rows.push_back(std::move(row));
    } else {
        t.header = {"num", "den"};
        njson fracs = njson::array();
        for (const auto& f : farey_sequence(a.height)) {
            t.rows.push_back({fmt_ll(f.num), fmt_ll(f.den)});
            fracs.push_back(njson::array({f.num, f.den}));
        }
        results["fractions"] = std::move(fracs);
    }

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("farey", std::move(params), std::move(results)).dump(2) + "\n"
            : t.csv();
    return write_output(a.common.output, payload);
}

struct LatticeArgs {
    Common common;
    std::string region_path;
    long long height = 0;
    long long samples = 65536;
};

Region load_region(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw BadInput("cannot open region file '" + path + "'");
    njson j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw BadInput("region file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("inequalities"))
        throw BadInput("region file needs {dim, inequalities}");
    int dim = 0;
    try {
        dim = j["dim"].get<int>();
    } catch (const std::exception&) {
        throw BadInput("region dim must be an integer");
    }
    std::vector<Inequality> ineqs;
    if (!j["inequalities"].is_array()) throw BadInput("inequalities must be an array");
    for (const auto& jineq : j["inequalities"]) {
        if (!jineq.is_object() || !jineq.contains("coeffs") || !jineq["coeffs"].is_array())
            throw BadInput("each inequality is an object with a coeffs array");
        Inequality ineq;
        for (const auto& jterm : jineq["coeffs"]) {
            if (!jterm.is_array() || jterm.size() != 2 || !jterm[1].is_array())
                throw BadInput("each term is [coefficient, [exponents...]]");
            Rat c;
            if (jterm[0].is_number_integer()) {
                c = Rat(jterm[0].get<long long>());
            } else if (jterm[0].is_string()) {
                c = parse_rat(jterm[0].get<std::string>());
            } else {
                throw BadInput("coefficients must be integers or 'p/q' strings");
            }
            std::vector<int> exps;
            for (const auto& je : jterm[1]) {
                if (!je.is_number_integer()) throw BadInput("exponents must be integers");
                exps.push_back(je.get<int>());
            }
            ineq.emplace_back(std::move(c), std::move(exps));
        }
        ineqs.push_back(std::move(ineq));
    }
    try {
        return Region(dim, std::move(ineqs));
    } catch (const std::exception& e) {
        throw BadInput("invalid region: " + std::string(e.what()));
    }
}

int run_lattice(const LatticeArgs& a) {
    if (a.height < 1) throw BadInput("--height must be positive");
    if (a.samples < 1000) throw BadInput("--samples must be at least 1000");
    const Region region = load_region(a.region_path);
    if (region.dim() < 2) throw BadInput("lattice reports need dimension >= 2");
    if (a.height > lattice_height_cap(region.dim()) && !a.common.force)
        throw EnvelopeError("height " + std::to_string(a.height) +
                            " exceeds the dimension-" + std::to_string(region.dim()) +
                            " envelope (max " +
                            std::to_string(lattice_height_cap(region.dim())) +
                            "); pass --force to run anyway");

    const LatticeCountReport rep = lattice_report(region, a.height, a.samples);

    njson params;
    params["region"] = a.region_path;
    params["height"] = a.height;
    params["samples"] = a.samples;
    params["seed"] = a.common.seed;

    Table t;
    t.header = {"height", "dim", "total_points", "primitive_points", "main_term",
                "measure_estimate"};
    t.rows.push_back({fmt_ll(rep.q), fmt_ll(region.dim()), fmt_ll(rep.total_points),
                      fmt_ll(rep.primitive_points), fmt_double(rep.main_term),
                      fmt_double(rep.measure_estimate)});
    njson results;
    results["height"] = rep.q;
    results["dim"] = region.dim();
    results["total_points"] = rep.total_points;
    results["primitive_points"] = rep.primitive_points;
    results["main_term"] = rep.main_term;
    results["measure_estimate"] = rep.measure_estimate;

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("lattice", std::move(params), std::move(results)).dump(2) + "\n"
            : t.csv();
    return write_output(a.common.output, payload);
}

struct GapsArgs {
    Common common;
    int degree = 0;
    std::string rational;
    std::string heights;
};

int run_gaps(const GapsArgs& a) {
    const auto [num, den] = parse_fraction(a.rational);
    const auto qs = parse_heights(a.heights);
    for (long long q : qs) check_census_envelope(a.degree, q, a.common.force);

    njson params;
    params["degree"] = a.degree;
    params["rational"] = a.rational;
    params["heights"] = qs;
    params["seed"] = a.common.seed;

    Table t;
    t.header = {"height", "distance", "distance_float", "implied_constant"};
    njson probes = njson::array();
    for (long long q : qs) {
        GapProbe g;
        try {
            g = nearest_algebraic(a.degree, q, num, den);
        } catch (const std::invalid_argument& e) {
            throw BadInput(e.what());
        }
        t.rows.push_back({fmt_ll(q), fmt_rat(g.nearest_distance),
                          fmt_double(static_cast<double>(g.nearest_distance)),
                          fmt_double(g.implied_constant)});
        njson row;
        row["height"] = q;
        row["distance"] = fmt_rat(g.nearest_distance);
        row["distance_float"] = static_cast<double>(g.nearest_distance);
        row["implied_constant"] = g.implied_constant;
        probes.push_back(std::move(row));
    }
    njson results;
    results["probes"] = std::move(probes);

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("gaps", std::move(params), std::move(results)).dump(2) + "\n"
            : t.csv();
    return write_output(a.common.output, payload);
}

struct SequenceArgs {
    Common common;
    int degree = 0;
    long long count = 0;
    std::string interval;
    long long budget = kBudget;
};

int run_sequence(const SequenceArgs& a) {
    if (a.count < 1) throw BadInput("--count must be positive");
    if (a.count > 20000 && !a.common.force)
        throw EnvelopeError("count beyond 20000 is outside the envelope; pass --force");
    if (a.budget < 64) throw BadInput("--budget must be at least 64");
    const Interval iv = parse_interval(a.interval);

    const auto seq = algebraic_sequence(a.degree, a.count);
    const long long hits = sequence_count_in(seq, iv.half_open());
    const double ratio = static_cast<double>(hits) / static_cast<double>(a.count);
    const double rho_int = dist_F(a.degree, iv.hi.as_double(), a.budget) -
                           dist_F(a.degree, iv.lo.as_double(), a.budget);

    njson params;
    params["degree"] = a.degree;
    params["count"] = a.count;
    params["interval"] = njson::array({iv.lo.text(), iv.hi.text()});
    params["budget"] = a.budget;
    params["seed"] = a.common.seed;

    Table t;
    t.header = {"degree", "count", "lo", "hi", "hits", "ratio", "rho_integral", "deviation"};
    t.rows.push_back({fmt_ll(a.degree), fmt_ll(a.count), iv.lo.text(), iv.hi.text(),
                      fmt_ll(hits), fmt_double(ratio), fmt_double(rho_int),
                      fmt_double(ratio - rho_int)});
    njson results;
    results["hits"] = hits;
    results["ratio"] = ratio;
    results["rho_integral"] = rho_int;
    results["deviation"] = ratio - rho_int;
    results["max_height"] = seq.empty() ? 0 : seq.back().height;

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("sequence", std::move(params), std::move(results)).dump(2) + "\n"
            : t.csv();
    return write_output(a.common.output, payload);
}

struct ReportArgs {
    Common common;
    std::string input;
    std::string parameter = "x";
    int degree = 0;
    std::string heights;
    std::string interval;
    long long budget = kBudget;
};

int run_report(const ReportArgs& a) {
    const bool file_mode = !a.input.empty();
    const bool sweep_mode = a.degree != 0 || !a.heights.empty() || !a.interval.empty();
    if (file_mode == sweep_mode)
        throw BadInput("pick one: --input file, or --degree/--heights/--interval sweep");

    SweepSummary s;
    njson params;
    params["seed"] = a.common.seed;
    if (file_mode) {
        std::ifstream f(a.input);
        if (!f) throw BadInput("cannot open input file '" + a.input + "'");
        std::vector<std::pair<double, double>> pts;
        std::string line;
        bool first = true;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            std::stringstream ls(line);
            std::string xa, ya;
            if (!std::getline(ls, xa, ',') || !std::getline(ls, ya, ',')) {
                if (first) {
                    first = false;
                    continue;
                }
                throw BadInput("input rows need at least two comma-separated columns");
            }
            try {
                size_t p1 = 0, p2 = 0;
                const double x = std::stod(xa, &p1);
                const double y = std::stod(ya, &p2);
                if (p1 != xa.size() || p2 != ya.size()) throw BadInput("");
                pts.emplace_back(x, y);
            } catch (const std::exception&) {
                if (!first) throw BadInput("non-numeric data row '" + line + "'");
            }
            first = false;
        }
        try {
            s = fit_loglog(pts, a.parameter);
        } catch (const std::invalid_argument& e) {
            throw BadInput(e.what());
        }
        params["input"] = a.input;
        params["parameter"] = a.parameter;
    } else {
        if (a.degree == 0 || a.heights.empty() || a.interval.empty())
            throw BadInput("sweep mode needs --degree, --heights and --interval");
        if (a.budget < 64) throw BadInput("--budget must be at least 64");
        const auto qs = parse_heights(a.heights);
        const Interval iv = parse_interval(a.interval);
        if (iv.lo.inf != 0 || iv.hi.inf != 0)
            throw BadInput("remainder sweeps need finite endpoints");
        for (long long q : qs) check_census_envelope(a.degree, q, a.common.force);
        try {
            s = remainder_band(a.degree, qs, iv.lo.value, iv.hi.value, a.budget);
        } catch (const std::invalid_argument& e) {
            throw BadInput(e.what());
        }
        params["degree"] = a.degree;
        params["heights"] = qs;
        params["interval"] = njson::array({iv.lo.text(), iv.hi.text()});
        params["budget"] = a.budget;
    }

    Table t;
    t.header = {"parameter", "fitted_slope", "ci_lo", "ci_hi", "band_lo", "band_hi",
                "points"};
    t.rows.push_back({s.parameter, fmt_double(s.fitted_slope), fmt_double(s.slope_ci.first),
                      fmt_double(s.slope_ci.second), fmt_double(s.band.first),
                      fmt_double(s.band.second), fmt_ll(static_cast<long long>(s.points.size()))});
    njson results;
    results["parameter"] = s.parameter;
    results["fitted_slope"] = s.fitted_slope;
    results["slope_ci"] = njson::array({s.slope_ci.first, s.slope_ci.second});
    results["band"] = njson::array({s.band.first, s.band.second});
    njson pts = njson::array();
    for (const auto& [x, y] : s.points) pts.push_back(njson::array({x, y}));
    results["points"] = std::move(pts);

    const std::string payload =
        a.common.format == "json"
            ? envelope_json("report", std::move(params), std::move(results)).dump(2) + "\n"
            : t.csv();
    return write_output(a.common.output, payload);
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"census and density toolkit for real algebraic numbers of fixed degree"};
    app.require_subcommand(1);

    CensusArgs census_args;
    auto* c = app.add_subcommand("census", "exact counts of algebraic numbers in an interval");
    c->add_option("--degree", census_args.degree, "algebraic degree")
        ->required()
        ->check(CLI::Range(1, 5));
    c->add_option("--height", census_args.height, "height bound")
        ->required()
        ->check(CLI::PositiveNumber);
    c->add_option("--interval", census_args.interval,
                  "half-open interval 'lo,hi'; endpoints may be inf or -inf");
    auto* bins_opt = c->add_option("--bins", census_args.bins, "split the interval");
    auto* byk_opt = c->add_flag("--by-k", census_args.by_k,
                                "histogram of polynomials by root count in the interval");
    auto* red_opt = c->add_flag("--count-reducible", census_args.reducible,
                                "summary with the reducible coefficient-vector count");
    byk_opt->excludes(bins_opt);
    red_opt->excludes(bins_opt);
    red_opt->excludes(byk_opt);
    add_common(c, census_args.common);

    DensityArgs density_args;
    auto* d = app.add_subcommand("density", "density values on a grid");
    d->add_option("--degree", density_args.degree, "algebraic degree")
        ->required()
        ->check(CLI::Range(1, 5));
    d->add_option("--grid", density_args.grid, "evaluation grid 't0:t1:step'")->required();
    d->add_option("--budget", density_args.budget, "quadrature node budget");
    d->add_flag("--sphere", density_args.sphere, "Euclidean-norm density instead");
    add_common(d, density_args.common);

    CompareArgs compare_args;
    auto* m = app.add_subcommand("compare",
                                 "binned census counts vs the density main term on (-2,2]");
    m->add_option("--degree", compare_args.degree, "algebraic degree")
        ->required()
        ->check(CLI::Range(1, 5));
    m->add_option("--height", compare_args.height, "height bound")->required();
    m->add_option("--bins", compare_args.bins, "bin count");
    add_common(m, compare_args.common);

    FareyArgs farey_args;
    auto* f = app.add_subcommand("farey", "reduced fractions in (0,1] with bounded denominator");
    f->add_option("--height", farey_args.height, "denominator bound")->required();
    f->add_flag("--discrepancy", farey_args.discrepancy, "exact star discrepancy");
    f->add_flag("--extremal", farey_args.extremal, "largest interval deviation scaled by Q");
    add_common(f, farey_args.common);

    LatticeArgs lattice_args;
    auto* l = app.add_subcommand("lattice", "integer points of a scaled region");
    l->add_option("--region", lattice_args.region_path, "region description JSON file")
        ->required();
    l->add_option("--height", lattice_args.height, "scaling bound")->required();
    l->add_option("--samples", lattice_args.samples, "measure estimate sample count");
    add_common(l, lattice_args.common);

    GapsArgs gaps_args;
    auto* g = app.add_subcommand("gaps", "certified nearest-member distances from a rational");
    g->add_option("--degree", gaps_args.degree, "algebraic degree")
        ->required()
        ->check(CLI::Range(1, 5));
    g->add_option("--rational", gaps_args.rational, "probe point a/b in lowest terms")
        ->required();
    g->add_option("--heights", gaps_args.heights, "comma-separated height bounds")->required();
    add_common(g, gaps_args.common);

    SequenceArgs sequence_args;
    auto* s = app.add_subcommand("sequence", "ordered members vs the limit distribution");
    s->add_option("--degree", sequence_args.degree, "algebraic degree")
        ->required()
        ->check(CLI::Range(1, 5));
    s->add_option("--count", sequence_args.count, "number of leading members")->required();
    s->add_option("--interval", sequence_args.interval, "half-open interval 'lo,hi'")
        ->required();
    s->add_option("--budget", sequence_args.budget, "quadrature node budget");
    add_common(s, sequence_args.common);

    ReportArgs report_args;
    auto* r = app.add_subcommand("report", "least-squares scaling summary of a sweep");
    r->add_option("--input", report_args.input, "CSV file of (x,y) rows to fit");
    r->add_option("--parameter", report_args.parameter, "abscissa name for the fit");
    r->add_option("--degree", report_args.degree, "sweep the census remainder at this degree")
        ->check(CLI::Range(1, 5));
    r->add_option("--heights", report_args.heights, "comma-separated height bounds");
    r->add_option("--interval", report_args.interval, "half-open interval 'lo,hi'");
    r->add_option("--budget", report_args.budget, "quadrature node budget");
    add_common(r, report_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c->parsed()) {
            apply_threads(census_args.common);
            return run_census(census_args);
        }
        if (d->parsed()) {
            apply_threads(density_args.common);
            return run_density(density_args);
        }
        if (m->parsed()) {
            apply_threads(compare_args.common);
            return run_compare(compare_args);
        }
        if (f->parsed()) {
            apply_threads(farey_args.common);
            return run_farey(farey_args);
        }
        if (l->parsed()) {
            apply_threads(lattice_args.common);
            return run_lattice(lattice_args);
        }
        if (g->parsed()) {
            apply_threads(gaps_args.common);
            return run_gaps(gaps_args);
        }
        if (s->parsed()) {
            apply_threads(sequence_args.common);
            return run_sequence(sequence_args);
        }
        if (r->parsed()) {
            apply_threads(report_args.common);
            return run_report(report_args);
        }
    } catch (const BadInput& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const EnvelopeError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace algcensus::cli
