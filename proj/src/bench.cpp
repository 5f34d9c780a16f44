#include "trustres/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>

#include "trustres/bulk.hpp"
#include "trustres/detail/csv.hpp"
#include "trustres/generators.hpp"
#include "trustres/oracle.hpp"
#include "trustres/resolution.hpp"

namespace trustres {

std::string to_string(BenchSuite s) {
    switch (s) {
        case BenchSuite::Ra: return "ra";
        case BenchSuite::Oracle: return "oracle";
        case BenchSuite::Bulk: return "bulk";
    }
    return "?";
}

BenchSuite bench_suite_from_string(const std::string& s) {
    if (s == "ra") return BenchSuite::Ra;
    if (s == "oracle") return BenchSuite::Oracle;
    if (s == "bulk") return BenchSuite::Bulk;
    throw Error("unknown bench suite '" + s + "'");
}

double BenchRecord::size() const {
    if (n_objects > 0) return static_cast<double>(n_objects);
    return static_cast<double>(n_users + n_mappings);
}

namespace {

TrustNetwork generate_network(const BenchSpec& spec) {
    if (spec.family == "cycles") {
        return gen_cycle_clusters(spec.size_param, spec.seed, spec.value_pool);
    }
    if (spec.family == "scalefree") {
        return gen_scale_free(spec.size_param, spec.edges_per_node, spec.seed);
    }
    if (spec.family == "nested") {
        return gen_nested_cycles(spec.size_param, spec.seed);
    }
    throw Error("unknown workload family '" + spec.family + "'");
}

}  // namespace

std::vector<BenchRecord> run_benchmark(BenchSuite suite, const std::vector<BenchSpec>& specs,
                                       unsigned trials) {
    if (specs.empty()) throw Error("benchmark needs at least one spec");
    if (trials < 1) throw Error("trials must be >= 1");

    std::vector<BenchRecord> records;
    // Keeps measured work observable.
    volatile std::size_t sink = 0;

    for (const auto& spec : specs) {
        BenchRecord rec;
        rec.suite = to_string(suite);
        rec.family = spec.family;
        rec.trials = trials;

        std::function<void()> work;
        TrustNetwork net;
        PossTable beliefs;
        if (suite == BenchSuite::Bulk) {
            net = bulk_topology();
            beliefs = gen_bulk_workload(spec.size_param, spec.conflict_fraction, spec.seed);
            rec.n_objects = spec.size_param;
            rec.conflict_fraction = spec.conflict_fraction;
            work = [&]() {
                PossTable out = bulk_resolve(net, beliefs);
                sink = sink + out.rows.size();
            };
        } else if (suite == BenchSuite::Ra) {
            net = generate_network(spec);
            work = [&]() {
                ResolutionResult r = resolve(net, "k");
                sink = sink + r.possible.size();
            };
        } else {
            net = generate_network(spec);
            OracleOptions opts;
            opts.max_choice_atoms = spec.max_choice_atoms;
            work = [&, opts]() {
                OracleOutcome o = oracle_resolve(net, "k", opts);
                sink = sink + static_cast<std::size_t>(o.model_count);
            };
        }
        rec.n_users = net.users().size();
        rec.n_mappings = net.mappings().size();

        work();  // warm-up, discarded
        double sum = 0.0, lo = 0.0, hi = 0.0;
        for (unsigned t = 0; t < trials; ++t) {
            auto t0 = std::chrono::steady_clock::now();
            work();
            auto t1 = std::chrono::steady_clock::now();
            double s = std::chrono::duration<double>(t1 - t0).count();
            sum += s;
            lo = (t == 0) ? s : std::min(lo, s);
            hi = (t == 0) ? s : std::max(hi, s);
        }
        rec.elapsed_mean_s = sum / trials;
        rec.elapsed_min_s = lo;
        rec.elapsed_max_s = hi;
        records.push_back(rec);
    }
    (void)sink;
    return records;
}

ScalingFit fit_scaling_exponent(const std::vector<BenchRecord>& records) {
    if (records.size() < 4) {
        throw InsufficientData("scaling fit needs >= 4 records, got " +
                               std::to_string(records.size()));
    }
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (!(records[i].size() > records[i - 1].size())) {
            throw InsufficientData("scaling fit needs strictly increasing sizes");
        }
    }
    double n = static_cast<double>(records.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& r : records) {
        double x = std::log(r.size());
        double y = std::log(r.elapsed_mean_s);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    double cov = sxy - sx * sy / n;
    double varx = sxx - sx * sx / n;
    double vary = syy - sy * sy / n;
    ScalingFit fit;
    fit.exponent = cov / varx;
    fit.r_squared = vary > 0 ? (cov * cov) / (varx * vary) : 1.0;
    return fit;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
    std::string out =
        "suite,family,n_users,n_mappings,n_objects,conflict_fraction,trials,"
        "elapsed_mean_s,elapsed_min_s,elapsed_max_s\n";
    for (const auto& r : records) {
        out += detail::csv_line({r.suite, r.family, std::to_string(r.n_users),
                                 std::to_string(r.n_mappings), std::to_string(r.n_objects),
                                 fmt_double(r.conflict_fraction), std::to_string(r.trials),
                                 fmt_double(r.elapsed_mean_s), fmt_double(r.elapsed_min_s),
                                 fmt_double(r.elapsed_max_s)});
    }
    return out;
}

std::vector<BenchRecord> bench_from_csv(const std::string& text) {
    auto records = detail::csv_parse(text);
    if (records.empty() || records[0].size() != 10 || records[0][0] != "suite") {
        throw ParseError("bad bench CSV header");
    }
    std::vector<BenchRecord> out;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& f = records[i];
        if (f.size() != 10) throw ParseError("bench CSV row with wrong arity");
        BenchRecord r;
        r.suite = f[0];
        r.family = f[1];
        try {
            r.n_users = std::stoull(f[2]);
            r.n_mappings = std::stoull(f[3]);
            r.n_objects = std::stoull(f[4]);
            r.conflict_fraction = std::stod(f[5]);
            r.trials = static_cast<unsigned>(std::stoul(f[6]));
            r.elapsed_mean_s = std::stod(f[7]);
            r.elapsed_min_s = std::stod(f[8]);
            r.elapsed_max_s = std::stod(f[9]);
        } catch (const std::exception&) {
            throw ParseError("bad numeric field in bench CSV row " + std::to_string(i));
        }
        out.push_back(r);
    }
    return out;
}

void emit_csv(const std::vector<BenchRecord>& records, const std::string& path) {
    if (records.empty()) throw Error("no records to emit");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << bench_to_csv(records);
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string bench_to_svg(const std::vector<BenchRecord>& records) {
    const double width = 800, height = 600;
    const double ml = 70, mr = 30, mt = 30, mb = 50;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& r : records) {
        double x = std::log10(r.size());
        double y = std::log10(std::max(r.elapsed_mean_s, 1e-12));
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

    const std::map<std::string, std::string> colors = {
        {"ra", "#1f77b4"}, {"oracle", "#d62728"}, {"bulk", "#2ca02c"}};

    std::string svg =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n"
        "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  ml, height - mb, width - mr, height - mb);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
                  ml, mt, ml, height - mb);
    svg += buf;
    svg += "<text x=\"400\" y=\"590\" text-anchor=\"middle\" font-size=\"14\">"
           "size (log10)</text>\n";
    svg += "<text x=\"15\" y=\"300\" text-anchor=\"middle\" font-size=\"14\" "
           "transform=\"rotate(-90 15 300)\">elapsed s (log10)</text>\n";

    std::map<std::string, std::vector<const BenchRecord*>> by_suite;
    for (const auto& r : records) by_suite[r.suite].push_back(&r);
    double legend_y = mt + 10;
    for (const auto& [suite, rs] : by_suite) {
        auto cit = colors.find(suite);
        std::string color = cit == colors.end() ? "#555555" : cit->second;
        std::string points;
        for (const auto* r : rs) {
            std::snprintf(buf, sizeof(buf), "%.1f,%.1f ", px(std::log10(r->size())),
                          py(std::log10(std::max(r->elapsed_mean_s, 1e-12))));
            points += buf;
        }
        svg += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\" points=\"" +
               points + "\"/>\n";
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\" fill=\"%s\">%s</text>\n",
                      width - mr - 80, legend_y, color.c_str(), suite.c_str());
        svg += buf;
        legend_y += 18;
    }
    svg += "</svg>\n";
    return svg;
}

void emit_svg(const std::vector<BenchRecord>& records, const std::string& path) {
    if (records.empty()) throw Error("no records to emit");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << bench_to_svg(records);
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace trustres
