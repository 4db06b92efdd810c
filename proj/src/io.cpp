#include "mbd/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mbd::io {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string params_header(const ChainParams& params, long n) {
    std::ostringstream os;
    os << "# n=" << n << " a=" << format_double(params.a()) << " b=" << format_double(params.b())
       << " nu_F=" << format_double(params.nu_F()) << " nu_A=" << format_double(params.nu_A());
    return os.str();
}

json params_to_json(const ChainParams& params, long n) {
    return json{{"n", n}, {"a", params.a()}, {"b", params.b()}, {"nu_F", params.nu_F()}};
}

json pmf_to_json(const Pmf& f) {
    json j = params_to_json(f.params, f.n);
    j["kind"] = std::string(to_string(f.kind));
    j["values"] = f.values;
    return j;
}

void write_pmf_csv(std::ostream& os, const Pmf& f, std::string_view method) {
    os << params_header(f.params, f.n) << " kind=" << to_string(f.kind) << " method=" << method << '\n';
    os << "j,value\n";
    for (long j = 0; j <= f.n; ++j) os << j << ',' << format_double(f[j]) << '\n';
}

std::vector<double> read_pmf_csv(std::istream& is) {
    std::vector<double> out;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != "j,value") throw std::runtime_error("read_pmf_csv: missing 'j,value' header");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("read_pmf_csv: malformed row '" + line + "'");
        const long j = std::stol(line.substr(0, comma));
        if (j != static_cast<long>(out.size())) throw std::runtime_error("read_pmf_csv: rows out of order");
        out.push_back(std::stod(line.substr(comma + 1)));
    }
    return out;
}

namespace {

// NaN marks an undefined conditional moment and serializes as null.
json number_or_null(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

}  // namespace

json moments_to_json(const MomentReport& r) {
    return json{{"n", r.n},
                {"mean", r.mean},
                {"variance", r.variance},
                {"cond_mean_F", number_or_null(r.cond_mean_F)},
                {"cond_mean_A", number_or_null(r.cond_mean_A)},
                {"cond_var_F", number_or_null(r.cond_var_F)},
                {"cond_var_A", number_or_null(r.cond_var_A)}};
}

json shape_to_json(const ShapeClass& s) {
    return json{{"class", std::string(to_string(s.kind))},
                {"unimodal", is_unimodal(s.kind)},
                {"boundary_values", s.boundary_values},
                {"margin", s.margin},
                {"modes", s.modes.indices}};
}

void write_region_csv(std::ostream& os, const RegionGrid& g) {
    os << "# region n=" << g.n << " grid=" << g.grid << " nu="
       << (g.nu.is_stationary() ? std::string("stationary") : format_double(*g.nu.nu_F)) << '\n';
    os << "a,b,class\n";
    for (const auto& cell : g.cells) {
        os << format_double(cell.a) << ',' << format_double(cell.b) << ',' << to_string(cell.shape.kind) << '\n';
    }
}

json region_to_json(const RegionGrid& g) {
    json centers = json::array();
    for (int i = 0; i < g.grid; ++i) centers.push_back((i + 0.5) / g.grid);
    json classes = json::array();
    for (int i = 0; i < g.grid; ++i) {
        json row = json::array();
        for (int j = 0; j < g.grid; ++j) row.push_back(std::string(to_string(g.at(i, j).shape.kind)));
        classes.push_back(std::move(row));
    }
    return json{{"n", g.n},
                {"grid", g.grid},
                {"nu", g.nu.is_stationary() ? json("stationary") : json(*g.nu.nu_F)},
                {"a", centers},
                {"b", centers},
                {"classes", std::move(classes)}};
}

json sample_to_json(const SampleSummary& s, const ChainParams& params) {
    json j = params_to_json(params, s.n);
    j["reps"] = s.reps;
    j["seed"] = s.seed;
    j["generator"] = s.generator;
    j["histogram"] = s.histogram;
    j["terminal_counts"] = json{{"F", s.terminal_counts[0]}, {"A", s.terminal_counts[1]}};
    j["empirical_mean"] = s.empirical_mean();
    return j;
}

}  // namespace mbd::io
