#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mbd/chain.hpp"
#include "mbd/moments.hpp"
#include "mbd/oracle.hpp"
#include "mbd/pmf.hpp"
#include "mbd/shape.hpp"

namespace mbd::io {

using nlohmann::json;

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

/// "# key=value ..." line describing the chain.
std::string params_header(const ChainParams& params, long n);

json params_to_json(const ChainParams& params, long n);

/// {n, a, b, nu_F, kind, values}
json pmf_to_json(const Pmf& f);
/// Comment header, then "j,value" and one row per j.
void write_pmf_csv(std::ostream& os, const Pmf& f, std::string_view method = "forward");
/// Values column of a CSV written by write_pmf_csv, in order.
std::vector<double> read_pmf_csv(std::istream& is);

/// Field names: n, mean, variance, cond_mean_F, cond_mean_A, cond_var_F, cond_var_A.
json moments_to_json(const MomentReport& r);

json shape_to_json(const ShapeClass& s);

/// Header comment, then "a,b,class" rows in row-major order.
void write_region_csv(std::ostream& os, const RegionGrid& g);
/// {n, grid, nu, a: [...], b: [...], classes: [[...], ...]} with classes[i][j] at (a[i], b[j]).
json region_to_json(const RegionGrid& g);

json sample_to_json(const SampleSummary& s, const ChainParams& params);

}  // namespace mbd::io
