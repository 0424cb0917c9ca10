// kakeya: command-line laboratory for progression covers, projections,
// entropies and interval counts over Z and F_p^n.
//
// Subcommands: construct, oracle, entropy, cover, compress, es, pipeline,
// table, check-all. Every report embeds the version string and the exact
// configuration; identical configuration (including --seed) renders
// byte-identical output. Exit codes: 0 success, 1 verified failure values
// (uncovered differences, exhausted retry budgets, failed checks), 2 invalid
// configuration.

#include <CLI11.hpp>

#include "kakeya/acceptance.hpp"
#include "kakeya/compression.hpp"
#include "kakeya/constructions.hpp"
#include "kakeya/covering.hpp"
#include "kakeya/entropy.hpp"
#include "kakeya/erdos_selfridge.hpp"
#include "kakeya/oracle.hpp"
#include "kakeya/parallel.hpp"
#include "kakeya/pipeline.hpp"
#include "kakeya/serialize.hpp"
#include "kakeya/version.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace kakeya;

namespace {

struct Output {
  std::string format = "plain";  // plain | json | csv
  std::string out_path;
  std::string config_echo;

  void deliver(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw ConfigError("cannot open output file: " + out_path);
      f << text;
    }
  }

  // Key/value report: plain lines, a JSON object, or two-column CSV.
  void emit_report(const Json& body) const {
    std::ostringstream s;
    if (format == "json") {
      Json j;
      j["version"] = kVersion;
      j["config"] = config_echo;
      j["report"] = body;
      s << j.dump(2) << "\n";
    } else if (format == "csv") {
      s << "# " << kVersion << " | " << config_echo << "\n";
      s << "key,value\n";
      for (const auto& [k, v] : body.items())
        s << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      s << kVersion << " | " << config_echo << "\n";
      for (const auto& [k, v] : body.items())
        s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    deliver(s.str());
  }

  // Tabular report with a fixed column header.
  void emit_rows(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) const {
    std::ostringstream s;
    if (format == "json") {
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json obj;
        for (size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(obj);
      }
      Json j;
      j["version"] = kVersion;
      j["config"] = config_echo;
      j["rows"] = arr;
      s << j.dump(2) << "\n";
    } else {
      s << "# " << kVersion << " | " << config_echo << "\n";
      for (size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
      s << "\n";
      for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
          const bool quote = row[i].find(',') != std::string::npos;
          s << (i ? "," : "") << (quote ? "\"" + row[i] + "\"" : row[i]);
        }
        s << "\n";
      }
    }
    deliver(s.str());
  }
};

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open input file: " + path);
  Json j;
  f >> j;
  return j;
}

std::vector<Int> parse_int_list(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  if (out.empty()) throw ConfigError("empty integer list: " + csv);
  return out;
}

std::vector<int64_t> parse_range(const std::string& spec) {
  // "2,3,5" or "1:4" (inclusive)
  std::vector<int64_t> out;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    int64_t lo = std::stoll(spec.substr(0, colon));
    int64_t hi = std::stoll(spec.substr(colon + 1));
    for (int64_t v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    for (const Int& v : parse_int_list(spec)) out.push_back(to_i64(v));
  }
  if (out.empty()) throw ConfigError("empty range: " + spec);
  return out;
}

std::vector<Slope> parse_slopes(const std::string& csv) {
  std::vector<Slope> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Slope::parse(item));
  }
  if (out.empty()) throw ConfigError("empty slope list: " + csv);
  return out;
}

std::string cover_summary(const CoverResult& cover) {
  if (cover.ok()) return "verified (" + std::to_string(cover.entries.size()) + " differences)";
  std::string s = "uncovered:";
  for (const Int& d : cover.uncovered) s += " " + d.str();
  return s;
}

std::string join_config(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += " ";
    s += argv[i];
  }
  return s;
}

// ---- construct --------------------------------------------------------------

int cmd_construct_qr(const Output& out, int64_t k, int64_t m, int64_t cap) {
  auto c = quadratic_residue_cover(k, m, Int(cap));
  Json body;
  body["Q"] = int_to_json(c.q);
  body["set_size"] = c.s.size();
  body["size_bound"] = int_to_json(c.size_bound);
  body["size_ok"] = c.size_ok;
  body["certificate"] = cover_summary(c.certificate);
  body["set"] = int_set_to_json(c.s);
  out.emit_report(body);
  return c.certificate.ok() && c.size_ok ? 0 : 1;
}

int cmd_construct_digits(const Output& out, int64_t k, int64_t m, unsigned n, int64_t cap) {
  auto c = quadratic_residue_cover(k, m, Int(cap));
  auto d = digit_concatenate(c, n, Int(cap));
  Json body;
  body["Q_pow_n"] = int_to_json(d.q_pow_n);
  body["set_size"] = d.set.size();
  body["size_ok"] = d.size_ok;
  body["certificate"] = cover_summary(d.certificate);
  out.emit_report(body);
  return d.certificate.ok() ? 0 : 1;
}

int cmd_construct_f_upper(const Output& out, int64_t k, int64_t m, const std::string& n_str,
                          int64_t cap) {
  auto r = build_F_upper(k, Int(n_str), m, Int(cap));
  Json body;
  body["digits"] = r.n;
  body["Q_pow_n"] = int_to_json(r.q_pow_n);
  body["set_size"] = r.set.size();
  body["exponent"] = fmt12(r.exponent);
  body["certificate"] = cover_summary(r.certificate);
  out.emit_report(body);
  return r.certificate.ok() ? 0 : 1;
}

int cmd_construct_mt(const Output& out, uint32_t p) {
  FpSet v = mockenhaupt_tao(p);
  auto dirs = full_line_directions(v);
  Json body;
  body["p"] = p;
  body["size"] = v.size();
  body["expected_size"] = static_cast<uint64_t>(p) * (p + 1) / 2;
  Json dir_list = Json::array();
  for (uint64_t d : dirs) {
    Json coords = Json::array();
    for (uint32_t c : v.space().decode(d)) coords.push_back(c);
    dir_list.push_back(coords);
  }
  body["full_line_directions"] = dir_list;
  body["set"] = fpset_to_json(v);
  out.emit_report(body);
  return 0;
}

int cmd_construct_unwrap(const Output& out, const std::string& in_path, uint32_t preset_p,
                         int64_t k) {
  FpSet a;
  if (!in_path.empty()) {
    a = json_to_fpset(read_json_file(in_path));
  } else {
    // preset: the (u+v, uv) set plus the vertical line, a full Besicovitch set
    FpSet v = mockenhaupt_tao(preset_p);
    std::vector<uint64_t> vert;
    for (uint32_t y = 0; y < preset_p; ++y) vert.push_back(v.space().encode({0, y}));
    a = v.united(FpSet(v.space(), std::move(vert)));
  }
  auto r = fp_unwrap(a, k);
  Json body;
  body["input_size"] = a.size();
  body["output_size"] = r.set.size();
  body["distinct_differences"] = r.distinct_differences;
  body["size_ok"] = r.size_ok;
  body["cover"] = cover_summary(r.cover);
  body["set"] = int_set_to_json(r.set);
  out.emit_report(body);
  return r.cover.ok() ? 0 : 1;
}

int cmd_construct_wrap(const Output& out, const std::string& in_path, int64_t k, int64_t n_cover,
                       uint32_t n_dim, uint32_t p, uint64_t seed, int retries) {
  IntSet a = in_path.empty() ? IntSet::range(1, 10 * k * n_cover)
                             : json_to_int_set(read_json_file(in_path));
  auto r = wrap_to_fp(a, k, n_cover, n_dim, p, seed, std::nullopt, retries);
  Json body;
  body["accepted"] = r.accepted;
  body["attempts"] = r.attempts;
  body["covered_directions"] = r.covered_directions;
  body["threshold"] = r.threshold;
  body["progression_length"] = r.progression_length;
  if (!r.bad_differences.empty()) {
    Json bad = Json::array();
    for (const Int& d : r.bad_differences) bad.push_back(int_to_json(d));
    body["bad_differences"] = bad;
  } else {
    body["t"] = int_to_json(r.t);
    body["image"] = fpset_to_json(r.set);
  }
  out.emit_report(body);
  return r.accepted ? 0 : 1;
}

// ---- oracle ------------------------------------------------------------------

std::vector<std::string> oracle_row(const OracleResult& r, bool timing) {
  std::string quantity = r.quantity == OracleQuantity::FullCover      ? "F"
                         : r.quantity == OracleQuantity::DistinctCover ? "Fprime"
                                                                       : "f";
  std::string param = r.quantity == OracleQuantity::FpCover
                          ? std::to_string(r.p) + "^" + std::to_string(r.n_param)
                          : std::to_string(r.n_param);
  std::string witness;
  if (r.quantity == OracleQuantity::FpCover) {
    FpSpace sp(r.p, static_cast<uint32_t>(r.n_param));
    for (uint64_t v : r.fp_witness) {
      if (!witness.empty()) witness += " ";
      std::string pt;
      for (uint32_t c : sp.decode(v)) pt += (pt.empty() ? "(" : " ") + std::to_string(c);
      witness += pt + ")";
    }
  } else {
    for (const Int& e : r.witness) {
      if (!witness.empty()) witness += ",";
      witness += e.str();
    }
  }
  std::vector<std::string> row{quantity,
                               std::to_string(r.k),
                               param,
                               std::to_string(r.optimum),
                               witness,
                               r.exhausted ? "true" : "false",
                               std::to_string(r.nodes)};
  row.push_back(timing ? fmt12(r.wall_ms) : "");
  return row;
}

int cmd_oracle(const Output& out, const std::string& quantity, int64_t k, int64_t n, uint32_t p,
               uint32_t dim, const std::string& primes_csv, OracleOptions opt, bool timing) {
  const std::vector<std::string> header{"quantity", "k",         "param", "optimum",
                                        "witness",  "exhausted", "nodes", "wall_ms"};
  std::vector<std::vector<std::string>> rows;
  int rc = 0;
  if (quantity == "F") {
    rows.push_back(oracle_row(min_full_cover(k, n, opt), timing));
  } else if (quantity == "Fprime") {
    rows.push_back(oracle_row(min_distinct_cover(k, n, opt), timing));
  } else if (quantity == "f") {
    rows.push_back(oracle_row(min_fp_cover(k, dim, p, opt), timing));
  } else if (quantity == "G") {
    auto r = min_over_intervals(parse_int_list(primes_csv), k);
    rows.push_back({"G", std::to_string(k), "primes=" + primes_csv, r.count.str(),
                    "w=" + r.w.str(), r.exhaustive ? "true" : "false", "0", ""});
    rc = r.exhaustive ? 0 : 1;
  } else {
    throw ConfigError("unknown quantity: " + quantity + " (expected F, Fprime, f, G)");
  }
  out.emit_rows(header, rows);
  return rc;
}

// ---- entropy -------------------------------------------------------------------

// The exact rational weights whose logs enter an entropy sum, grouped as
// "mass x multiplicity".
template <class Map>
Json mass_trace(const Map& push) {
  std::map<Rat, int64_t> groups;
  for (const auto& [value, w] : push) ++groups[w];
  Json arr = Json::array();
  for (const auto& [w, count] : groups)
    arr.push_back(Json{{"mass", rat_to_string(w)}, {"atoms", count}});
  return arr;
}

int cmd_entropy_mt(const Output& out, uint32_t p, bool base2, bool trace) {
  MtSweep s = mt_sweep(p);
  const double unit = base2 ? std::log(2.0) : 1.0;
  Json body;
  body["p"] = p;
  body["H_diff"] = fmt12(s.h_difference / unit);
  body["closed_form"] = fmt12(s.closed_form / unit);
  body["sup_other_slopes"] = fmt12(s.gap.sup / unit);
  body["sup_bound"] = fmt12(s.sup_bound / unit);
  body["ratio"] = fmt12(s.gap.ratio);
  body["log_base"] = base2 ? "2" : "e";
  if (trace) {
    JointFp j = mt_joint(p);
    Json tr;
    tr["diff"] = mass_trace(j.project(FpSlope::of(p - 1)));
    auto slopes = fp_slopes_excluding_minus_one(p);
    Json per = Json::array();
    for (const auto& r : slopes)
      per.push_back(Json{{"slope", r.infinite ? "inf" : std::to_string(r.r)},
                         {"trace", mass_trace(j.project(r))}});
    tr["slopes"] = per;
    body["log_arguments"] = tr;
  }
  out.emit_report(body);
  return 0;
}

int cmd_entropy_gap(const Output& out, const std::string& joint_path,
                    const std::string& slopes_csv, bool base2, bool trace) {
  Json jj = read_json_file(joint_path);
  const double unit = base2 ? std::log(2.0) : 1.0;
  Json body;
  if (jj.at("ambient").is_string()) {
    JointZ j = json_to_joint_z(jj);
    auto slopes = parse_slopes(slopes_csv);
    auto g = entropy_gap(j, slopes);
    body["H_diff"] = fmt12(g.h_difference / unit);
    body["sup"] = fmt12(g.sup / unit);
    body["ratio"] = g.infinite ? "inf" : fmt12(g.ratio);
    body["argmax_slope"] = slopes[g.argmax].str();
    if (trace) {
      Json per = Json::array();
      for (const auto& r : slopes)
        per.push_back(Json{{"slope", r.str()}, {"trace", mass_trace(j.project(r))}});
      body["log_arguments"] =
          Json{{"diff", mass_trace(j.project(Slope(Int(-1))))}, {"slopes", per}};
    }
  } else {
    JointFp j = json_to_joint_fp(jj);
    auto slopes = fp_slopes_excluding_minus_one(j.space.p);
    auto g = entropy_gap(j, slopes);
    body["H_diff"] = fmt12(g.h_difference / unit);
    body["sup"] = fmt12(g.sup / unit);
    body["ratio"] = g.infinite ? "inf" : fmt12(g.ratio);
    body["argmax_slope"] =
        slopes[g.argmax].infinite ? "inf" : std::to_string(slopes[g.argmax].r);
  }
  body["log_base"] = base2 ? "2" : "e";
  out.emit_report(body);
  return 0;
}

int cmd_entropy_typical(const Output& out, const std::string& n_str, bool base2) {
  const double unit = base2 ? std::log(2.0) : 1.0;
  Json body;
  auto t = typical_logcount({Rat(1, 2), Rat(1, 2)}, Int(n_str));
  body["n"] = n_str;
  body["log_count_over_n"] = fmt12(t.log_count_over_n / unit);
  body["entropy"] = fmt12(t.entropy / unit);
  body["gap"] = fmt12(t.gap / unit);
  out.emit_report(body);
  return 0;
}

int cmd_entropy_cover_rv(const Output& out, const std::string& in_path,
                         const std::string& slopes_csv, int64_t q, int64_t m, int64_t n,
                         bool base2) {
  IntSet a = json_to_int_set(read_json_file(in_path));
  const int64_t k = 2 * m * q;
  CoverResult cert = verify_cover(a, k, diff_range(1, n));
  if (!cert.ok()) {
    Json body;
    body["error"] = "input does not cover {1..N} with k = 2MQ = " + std::to_string(k);
    body["uncovered"] = cover_summary(cert);
    out.emit_report(body);
    return 1;
  }
  auto rv = cover_to_rv(a, cert, parse_slopes(slopes_csv), Int(q), Int(m), n);
  const double unit = base2 ? std::log(2.0) : 1.0;
  Json body;
  body["atoms"] = rv.atoms;
  body["diff_uniform_ok"] = rv.diff_uniform_ok;
  body["support_ok"] = rv.support_ok;
  body["H_diff"] = fmt12(rv.joint.projection_entropy(Slope(Int(-1))) / unit);
  body["joint"] = joint_z_to_json(rv.joint);
  out.emit_report(body);
  return rv.diff_uniform_ok && rv.support_ok ? 0 : 1;
}

int cmd_entropy_katz_tao(const Output& out) {
  KatzTao kt = katz_tao_epsilon();
  Json body;
  body["alpha"] = fmt12(kt.alpha);
  body["epsilon"] = fmt12(kt.epsilon);
  body["residual"] = fmt12(kt.residual);
  out.emit_report(body);
  return 0;
}

// ---- cover ---------------------------------------------------------------------

int cmd_cover_int(const Output& out, const std::string& in_path, const std::string& x_str) {
  IntSet s = json_to_int_set(read_json_file(in_path));
  auto r = greedy_translate_cover_int(s, Int(x_str));
  Json body;
  body["set_size"] = s.size();
  body["translates"] = int_set_to_json(r.translates);
  body["translate_count"] = r.translates.size();
  body["size_bound"] = int_to_json(r.size_bound);
  body["bound_ok"] = r.bound_ok;
  body["contraction_ok"] = r.contraction_ok;
  out.emit_report(body);
  return r.bound_ok && r.contraction_ok ? 0 : 1;
}

int cmd_cover_fp(const Output& out, const std::string& in_path) {
  FpSet s = json_to_fpset(read_json_file(in_path));
  auto r = greedy_translate_cover_fp(s);
  Json body;
  body["set_size"] = s.size();
  body["translate_count"] = r.translates.size();
  body["size_bound"] = int_to_json(r.size_bound);
  body["bound_ok"] = r.bound_ok;
  body["contraction_ok"] = r.contraction_ok;
  Json ts = Json::array();
  for (uint64_t t : r.translates) {
    Json coords = Json::array();
    for (uint32_t c : s.space().decode(t)) coords.push_back(c);
    ts.push_back(coords);
  }
  body["translates"] = ts;
  out.emit_report(body);
  return r.bound_ok && r.contraction_ok ? 0 : 1;
}

int cmd_cover_extend(const Output& out, const std::string& in_path, int64_t k) {
  FpSet a = json_to_fpset(read_json_file(in_path));
  FpCoverResult cert = fp_verify_cover(a, k, all_nonzero_directions(a.space()));
  FpCoverResult covered_only;
  covered_only.k = k;
  covered_only.entries = cert.entries;
  auto ext = extend_full_difference_cover(a, covered_only, k);
  Json body;
  body["input_size"] = a.size();
  body["covered_directions_in"] = cert.entries.size();
  body["translate_count"] = ext.translates.size();
  body["extended_size"] = ext.extended.size();
  body["size_ok"] = ext.size_ok;
  body["all_directions_ok"] = ext.full_cover.ok();
  body["extended"] = fpset_to_json(ext.extended);
  out.emit_report(body);
  return ext.full_cover.ok() ? 0 : 1;
}

// ---- compress -------------------------------------------------------------------

int cmd_compress_distinct(const Output& out, const std::string& in_path, uint64_t seed,
                          int retries) {
  Json j = read_json_file(in_path);
  IntSet a0 = json_to_int_set(j.at("set"));
  ApCertificate cert = json_to_certificate(j.at("certificate"));
  const int64_t n = j.at("N").get<int64_t>();
  auto r = distinct_to_full(a0, cert.entries, cert.k, n, seed, retries);
  Json body;
  body["ok"] = r.ok;
  body["attempts"] = r.attempts;
  if (r.ok) {
    body["theta"] = rat_to_string(r.theta);
    body["grid"] = int_to_json(r.grid);
    body["collisions"] = r.collisions;
    body["distinct_images"] = r.distinct_images;
    body["input_size"] = a0.size();
    body["output_size"] = r.a1.size();
    body["size_bound"] = int_to_json(r.size_bound);
    body["size_ok"] = r.size_ok;
    body["cover"] = cover_summary(r.cover);
  }
  out.emit_report(body);
  return r.ok ? 0 : 1;
}

int cmd_compress_linear(const Output& out, const std::string& in_path, uint64_t seed,
                        int retries) {
  FpSet a = json_to_fpset(read_json_file(in_path));
  const uint32_t p = a.space().p;
  // certify the full-line directions present in the input
  FpCoverResult cert;
  cert.k = p;
  for (uint64_t d : full_line_directions(a)) {
    for (uint64_t base : a) {
      bool full = true;
      uint64_t x = base;
      for (uint32_t s = 0; s < p; ++s) {
        if (!a.contains(x)) {
          full = false;
          break;
        }
        x = a.space().add(x, d);
      }
      if (full) {
        cert.entries[d] = base;
        break;
      }
    }
  }
  auto r = random_linear_compress(a, cert, seed, retries);
  Json body;
  body["accepted"] = r.accepted;
  body["attempts"] = r.attempts;
  body["input_directions"] = cert.entries.size();
  body["surviving"] = r.surviving.size();
  body["target_dim"] = r.target_dim;
  body["lines_ok"] = r.lines_ok;
  Json mat = Json::array();
  for (const auto& row : r.matrix) {
    Json jr = Json::array();
    for (uint32_t v : row) jr.push_back(v);
    mat.push_back(jr);
  }
  body["matrix"] = mat;
  body["image"] = fpset_to_json(r.image);
  out.emit_report(body);
  return r.accepted ? 0 : 1;
}

// ---- es -------------------------------------------------------------------------

int cmd_es_count(const Output& out, const std::string& in_path, const std::string& primes_csv,
                 int64_t k, const std::string& w_str) {
  ESInstance inst = in_path.empty() ? ESInstance{parse_int_list(primes_csv), k, Int(w_str)}
                                    : json_to_es_instance(read_json_file(in_path));
  Json body;
  body["interval_length"] = int_to_json(inst.interval_length());
  body["count"] = int_to_json(interval_multiple_count(inst));
  out.emit_report(body);
  return 0;
}

int cmd_es_min(const Output& out, const std::string& primes_csv, int64_t k, int64_t cap,
               uint64_t seed, int64_t samples) {
  auto r = min_over_intervals(parse_int_list(primes_csv), k, Int(cap), seed, samples);
  Json body;
  body["count"] = int_to_json(r.count);
  body["w"] = int_to_json(r.w);
  body["period"] = int_to_json(r.period);
  body["exhaustive"] = r.exhaustive;
  out.emit_report(body);
  return r.exhaustive ? 0 : 1;
}

int cmd_es_sandwich(const Output& out, int64_t k, int64_t n, const std::string& xmax) {
  auto rep = sandwich_check(k, n, Int(xmax));
  Json body;
  body["F_prime"] = rep.f_prime.optimum;
  body["right_demonstrated"] = rep.right_demonstrated;
  if (rep.right_demonstrated) {
    Json primes = Json::array();
    for (const Int& p : rep.pattern.primes) primes.push_back(int_to_json(p));
    body["primes"] = primes;
    body["u"] = int_to_json(rep.pattern.u);
    body["v"] = int_to_json(rep.pattern.v);
    body["instance_count"] = int_to_json(rep.instance_count);
    body["G_sweep"] = int_to_json(rep.sweep.count);
    body["left_ok"] = rep.left_ok;
    body["right_ok"] = rep.right_ok;
    body["claim_ok"] = rep.pattern.claim_ok;
  } else {
    body["binding_condition"] = rep.binding_condition;
  }
  out.emit_report(body);
  return rep.right_demonstrated && rep.left_ok && rep.right_ok ? 0 : 1;
}

int cmd_es_pattern(const Output& out, const std::string& diffs_csv, double delta,
                   const std::string& xmax, int64_t k) {
  auto r = prime_pattern_search(parse_int_list(diffs_csv), delta, Int(xmax), k);
  Json body;
  body["found"] = r.found;
  if (r.found) {
    body["u"] = int_to_json(r.u);
    body["v"] = int_to_json(r.v);
    body["X"] = int_to_json(r.x);
    Json primes = Json::array();
    for (const Int& p : r.primes) primes.push_back(int_to_json(p));
    body["primes"] = primes;
    body["w"] = int_to_json(r.w);
    body["interval_start"] = int_to_json(r.interval_start);
    body["claim_ok"] = r.claim_ok;
  }
  out.emit_report(body);
  return r.found ? 0 : 1;
}

// ---- pipeline ---------------------------------------------------------------------

int cmd_pipeline(const Output& out, uint32_t p, const std::string& joint_path, int64_t m,
                 uint64_t seed, int64_t cap, int retries) {
  JointFp j = joint_path.empty() ? mt_joint(p) : json_to_joint_fp(read_json_file(joint_path));
  auto rep = replay_entropy_pipeline(j, m, seed, Int(cap), retries);
  Json body;
  body["p"] = rep.p;
  body["m"] = rep.m;
  body["seed"] = rep.seed;
  body["entropy_ratio"] = fmt12(rep.entropy_ratio);
  body["count_ratio"] = fmt12(rep.count_ratio);
  Json stages = Json::array();
  for (const auto& s : rep.stages) {
    Json st;
    st["name"] = s.name;
    st["ok"] = s.ok;
    if (!s.detail.empty()) st["detail"] = s.detail;
    stages.push_back(st);
  }
  body["stages"] = stages;
  body["typical_count"] = int_to_json(rep.typical_count);
  body["lines_size"] = rep.lines_size;
  body["direction_count"] = rep.direction_count;
  body["compressed_dim"] = rep.compressed_dim;
  body["compressed_size"] = rep.compressed_size;
  body["surviving"] = rep.surviving;
  body["final_size"] = rep.final_size;
  body["all_directions_ok"] = rep.all_directions_ok;
  body["dkss_reference"] = fmt12(rep.dkss_reference);
  body["size_vs_reference_ok"] = rep.size_vs_reference_ok;
  Json mat = Json::array();
  for (const auto& row : rep.matrix) {
    Json jr = Json::array();
    for (uint32_t v : row) jr.push_back(v);
    mat.push_back(jr);
  }
  body["matrix"] = mat;
  body["completed"] = rep.completed;
  out.emit_report(body);
  return rep.completed ? 0 : 1;
}

// ---- table ------------------------------------------------------------------------

int cmd_table(const Output& out, const std::string& quantity, const std::string& k_spec,
              const std::string& n_spec, const std::string& m_spec, OracleOptions opt) {
  std::vector<std::vector<std::string>> rows;
  if (quantity == "F" || quantity == "Fprime") {
    for (int64_t k : parse_range(k_spec))
      for (int64_t n : parse_range(n_spec)) {
        auto r = quantity == "F" ? min_full_cover(k, n, opt) : min_distinct_cover(k, n, opt);
        auto cmp = compare_bounds(k, n, opt);
        std::string witness;
        for (const Int& e : r.witness) {
          if (!witness.empty()) witness += ",";
          witness += e.str();
        }
        rows.push_back({quantity, std::to_string(k), std::to_string(n),
                        std::to_string(r.optimum), witness, r.exhausted ? "true" : "false",
                        cmp.order_ok && cmp.factor_ok ? "true" : "false"});
      }
    out.emit_rows({"quantity", "k", "N", "optimum", "witness", "exhausted", "bounds_ok"}, rows);
  } else if (quantity == "f") {
    for (int64_t p : parse_range(n_spec))
      for (int64_t k : k_spec == "p" ? std::vector<int64_t>{p} : parse_range(k_spec)) {
        auto r = min_fp_cover(k, 1, static_cast<uint32_t>(p), opt);
        std::string witness;
        for (uint64_t v : r.fp_witness) {
          if (!witness.empty()) witness += " ";
          witness += std::to_string(v);
        }
        rows.push_back({"f", std::to_string(k), std::to_string(p) + "^1",
                        std::to_string(r.optimum), witness, r.exhausted ? "true" : "false",
                        r.dkss_reference ? fmt12(*r.dkss_reference) : ""});
      }
    out.emit_rows({"quantity", "k", "p^n", "optimum", "witness", "exhausted", "dkss_ref"}, rows);
  } else if (quantity == "exponent") {
    for (int64_t k : parse_range(k_spec))
      for (int64_t m : parse_range(m_spec)) {
        auto c = quadratic_residue_cover(k, m);
        const double expo = ln_int(Int(c.s.size())) / ln_int(c.q);
        rows.push_back({"exponent", std::to_string(k), std::to_string(m), c.q.str(),
                        std::to_string(c.s.size()), c.size_bound.str(), fmt12(expo)});
      }
    out.emit_rows({"quantity", "k", "m", "Q", "set_size", "size_bound", "exponent"}, rows);
  } else {
    throw ConfigError("unknown table quantity: " + quantity);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - exact computations for progression covers, projections and entropies"};
  app.require_subcommand(1);

  Output out;
  uint64_t seed = 0;
  unsigned threads = 1;
  int retries = 64;
  int64_t cap_window = 40;
  int64_t cap_enum = 1 << 22;
  int64_t time_budget_ms = 0;
  bool timing = false;
  bool base2 = false;
  bool trace = false;
  app.add_option("--format", out.format, "Output format: plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", out.out_path, "Write the report to FILE instead of stdout");
  app.add_option("--seed", seed, "Seed for randomized operations (echoed in reports)");
  app.add_option("--threads", threads, "Bound on internal parallelism");
  app.add_option("--retries", retries, "Retry budget for randomized acceptance loops");
  app.add_option("--cap-window", cap_window, "Oracle normalization window cap");
  app.add_option("--cap-enum", cap_enum, "Enumeration cap for constructions and pipelines");
  app.add_option("--time-budget-ms", time_budget_ms, "Oracle time budget (0 = unlimited)");
  app.add_flag("--timing", timing, "Include wall-clock columns (breaks byte-determinism)");
  app.add_flag("--base2", base2, "Display entropies in bits instead of nats");
  app.add_flag("--trace", trace,
               "Entropy reports include the exact rational log arguments");

  // construct
  auto* construct = app.add_subcommand("construct", "Explicit covering constructions");
  construct->require_subcommand(1);
  int64_t k = 2, m = 1, n_cover = 1;
  unsigned digits_n = 1;
  uint32_t p = 3, n_dim = 1;
  std::string in_path, n_str = "1";
  auto* qr = construct->add_subcommand("qr", "Quadratic-residue union of progressions");
  qr->add_option("--k", k, "Progression length")->required();
  qr->add_option("--m", m, "Number of odd primes in Q")->required();
  auto* dig = construct->add_subcommand("digits", "Digit concatenation of the qr set");
  dig->add_option("--k", k)->required();
  dig->add_option("--m", m)->required();
  dig->add_option("--n", digits_n, "Number of digits")->required();
  auto* fup = construct->add_subcommand("f-upper", "Cover of {1..N} from digit concatenation");
  fup->add_option("--k", k)->required();
  fup->add_option("--m", m)->required();
  fup->add_option("--N", n_str, "Cover target")->required();
  auto* mt = construct->add_subcommand("mt", "The plane set {(u+v, uv)}");
  mt->add_option("--p", p, "Prime")->required();
  auto* unwrap = construct->add_subcommand("unwrap", "Lift an F_p^n cover to the integers");
  unwrap->add_option("--in", in_path, "FpSet JSON file");
  unwrap->add_option("--p", p, "Preset prime (used when --in is absent)");
  unwrap->add_option("--k", k, "Progression length")->required();
  auto* wrap = construct->add_subcommand("wrap", "Project an integer cover into F_p^n");
  wrap->add_option("--in", in_path, "IntSet JSON file (default: the full interval)");
  wrap->add_option("--k", k)->required();
  wrap->add_option("--N", n_cover, "Cover range")->required();
  wrap->add_option("--n", n_dim, "Target dimension")->required();
  wrap->add_option("--p", p, "Prime in [N^(1/n), 2 N^(1/n))")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact brute-force cover minima");
  std::string quantity = "F", primes_csv, w_str = "0";
  oracle->add_option("--quantity", quantity, "F | Fprime | f | G")->required();
  oracle->add_option("--k", k)->required();
  oracle->add_option("--N", n_cover, "Cover range (F, Fprime)");
  oracle->add_option("--p", p, "Prime (f)");
  oracle->add_option("--n", n_dim, "Dimension (f)");
  oracle->add_option("--primes", primes_csv, "Primes (G), e.g. 3,5");
  int64_t window_width = 0;
  oracle->add_option("--window", window_width, "Widen the normalization window");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Exact entropy computations");
  entropy->require_subcommand(1);
  auto* emt = entropy->add_subcommand("mt", "Sharpness sweep of the product law");
  emt->add_option("--p", p, "Prime")->required();
  std::string slopes_csv = "0,1,inf", joint_path;
  auto* egap = entropy->add_subcommand("gap", "H(X-Y) / sup H(X+rY) for a joint law");
  egap->add_option("--joint", joint_path, "Joint law JSON file")->required();
  egap->add_option("--slopes", slopes_csv, "Slope list for Z-ambient laws");
  auto* etyp = entropy->add_subcommand("typical", "Typical-set log-count for the dyadic law");
  etyp->add_option("--n", n_str, "Sequence length (even)")->required();
  int64_t q_step = 1, m_step = 1;
  auto* erv = entropy->add_subcommand("cover-rv", "Random variables from a verified cover");
  erv->add_option("--in", in_path, "IntSet JSON file")->required();
  erv->add_option("--Q", q_step)->required();
  erv->add_option("--M", m_step)->required();
  erv->add_option("--N", n_cover)->required();
  erv->add_option("--slopes", slopes_csv, "Slope list");
  auto* ekt = entropy->add_subcommand("katz-tao", "The cubic-root constant");

  // cover
  auto* cover = app.add_subcommand("cover", "Greedy covering by translates");
  cover->require_subcommand(1);
  auto* cint = cover->add_subcommand("int", "S + T covering {1..X}");
  cint->add_option("--in", in_path, "IntSet JSON file")->required();
  cint->add_option("--X", n_str, "Target range")->required();
  auto* cfp = cover->add_subcommand("fp", "S + T = F_p^n");
  cfp->add_option("--in", in_path, "FpSet JSON file")->required();
  auto* cext = cover->add_subcommand("extend", "Extend a partial difference cover to all");
  cext->add_option("--in", in_path, "FpSet JSON file")->required();
  cext->add_option("--k", k, "Progression length")->required();

  // compress
  auto* compress = app.add_subcommand("compress", "Randomized compression arguments");
  compress->require_subcommand(1);
  auto* cdist = compress->add_subcommand("distinct-to-full",
                                         "N distinct differences to a full {1..N} cover");
  cdist->add_option("--in", in_path, "Instance JSON {set, certificate, N}")->required();
  auto* clin = compress->add_subcommand("linear", "Random linear projection of a line set");
  clin->add_option("--in", in_path, "FpSet JSON file")->required();

  // es
  auto* es = app.add_subcommand("es", "Interval counts over prime multiples");
  es->require_subcommand(1);
  auto* ecount = es->add_subcommand("count", "# (I intersect union p_i Z)");
  ecount->add_option("--in", in_path, "Instance JSON {primes, k, w}");
  ecount->add_option("--primes", primes_csv);
  ecount->add_option("--k", k);
  ecount->add_option("--w", w_str, "Interval start offset");
  auto* emin = es->add_subcommand("min", "Minimum over all intervals");
  emin->add_option("--primes", primes_csv)->required();
  emin->add_option("--k", k)->required();
  int64_t samples = 1000000;
  int64_t es_cap = 1000000000;
  emin->add_option("--samples", samples, "Random shifts when the period exceeds the cap");
  emin->add_option("--period-cap", es_cap, "Exact sweep cap on lcm(primes)");
  auto* esand = es->add_subcommand("sandwich", "F' <= G <= k F' at desk scale");
  esand->add_option("--k", k)->required();
  esand->add_option("--N", n_cover)->required();
  std::string xmax = "1000000";
  esand->add_option("--xmax", xmax, "Prime search bound");
  auto* epat = es->add_subcommand("pattern", "Bounded search for primes in pattern");
  std::string diffs_csv;
  double delta = 0.5;
  epat->add_option("--diffs", diffs_csv, "Differences, e.g. 1,2")->required();
  epat->add_option("--delta", delta, "Window parameter in (0,1)");
  epat->add_option("--xmax", xmax, "Search bound");
  epat->add_option("--kterm", k, "Progression length for the interval claim");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "Entropy-argument replay, stage by stage");
  pipeline->add_option("--p", p, "Prime for the product-law preset");
  pipeline->add_option("--joint", joint_path, "Joint law JSON file (overrides the preset)");
  pipeline->add_option("--m", m, "Typical-set multiplier");

  // table
  auto* table = app.add_subcommand("table", "Parameter-grid tables");
  std::string k_spec = "2", n_spec = "1", m_spec = "1";
  table->add_option("--quantity", quantity, "F | Fprime | f | exponent")->required();
  table->add_option("--k", k_spec, "k values: list, lo:hi, or 'p' (f tables: k = p)");
  table->add_option("--N", n_spec, "N (or p for f) values: list or lo:hi");
  table->add_option("--m", m_spec, "m values for exponent tables");

  // check-all
  auto* checkall = app.add_subcommand("check-all", "Run the verification suite");
  std::string level = "desk";
  checkall->add_option("--level", level, "desk | quick");

  // allow global flags (--format, --seed, ...) after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
      sub->fallthrough(true);
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  out.config_echo = join_config(argc, argv) + " | seed=" + std::to_string(seed);
  set_thread_budget(threads);
  OracleOptions oracle_opt;
  oracle_opt.window_cap = cap_window;
  oracle_opt.time_budget_ms = time_budget_ms;

  try {
    if (qr->parsed()) return cmd_construct_qr(out, k, m, cap_enum);
    if (dig->parsed()) return cmd_construct_digits(out, k, m, digits_n, cap_enum);
    if (fup->parsed()) return cmd_construct_f_upper(out, k, m, n_str, cap_enum);
    if (mt->parsed()) return cmd_construct_mt(out, p);
    if (unwrap->parsed()) return cmd_construct_unwrap(out, in_path, p, k);
    if (wrap->parsed())
      return cmd_construct_wrap(out, in_path, k, n_cover, n_dim, p, seed, retries);
    if (oracle->parsed()) {
      oracle_opt.window_width = window_width;
      return cmd_oracle(out, quantity, k, n_cover, p, n_dim, primes_csv, oracle_opt, timing);
    }
    if (emt->parsed()) return cmd_entropy_mt(out, p, base2, trace);
    if (egap->parsed()) return cmd_entropy_gap(out, joint_path, slopes_csv, base2, trace);
    if (etyp->parsed()) return cmd_entropy_typical(out, n_str, base2);
    if (erv->parsed())
      return cmd_entropy_cover_rv(out, in_path, slopes_csv, q_step, m_step, n_cover, base2);
    if (ekt->parsed()) return cmd_entropy_katz_tao(out);
    if (cint->parsed()) return cmd_cover_int(out, in_path, n_str);
    if (cfp->parsed()) return cmd_cover_fp(out, in_path);
    if (cext->parsed()) return cmd_cover_extend(out, in_path, k);
    if (cdist->parsed()) return cmd_compress_distinct(out, in_path, seed, retries);
    if (clin->parsed()) return cmd_compress_linear(out, in_path, seed, retries);
    if (ecount->parsed()) return cmd_es_count(out, in_path, primes_csv, k, w_str);
    if (emin->parsed()) return cmd_es_min(out, primes_csv, k, es_cap, seed, samples);
    if (esand->parsed()) return cmd_es_sandwich(out, k, n_cover, xmax);
    if (epat->parsed()) return cmd_es_pattern(out, diffs_csv, delta, xmax, k);
    if (pipeline->parsed())
      return cmd_pipeline(out, p, joint_path, m, seed, cap_enum, retries);
    if (table->parsed()) return cmd_table(out, quantity, k_spec, n_spec, m_spec, oracle_opt);
    if (checkall->parsed()) {
      auto run = run_acceptance(level, seed == 0 ? 2024 : seed);
      out.deliver(run.report);
      return run.all_pass ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand handled\n";
  return 2;
}
