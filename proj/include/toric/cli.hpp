// Document formats and commands behind the toric_calc executable. Every
// command returns both a JSON payload and a plain-text rendering; neither
// depends on the thread count.

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobar.hpp"
#include "complex.hpp"
#include "facering.hpp"
#include "koszul.hpp"
#include "verify.hpp"

#ifndef TORIC_VERSION
#define TORIC_VERSION "0.0.0"
#endif

namespace toric::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, verify_failed = 1, invalid_input = 2, cap_exceeded = 3 };

/// Malformed or inconsistent input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComplexDocument {
  int m = 0;
  std::vector<Face> facets;
  std::optional<std::string> name;
};

namespace detail {

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw InputError(line_column(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                     (pos == std::string::npos ? what : what.substr(pos)));
  }
}

inline long as_integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw InputError("field " + field + ": expected an integer");
  return v.get<long>();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Parses {"m": int, "facets": [[int...]...], "name": string?}.
inline ComplexDocument parse_document(const std::string& text) {
  json j = detail::parse_json(text);
  if (!j.is_object()) throw InputError("document: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "m" && key != "facets" && key != "name") {
      throw InputError("field " + key + ": unknown field");
    }
  }
  ComplexDocument doc;
  if (!j.contains("m")) throw InputError("field m: missing");
  long m = detail::as_integer(j["m"], "m");
  if (m < 0 || m > 64) throw InputError("field m: must be between 0 and 64");
  doc.m = static_cast<int>(m);
  if (!j.contains("facets")) throw InputError("field facets: missing");
  if (!j["facets"].is_array()) throw InputError("field facets: expected an array");
  const auto& facets = j["facets"];
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "facets[" + std::to_string(i) + "]";
    if (!facets[i].is_array()) throw InputError("field " + where + ": expected an array");
    Face f;
    for (std::size_t p = 0; p < facets[i].size(); ++p) {
      const std::string at = where + "[" + std::to_string(p) + "]";
      long v = detail::as_integer(facets[i][p], at);
      if (v < 1 || v > m) {
        throw InputError("field " + at + ": vertex label " + std::to_string(v) +
                         " outside 1.." + std::to_string(m));
      }
      f.push_back(static_cast<int>(v));
    }
    doc.facets.push_back(std::move(f));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("field name: expected a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

inline ComplexDocument load_document(const std::string& path) {
  return parse_document(detail::read_file(path));
}

inline SimplicialComplex to_complex(const ComplexDocument& doc) {
  try {
    return SimplicialComplex::from_facets(doc.m, doc.facets);
  } catch (const ComplexError& e) {
    throw InputError(std::string("field facets: ") + e.what());
  }
}

/// Canonical form: maximal facets only, each sorted, in size-then-lex order.
inline json canonical_json(const ComplexDocument& doc) {
  auto k = to_complex(doc);
  json j;
  j["m"] = doc.m;
  j["facets"] = json::array();
  for (const auto& f : k.facets()) {
    if (!f.empty()) j["facets"].push_back(f);
  }
  if (doc.name) j["name"] = *doc.name;
  return j;
}

inline std::string serialize(const ComplexDocument& doc) { return canonical_json(doc).dump() + "\n"; }

/// FNV-1a over the canonical serialization.
inline std::string input_digest(const ComplexDocument& doc) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize(doc)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream ss;
  ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

/// Integers up to 2^53 as JSON numbers, larger ones as decimal strings.
inline json exact(const BigInt& x) {
  static const BigInt limit = BigInt(1) << 53;
  if (x <= limit && x >= -limit) return x.convert_to<std::int64_t>();
  return x.str();
}

inline json exact(std::uint64_t x) { return exact(BigInt(x)); }

inline json dims_json(const std::map<int, std::size_t>& dims) {
  json j = json::object();
  for (const auto& [d, n] : dims) j[std::to_string(d)] = exact(static_cast<std::uint64_t>(n));
  return j;
}

/// Left-aligned columns separated by two spaces.
class Table {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string face_text(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep = " ") {
  std::ostringstream ss;
  for (std::size_t i = 0; i < xs.size(); ++i) ss << (i ? sep : "") << xs[i];
  return ss.str();
}

struct Output {
  json result = json::object();
  std::string text;
  int exit_code = ok;
};

inline Output cmd_info(const ComplexDocument& doc) {
  auto k = to_complex(doc);
  auto fh = f_h_vectors(k);
  auto missing = missing_faces(k);
  Output out;
  out.result["m"] = doc.m;
  out.result["dimension"] = k.dimension();
  out.result["f_vector"] = fh.f;
  out.result["h_vector"] = fh.h;
  out.result["flag"] = is_flag(k);
  out.result["missing_faces"] = missing;
  out.result["ghost_vertices"] = k.ghost_vertices();
  if (doc.name) out.result["name"] = *doc.name;

  std::vector<std::string> missing_text;
  for (const auto& f : missing) missing_text.push_back(face_text(f));
  Table t;
  if (doc.name) t.row({"name", *doc.name});
  t.row({"m", std::to_string(doc.m)});
  t.row({"dimension", std::to_string(k.dimension())});
  t.row({"f-vector", join(fh.f)});
  t.row({"h-vector", join(fh.h)});
  t.row({"flag", is_flag(k) ? "yes" : "no"});
  t.row({"missing faces", missing.empty() ? "none" : join(missing_text)});
  t.row({"ghost vertices", k.ghost_vertices().empty() ? "none" : join(k.ghost_vertices())});
  out.text = t.str();
  return out;
}

inline Output cmd_betti_zk(const ComplexDocument& doc, bool bigraded, unsigned threads) {
  auto k = to_complex(doc);
  auto betti = zk_betti(k, threads);
  Output out;
  out.result["betti"] = dims_json(betti.total);
  Table t;
  t.row({"degree", "betti"});
  for (const auto& [d, n] : betti.total) t.row({std::to_string(d), std::to_string(n)});
  out.text = t.str();
  if (bigraded) {
    json rows = json::array();
    Table b;
    b.row({"-i", "2j", "betti"});
    for (const auto& [key, n] : betti.bigraded) {
      rows.push_back({{"i", key.first}, {"j", key.second}, {"dim", exact(std::uint64_t{n})}});
      b.row({std::to_string(key.first), std::to_string(key.second), std::to_string(n)});
    }
    out.result["bigraded"] = rows;
    out.text += "\n" + b.str();
  }
  return out;
}

inline Output cmd_loop(const ComplexDocument& doc, int max_degree, const CobarOptions& opts) {
  if (max_degree < 1) throw InputError("option --max-degree: must be at least 1");
  auto k = to_complex(doc);
  auto loop = loop_homology(k, max_degree, opts);
  auto gp = graph_product_dims(k, max_degree);
  std::optional<std::pair<int, std::size_t>> div;
  for (int d = 0; d <= max_degree && !div; ++d) {
    if (loop.at(d) > gp.at(d)) div = std::make_pair(d, loop.at(d) - gp.at(d));
  }
  Output out;
  out.result["max_degree"] = max_degree;
  out.result["loop_homology"] = dims_json(loop);
  out.result["graph_product"] = dims_json(gp);
  out.result["divergence"] =
      div ? json{{"degree", div->first}, {"excess", exact(std::uint64_t{div->second})}}
          : json(nullptr);
  Table t;
  t.row({"degree", "loop", "graph-product"});
  for (int d = 0; d <= max_degree; ++d) {
    t.row({std::to_string(d), std::to_string(loop.at(d)), std::to_string(gp.at(d))});
  }
  out.text = t.str() + "\n";
  Table s;
  s.row({"divergence", div ? "degree " + std::to_string(div->first) + ", excess " +
                                 std::to_string(div->second)
                           : "none through degree " + std::to_string(max_degree)});
  if (is_flag(k)) {
    auto series = flag_loop_series(k);
    auto coeffs = series_expand(series, static_cast<std::size_t>(max_degree));
    json c = json::array();
    std::vector<std::string> ct;
    for (const auto& x : coeffs) {
      c.push_back(exact(x));
      ct.push_back(x.str());
    }
    out.result["flag_series"] = {{"numerator", series.numerator().to_string()},
                                 {"denominator", series.denominator().to_string()},
                                 {"expansion", c}};
    s.row({"flag series", series.to_string()});
    s.row({"expansion", join(ct)});
  } else {
    out.result["flag_series"] = nullptr;
  }
  out.text += s.str();
  return out;
}

/// A JSON integer matrix, either bare or under the key "lambda".
inline std::vector<std::vector<long>> parse_lambda(const std::string& text) {
  json j = detail::parse_json(text);
  if (j.is_object()) {
    if (!j.contains("lambda")) throw InputError("field lambda: missing");
    j = j["lambda"];
  }
  if (!j.is_array()) throw InputError("field lambda: expected an array of rows");
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "lambda[" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw InputError("field " + where + ": expected an array");
    std::vector<long> row;
    for (std::size_t c = 0; c < j[i].size(); ++c) {
      row.push_back(detail::as_integer(j[i][c], where + "[" + std::to_string(c) + "]"));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Output cmd_quasitoric(const ComplexDocument& doc,
                             const std::vector<std::vector<long>>& lambda) {
  auto k = to_complex(doc);
  const int n = k.dimension() + 1;
  if (static_cast<int>(lambda.size()) != n) {
    throw InputError("field lambda: expected " + std::to_string(n) + " rows (dim K + 1), got " +
                     std::to_string(lambda.size()));
  }
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (static_cast<int>(lambda[i].size()) != doc.m) {
      throw InputError("field lambda[" + std::to_string(i) + "]: expected " +
                       std::to_string(doc.m) + " entries, got " +
                       std::to_string(lambda[i].size()));
    }
  }
  auto q = lsop_quotient(k, lambda);
  auto fh = f_h_vectors(k);
  bool matches = q.finite;
  for (std::size_t i = 0; i < fh.h.size() && matches; ++i) {
    auto it = q.dims.find(static_cast<int>(i));
    matches = it != q.dims.end() && static_cast<std::int64_t>(it->second) == fh.h[i];
  }
  for (const auto& [d, dim] : q.dims) {
    if (d >= static_cast<int>(fh.h.size()) && dim != 0) matches = false;
  }
  Output out;
  out.result["dims"] = dims_json(q.dims);
  out.result["finite"] = q.finite;
  out.result["total"] = q.finite ? exact(std::uint64_t{q.total()}) : json(nullptr);
  out.result["h_vector"] = fh.h;
  out.result["matches_h_vector"] = matches;
  Table t;
  t.row({"degree", "dim", "h"});
  for (const auto& [d, dim] : q.dims) {
    std::string h = d < static_cast<int>(fh.h.size())
                        ? std::to_string(fh.h[static_cast<std::size_t>(d)])
                        : "0";
    t.row({std::to_string(d), std::to_string(dim), h});
  }
  Table s;
  s.row({"finite", q.finite ? "yes" : "no"});
  if (q.finite) s.row({"total", std::to_string(q.total())});
  s.row({"matches h-vector", matches ? "yes" : "no"});
  out.text = t.str() + "\n" + s.str();
  return out;
}

inline Output cmd_verify(const ComplexDocument& doc, const VerifyOptions& opts) {
  if (opts.max_degree < 2) throw InputError("option --max-degree: must be at least 2");
  auto report = verify_complex(to_complex(doc), opts);
  Output out;
  json checks = json::array();
  Table t;
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    t.row({c.name, c.passed ? "pass" : "FAIL", c.detail});
  }
  out.result["checks"] = checks;
  out.result["passed"] = report.passed();
  out.result["max_degree"] = opts.max_degree;
  out.text = t.str() + (report.passed() ? "all checks passed\n" : "some checks FAILED\n");
  out.exit_code = report.passed() ? ok : verify_failed;
  return out;
}

/// The envelope written with --format json.
inline json result_document(const std::string& command, const ComplexDocument& doc,
                            const Output& out, double timing_ms) {
  return {{"command", command},
          {"input_digest", input_digest(doc)},
          {"result", out.result},
          {"timing_ms", timing_ms},
          {"version", TORIC_VERSION}};
}

}  // namespace toric::cli
