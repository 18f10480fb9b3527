// JSON serialization of category models and complexes, and the tiny
// object-expression grammar used on the command line.
//
// Model files: {"simples": [{name, parity, rank}], "unit": name,
// "fusion": [{left, right, summands, symmetry_matrix}],
// "bimodule": [{source, target, dim, basis_names}],
// "duals": [{simple, dual, unit_summand, coev, ev}] (optional)}.
// Rationals are "p/q" strings (bare integers also accepted on input);
// matrices are row-major nested arrays.  Unit fusion rows may be omitted.
//
// Complex files: {"components": {"<degree>": {simple: mult}},
// "differentials": {"<degree>": {"ss": {simple: matrix},
// "nil": {basis_name: matrix}}}} — nil blocks are keyed by the globally
// unique bimodule basis names.

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "weightcat/category.hpp"
#include "weightcat/complex.hpp"
#include "weightcat/errors.hpp"
#include "weightcat/morphism.hpp"

namespace weightcat {

namespace detail {

inline Scalar json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
  throw ParseError(where + ": expected a rational \"p/q\" string");
}

inline Mat json_matrix(const nlohmann::json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a matrix (array of rows)");
  std::vector<std::vector<Scalar>> rows;
  std::size_t cols = 0;
  for (const auto& row : v) {
    if (!row.is_array()) throw ParseError(where + ": expected a matrix row (array)");
    std::vector<Scalar> r;
    for (const auto& e : row) r.push_back(json_rational(e, where));
    if (!rows.empty() && r.size() != cols)
      throw ParseError(where + ": ragged matrix rows");
    cols = r.size();
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return Mat(0, 0);
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

inline nlohmann::ordered_json matrix_json(const Mat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline const nlohmann::json& json_field(const nlohmann::json& v, const std::string& key,
                                        const std::string& where) {
  auto it = v.find(key);
  if (it == v.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string json_string(const nlohmann::json& v, const std::string& key,
                               const std::string& where) {
  const nlohmann::json& f = json_field(v, key, where);
  if (!f.is_string()) throw ParseError(where + ": field \"" + key + "\" must be a string");
  return f.get<std::string>();
}

inline nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(what + ": malformed JSON");
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return out.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Category models.

inline CategorySpec spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("model: top level must be an object");
  CategorySpec spec;

  const nlohmann::json& simples = detail::json_field(doc, "simples", "model");
  if (!simples.is_array()) throw ParseError("model: \"simples\" must be a list");
  for (const auto& s : simples) {
    SimpleObject simple;
    simple.name = detail::json_string(s, "name", "simple");
    const std::string parity = detail::json_string(s, "parity", "simple " + simple.name);
    if (parity == "even")
      simple.parity = Parity::Even;
    else if (parity == "odd")
      simple.parity = Parity::Odd;
    else
      throw ParseError("simple " + simple.name + ": parity must be \"even\" or \"odd\"");
    const nlohmann::json& rank = detail::json_field(s, "rank", "simple " + simple.name);
    if (!rank.is_number_integer() || rank.get<std::int64_t>() <= 0)
      throw ParseError("simple " + simple.name + ": rank must be positive");
    simple.rank = (int)rank.get<std::int64_t>();
    spec.simples.push_back(std::move(simple));
  }

  spec.unit = detail::json_string(doc, "unit", "model");

  if (doc.contains("fusion")) {
    const nlohmann::json& fusion = doc.at("fusion");
    if (!fusion.is_array()) throw ParseError("model: \"fusion\" must be a list");
    for (const auto& row : fusion) {
      const std::string left = detail::json_string(row, "left", "fusion row");
      const std::string right = detail::json_string(row, "right", "fusion row");
      const std::string where = "fusion (" + left + ", " + right + ")";
      FusionEntry entry;
      const nlohmann::json& summands = detail::json_field(row, "summands", where);
      if (!summands.is_array()) throw ParseError(where + ": \"summands\" must be a list");
      for (const auto& t : summands) {
        if (!t.is_string()) throw ParseError(where + ": summand names must be strings");
        entry.summands.push_back(t.get<std::string>());
      }
      entry.symmetry =
          detail::json_matrix(detail::json_field(row, "symmetry_matrix", where), where);
      spec.fusion[{left, right}] = std::move(entry);
    }
  }

  if (doc.contains("bimodule")) {
    const nlohmann::json& bim = doc.at("bimodule");
    if (!bim.is_array()) throw ParseError("model: \"bimodule\" must be a list");
    for (const auto& row : bim) {
      const std::string source = detail::json_string(row, "source", "bimodule row");
      const std::string target = detail::json_string(row, "target", "bimodule row");
      const std::string where = "bimodule (" + source + " -> " + target + ")";
      BimoduleEntry entry;
      const nlohmann::json& dim = detail::json_field(row, "dim", where);
      if (!dim.is_number_integer() || dim.get<std::int64_t>() < 0)
        throw ParseError(where + ": dim must be a non-negative integer");
      entry.dim = (int)dim.get<std::int64_t>();
      const nlohmann::json& names = detail::json_field(row, "basis_names", where);
      if (!names.is_array()) throw ParseError(where + ": \"basis_names\" must be a list");
      for (const auto& n : names) {
        if (!n.is_string()) throw ParseError(where + ": basis names must be strings");
        entry.basis_names.push_back(n.get<std::string>());
      }
      spec.bimodule[{source, target}] = std::move(entry);
    }
  }

  if (doc.contains("duals")) {
    const nlohmann::json& duals = doc.at("duals");
    if (!duals.is_array()) throw ParseError("model: \"duals\" must be a list");
    for (const auto& row : duals) {
      const std::string name = detail::json_string(row, "simple", "dual row");
      const std::string where = "dual data for '" + name + "'";
      DualEntry d;
      d.dual = detail::json_string(row, "dual", where);
      d.unit_summand = detail::json_string(row, "unit_summand", where);
      d.coev = detail::json_rational(detail::json_field(row, "coev", where), where);
      d.ev = detail::json_rational(detail::json_field(row, "ev", where), where);
      spec.duals[name] = std::move(d);
    }
  }

  spec.ensure_unit_rows();
  ValidationReport rep = validate_spec(spec);
  if (!rep.ok) {
    std::string all;
    for (const auto& p : rep.problems) {
      if (!all.empty()) all += "; ";
      all += p;
    }
    throw IncoherentSpec(all);
  }
  return spec;
}

inline CategorySpec load_spec(const std::string& path) {
  return spec_from_json(detail::parse_json_text(detail::read_file(path), path));
}

inline nlohmann::ordered_json spec_to_json(const CategorySpec& spec) {
  nlohmann::ordered_json doc;
  doc["simples"] = nlohmann::ordered_json::array();
  for (const auto& s : spec.simples)
    doc["simples"].push_back({{"name", s.name},
                              {"parity", parity_name(s.parity)},
                              {"rank", s.rank}});
  doc["unit"] = spec.unit;
  doc["fusion"] = nlohmann::ordered_json::array();
  for (const auto& [key, entry] : spec.fusion)
    doc["fusion"].push_back({{"left", key.first},
                             {"right", key.second},
                             {"summands", entry.summands},
                             {"symmetry_matrix", detail::matrix_json(entry.symmetry)}});
  doc["bimodule"] = nlohmann::ordered_json::array();
  for (const auto& [key, entry] : spec.bimodule)
    doc["bimodule"].push_back({{"source", key.first},
                               {"target", key.second},
                               {"dim", entry.dim},
                               {"basis_names", entry.basis_names}});
  if (!spec.duals.empty()) {
    doc["duals"] = nlohmann::ordered_json::array();
    for (const auto& [name, d] : spec.duals)
      doc["duals"].push_back({{"simple", name},
                              {"dual", d.dual},
                              {"unit_summand", d.unit_summand},
                              {"coev", d.coev.str()},
                              {"ev", d.ev.str()}});
  }
  return doc;
}

inline void save_spec(const CategorySpec& spec, const std::string& path) {
  detail::write_file(path, spec_to_json(spec).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Object expressions: name | expr "+" expr | n "*" name.

inline Obj parse_obj_expr(const CategorySpec& spec, const std::string& text) {
  Obj out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto parse_term = [&]() -> Obj {
    skip_ws();
    int mult = 1;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      mult = std::stoi(text.substr(start, pos - start));
      skip_ws();
      if (pos >= text.size() || text[pos] != '*')
        throw ParseError("object expression: expected '*' after multiplicity in '" + text +
                         "'");
      ++pos;
      skip_ws();
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != ' ' && text[pos] != '\t')
      ++pos;
    const std::string name = text.substr(start, pos - start);
    if (name.empty())
      throw ParseError("object expression: missing simple name in '" + text + "'");
    if (!spec.find_simple(name))
      throw ParseError("object expression: unknown simple '" + name + "'");
    return Obj::of(name, mult);
  };
  out = out + parse_term();
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '+')
      throw ParseError("object expression: expected '+' at position " +
                       std::to_string(pos) + " in '" + text + "'");
    ++pos;
    out = out + parse_term();
    skip_ws();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complexes.

namespace detail {

// Resolves a globally unique bimodule basis name to its (source, target,
// index) coordinates.
inline bool find_nil_basis(const CategorySpec& spec, const std::string& name,
                           std::string& src, std::string& tgt, int& k) {
  for (const auto& [key, entry] : spec.bimodule)
    for (std::size_t i = 0; i < entry.basis_names.size(); ++i)
      if (entry.basis_names[i] == name) {
        src = key.first;
        tgt = key.second;
        k = (int)i;
        return true;
      }
  return false;
}

inline int json_degree_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    int d = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return d;
  } catch (const std::exception&) {
    throw ParseError(where + ": degree key '" + key + "' is not an integer");
  }
}

inline Mor json_morphism(const CategorySpec& spec, const nlohmann::json& v, const Obj& src,
                         const Obj& tgt, const std::string& where) {
  if (!v.is_object()) throw ParseError(where + ": morphism must be an object");
  Mor m = mor_zero(src, tgt);
  if (v.contains("ss")) {
    const nlohmann::json& ss = v.at("ss");
    if (!ss.is_object()) throw ParseError(where + ": \"ss\" must be an object");
    for (const auto& [s, block] : ss.items()) {
      if (!spec.find_simple(s)) throw ParseError(where + ": unknown simple '" + s + "'");
      Mat b = json_matrix(block, where + " ss block " + s);
      try {
        m.set_ss(s, std::move(b));
      } catch (const ShapeError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  if (v.contains("nil")) {
    const nlohmann::json& nil = v.at("nil");
    if (!nil.is_object()) throw ParseError(where + ": \"nil\" must be an object");
    for (const auto& [name, block] : nil.items()) {
      std::string s, t;
      int k = 0;
      if (!find_nil_basis(spec, name, s, t, k))
        throw ParseError(where + ": unknown bimodule basis name '" + name + "'");
      Mat b = json_matrix(block, where + " nil block " + name);
      try {
        m.set_nil(spec, s, t, k, std::move(b));
      } catch (const ShapeError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  return m;
}

}  // namespace detail

inline Complex complex_from_json(const CategorySpec& spec, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("complex: top level must be an object");
  Complex x;
  const nlohmann::json& comps = detail::json_field(doc, "components", "complex");
  if (!comps.is_object()) throw ParseError("complex: \"components\" must be an object");
  for (const auto& [key, val] : comps.items()) {
    const int degree = detail::json_degree_key(key, "complex components");
    if (!val.is_object())
      throw ParseError("complex degree " + key + ": component must be an object");
    Obj c;
    for (const auto& [s, mult] : val.items()) {
      if (!spec.find_simple(s))
        throw ParseError("complex degree " + key + ": unknown simple '" + s + "'");
      if (!mult.is_number_integer() || mult.get<std::int64_t>() < 0)
        throw ParseError("complex degree " + key + ": multiplicity of '" + s +
                         "' must be a non-negative integer");
      c = c + Obj::of(s, (int)mult.get<std::int64_t>());
    }
    if (!c.is_zero()) x.comp[degree] = std::move(c);
  }
  if (doc.contains("differentials")) {
    const nlohmann::json& diffs = doc.at("differentials");
    if (!diffs.is_object())
      throw ParseError("complex: \"differentials\" must be an object");
    for (const auto& [key, val] : diffs.items()) {
      const int degree = detail::json_degree_key(key, "complex differentials");
      Mor d = detail::json_morphism(spec, val, x.at(degree), x.at(degree + 1),
                                    "complex differential at degree " + key);
      if (!d.is_zero()) x.diff[degree] = std::move(d);
    }
  }
  try {
    validate_complex(x);
  } catch (const ShapeError& e) {
    throw ParseError(std::string("complex: ") + e.what());
  }
  return x;
}

inline Complex load_complex(const CategorySpec& spec, const std::string& path) {
  return complex_from_json(spec, detail::parse_json_text(detail::read_file(path), path));
}

inline nlohmann::ordered_json complex_to_json(const CategorySpec& spec, const Complex& x) {
  nlohmann::ordered_json doc;
  doc["components"] = nlohmann::ordered_json::object();
  for (const auto& [i, c] : x.comp) {
    nlohmann::ordered_json comp = nlohmann::ordered_json::object();
    for (const auto& [s, m] : c.mult) comp[s] = m;
    doc["components"][std::to_string(i)] = std::move(comp);
  }
  doc["differentials"] = nlohmann::ordered_json::object();
  for (const auto& [i, d] : x.diff) {
    if (d.is_zero()) continue;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    if (!d.ss.empty()) {
      nlohmann::ordered_json ss = nlohmann::ordered_json::object();
      for (const auto& [s, block] : d.ss) ss[s] = detail::matrix_json(block);
      m["ss"] = std::move(ss);
    }
    if (!d.nil.empty()) {
      nlohmann::ordered_json nil = nlohmann::ordered_json::object();
      for (const auto& [key, blocks] : d.nil) {
        const auto& names = spec.bimodule_names(key.first, key.second);
        for (std::size_t k = 0; k < blocks.size() && k < names.size(); ++k)
          if (!blocks[k].is_zero()) nil[names[k]] = detail::matrix_json(blocks[k]);
      }
      m["nil"] = std::move(nil);
    }
    doc["differentials"][std::to_string(i)] = std::move(m);
  }
  if (doc["differentials"].empty())
    doc.erase("differentials");
  return doc;
}

}  // namespace weightcat
