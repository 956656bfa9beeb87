#include "vinberg/cone_spec.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vinberg/error.hpp"

namespace vinberg {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

double to_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::SpecError, "not a number: '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::SpecError, "not a number: '" + s + "'");
  return v;
}

std::vector<double> values_of(const json& v, const std::string& key) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) throw Error(ErrorCode::SpecError, "non-numeric value under '" + key + "'");
      out.push_back(x.get<double>());
    }
    return out;
  }
  throw Error(ErrorCode::SpecError, "value under '" + key + "' must be a number or an array");
}

Association association_from_json(const json& obj, const std::string& what) {
  if (!obj.is_object()) throw Error(ErrorCode::SpecError, what + " must be an object");
  Association a;
  for (auto it = obj.begin(); it != obj.end(); ++it) a[it.key()] = values_of(it.value(), it.key());
  return a;
}

int label_index(const Poset& p, const std::string& label) {
  const int i = p.find(label);
  if (i < 0) throw Error(ErrorCode::SpecError, "unknown label '" + label + "'");
  return i;
}

// "a|b" -> (hi, lo) with lo < hi in the poset.
std::pair<int, int> pair_key(const Poset& p, const std::string& key) {
  const auto parts = split(key, '|');
  if (parts.size() != 2) throw Error(ErrorCode::SpecError, "pair key '" + key + "' must look like a|b");
  int a = label_index(p, parts[0]), b = label_index(p, parts[1]);
  if (!p.less(a, b) && !p.less(b, a))
    throw Error(ErrorCode::SpecError, "pair key '" + key + "' names an incomparable pair");
  if (p.less(a, b)) std::swap(a, b);
  return {a, b};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SpecError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Association parse_association(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) return {};
  if (t.front() == '{') {
    try {
      return association_from_json(json::parse(t), "association");
    } catch (const json::exception& e) {
      throw Error(ErrorCode::SpecError, std::string("association is not valid JSON: ") + e.what());
    }
  }
  Association a;
  for (const auto& item : split(t, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::SpecError, "association entry '" + item + "' lacks '='");
    const std::string key = trim(std::string_view(item).substr(0, eq));
    std::vector<double> vals;
    for (const auto& v : split(std::string_view(item).substr(eq + 1), ':')) vals.push_back(to_number(v));
    a[key] = vals;
  }
  return a;
}

ConeSpec parse_cone_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SpecError, std::string("cone spec is not valid JSON: ") + e.what());
  }
  const Poset p = parse_poset(text);

  std::map<std::pair<int, int>, int> dims;
  if (doc.contains("dims")) {
    if (!doc["dims"].is_object()) throw Error(ErrorCode::SpecError, "\"dims\" must be an object");
    for (auto it = doc["dims"].begin(); it != doc["dims"].end(); ++it) {
      if (!it.value().is_number_integer()) throw Error(ErrorCode::SpecError, "dims must be positive integers");
      dims[pair_key(p, it.key())] = it.value().get<int>();
    }
  }
  const DimensionSystem ds = dims.empty() ? unit_dimensions(p) : make_dimensions(p, dims);

  StructureConstants sc;
  if (doc.contains("structure")) {
    const json& s = doc["structure"];
    if (s.is_string()) {
      if (s.get<std::string>() != "scalar") throw Error(ErrorCode::SpecError, "unknown structure preset '" + s.get<std::string>() + "'");
    } else if (s.is_object()) {
      sc.scalar = false;
      if (s.contains("involutions"))
        for (const auto& [key, vals] : association_from_json(s["involutions"], "\"involutions\""))
          sc.involutions[pair_key(p, key)] = vals;
      if (s.contains("products"))
        for (const auto& [key, vals] : association_from_json(s["products"], "\"products\"")) {
          const auto parts = split(key, '|');
          if (parts.size() != 3) throw Error(ErrorCode::SpecError, "product key '" + key + "' must look like h|m|l");
          sc.products[{label_index(p, parts[0]), label_index(p, parts[1]), label_index(p, parts[2])}] = vals;
        }
    } else {
      throw Error(ErrorCode::SpecError, "\"structure\" must be \"scalar\" or an object");
    }
  }

  ConeSpec spec{build_algebra(p, ds, sc), std::nullopt, std::nullopt};
  if (doc.contains("multiplier")) spec.multiplier = association_from_json(doc["multiplier"], "\"multiplier\"");
  if (doc.contains("theta")) spec.theta = association_from_json(doc["theta"], "\"theta\"");
  return spec;
}

ConeSpec load_cone_spec(const std::string& path) { return parse_cone_spec(read_file(path)); }

Multiplier multiplier_from(const Algebra& alg, const Association& a) {
  Multiplier chi(alg.size(), 0.0);
  for (const auto& [key, vals] : a) {
    const int i = label_index(alg.poset(), key);
    if (vals.size() != 1) throw Error(ErrorCode::SpecError, "multiplier entry '" + key + "' must be a single number");
    chi[i] = vals[0];
  }
  return chi;
}

Element hermitian_from(const AlgebraPtr& alg, const Association& a, double diagonal_default) {
  const Poset& p = alg->poset();
  Element x(alg);
  for (int i = 0; i < alg->size(); ++i) x.diag(i) = diagonal_default;
  for (const auto& [key, vals] : a) {
    if (key.find('|') == std::string::npos) {
      if (vals.size() != 1) throw Error(ErrorCode::SpecError, "diagonal entry '" + key + "' must be a single number");
      x.diag(label_index(p, key)) = vals[0];
      continue;
    }
    const auto [hi, lo] = pair_key(p, key);
    if (static_cast<int>(vals.size()) != alg->block_dim(hi, lo))
      throw Error(ErrorCode::SpecError, "entry '" + key + "' needs " + std::to_string(alg->block_dim(hi, lo)) + " values");
    double* lower = x.block(hi, lo);
    std::copy(vals.begin(), vals.end(), lower);
  }
  // Fill the upper blocks from the lower ones so the element is Hermitian.
  return from_hermitian_coords(alg, hermitian_coords(x));
}

std::string coordinate_name(const Algebra& alg, int c) {
  const HermitianCoord& h = alg.hermitian_basis()[c];
  const Poset& p = alg.poset();
  if (h.hi == h.lo) return p.label(h.hi);
  std::string s = p.label(h.hi) + "|" + p.label(h.lo);
  if (alg.block_dim(h.hi, h.lo) > 1) s += "#" + std::to_string(h.component);
  return s;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace vinberg
