#include "spinlab/geometry_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "spinlab/clifford.hpp"

namespace spinlab {

namespace {

using nlohmann::json;

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.contains(key)) throw SchemaError(at(ptr, key), "required field is missing");
  return obj.at(key);
}

int as_int(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 1e9) return static_cast<int>(d);
  }
  throw SchemaError(ptr, "expected an integer");
}

double as_number(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw SchemaError(ptr, "expected a number");
  return v.get<double>();
}

const json& as_array(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw SchemaError(ptr, "expected an array");
  return v;
}

const json& as_object(const json& v, const std::string& ptr) {
  if (!v.is_object()) throw SchemaError(ptr, "expected an object");
  return v;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& ptr) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw SchemaError(at(ptr, key), "unknown field");
  }
}

std::vector<int> index_list(const json& v, std::size_t length, int n, const std::string& ptr) {
  as_array(v, ptr);
  if (v.size() != length)
    throw SchemaError(ptr, "expected " + std::to_string(length) + " indices");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int idx = as_int(v[i], at(ptr, i));
    if (idx < 1 || idx > n)
      throw SchemaError(at(ptr, i), "index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    out.push_back(idx);
  }
  return out;
}

Form parse_3form(const json& v, int n, const std::string& base) {
  Form out(n);
  const auto& terms = as_array(v, base);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto ptr = at(base, t);
    as_object(terms[t], ptr);
    reject_unknown(terms[t], {"indices", "value"}, ptr);
    auto idx = index_list(require(terms[t], "indices", ptr), 3, n, at(ptr, "indices"));
    if (!(idx[0] < idx[1] && idx[1] < idx[2]))
      throw SchemaError(at(ptr, "indices"), "torsion indices must be strictly increasing");
    out.add_term(std::move(idx), as_number(require(terms[t], "value", ptr), at(ptr, "value")));
  }
  return out;
}

Json form_terms(const Form& f) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms()) terms.push_back({{"indices", idx}, {"value", c}});
  return terms;
}

}  // namespace

Geometry parse_geometry(const json& doc) {
  as_object(doc, "");
  reject_unknown(doc, {"name", "n", "partition", "torsion", "curvature", "homogeneous", "scalars",
                      "reference_torsion"},
                 "");
  Geometry g;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SchemaError("/name", "expected a string");
    g.name = doc["name"].get<std::string>();
  }
  g.n = as_int(require(doc, "n", ""), "/n");
  if (g.n < 1) throw SchemaError("/n", "frame dimension must be positive");
  if (g.n > kMaxFrameDim) throw SchemaError("/n", "frame dimension above " + std::to_string(kMaxFrameDim));

  const auto& part = as_array(require(doc, "partition", ""), "/partition");
  if (part.empty()) throw SchemaError("/partition", "at least one block is required");
  std::set<int> covered;
  for (std::size_t b = 0; b < part.size(); ++b) {
    const auto ptr = at("/partition", b);
    as_array(part[b], ptr);
    if (part[b].empty()) throw SchemaError(ptr, "empty block");
    std::vector<int> block;
    for (std::size_t i = 0; i < part[b].size(); ++i) {
      const int idx = as_int(part[b][i], at(ptr, i));
      if (idx < 1 || idx > g.n)
        throw SchemaError(at(ptr, i), "index " + std::to_string(idx) + " outside 1.." + std::to_string(g.n));
      if (!covered.insert(idx).second)
        throw SchemaError(at(ptr, i), "index " + std::to_string(idx) + " appears in more than one block");
      block.push_back(idx);
    }
    g.partition.push_back(std::move(block));
  }
  if (static_cast<int>(covered.size()) != g.n)
    throw SchemaError("/partition", "blocks do not cover 1.." + std::to_string(g.n));

  g.torsion = parse_3form(require(doc, "torsion", ""), g.n, "/torsion");
  if (doc.contains("reference_torsion"))
    g.reference_torsion = parse_3form(doc["reference_torsion"], g.n, "/reference_torsion");

  if (doc.contains("curvature") && doc.contains("homogeneous"))
    throw SchemaError("/homogeneous", "'curvature' and 'homogeneous' are mutually exclusive");

  if (doc.contains("curvature")) {
    const auto& recs = as_array(doc["curvature"], "/curvature");
    std::vector<CurvatureRecord> out;
    for (std::size_t r = 0; r < recs.size(); ++r) {
      const auto ptr = at("/curvature", r);
      as_object(recs[r], ptr);
      reject_unknown(recs[r], {"indices", "value"}, ptr);
      const auto idx = index_list(require(recs[r], "indices", ptr), 4, g.n, at(ptr, "indices"));
      out.push_back({idx[0], idx[1], idx[2], idx[3],
                     as_number(require(recs[r], "value", ptr), at(ptr, "value"))});
    }
    g.curvature = std::move(out);
  }

  if (doc.contains("homogeneous")) {
    const std::string base = "/homogeneous";
    const auto& h = as_object(doc["homogeneous"], base);
    reject_unknown(h, {"h_dim", "metric_diag", "brackets"}, base);
    HomogeneousData data;
    data.h_dim = as_int(require(h, "h_dim", base), at(base, "h_dim"));
    if (data.h_dim < 0) throw SchemaError(at(base, "h_dim"), "must be nonnegative");
    const int dim_g = data.h_dim + g.n;
    if (h.contains("metric_diag")) {
      const auto& m = as_array(h["metric_diag"], at(base, "metric_diag"));
      if (static_cast<int>(m.size()) != g.n)
        throw SchemaError(at(base, "metric_diag"), "expected n = " + std::to_string(g.n) + " entries");
      for (std::size_t i = 0; i < m.size(); ++i) {
        const double v = as_number(m[i], at(at(base, "metric_diag"), i));
        if (!(v > 0)) throw SchemaError(at(at(base, "metric_diag"), i), "metric entries must be positive");
        data.metric_diag.push_back(v);
      }
    }
    const auto& br = as_array(require(h, "brackets", base), at(base, "brackets"));
    for (std::size_t b = 0; b < br.size(); ++b) {
      const auto ptr = at(at(base, "brackets"), b);
      as_object(br[b], ptr);
      reject_unknown(br[b], {"i", "j", "k", "value"}, ptr);
      BracketRecord rec{as_int(require(br[b], "i", ptr), at(ptr, "i")),
                        as_int(require(br[b], "j", ptr), at(ptr, "j")),
                        as_int(require(br[b], "k", ptr), at(ptr, "k")),
                        as_number(require(br[b], "value", ptr), at(ptr, "value"))};
      for (auto [key, v] : {std::pair{"i", rec.i}, std::pair{"j", rec.j}, std::pair{"k", rec.k}})
        if (v < 1 || v > dim_g)
          throw SchemaError(at(ptr, key), "index outside 1.." + std::to_string(dim_g));
      data.brackets.push_back(rec);
    }
    g.homogeneous = std::move(data);
  }

  if (doc.contains("scalars")) {
    const std::string base = "/scalars";
    const auto& s = as_object(doc["scalars"], base);
    reject_unknown(s, {"scal_g_min", "t_norm2", "mu2_list", "provenance"}, base);
    GivenScalars given;
    if (s.contains("scal_g_min")) given.scal_g_min = as_number(s["scal_g_min"], at(base, "scal_g_min"));
    if (s.contains("t_norm2")) {
      given.t_norm2 = as_number(s["t_norm2"], at(base, "t_norm2"));
      if (*given.t_norm2 < 0) throw SchemaError(at(base, "t_norm2"), "must be nonnegative");
    }
    if (s.contains("mu2_list")) {
      const auto& m = as_array(s["mu2_list"], at(base, "mu2_list"));
      if (m.empty()) throw SchemaError(at(base, "mu2_list"), "must not be empty");
      std::vector<double> mu2;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const double v = as_number(m[i], at(at(base, "mu2_list"), i));
        if (v < 0) throw SchemaError(at(at(base, "mu2_list"), i), "mu^2 values must be nonnegative");
        mu2.push_back(v);
      }
      given.mu2_list = std::move(mu2);
    }
    if (s.contains("provenance")) {
      if (!s["provenance"].is_string()) throw SchemaError(at(base, "provenance"), "expected a string");
      given.provenance = s["provenance"].get<std::string>();
    }
    g.scalars = std::move(given);
  }
  return g;
}

Geometry parse_geometry_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_geometry(doc);
}

Json geometry_to_json(const Geometry& g) {
  Json doc = Json::object();
  if (!g.name.empty()) doc["name"] = g.name;
  doc["n"] = g.n;
  doc["partition"] = g.partition;
  doc["torsion"] = form_terms(g.torsion);
  if (g.curvature) {
    Json recs = Json::array();
    for (const auto& r : *g.curvature)
      recs.push_back({{"indices", {r.p, r.q, r.r, r.s}}, {"value", r.value}});
    doc["curvature"] = recs;
  }
  if (g.homogeneous) {
    Json h = Json::object();
    h["h_dim"] = g.homogeneous->h_dim;
    if (!g.homogeneous->metric_diag.empty()) h["metric_diag"] = g.homogeneous->metric_diag;
    Json br = Json::array();
    for (const auto& b : g.homogeneous->brackets)
      br.push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"value", b.value}});
    h["brackets"] = br;
    doc["homogeneous"] = h;
  }
  if (g.scalars) {
    Json s = Json::object();
    if (g.scalars->scal_g_min) s["scal_g_min"] = *g.scalars->scal_g_min;
    if (g.scalars->t_norm2) s["t_norm2"] = *g.scalars->t_norm2;
    if (g.scalars->mu2_list) s["mu2_list"] = *g.scalars->mu2_list;
    if (!g.scalars->provenance.empty()) s["provenance"] = g.scalars->provenance;
    doc["scalars"] = s;
  }
  if (g.reference_torsion) doc["reference_torsion"] = form_terms(*g.reference_torsion);
  return doc;
}

Geometry to_geometry(const CatalogEntry& e) {
  Geometry g;
  g.name = e.name;
  g.n = e.n;
  g.partition = e.blocks;
  g.torsion = e.torsion;
  g.scalars = e.given;
  if (e.reference_torsion) g.reference_torsion = e.reference_torsion->to_real();
  if (const auto* r = std::get_if<AlgCurvature>(&e.curvature_source)) {
    std::vector<CurvatureRecord> recs;
    const int n = r->dim();
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q)
        for (int s1 = 1; s1 <= n; ++s1)
          for (int s2 = s1 + 1; s2 <= n; ++s2) {
            if (std::pair{s1, s2} < std::pair{p, q}) continue;
            const double v = (*r)(p, q, s1, s2);
            if (v != 0.0) recs.push_back({p, q, s1, s2, v});
          }
    g.curvature = std::move(recs);
  } else if (const auto* h = std::get_if<HomogeneousSpace>(&e.curvature_source)) {
    g.homogeneous = HomogeneousData{h->dim_h(), h->records(),
                                    h->metric_diag() == std::vector<double>(h->dim(), 1.0)
                                        ? std::vector<double>{}
                                        : h->metric_diag()};
  }
  return g;
}

namespace {

void write_json(std::ostringstream& os, const Json& v, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent >= 0) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        os << Json(key).dump() << (indent >= 0 ? ": " : ":");
        write_json(os, item, indent, depth + 1);
      }
      pad(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(v.begin(), v.end(),
                                     [](const Json& x) { return x.is_structured(); });
      os << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << (flat || indent < 0 ? ", " : ",");
        if (!flat) pad(depth + 1);
        write_json(os, v[i], indent, depth + 1);
      }
      if (!flat) pad(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        os << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      os << buf;
      return;
    }
    default:
      os << v.dump();
  }
}

}  // namespace

std::string dump_json(const Json& value, int indent) {
  std::ostringstream os;
  write_json(os, value, indent, 0);
  return os.str();
}

}  // namespace spinlab
