#include "spinlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace spinlab {

std::string format_number(double v) {
  if (std::abs(v) < 1e-12) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

Json terms_json(const Form& f) {
  Json out = Json::array();
  for (const auto& [idx, c] : f.terms()) out.push_back({{"indices", idx}, {"value", c}});
  return out;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json symmetry_json(const SymmetryReport& s) {
  return {{"first_pair_antisymmetry", s.first_pair_antisymmetry},
          {"second_pair_antisymmetry", s.second_pair_antisymmetry},
          {"pair_symmetry", s.pair_symmetry}};
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + format_number(values[i]);
  return out;
}

std::string form_text(const Form& f) { return to_string(f.pruned(1e-12)); }

std::string undefined_reason(const std::string& which, const BoundsInput<double>& in) {
  if (which == "beta_split") return "undefined (n_k = 1)";
  return in.n == 3 ? "undefined (n=3)" : "undefined";
}

class Table {
 public:
  void title(const std::string& t) {
    if (!first_) os_ << '\n';
    first_ = false;
    os_ << t << '\n';
  }
  void row(const std::string& key, const std::string& value) {
    os_ << "  " << key;
    // Pad by displayed width so labels with Greek letters and accents line up.
    std::size_t width = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
      const auto ch = static_cast<unsigned char>(key[i]);
      const bool combining = ch == 0xCC && i + 1 < key.size() &&
                             static_cast<unsigned char>(key[i + 1]) < 0xB0;  // U+0300..U+032F
      if ((ch & 0xC0) != 0x80 && !combining) ++width;
    }
    for (std::size_t i = width; i < 20; ++i) os_ << ' ';
    os_ << ' ' << value << '\n';
  }
  void line(const std::string& text) { os_ << "  " << text << '\n'; }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
  bool first_ = true;
};

void bounds_rows(Table& t, const BoundsInput<double>& in, const BoundsReport<double>& rep) {
  t.row("n", std::to_string(in.n));
  t.row("n_k", std::to_string(in.largest_block));
  t.row("Scal^g_min", format_number(in.scal_g_min));
  t.row("|T|^2", format_number(in.t_norm2));
  t.row("μ^2", "{" + join_numbers([&] {
          std::vector<double> v;
          for (const auto& [m, b] : rep.per_mu) v.push_back(m);
          return v;
        }()) + "}");
  t.line("β_split = " + (rep.beta_split ? format_number(*rep.beta_split)
                                       : undefined_reason("beta_split", in)));
  t.line("β_univ = " + format_number(rep.beta_univ));
  t.line("β_tw = " + (rep.beta_tw ? format_number(*rep.beta_tw) : undefined_reason("beta_tw", in)));
  t.line("ordering: " + rep.ordering);
  for (const auto& [mu2, beta] : rep.per_mu)
    t.line("β_split(μ^2 = " + format_number(mu2) + ") = " +
           (beta ? format_number(*beta) : undefined_reason("beta_split", in)));
  for (const auto& note : rep.notes) t.line("note: " + note);
}

}  // namespace

Json bounds_json(const BoundsInput<double>& in, const BoundsReport<double>& rep) {
  Json per_mu = Json::array();
  for (const auto& [mu2, beta] : rep.per_mu)
    per_mu.push_back({{"mu2", mu2}, {"beta_split", optional_number(beta)}});
  Json out = Json::object();
  out["inputs"] = {{"n", in.n},
                   {"n_k", in.largest_block},
                   {"block_count", in.block_count},
                   {"scal_g_min", in.scal_g_min},
                   {"t_norm2", in.t_norm2},
                   {"mu2_list", in.mu2_list}};
  out["beta_split"] = optional_number(rep.beta_split);
  if (!rep.beta_split) out["beta_split_status"] = undefined_reason("beta_split", in);
  out["beta_univ"] = rep.beta_univ;
  out["beta_tw"] = optional_number(rep.beta_tw);
  if (!rep.beta_tw) out["beta_tw_status"] = undefined_reason("beta_tw", in);
  out["per_mu"] = per_mu;
  out["ordering"] = rep.ordering;
  out["notes"] = rep.notes;
  return out;
}

std::string bounds_table(const BoundsInput<double>& in, const BoundsReport<double>& rep) {
  Table t;
  t.title("bounds");
  bounds_rows(t, in, rep);
  return t.str();
}

Json report_json(const AnalysisReport& rep) {
  Json out = Json::object();
  out["name"] = rep.name;
  out["n"] = rep.n;
  out["partition"] = rep.partition.blocks();
  out["tolerance"] = rep.tol;

  Json torsion = Json::object();
  torsion["terms"] = terms_json(rep.torsion);
  torsion["norm2"] = rep.norm2;
  const auto exact = exact_form(rep.torsion);
  torsion["integral"] = exact.has_value();
  out["torsion"] = torsion;

  Json split = Json::object();
  split["split_type"] = rep.split_type;
  Json pure = Json::array();
  for (const auto& f : rep.decomposition.pure) pure.push_back(terms_json(f));
  split["pure"] = pure;
  split["two_one"] = terms_json(rep.decomposition.two_one);
  split["mixed"] = terms_json(rep.decomposition.mixed);
  out["split"] = split;

  const auto& c = rep.clifford;
  Json spec = Json::array();
  for (const auto& e : c.spectrum.eigenvalues)
    spec.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  out["clifford"] = {{"spinor_dim", c.spinor_dim},
                     {"self_adjoint_residual", c.self_adjoint_residual},
                     {"spectrum", spec},
                     {"square_identity_residual", c.square_identity_residual},
                     {"projector_residual", c.projector_residual}};
  out["sigma_T"] = terms_json(rep.sigma_t);

  if (rep.curvature) {
    const auto& cs = *rep.curvature;
    Json cj = Json::object();
    cj["source"] = cs.source;
    cj["symmetry"] = symmetry_json(cs.symmetry);
    cj["scal_nabla"] = cs.scal_nabla;
    cj["partial_scal"] = cs.partial_scal;
    cj["ricci_diagonal"] = cs.ricci_diagonal;
    if (cs.blocks)
      cj["block_checks"] = {{"second_pair_cross", cs.blocks->second_pair_cross},
                            {"first_pair_cross", cs.blocks->first_pair_cross},
                            {"ricci_cross", cs.blocks->ricci_cross},
                            {"cross_pair_blocks", cs.blocks->cross_pair_blocks}};
    else
      cj["block_checks"] = nullptr;
    Json st = Json::array();
    for (const auto& f : cs.sigma_tilde) st.push_back(terms_json(f));
    cj["sigma_tilde"] = st;
    cj["sigma_sum_residual"] = optional_number(cs.sigma_sum_residual);
    cj["bianchi"] = {{"expected_constant", kBianchiConstant},
                     {"fitted_constant", cs.bianchi.fitted_constant},
                     {"residual", cs.bianchi.residual},
                     {"alternation_defect", cs.bianchi.alternation_defect}};
    out["curvature"] = cj;
  } else {
    out["curvature"] = nullptr;
  }

  if (rep.homogeneous) {
    const auto& h = *rep.homogeneous;
    out["homogeneous"] = {{"dim_g", h.dim_g},
                          {"dim_h", h.dim_h},
                          {"gram_residual", h.gram_residual},
                          {"jacobi", h.lie.jacobi},
                          {"subalgebra", h.lie.subalgebra},
                          {"reductivity", h.lie.reductivity},
                          {"natural_reductivity", h.lie.natural_reductivity},
                          {"torsion_invariance", h.torsion_invariance},
                          {"curvature_invariance", h.curvature_invariance},
                          {"torsion_match", h.torsion_match},
                          {"scal_g", h.scal_g}};
  } else {
    out["homogeneous"] = nullptr;
  }

  if (rep.reference_match)
    out["reference_torsion"] = {{"max_difference", *rep.reference_match},
                                {"support_match", *rep.reference_support_match}};
  else
    out["reference_torsion"] = nullptr;

  const auto& b = rep.bounds;
  Json bj = b.report ? bounds_json(b.input, *b.report) : Json::object();
  bj["evaluated"] = b.report.has_value();
  bj["scal_source"] = b.scal_source ? Json(*b.scal_source) : Json(nullptr);
  bj["mu2_source"] = b.mu2_source;
  if (!b.report) {
    bj["notes"] = b.notes;
    if (rep.n == 3) bj["beta_tw_status"] = "undefined (n=3)";
  }
  out["bounds"] = bj;

  Json checks = Json::array();
  for (const auto& ch : rep.checks)
    checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
  out["checks"] = checks;
  out["caveats"] = rep.caveats;
  out["passed"] = rep.passed();
  return out;
}

std::string report_table(const AnalysisReport& rep) {
  Table t;
  t.title("geometry " + (rep.name.empty() ? std::string("(unnamed)") : rep.name));
  t.row("n", std::to_string(rep.n));
  t.row("partition", to_string(rep.partition));
  t.row("T", form_text(rep.torsion));
  t.row("|T|^2", format_number(rep.norm2));
  t.line(std::string("split-type: ") + (rep.split_type ? "yes" : "no"));
  if (!rep.split_type) {
    t.row("two-one part", form_text(rep.decomposition.two_one));
    Form pure(rep.n);
    for (const auto& f : rep.decomposition.pure) pure += f;
    t.row("pure part", form_text(pure));
  }

  t.title("clifford");
  const auto& c = rep.clifford;
  t.row("spinor dim", std::to_string(c.spinor_dim));
  t.line("μ ∈ {" + join_numbers(c.spectrum.values()) + "}");
  std::string mult;
  for (const auto& e : c.spectrum.eigenvalues) mult += (mult.empty() ? "" : ", ") + std::to_string(e.multiplicity);
  t.row("multiplicities", mult);
  t.row("σ_T", form_text(rep.sigma_t));

  if (rep.curvature) {
    const auto& cs = *rep.curvature;
    t.title("curvature (" + cs.source + ")");
    t.row("Scal^nabla", format_number(cs.scal_nabla));
    t.row("partial Scal", join_numbers(cs.partial_scal));
    t.row("Ric diagonal", join_numbers(cs.ricci_diagonal));
    for (std::size_t i = 0; i < cs.sigma_tilde.size(); ++i)
      t.row("σ̃^" + std::to_string(i + 1), form_text(cs.sigma_tilde[i]));
  }
  if (rep.homogeneous) {
    const auto& h = *rep.homogeneous;
    t.title("homogeneous");
    t.row("dim g, dim h", std::to_string(h.dim_g) + ", " + std::to_string(h.dim_h));
    t.row("Scal^g", format_number(h.scal_g));
  }

  t.title("bounds");
  const auto& b = rep.bounds;
  if (b.report) {
    bounds_rows(t, b.input, *b.report);
    t.line("Scal^g_min source: " + *b.scal_source);
    t.line("μ^2 source: " + b.mu2_source);
  } else {
    if (rep.n == 3) t.line("β_tw = undefined (n=3)");
    for (const auto& note : b.notes) t.line("note: " + note);
  }

  t.title("checks");
  for (const auto& ch : rep.checks)
    t.line(ch.name + ": " + (ch.passed ? "pass" : "FAIL") + "  (" + ch.detail + ")");
  for (const auto& cv : rep.caveats) t.line("caveat: " + cv);

  t.title(std::string("result: ") + (rep.passed() ? "pass" : "FAIL"));
  return t.str();
}

}  // namespace spinlab
