#include "spinboson/report.hpp"

#include <cmath>
#include <sstream>

#include "spinboson/errors.hpp"

namespace spinboson {
namespace {

Json rationals(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string joined(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + xs[i].to_string();
  return s;
}

std::string number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ConfigError("expected a rational as a string like \"3/2\" or an integer, got " + j.dump());
}

Json to_json(const SectorLabels& s) {
  Json a = Json::array();
  for (const auto& x : s.A) a.push_back(to_json(x));
  return Json{{"j", to_json(s.j)},         {"p", s.p},
              {"lambda", s.lambda},        {"kappa", to_json(s.kappa)},
              {"q", rationals(s.q)},       {"l", rationals(s.l)},
              {"A", a},                    {"N", s.top()},
              {"dim", s.dim}};
}

SectorLabels labels_from_json(const Json& j) {
  SectorLabels s;
  s.j = rational_from_json(j.at("j"));
  s.p = j.at("p").get<int>();
  s.lambda = j.at("lambda").get<int>();
  s.kappa = rational_from_json(j.at("kappa"));
  s.q = rationals_from(j.at("q"));
  s.l = rationals_from(j.at("l"));
  s.A = rationals_from(j.at("A"));
  s.dim = j.at("dim").get<int>();
  return s;
}

Json to_json(const EulerOperator& h) {
  Json out = Json::object();
  const auto polys = extract_polynomials(h);
  for (std::size_t d = 0; d < polys.size(); ++d) out["P_" + std::to_string(d)] = polys[d].coeffs();
  return out;
}

Json to_json(const BetheState& st, int index) {
  Json roots = Json::array();
  for (const auto& a : st.roots) roots.push_back({a.real(), a.imag()});
  Json residuals = Json::array();
  for (const auto& r : st.bae_residuals) residuals.push_back(std::abs(r));
  return Json{{"index", index},
              {"E", st.energy},
              {"eigenvalue", st.eigenvalue},
              {"roots", roots},
              {"residuals", residuals},
              {"residual", st.degenerate_roots ? Json(nullptr) : finite_or_null(st.max_scaled_residual)},
              {"degenerate_roots", st.degenerate_roots},
              {"verified", st.verified},
              {"refined", st.refined},
              {"refine_failed", st.refine_failed},
              {"refine_iterations", st.refine_iterations}};
}

BetheState state_from_json(const Json& j, const SectorLabels& labels) {
  BetheState st;
  st.sector = labels;
  st.energy = j.at("E").get<double>();
  st.eigenvalue = j.at("eigenvalue").get<double>();
  for (const auto& r : j.at("roots")) st.roots.emplace_back(r.at(0).get<double>(), r.at(1).get<double>());
  // Only magnitudes are serialized.
  for (const auto& r : j.at("residuals")) st.bae_residuals.emplace_back(r.get<double>(), 0.0);
  st.max_scaled_residual = j.at("residual").is_null() ? 0.0 : j.at("residual").get<double>();
  st.degenerate_roots = j.at("degenerate_roots").get<bool>();
  st.verified = j.at("verified").get<bool>();
  st.refined = j.at("refined").get<bool>();
  st.refine_failed = j.at("refine_failed").get<bool>();
  st.refine_iterations = j.at("refine_iterations").get<int>();
  return st;
}

Json to_json(const SpectrumReport& report) {
  Json sectors = Json::array();
  for (const auto& s : report.sectors) {
    Json states = Json::array();
    for (std::size_t i = 0; i < s.states.size(); ++i) states.push_back(to_json(s.states[i], static_cast<int>(i)));
    sectors.push_back({{"labels", to_json(s.labels)}, {"states", states}});
  }
  return Json{{"model", report.model}, {"sectors", sectors}};
}

SpectrumReport spectrum_from_json(const Json& j) {
  SpectrumReport report;
  report.model = j.at("model").get<std::string>();
  for (const auto& s : j.at("sectors")) {
    SectorReport sr;
    sr.labels = labels_from_json(s.at("labels"));
    for (const auto& st : s.at("states")) sr.states.push_back(state_from_json(st, sr.labels));
    report.sectors.push_back(std::move(sr));
  }
  return report;
}

Json sectors_to_json(const std::vector<SectorLabels>& sectors) {
  Json out = Json::array();
  for (const auto& s : sectors) out.push_back(to_json(s));
  return Json{{"sectors", out}};
}

Json to_json(const std::vector<CriterionResult>& results) {
  Json list = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"id", r.id},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"worst", finite_or_null(r.worst)},
                    {"threshold", r.threshold},
                    {"detail", r.detail}});
  }
  return Json{{"passed", all}, {"criteria", list}};
}

std::string spectrum_to_csv(const SpectrumReport& report) {
  std::ostringstream os;
  os << "model,j,p,lambda,kappa,q,l,N,index,E,eigenvalue,residual,verified,degenerate_roots,roots\n";
  for (const auto& s : report.sectors) {
    const auto& lb = s.labels;
    for (std::size_t i = 0; i < s.states.size(); ++i) {
      const auto& st = s.states[i];
      std::string roots;
      for (std::size_t t = 0; t < st.roots.size(); ++t) {
        roots += (t ? ";" : "") + number(st.roots[t].real()) + (st.roots[t].imag() < 0 ? "" : "+") +
                 number(st.roots[t].imag()) + "i";
      }
      os << report.model << ',' << lb.j.to_string() << ',' << lb.p << ',' << lb.lambda << ','
         << lb.kappa.to_string() << ',' << joined(lb.q) << ',' << joined(lb.l) << ',' << lb.top()
         << ',' << i << ',' << number(st.energy) << ',' << number(st.eigenvalue) << ','
         << (st.degenerate_roots ? std::string() : number(st.max_scaled_residual)) << ','
         << (st.verified ? "true" : "false") << ',' << (st.degenerate_roots ? "true" : "false")
         << ',' << roots << '\n';
    }
  }
  return os.str();
}

std::string sectors_to_csv(const std::vector<SectorLabels>& sectors) {
  std::ostringstream os;
  os << "j,p,lambda,kappa,q,l,A,N,dim\n";
  for (const auto& s : sectors) {
    os << s.j.to_string() << ',' << s.p << ',' << s.lambda << ',' << s.kappa.to_string() << ','
       << joined(s.q) << ',' << joined(s.l) << ',' << joined(s.A) << ',' << s.top() << ',' << s.dim
       << '\n';
  }
  return os.str();
}

std::string verification_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  worst=" << r.worst
       << " threshold=" << r.threshold << "  " << r.title << "\n      " << r.detail << '\n';
  }
  return os.str();
}

}  // namespace spinboson
