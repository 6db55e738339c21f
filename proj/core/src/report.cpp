#include "contalg/report.hpp"

#include <sstream>

#include "contalg/ideal.hpp"
#include "contalg/zdgraph.hpp"

namespace contalg {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "Verified";
    case Verdict::Refuted:
      return "Refuted";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

Json outcome_to_json(const CheckOutcome& o) {
  Json j;
  j["name"] = o.name;
  j["verdict"] = verdict_name(o.verdict);
  j["detail"] = o.detail;
  j["witness"] = o.witness;
  j["cases"] = o.cases;
  j["degree"] = o.degree;
  return j;
}

namespace {

Json names_of(const FiniteRing& r, const ElemSet& s) {
  Json arr = Json::array();
  s.for_each([&](std::uint32_t e) { arr.push_back(r.name(e)); });
  return arr;
}

Json ideal_list(const std::vector<Ideal>& ideals) {
  Json arr = Json::array();
  for (const auto& i : ideals) arr.push_back(i.describe());
  return arr;
}

}  // namespace

Json ring_report(const RingPtr& r, const std::vector<std::uint32_t>& degrees,
                 const Limits& limits) {
  Json j;
  j["ring"] = r->construction().text;
  j["order"] = r->order();
  j["zeroDivisors"] = names_of(*r, zero_divisors(*r));
  j["nil"] = names_of(*r, nilradical(*r).members);
  j["min"] = ideal_list(minimal_primes(*r, limits));
  j["ass"] = ideal_list(associated_primes(*r));
  j["propertyA"] = has_property_A(*r, limits);
  j["primal"] = is_primal(*r);
  if (auto zd = zd_degree(*r, limits)) {
    Json z;
    z["degree"] = zd->degree;
    z["maximalPrimes"] = ideal_list(zd->maximal_primes);
    j["zdDegree"] = z;
  } else {
    j["zdDegree"] = nullptr;
  }
  DiamReport dr = diameter(gamma_of_ring(r));
  j["gammaDiameter"] = dr.diameter;
  Prediction p = predict_extension_diam(r, limits);
  j["predictedExtensionDiameter"] = p.value;
  j["predictionTrace"] = p.trace;
  j["checkOutcomes"] = Json::array();
  j["witnesses"] = Json::array();
  Json caps;
  caps["order"] = limits.order_cap;
  caps["idealEnum"] = limits.ideal_enum_cap;
  caps["polyEnum"] = limits.poly_enum_cap;
  caps["vertex"] = limits.vertex_cap;
  caps["zpowCases"] = limits.zpow_case_cap;
  Json lim;
  lim["caps"] = caps;
  lim["degrees"] = degrees;
  lim["seed"] = limits.seed;
  j["limits"] = lim;
  return j;
}

void attach_outcomes(Json& report, const std::vector<CheckOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    report["checkOutcomes"].push_back(outcome_to_json(o));
    for (const auto& w : o.witness) report["witnesses"].push_back(w);
  }
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "ring: " << report["ring"].get<std::string>() << " (order "
     << report["order"].get<std::uint64_t>() << ")\n";
  auto list = [&](const char* key) {
    std::string s;
    for (const auto& v : report[key]) {
      if (!s.empty()) s += ", ";
      s += v.get<std::string>();
    }
    return s.empty() ? std::string("-") : s;
  };
  os << "Z(R):  { " << list("zeroDivisors") << " }\n";
  os << "Nil:   { " << list("nil") << " }\n";
  os << "Min:   " << list("min") << "\n";
  os << "Ass:   " << list("ass") << "\n";
  os << "Property (A): " << (report["propertyA"].get<bool>() ? "yes" : "no")
     << "   primal: " << (report["primal"].get<bool>() ? "yes" : "no") << "\n";
  if (report["zdDegree"].is_null())
    os << "zd degree: none (Z(R) not a finite union of maximal primes)\n";
  else
    os << "zd degree: " << report["zdDegree"]["degree"].get<std::uint32_t>()
       << "\n";
  int gd = report["gammaDiameter"].get<int>();
  os << "graph diameter: " << (gd < 0 ? std::string("empty") : std::to_string(gd))
     << "\n";
  int pd = report["predictedExtensionDiameter"].get<int>();
  os << "predicted extension diameter: "
     << (pd < 0 ? std::string("empty") : std::to_string(pd)) << " ("
     << report["predictionTrace"].get<std::string>() << ")\n";
  for (const auto& o : report["checkOutcomes"]) {
    os << "[" << o["verdict"].get<std::string>() << "] "
       << o["name"].get<std::string>();
    const auto& detail = o["detail"].get<std::string>();
    if (!detail.empty()) os << ": " << detail;
    os << " (cases " << o["cases"].get<std::uint64_t>() << ", degree "
       << o["degree"].get<std::uint32_t>() << ")";
    if (!o["witness"].empty()) {
      os << " witness:";
      for (const auto& w : o["witness"]) os << " " << w.get<std::string>();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace contalg
