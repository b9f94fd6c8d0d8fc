#include "fptlab/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace fptlab {

namespace {

using Json = nlohmann::ordered_json;

Json strings(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json cert_object(const FptCertificate& cert) {
  Json j;
  j["value"] = cert.value.to_string();
  j["a"] = cert.a;
  j["q"] = cert.q;
  j["witness"] = cert.witness ? strings(cert.witness->canonical_strings()) : Json::array();
  j["method"] = to_string(cert.method);
  j["valid"] = cert.valid;
  if (!cert.valid) j["reason"] = cert.reason;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_float(const BigRational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", r.to_double());
  return buf;
}

std::string nu_csv(const std::vector<NuRecord>& rows) {
  std::ostringstream os;
  os << "e,nu\n";
  for (const auto& r : rows) os << r.e << ',' << r.nu << '\n';
  return os.str();
}

std::string certificate_json(const FptCertificate& cert) { return dump(cert_object(cert)); }

std::string fpt_json(const SparsePoly& f, const FptInterval& interval, const std::vector<NuRecord>& nus,
                     const std::optional<FptCertificate>& cert) {
  Json j;
  j["f"] = f.to_string();
  j["p"] = f.characteristic();
  j["e"] = interval.e;
  Json nu = Json::array();
  for (const auto& r : nus) nu.push_back(r.nu);
  j["nu"] = nu;
  j["interval"] = {{"lower", interval.lower.to_string()},
                   {"lower_inclusive", false},
                   {"upper", interval.upper.to_string()},
                   {"upper_inclusive", true}};
  if (cert) {
    j["certificate"] = cert_object(*cert);
    j["certified_fpt"] = cert->valid ? Json(cert->value.to_string()) : Json(nullptr);
  } else {
    j["certified_fpt"] = nullptr;
  }
  return dump(j);
}

std::string tau_json(const TauReport& r) {
  Json j;
  j["t"] = r.t.to_string();
  j["generators"] = strings(r.tau.canonical_strings());
  j["length"] = r.length.infinite ? Json("infinite") : Json(r.length.value);
  j["radical"] = r.is_radical ? Json(*r.is_radical) : Json("unknown");
  j["stabilized_at"] = r.stabilized_at;
  j["equals_max_ideal"] = r.equals_max_ideal;
  return dump(j);
}

std::string fsig_csv(const std::vector<FsigSample>& samples) {
  std::ostringstream os;
  os << "t_num,t_den,e,a_e,s_e_num,s_e_den,s_e\n";
  for (const auto& s : samples) {
    os << s.t.numerator().get_str() << ',' << s.t.denominator().get_str() << ',' << s.e << ',' << s.a_e << ','
       << s.s_e.numerator().get_str() << ',' << s.s_e.denominator().get_str() << ',' << format_float(s.s_e) << '\n';
  }
  return os.str();
}

std::string derivative_csv(const DerivativeTable& table) {
  std::ostringstream os;
  os << "e,exponent,lambda,D_num,D_den,remark34_num,remark34_den,D,remark34\n";
  for (const auto& r : table.rows) {
    os << r.e << ',' << r.exponent << ',' << r.lambda << ',' << r.d.numerator().get_str() << ','
       << r.d.denominator().get_str() << ',';
    if (r.limit_term) {
      os << r.limit_term->numerator().get_str() << ',' << r.limit_term->denominator().get_str();
    } else {
      os << ',';
    }
    os << ',' << format_float(r.d) << ',';
    if (r.limit_term) os << format_float(*r.limit_term);
    os << '\n';
  }
  return os.str();
}

std::string verify_json(const VerifyReport& report) {
  const FamilyInstance& inst = report.instance;
  Json instance;
  instance["family"] = inst.family;
  for (const auto& [k, v] : inst.parameters) instance[k] = v;
  instance["f"] = inst.f.to_string();
  instance["variables"] = strings(inst.f.ring().variables());
  instance["expected_fpt"] = inst.expected_fpt ? Json(inst.expected_fpt->to_string()) : Json(nullptr);
  instance["provenance"] = inst.provenance;
  instance["square_free"] = inst.square_free;
  Json constraints = Json::array();
  for (const auto& [name, ok] : inst.constraints_checked) constraints.push_back({{"name", name}, {"holds", ok}});
  instance["constraints"] = constraints;

  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  }
  Json j;
  j["instance"] = instance;
  j["checks"] = checks;
  j["certified_fpt"] = report.certified_fpt ? Json(report.certified_fpt->to_string()) : Json(nullptr);
  j["reference_lct"] = inst.reference_lct ? Json(inst.reference_lct->to_string()) : Json(nullptr);
  return dump(j);
}

}  // namespace fptlab
