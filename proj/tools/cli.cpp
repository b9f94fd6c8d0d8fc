#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fptlab/families.hpp"
#include "fptlab/fsignature.hpp"
#include "fptlab/io.hpp"
#include "fptlab/parse.hpp"
#include "fptlab/testideals.hpp"
#include "fptlab/thresholds.hpp"

namespace fptlab::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownVariable:
      return kParse;
    case ErrorKind::ConstraintViolation:
    case ErrorKind::InvalidParameter:
    case ErrorKind::QNotPowerOfP:
    case ErrorKind::NotInMaximalIdeal:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::NotSharplyFPure:
    case ErrorKind::NonProperIdeal:
    case ErrorKind::NotPrime:
    case ErrorKind::ZeroDenominator:
      return kConstraint;
    case ErrorKind::MatrixTooLarge:
    case ErrorKind::ExpansionTooLarge:
    case ErrorKind::NotStabilized:
    case ErrorKind::Overflow:
      return kResource;
    default:
      return kOther;
  }
}

namespace {

// Options shared by every polynomial-taking subcommand.
struct PolyArgs {
  std::string text;
  std::uint64_t p = 0;
  std::string vars;

  void attach(CLI::App* sub) {
    sub->add_option("-f,--poly", text, "polynomial, e.g. \"y^2 - x^3\"")->required();
    sub->add_option("-p,--prime", p, "characteristic")->required();
    sub->add_option("--vars", vars, "comma-separated variable order (default: order of appearance)");
  }

  SparsePoly parse() const {
    require_prime(p);
    std::optional<std::vector<std::string>> declared;
    if (!vars.empty()) declared = split(vars);
    return parse_polynomial(text, static_cast<Prime>(p), declared);
  }

  static std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      if (!item.empty()) out.push_back(item);
    }
    return out;
  }
};

BigRational rational_arg(const std::string& text) {
  try {
    return BigRational::parse(text);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidParameter) throw;
    throw ParseError(0, "malformed rational '" + text + "'");
  }
}

// Restores the dense guard after a run, so one invocation cannot leak its
// --max-dense-cells into the next.
class GuardScope {
 public:
  GuardScope() : saved_(max_dense_cells()) {}
  ~GuardScope() { set_max_dense_cells(saved_); }
  GuardScope(const GuardScope&) = delete;
  GuardScope& operator=(const GuardScope&) = delete;

 private:
  std::uint64_t saved_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact F-pure thresholds, test ideals and F-signature data over F_p", "fptlab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t dense_cells = 0;
  app.add_option("--max-dense-cells", dense_cells, "dense guard for the rank method (default 2^24)");

  // nu
  PolyArgs nu_args;
  unsigned nu_e = 0;
  auto* nu = app.add_subcommand("nu", "nu_e = largest a with f^a outside m^[p^e], as CSV");
  nu_args.attach(nu);
  nu->add_option("-e,--emax", nu_e, "deepest level")->required()->check(CLI::PositiveNumber);

  // fpt
  PolyArgs fpt_args;
  unsigned fpt_e = 0;
  std::vector<std::uint64_t> certify;
  auto* fpt = app.add_subcommand("fpt", "fpt interval as JSON, with an optional certificate check");
  fpt_args.attach(fpt);
  fpt->add_option("-e,--emax", fpt_e, "interval depth")->required()->check(CLI::PositiveNumber);
  fpt->add_option("--certify", certify, "check fpt = a/(q-1)")->expected(2);

  // tau
  PolyArgs tau_args;
  std::string tau_t;
  unsigned smax = 8;
  auto* tau = app.add_subcommand("tau", "test ideal tau(f^t) as JSON");
  tau_args.attach(tau);
  tau->add_option("-t", tau_t, "parameter a/b in (0, 1]")->required();
  tau->add_option("--smax", smax, "largest chain step")->capture_default_str();

  // fsig
  PolyArgs fsig_args;
  std::string grid;
  unsigned fsig_e = 0;
  auto* fsig = app.add_subcommand("fsig", "F-signature samples a_e(t) / p^(e n) as CSV");
  fsig_args.attach(fsig);
  fsig->add_option("--grid", grid, "comma-separated t values")->required();
  fsig->add_option("-e", fsig_e, "level")->required()->check(CLI::PositiveNumber);

  // deriv
  PolyArgs deriv_args;
  std::string alpha;
  unsigned deriv_e = 0;
  auto* deriv = app.add_subcommand("deriv", "left-derivative table at alpha as CSV");
  deriv_args.attach(deriv);
  deriv->add_option("--alpha", alpha, "threshold candidate a/b in (0, 1]")->required();
  deriv->add_option("-e,--emax", deriv_e, "deepest level (default depends on p)");

  // verify
  auto* verify = app.add_subcommand("verify", "end-to-end checks of the named families, as JSON");
  verify->require_subcommand(1);
  std::uint64_t va_p = 0, va_d = 0, va_n = 0;
  unsigned va_e = 1;
  auto* va = verify->add_subcommand("theorem-a", "x1^d + ... + xn^d + (x1...xn)^(d-2)");
  va->add_option("-p", va_p)->required();
  va->add_option("-d", va_d)->required();
  va->add_option("-n", va_n)->required();
  va->add_option("-e", va_e, "nu-interval depth")->capture_default_str();
  std::uint64_t ap_n = 0;
  unsigned ap_e = 8;
  auto* ap = verify->add_subcommand("appendix", "x^2y^2 + x^(2n+1) + y^(2n+1) over F_2");
  ap->add_option("-n", ap_n)->required();
  ap->add_option("-e", ap_e, "deepest level")->capture_default_str();
  std::uint64_t cu_p = 0;
  unsigned cu_e = 3;
  auto* cu = verify->add_subcommand("cusp", "y^2 - x^3");
  cu->add_option("-p", cu_p)->required();
  cu->add_option("-e", cu_e, "deepest level")->capture_default_str();
  std::uint64_t ex_p = 0;
  unsigned ex_e = 3;
  auto* ex = verify->add_subcommand("example36", "x^2 y");
  ex->add_option("-p", ex_p)->required();
  ex->add_option("-e", ex_e, "deepest level")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  GuardScope guard;
  try {
    if (dense_cells != 0) set_max_dense_cells(dense_cells);

    if (nu->parsed()) {
      out << nu_csv(nu_sequence(nu_args.parse(), nu_e));
      return kOk;
    }
    if (fpt->parsed()) {
      SparsePoly f = fpt_args.parse();
      auto nus = nu_sequence(f, fpt_e);
      std::optional<FptCertificate> cert;
      if (!certify.empty()) cert = certify_fpt(f, certify[0], certify[1]);
      out << fpt_json(f, interval_from_nu(nus.back(), f.characteristic()), nus, cert);
      return cert && !cert->valid ? kCheckFailed : kOk;
    }
    if (tau->parsed()) {
      SparsePoly f = tau_args.parse();
      out << tau_json(test_ideal_bms(f, rational_arg(tau_t), smax));
      return kOk;
    }
    if (fsig->parsed()) {
      SparsePoly f = fsig_args.parse();
      std::vector<BigRational> ts;
      for (const auto& item : PolyArgs::split(grid)) ts.push_back(rational_arg(item));
      out << fsig_csv(fsig_sample(f, ts, fsig_e));
      return kOk;
    }
    if (deriv->parsed()) {
      SparsePoly f = deriv_args.parse();
      const unsigned e = deriv_e != 0 ? deriv_e : default_e_max(f.characteristic());
      out << derivative_csv(left_derivative_seq(f, rational_arg(alpha), e));
      return kOk;
    }
    if (verify->parsed()) {
      std::optional<VerifyReport> rep;
      if (va->parsed()) rep = theoremA_verify(va_p, va_d, va_n, va_e);
      if (ap->parsed()) rep = appendix_verify(ap_n, ap_e);
      if (cu->parsed()) rep = cusp_verify(cu_p, cu_e);
      if (ex->parsed()) rep = x2y_verify(ex_p, ex_e);
      out << verify_json(*rep);
      return rep->all_pass() ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    err << "fptlab: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "fptlab: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}

}  // namespace fptlab::cli
