#pragma once

// The kcyc command line: one subcommand per engine operation. Plain text
// by default; --json prints one canonical record (sorted keys, integers
// as decimal strings, rationals as "num/den").

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcyc/kcyc.hpp"
#include "selftest.hpp"

namespace kcyc::cli {

using Json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

struct Record {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> provenance;
  // human-readable lines, in display order
  std::vector<std::pair<std::string, std::string>> text;

  void put(const std::string& key, const std::string& value, bool json = true) {
    if (json) result[key] = value;
    text.emplace_back(key, value);
  }
};

inline std::string canonical_json(const Record& r) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["result"] = r.result;
  j["provenance"] = r.provenance;
  return j.dump(-1, ' ', false);
}

inline std::string plain_text(const Record& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.text) os << k << ": " << v << '\n';
  if (!r.provenance.empty()) {
    os << "provenance:";
    for (const auto& p : r.provenance) os << ' ' << p;
    os << '\n';
  }
  return os.str();
}

inline std::string str(long v) { return std::to_string(v); }

inline Json factor_pairs(const Factorization& f) {
  Json pairs = Json::array();
  for (const auto& pp : f.factors()) pairs.push_back(Json::array({pp.prime.get_str(), std::to_string(pp.exponent)}));
  return pairs;
}

// "max-p:P" or "prime-cyclic:P"
inline FieldSpec parse_field(long m, const std::string& subfield) {
  if (subfield.empty()) return RealCyclotomic{m};
  const auto colon = subfield.find(':');
  require(colon != std::string::npos, "--subfield must be max-p:P or prime-cyclic:P");
  const std::string kind = subfield.substr(0, colon);
  long p = 0;
  try {
    std::size_t used = 0;
    p = std::stol(subfield.substr(colon + 1), &used);
    require(used == subfield.size() - colon - 1, "--subfield: trailing characters after P");
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const precondition_error*>(&e)) throw;
    throw precondition_error("--subfield: P must be an integer");
  }
  if (kind == "max-p") return MaxPSubextension{m, p};
  if (kind == "prime-cyclic") return PrimeCyclicSubfield{m, p};
  throw precondition_error("--subfield must be max-p:P or prime-cyclic:P");
}

inline std::vector<i64> parse_exponents(const std::string& s) {
  std::vector<i64> out;
  require(!s.empty() && s.back() != ',', "--chi: malformed exponent list");
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      require(used == item.size(), "--chi: malformed exponent list");
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const precondition_error*>(&e)) throw;
      throw precondition_error("--chi: malformed exponent list");
    }
  }
  return out;
}

inline std::string verdict_name(Verdict::Kind k) { return to_string(k); }

/// Runs the command line in-process. Returns the exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact orders of K-groups of totally real abelian fields and p-divisibility criteria", "kcyc"};
  app.require_subcommand(1);
  bool json = false;
  std::string out_path;
  std::uint64_t seed = kDefaultSeed;
  app.add_flag("--json", json, "Print one canonical JSON record");
  app.add_option("--out", out_path, "Also write the JSON record to this file");
  app.add_option("--seed", seed, "Seed for randomized factoring and primality");

  long m = 0, k = 0, p = 0, n = 0, l = 0, x = 0;
  int level = 0;
  std::string subfield, field = "plus", chi, selftest_level = "quick";

  auto* korder = app.add_subcommand("korder", "Order of K_{2k} of the ring of integers of a totally real field");
  korder->add_option("--m", m, "Conductor m (field Q(zeta_m)^+ unless --subfield)")->required();
  korder->add_option("--k", k, "Odd k >= 1")->required();
  korder->add_option("--subfield", subfield, "max-p:P or prime-cyclic:P");

  auto* verdict = app.add_subcommand("verdict", "Is #K_{2k} divisible by p?");
  verdict->add_option("--p", p, "Odd prime p")->required();
  verdict->add_option("--m", m, "m > 1")->required();
  verdict->add_option("--k", k, "Odd k >= 1")->required();
  verdict->add_option("--field", field, "plus: Z[zeta_m]^+, full: Z[zeta_m]")->check(CLI::IsMember({"plus", "full"}));

  auto* selftest = app.add_subcommand("selftest", "Reproduce the reference tables and property checks");
  selftest->add_option("--level", selftest_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n");
  bern->add_option("--n", n, "n >= 0")->required();

  auto* dn = app.add_subcommand("dn", "Power-sum polynomial S_n, its denominator d_n and f_n");
  dn->add_option("--n", n, "n >= 1")->required();

  auto* genb = app.add_subcommand("genbernoulli", "Generalized Bernoulli number B_{n,chi}");
  genb->add_option("--m", m, "Modulus of chi; chi must be primitive")->required();
  genb->add_option("--chi", chi, "Exponents of chi on the generators of (Z/m)^*, comma separated")->required();
  genb->add_option("--n", n, "n >= 2")->required();
  genb->add_option("--level", level, "Level N for the pi-adic valuation (odd prime-power order only)");

  auto* bound = app.add_subcommand("bound", "Guaranteed exponent of p in #K_{2k} of Z[zeta_m]^+");
  bound->add_option("--p", p, "Odd prime p >= k + 2")->required();
  bound->add_option("--k", k, "Odd k >= 1")->required();
  bound->add_option("--m", m, "m > 1")->required();

  auto* browkin = app.add_subcommand("browkin", "Divisibility criterion for the degree-p subfield of Q(zeta_l)");
  browkin->add_option("--p", p, "Odd prime p")->required();
  browkin->add_option("--l", l, "Prime l = 1 mod p")->required();

  auto* density = app.add_subcommand("density", "Share of primes l = 1 mod p^2 among primes l = 1 mod p, l <= x");
  density->add_option("--p", p, "Odd prime p")->required();
  density->add_option("--x", x, "Upper limit x >= p^2 + 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Record rec;
  try {
    if (*korder) {
      rec.command = "korder";
      rec.inputs = {{"m", str(m)}, {"k", str(k)}, {"subfield", subfield}};
      const AbelianField F(parse_field(m, subfield));
      const KOrderReport r = k_order(F, k, seed);
      rec.put("field", r.field);
      rec.put("degree", str(r.degree));
      rec.put("order", to_string(r.order));
      rec.put("factorization", r.factorization.to_string());
      rec.result["factors"] = factor_pairs(r.factorization);
      rec.put("w", to_string(r.w));
      rec.put("zeta_value", to_fraction_string(r.zeta_value));
      rec.provenance = {"order-formula"};
    } else if (*verdict) {
      rec.command = "verdict";
      rec.inputs = {{"p", str(p)}, {"m", str(m)}, {"k", str(k)}, {"field", field}};
      const Verdict v = divisibility_verdict(p, m, k, field == "plus" ? FieldVariant::plus : FieldVariant::full);
      rec.put("verdict", verdict_name(v.kind));
      if (v.kind == Verdict::Kind::guaranteed_divisible) rec.put("exponent_lower_bound", to_string(v.exponent_lower_bound));
      rec.provenance = v.justification;
    } else if (*selftest) {
      const int failures = run_selftest(selftest_level == "full", out);
      return failures == 0 ? kExitOk : kExitComputation;
    } else if (*bern) {
      rec.command = "bernoulli";
      rec.inputs = {{"n", str(n)}};
      rec.put("value", to_fraction_string(bernoulli_number(n)));
    } else if (*dn) {
      rec.command = "dn";
      rec.inputs = {{"n", str(n)}};
      const PowerSumData d = power_sum_data(n);
      rec.put("d", to_string(d.d));
      rec.put("s", d.s.to_string());
      rec.put("f", d.f.to_string());
      rec.put("f_at_1", to_string(d.f(Integer(1))));
      rec.put("prime_bound", to_fraction_string(d.prime_bound));
    } else if (*genb) {
      rec.command = "genbernoulli";
      rec.inputs = {{"m", str(m)}, {"chi", chi}, {"n", str(n)}, {"level", str(level)}};
      const DirichletCharacter c(make_unit_group(m), parse_exponents(chi));
      const GeneralizedBernoulli b = generalized_bernoulli_any(c, n);
      rec.put("order", str(c.order()));
      rec.put("conductor", str(c.conductor()));
      rec.put("parity", c.is_even() ? "even" : "odd");
      rec.put("numerator", b.numerator.to_string());
      rec.put("denominator", to_string(b.denominator));
      rec.put("root_of_unity", "x = zeta_" + str(c.order()));
      if (level > 0) {
        const Valuation v = char_bernoulli_pi_valuation(c, n - 1, level);
        rec.put("pi_valuation", v ? str(*v) : "inf");
        rec.put("level", str(character_level(c).prime()) + "^" + str(level));
      }
    } else if (*bound) {
      rec.command = "bound";
      rec.inputs = {{"p", str(p)}, {"k", str(k)}, {"m", str(m)}};
      const SProfile s = s_profile(m, p);
      rec.put("exponent_lower_bound", to_string(lower_bound_exponent(p, k, m)));
      rec.put("theta", str(s.theta));
      Json profile = Json::object();
      std::string shown;
      for (auto [j, count] : s.s) {
        profile[str(j)] = str(count);
        shown += (shown.empty() ? "" : " ") + ("s_" + str(j) + "=" + str(count));
      }
      rec.result["s"] = profile;
      rec.text.emplace_back("s", shown.empty() ? "none" : shown);
      rec.provenance = {kTagBernoulliBound};
    } else if (*browkin) {
      rec.command = "browkin";
      rec.inputs = {{"p", str(p)}, {"l", str(l)}};
      const bool divisible = browkin_divisible(p, l);
      rec.put("divisible", divisible ? "true" : "false", false);
      rec.result["divisible"] = divisible;
      rec.put("v_p(l-1)", str(valuation(l - 1, p)));
      rec.provenance = {kTagPrimeConductor};
    } else if (*density) {
      rec.command = "density";
      rec.inputs = {{"p", str(p)}, {"x", str(x)}};
      const DensityResult d = browkin_density(p, x);
      rec.put("n_p", str(d.n_p));
      rec.put("n_p2", str(d.n_p2));
      rec.put("ratio", to_fraction_string(d.ratio));
    }
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const computation_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitComputation;
  }

  const std::string record = canonical_json(rec);
  out << (json ? record + "\n" : plain_text(rec));
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    file << record << '\n';
  }
  return kExitOk;
}

}  // namespace kcyc::cli
