// Copyright 2026 The apnkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "apnkit/constructions.hpp"
#include "apnkit/error.hpp"
#include "apnkit/gf2m.hpp"
#include "apnkit/invariants.hpp"
#include "apnkit/linearized.hpp"
#include "apnkit/vbf.hpp"
#include "json.hpp"

namespace apnkit::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kCatalogInvariantsMaxM = 6;
constexpr unsigned kGoldAutMaxM = 10;
constexpr unsigned kGoldSearchMaxM = 8;
constexpr unsigned kCrossCheckMaxN = 4;

struct FunctionArgs {
  std::string family = "pott-zhou";
  unsigned m = 0;
  unsigned k = 1;
  unsigned s = 0;
  std::string alpha;
  bool unsafe = false;
};

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string modulus_table() {
  std::string out = "Field elements are hex bitmasks modulo the smallest irreducible polynomial:";
  for (unsigned m = 2; m <= 16; m += 2) {
    out += (m == 2 ? " " : ", ") + std::string("m=") + std::to_string(m) + ":0x" +
           hex(smallest_irreducible_gf2(m));
  }
  return out + ".";
}

FieldElement parse_element(const FieldCtx& ctx, std::string text, const char* what) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) text = text.substr(2);
  if (text.empty() || text.size() > 8 ||
      text.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    throw ParameterError(std::string(what) + " must be a hex field element");
  }
  const std::uint64_t v = std::stoull(text, nullptr, 16);
  if (v >= ctx.size()) throw ParameterError(std::string(what) + " is outside the field");
  return FieldElement(static_cast<std::uint32_t>(v));
}

void add_function_options(CLI::App* sub, FunctionArgs& fa, bool m_required) {
  sub->add_option("--family", fa.family, "pott-zhou or gold")
      ->check(CLI::IsMember({"pott-zhou", "gold"}));
  auto* m = sub->add_option("--m", fa.m, "Field degree m");
  if (m_required) m->required();
  sub->add_option("--k", fa.k, "Exponent parameter k (default 1)");
  sub->add_option("--s", fa.s, "Pott-Zhou shift s (default 0)");
  sub->add_option("--alpha", fa.alpha, "Pott-Zhou coefficient in hex (default: primitive element)");
  sub->add_flag("--unsafe-skip-validation", fa.unsafe,
                "Build Pott-Zhou functions even if the APN conditions fail");
}

FieldCtx make_ctx(unsigned m) {
  if (m < 1 || m > 32) throw ParameterError("m must lie in [1, 32]");
  return FieldCtx::create(m);
}

PottZhouParams pz_params(const FieldCtx& ctx, const FunctionArgs& fa) {
  PottZhouParams p = pott_zhou_params(ctx, fa.k, fa.s);
  if (!fa.alpha.empty()) p.alpha = parse_element(ctx, fa.alpha, "alpha");
  return p;
}

Vbf build_function(const FunctionArgs& fa) {
  const FieldCtx ctx = make_ctx(fa.m);
  if (fa.family == "gold") {
    if (fa.m > Vbf::kMaxDimension) throw ParameterError("m too large for a truth table");
    return gold(ctx, fa.k);
  }
  return pott_zhou(ctx, pz_params(ctx, fa),
                   fa.unsafe ? Validation::kUnsafeSkip : Validation::kStrict);
}

Vbf read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_vbf(in);
}

Json spectrum_json(const DifferentialSpectrum& spec) {
  Json j = Json::object();
  for (std::size_t c = 0; c < spec.counts.size(); ++c) {
    if (spec.counts[c] != 0) j[std::to_string(c)] = spec.counts[c];
  }
  return j;
}

SearchOptions search_options(const std::optional<double>& seconds) {
  SearchOptions o;
  if (seconds) {
    if (*seconds <= 0) throw ParameterError("timeout must be positive");
    o.timeout = std::chrono::milliseconds(static_cast<long long>(*seconds * 1000));
  }
  return o;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// --- construct ---------------------------------------------------------------

struct ConstructArgs {
  FunctionArgs fa;
  std::string out_path;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const Vbf f = build_function(a.fa);
  if (a.out_path.empty()) {
    write_vbf(out, f);
  } else {
    std::ofstream file(a.out_path);
    if (!file) throw ParameterError("cannot write " + a.out_path);
    write_vbf(file, f);
  }
  return kOk;
}

// --- check -------------------------------------------------------------------

struct CheckArgs {
  std::string in_path;
  bool apn = false, degree = false, spectrum = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Vbf f = read_file(a.in_path);
  const bool all = !a.apn && !a.degree && !a.spectrum;
  Json j;
  j["n"] = f.n();
  if (all || a.apn) j["is_apn"] = is_apn(f);
  if (all || a.degree) j["algebraic_degree"] = algebraic_degree(f);
  if (all || a.spectrum) j["differential_spectrum"] = spectrum_json(differential_spectrum(f));
  emit(out, j);
  return kOk;
}

// --- invariants --------------------------------------------------------------

struct InvariantsArgs {
  FunctionArgs fa;
  std::string in_path;
  bool gamma = false, aut = false;
  std::optional<double> timeout;
};

int cmd_invariants(const InvariantsArgs& a, std::ostream& out) {
  if (a.in_path.empty() && a.fa.m == 0) throw ParameterError("give --in FILE or --m");
  const Vbf f = a.in_path.empty() ? build_function(a.fa) : read_file(a.in_path);
  if (a.gamma && f.n() > 16) throw ParameterError("gamma_rank requires n <= 16");
  InvariantReport report;
  report.is_apn = is_apn(f);
  report.algebraic_degree = algebraic_degree(f);
  if (a.gamma) report.gamma_rank = gamma_rank(f);
  if (a.aut) {
    const SearchOptions opts = search_options(a.timeout);
    if (*report.is_apn && *report.algebraic_degree == 2) {
      InvariantReport aut = aut_orders_quadratic(f, opts, kCrossCheckMaxN);
      report.aut_l_order = aut.aut_l_order;
      report.aut_ea_order = aut.aut_ea_order;
      report.aut_order = aut.aut_order;
      report.timed_out = aut.timed_out;
    } else {
      const OrderResult lin = aut_l_order(f, opts);
      const OrderResult full = graph_aut_order(f, opts);
      report.aut_l_order = lin.order;
      report.aut_order = full.order;
      report.timed_out = lin.status == SearchStatus::kTimeout ||
                         full.status == SearchStatus::kTimeout;
    }
  }
  out << to_json(report) << '\n';
  return report.timed_out ? kTimeout : kOk;
}

// --- catalog -----------------------------------------------------------------

struct CatalogArgs {
  unsigned m_max = 0;
  bool figure = false, with_invariants = false;
  unsigned gamma_rank_max_n = 4;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int cmd_catalog(const CatalogArgs& a, std::ostream& out) {
  if (a.m_max < 2 || a.m_max % 2 != 0) throw ParameterError("--m-max must be even and >= 2");
  if (a.figure && a.with_invariants) {
    throw ParameterError("--figure-data and --with-invariants are exclusive");
  }
  if (a.figure) {
    out << "m,count,lower_bound,upper_bound\n";
    for (unsigned m = 4; m <= a.m_max; m += 2) {
      const CountBounds b = count_bounds(m);
      out << m << ',' << count_inequivalent(m) << ',' << fixed6(b.lower) << ','
          << fixed6(b.upper) << '\n';
    }
    return kOk;
  }
  if (a.with_invariants) {
    if (a.m_max > kCatalogInvariantsMaxM) {
      throw ParameterError("--with-invariants supports --m-max <= " +
                           std::to_string(kCatalogInvariantsMaxM));
    }
    out << "m,k,s,alpha,n,is_apn,algebraic_degree,gamma_rank,aut_l_order\n";
    for (unsigned m = 2; m <= a.m_max; m += 2) {
      const FieldCtx ctx = FieldCtx::create(m);
      for (const KsPair& ks : enumerate_canonical(m)) {
        const Vbf f = pott_zhou(ctx, pott_zhou_params(ctx, ks.k, ks.s));
        out << m << ',' << ks.k << ',' << ks.s << ',' << hex(ctx.gamma().bits) << ',' << f.n()
            << ',' << (is_apn(f) ? "true" : "false") << ',' << algebraic_degree(f) << ',';
        if (f.n() <= a.gamma_rank_max_n) out << gamma_rank(f);
        out << ',' << *aut_l_order(f).order << '\n';
      }
    }
    return kOk;
  }
  out << "m,count\n";
  for (unsigned m = 2; m <= a.m_max; m += 2) out << m << ',' << count_inequivalent(m) << '\n';
  return kOk;
}

// --- witness -----------------------------------------------------------------

struct WitnessArgs {
  unsigned m = 0, k = 0, s = 0;
  std::string alpha, to_alpha;
  bool negate_k = false, negate_s = false, negate_both = false;
};

Json params_json(const PottZhouParams& p) {
  Json j;
  j["m"] = p.m;
  j["k"] = p.k;
  j["s"] = p.s;
  j["alpha"] = hex(p.alpha.bits);
  return j;
}

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const int modes = (!a.to_alpha.empty()) + a.negate_k + a.negate_s + a.negate_both;
  if (modes != 1) {
    throw ParameterError("give exactly one of --to-alpha, --negate-k, --negate-s, --negate-both");
  }
  const FieldCtx ctx = make_ctx(a.m);
  if (2 * a.m > Vbf::kMaxDimension) throw ParameterError("m too large for verification");
  PottZhouParams src{a.m, a.k, a.s, ctx.gamma()};
  if (!a.alpha.empty()) src.alpha = parse_element(ctx, a.alpha, "alpha");
  if (auto err = validate(ctx, src)) throw ParameterError(*err);
  PottZhouParams dst = src;
  EAWitness w;
  if (!a.to_alpha.empty()) {
    dst.alpha = parse_element(ctx, a.to_alpha, "target alpha");
    w = pz_alpha_witness(ctx, a.k, a.s, src.alpha, dst.alpha);
  } else {
    const int sk = (a.negate_k || a.negate_both) ? -1 : 1;
    const int ss = (a.negate_s || a.negate_both) ? -1 : 1;
    if (sk < 0) dst.k = (a.m - a.k % a.m) % a.m;
    if (ss < 0) dst.s = (a.m - a.s % a.m) % a.m;
    w = pz_sign_witness(ctx, a.k, a.s, sk, ss, src.alpha);
  }
  const bool verified = verify_ea_witness(ctx, pott_zhou(ctx, src), pott_zhou(ctx, dst), w);
  Json j;
  j["source"] = params_json(src);
  j["target"] = params_json(dst);
  j["witness"] = Json::parse(witness_to_json(w));
  j["verified"] = verified;
  emit(out, j);
  return verified ? kOk : kVerificationFailure;
}

// --- gold-aut ----------------------------------------------------------------

struct GoldAutArgs {
  unsigned m = 0, k = 1;
  bool enumerate = false;
};

int cmd_gold_aut(const GoldAutArgs& a, std::ostream& out) {
  if (a.m < 1 || a.m > kGoldAutMaxM) {
    throw ParameterError("gold-aut supports 1 <= m <= " + std::to_string(kGoldAutMaxM));
  }
  const FieldCtx ctx = FieldCtx::create(a.m);
  const auto monomials = gold_monomial_automorphisms(ctx, a.k);
  Json j;
  j["m"] = a.m;
  j["k"] = a.k;
  j["monomial"] = monomials.size();
  std::vector<EAWitness> binomials;
  if (a.m == 4) {
    binomials = gold_m4_binomial_automorphisms(ctx);
    const Case2Exhaustion c2 = gold_m4_case2_exhaustion(ctx);
    j["binomial"] = binomials.size();
    j["case2"] = {{"candidates", c2.candidates}, {"permutations", c2.permutations}};
  } else {
    j["binomial"] = nullptr;
    j["case2"] = nullptr;
  }
  std::optional<std::uint64_t> formula;
  if (a.m >= 4) formula = monomials.size() + binomials.size();
  j["formula_total"] = formula ? Json(*formula) : Json(nullptr);
  if (a.m <= kGoldSearchMaxM) {
    const std::uint64_t searched = *aut_l_order(gold(ctx, a.k)).order;
    j["search_aut_l"] = searched;
    j["agrees"] = formula ? Json(*formula == searched) : Json(nullptr);
  } else {
    j["search_aut_l"] = nullptr;
    j["agrees"] = nullptr;
  }
  if (a.enumerate) {
    Json list = Json::array();
    for (const std::vector<EAWitness>* group : {&monomials, &std::as_const(binomials)}) {
      for (const EAWitness& w : *group) list.push_back(Json::parse(witness_to_json(w)));
    }
    j["witnesses"] = std::move(list);
  }
  emit(out, j);
  return (j["agrees"].is_boolean() && !j["agrees"].get<bool>()) ? kVerificationFailure : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"apnkit: Gold and Pott-Zhou APN functions, equivalence witnesses and invariants"};
  app.set_version_flag("--version", "apnkit 0.1.0");
  app.require_subcommand(1);
  app.footer(modulus_table());

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Write a truth table in vbf text format");
  add_function_options(c_construct, construct.fa, true);
  c_construct->add_option("--out", construct.out_path, "Output file (default stdout)");

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Report APN property, degree and spectrum of a file");
  c_check->add_option("--in,input", check.in_path, "Truth table file")->required();
  c_check->add_flag("--apn", check.apn, "Report is_apn");
  c_check->add_flag("--degree", check.degree, "Report algebraic_degree");
  c_check->add_flag("--spectrum", check.spectrum, "Report the differential spectrum");

  InvariantsArgs inv;
  auto* c_inv = app.add_subcommand("invariants", "Gamma-rank and automorphism group orders");
  add_function_options(c_inv, inv.fa, false);
  c_inv->add_option("--in", inv.in_path, "Truth table file instead of construction flags");
  c_inv->add_flag("--gamma-rank", inv.gamma, "Compute the Gamma-rank (n <= 16)");
  c_inv->add_flag("--aut", inv.aut, "Compute automorphism group orders");
  c_inv->add_option("--timeout", inv.timeout, "Search time limit in seconds");

  CatalogArgs catalog;
  auto* c_cat = app.add_subcommand("catalog", "Counts of inequivalent Pott-Zhou functions as CSV");
  c_cat->add_option("--m-max", catalog.m_max, "Largest even m")->required();
  c_cat->add_flag("--figure-data", catalog.figure, "Emit m,count,lower_bound,upper_bound");
  c_cat->add_flag("--with-invariants", catalog.with_invariants,
                  "Emit one row per canonical instance with invariants");
  c_cat->add_option("--gamma-rank-max-n", catalog.gamma_rank_max_n,
                    "Fill gamma_rank only up to this n (default 4)");

  WitnessArgs wit;
  auto* c_wit = app.add_subcommand("witness", "Build and verify a linear-equivalence witness");
  c_wit->add_option("--m", wit.m, "Field degree m")->required();
  c_wit->add_option("--k", wit.k, "Exponent parameter k")->required();
  c_wit->add_option("--s", wit.s, "Shift s")->required();
  c_wit->add_option("--alpha", wit.alpha, "Source coefficient in hex (default primitive)");
  c_wit->add_option("--to-alpha", wit.to_alpha, "Target coefficient in hex");
  c_wit->add_flag("--negate-k", wit.negate_k, "Target k -> -k");
  c_wit->add_flag("--negate-s", wit.negate_s, "Target s -> -s");
  c_wit->add_flag("--negate-both", wit.negate_both, "Target (k, s) -> (-k, -s)");

  GoldAutArgs gold_args;
  auto* c_gold = app.add_subcommand("gold-aut", "Linear automorphisms of the Gold function");
  c_gold->add_option("--m", gold_args.m, "Field degree m")->required();
  c_gold->add_option("--k", gold_args.k, "Gold exponent parameter k (default 1)");
  c_gold->add_flag("--enumerate", gold_args.enumerate, "Include every witness");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  try {
    if (c_construct->parsed()) return cmd_construct(construct, out);
    if (c_check->parsed()) return cmd_check(check, out);
    if (c_inv->parsed()) return cmd_invariants(inv, out);
    if (c_cat->parsed()) return cmd_catalog(catalog, out);
    if (c_wit->parsed()) return cmd_witness(wit, out);
    if (c_gold->parsed()) return cmd_gold_aut(gold_args, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kFormatError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kParameterError;
}

}  // namespace apnkit::cli
