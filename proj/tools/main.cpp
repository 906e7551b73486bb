#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blowup/cone.hpp"
#include "blowup/cremona.hpp"
#include "blowup/divisor.hpp"
#include "blowup/gallery.hpp"
#include "blowup/interp.hpp"
#include "blowup/pell.hpp"
#include "blowup/shgh.hpp"

using json = nlohmann::ordered_json;
using namespace blowup;

namespace {

// Big integers serialize as decimal strings.
std::string dec(const BigInt& v) { return v.get_str(); }
std::string dec(const BigRat& v) { return v.get_str(); }

Vec2 parse_vec2(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("expected `x,y`, got '" + s + "'");
  try {
    return {BigInt(s.substr(0, comma)), BigInt(s.substr(comma + 1))};
  } catch (const std::invalid_argument&) {
    throw ParseError("expected `x,y`, got '" + s + "'");
  }
}

void run_pell_table(unsigned k_max, const std::string& format) {
  struct Row {
    unsigned k;
    std::string p, q, D, c, F;
  };
  std::vector<Row> rows;
  for (unsigned k = 0; k <= k_max; ++k) {
    const Convergent cv = convergent(10, k);
    const PellDivisorRecord rec = pell_divisor(k);
    Row row{k, dec(cv.p), dec(cv.q), format_divisor(rec.D), "", ""};
    if (rec.has_factorization) {
      row.c = dec(rec.c);
      row.F = format_divisor(rec.F);
    }
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"k", r.k},
                     {"p", r.p},
                     {"q", r.q},
                     {"D", r.D},
                     {"c", r.c},
                     {"F", r.F},
                     {"vdim_D", "0"},
                     {"dim_D_status", "SHGH_CONDITIONAL_EXACT"}});
    }
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "k,p,q,D,c,F\n";
    for (const auto& r : rows)
      std::cout << r.k << "," << r.p << "," << r.q << "," << r.D << "," << r.c
                << "," << r.F << "\n";
  } else {
    std::cout << std::left << std::setw(4) << "k" << std::setw(12) << "p"
              << std::setw(12) << "q" << std::setw(28) << "D" << std::setw(8)
              << "c" << "F\n";
    for (const auto& r : rows)
      std::cout << std::left << std::setw(4) << r.k << std::setw(12) << r.p
                << std::setw(12) << r.q << std::setw(28) << r.D << std::setw(8)
                << r.c << r.F << "\n";
  }
}

void run_vdim(const std::string& divisor) {
  std::cout << dec(vdim(parse_divisor(divisor))) << "\n";
}

void run_shgh_dim(const std::string& divisor) {
  const ConditionalDim cd = shgh_dim(parse_divisor(divisor));
  json out = {{"value", dec(cd.value)},
              {"status", to_string(cd.status)},
              {"criterion_met", cd.criterion_met}};
  std::cout << out.dump(2) << "\n";
}

void run_interp(const std::string& divisor, std::uint64_t prime,
                unsigned trials, std::uint64_t seed) {
  const DivisorClass D = parse_divisor(divisor);
  const ShghCrossCheck cc = cross_check_shgh(D, prime, trials, seed);
  const RankReport& r = cc.rank;
  json out = {
      {"divisor", format_divisor(D)},
      {"n_coef", std::to_string(r.n_coef)},
      {"n_cond", std::to_string(r.n_cond)},
      {"best_rank", std::to_string(r.best_rank)},
      {"kernel_dim", std::to_string(r.kernel_dim)},
      {"verdict", to_string(r.verdict)},
      {"dim_upper_bound", std::to_string(r.dim_upper_bound)},
      {"vdim", dec(vdim(D))},
      {"prime", std::to_string(r.prime)},
      {"trials", r.trials},
      {"seed", std::to_string(r.seed)},
      {"shgh_value", dec(cc.shgh.value)},
      {"shgh_status", to_string(cc.shgh.status)},
      {"match", cc.match},
      {"counterexample_alarm", cc.counterexample_alarm},
  };
  std::cout << out.dump(2) << "\n";
}

void run_cremona_orbit(std::size_t r, unsigned steps, const std::string& format) {
  const auto orbit = degree_growing_orbit(r, steps);
  if (format == "json") {
    json out = json::array();
    for (std::size_t t = 0; t < orbit.size(); ++t) {
      out.push_back({{"t", t},
                     {"degree", dec(orbit[t].d)},
                     {"class", format_divisor(orbit[t])},
                     {"self_intersection", dec(intersect(orbit[t], orbit[t]))}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "t,degree,multiplicities,self_intersection\n";
    for (std::size_t t = 0; t < orbit.size(); ++t) {
      std::cout << t << "," << dec(orbit[t].d) << ",";
      for (std::size_t i = 0; i < orbit[t].mults.size(); ++i)
        std::cout << (i ? " " : "") << dec(orbit[t].mults[i]);
      std::cout << "," << dec(intersect(orbit[t], orbit[t])) << "\n";
    }
  }
}

void run_cone_bound(const std::string& v1s, const std::string& v2s,
                    const std::string& rs, long verify_box) {
  const RationalCone2D cone(parse_vec2(v1s), parse_vec2(v2s));
  const Vec2 R = parse_vec2(rs);
  const BigInt m = effective_multiple_bound(cone, R);
  const ExactDistanceSq c_sq = lattice_distance_constant_sq(cone);
  json out = {{"m", dec(m)}, {"c_sq", dec(c_sq.num) + "/" + dec(c_sq.den)}};
  if (verify_box > 0) {
    const VerifyResult vr = brute_force_verify(cone, R, m, verify_box);
    out["verified"] = vr.ok;
    if (vr.has_witness)
      out["witness"] = dec(vr.witness.x) + "," + dec(vr.witness.y);
  } else {
    out["verified"] = false;
  }
  std::cout << out.dump(2) << "\n";
}

void emit_rows(const json& rows, const std::string& format) {
  if (format == "csv") {
    if (rows.empty()) return;
    bool first = true;
    for (auto& [key, _] : rows[0].items()) {
      std::cout << (first ? "" : ",") << key;
      first = false;
    }
    std::cout << "\n";
    for (const auto& row : rows) {
      first = true;
      for (auto& [_, val] : row.items()) {
        std::cout << (first ? "" : ",")
                  << (val.is_string() ? val.get<std::string>() : val.dump());
        first = false;
      }
      std::cout << "\n";
    }
  } else {
    std::cout << rows.dump(2) << "\n";
  }
}

void run_gallery_kollar(long b, long n_max, const std::string& format) {
  json rows = json::array();
  for (long n = 0; n <= n_max; ++n) {
    BigInt bn(b), nn(n);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), bn.get_mpz_t(), nn.get_mpz_t());
    if (g != 1) continue;  // pairing defined for coprime (n, b) only
    const KollarRecord rec = kollar_record(nn, bn);
    rows.push_back({{"n", dec(rec.n)},
                    {"b", dec(rec.b)},
                    {"A_sq", dec(rec.A_sq)},
                    {"A_dot_F1F2", dec(rec.A_dot_FF)},
                    {"D_sq", dec(rec.D_sq)},
                    {"D_dot_K", dec(rec.D_dot_K)},
                    {"ratio", dec(rec.ratio)}});
  }
  emit_rows(rows, format);
}

void run_gallery_harbourne(unsigned k_max, const std::string& format) {
  json rows = json::array();
  for (const auto& rec : harbourne_sequence(k_max)) {
    rows.push_back({{"k", rec.k},
                    {"d_k", dec(rec.d_k)},
                    {"vdim_G", dec(rec.vdim_G)},
                    {"h0", dec(rec.h0_conditional)},
                    {"h1", dec(rec.h1_conditional)},
                    {"status", "SHGH_CONDITIONAL"}});
  }
  emit_rows(rows, format);
}

void run_gallery_bounds(long pa, long alpha, const std::string& format) {
  json rows = json::array();
  json row = {{"p_a", std::to_string(pa)},
              {"alpha", std::to_string(alpha)},
              {"bnc_bound", dec(bnc_bound(pa, alpha))}};
  if (alpha >= 1)
    row["q4_bound"] = dec(q4_bound_from_harbourne(pa, alpha));
  rows.push_back(row);
  emit_rows(rows, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor-class computations on blow-ups of the plane"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string divisor, v1s, v2s, rs;
  unsigned k_max = 4, trials = 3, steps = 10;
  std::uint64_t prime = 2147483647ull, seed = 0;
  std::size_t r_points = 9;
  long verify_box = 0, b_param = 1, n_max = 50, pa = 0, alpha = 1;

  auto* pell = app.add_subcommand("pell-table", "Pell divisor sequence on X_10");
  pell->add_option("--k-max", k_max, "largest index k");
  pell->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  auto* vd = app.add_subcommand("vdim", "virtual dimension of a divisor class");
  vd->add_option("divisor", divisor, "class `d;m1,m2,...`")->required();

  auto* sd = app.add_subcommand("shgh-dim", "conditional dimension verdict");
  sd->add_option("divisor", divisor)->required();

  auto* in = app.add_subcommand("interp", "finite-field interpolation rank");
  in->add_option("--divisor", divisor)->required();
  in->add_option("--prime", prime);
  in->add_option("--trials", trials);
  in->add_option("--seed", seed);
  in->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* cr = app.add_subcommand("cremona-orbit", "degree-growing Cremona orbit");
  cr->add_option("--r", r_points, "number of blown-up points (>= 9)");
  cr->add_option("--steps", steps)->required();
  cr->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* cb = app.add_subcommand("cone-bound", "effective-multiple bound for a planar cone");
  cb->add_option("--v1", v1s, "first generator `a,b`")->required();
  cb->add_option("--v2", v2s, "second generator `c,d`")->required();
  cb->add_option("--r", rs, "integral interior anchor `x,y`")->required();
  cb->add_option("--verify", verify_box, "brute-force box radius");

  auto* ga = app.add_subcommand("gallery", "counterexample-family calculators");
  ga->require_subcommand(1);
  auto* gk = ga->add_subcommand("kollar", "E x E double-cover ratios");
  gk->add_option("--b", b_param);
  gk->add_option("--n-max", n_max);
  gk->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  auto* gh = ga->add_subcommand("harbourne", "h1 sequence on the double cover");
  gh->add_option("--k-max", k_max);
  gh->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  auto* gb = ga->add_subcommand("bounds", "BNC and Question 4 bound formulas");
  gb->add_option("--pa", pa);
  gb->add_option("--alpha", alpha);
  gb->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pell->parsed()) {
      run_pell_table(k_max, format);
    } else if (vd->parsed()) {
      run_vdim(divisor);
    } else if (sd->parsed()) {
      run_shgh_dim(divisor);
    } else if (in->parsed()) {
      run_interp(divisor, prime, trials, seed);
    } else if (cr->parsed()) {
      run_cremona_orbit(r_points, steps, format == "table" ? "csv" : format);
    } else if (cb->parsed()) {
      run_cone_bound(v1s, v2s, rs, verify_box);
    } else if (ga->parsed()) {
      const std::string fmt = format == "table" ? "json" : format;
      if (gk->parsed()) run_gallery_kollar(b_param, n_max, fmt);
      if (gh->parsed()) run_gallery_harbourne(k_max, fmt);
      if (gb->parsed()) run_gallery_bounds(pa, alpha, fmt);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
