// Command-line front end: point enumeration, semigroup tables, parity-check
// matrices, intersection-multiplicity certificates, and the selftest suite.
//
// Exit codes: 0 success, 1 mathematical invariant violation, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkagc/codes.hpp"
#include "gkagc/intersect.hpp"
#include "gkagc/io.hpp"
#include "gkagc/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace gkagc;

namespace {

struct Options {
  int qbar = 2;
  std::string orbit = "O1";
  long long ell = 0;
  long long d = 0;
  std::string format = "json";
  std::string out_path;
  std::string point_spec;
  bool big = false;
};

Orbit parse_orbit(const std::string& s) {
  if (s == "O1") return Orbit::O1;
  if (s == "O2") return Orbit::O2;
  throw CLI::ValidationError("--orbit", "must be O1 or O2");
}

std::vector<int> parse_poly(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

CurveParams make_params(int qbar) {
  if (qbar == 2) {
    if (const char* env = std::getenv("GKAGC_FIELD_POLY")) {
      const auto coeffs = parse_poly(env);
      return CurveParams::make(2, Field::create(2, 6, coeffs));
    }
    return CurveParams::make(2);
  }
  if (qbar == 3) return CurveParams::make(3);
  throw std::invalid_argument("qbar must be 2 or 3");
}

CurvePoint resolve_point(const CurveParams& params, const Options& opt) {
  if (opt.point_spec.empty()) return designated_o2_point(params);
  const auto exps = parse_poly(opt.point_spec);
  if (exps.size() != 3)
    throw std::invalid_argument("--point expects three generator exponents a,b,c");
  const Field& F = *params.field;
  const CurvePoint P =
      CurvePoint::affine(F.gen_pow(exps[0]), F.gen_pow(exps[1]), F.gen_pow(exps[2]));
  if (!on_curve(params, P)) throw std::invalid_argument("point is not on the curve");
  return P;
}

std::ostream& open_out(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + opt.out_path);
  return file;
}

void emit(const Options& opt, const json& doc, const std::vector<std::string>& csv_lines) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  if (opt.format == "json") {
    os << doc.dump(2) << "\n";
  } else if (opt.format == "csv") {
    for (const auto& line : csv_lines) os << line << "\n";
  } else {
    throw std::invalid_argument("format must be json or csv here");
  }
}

int cmd_points(const Options& opt) {
  const auto params = make_params(opt.qbar);
  const auto pts = enumerate_points(params);
  json doc = json::array();
  std::vector<std::string> csv = {"kind,x,y,z,orbit"};
  for (const auto& p : pts) {
    if (p.infinite) {
      doc.push_back({{"kind", "infinite"}, {"orbit", to_string(p.orbit())}});
      csv.push_back("infinite,,,," + std::string(to_string(p.orbit())));
    } else {
      doc.push_back({{"kind", "affine"},
                     {"x", p.x},
                     {"y", p.y},
                     {"z", p.z},
                     {"orbit", to_string(p.orbit())}});
      csv.push_back("affine," + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
                    std::to_string(p.z) + "," + to_string(p.orbit()));
    }
  }
  emit(opt, doc, csv);
  return 0;
}

json semigroup_header(const NumericalSemigroup& s) {
  return json{{"generators", s.generators()},
              {"genus", s.genus()},
              {"conductor", s.conductor()},
              {"gaps", s.gaps()}};
}

int cmd_semigroup(const Options& opt) {
  const auto s = gk_semigroup(opt.qbar, parse_orbit(opt.orbit));
  json doc = semigroup_header(s);
  std::vector<std::string> csv = {"generators,genus,conductor"};
  std::ostringstream gens;
  for (std::size_t i = 0; i < s.generators().size(); ++i)
    gens << (i ? " " : "") << s.generators()[i];
  csv.push_back(gens.str() + "," + std::to_string(s.genus()) + "," +
                std::to_string(s.conductor()));
  emit(opt, doc, csv);
  return 0;
}

int cmd_table(const Options& opt, bool with_code_params) {
  const auto s = gk_semigroup(opt.qbar, parse_orbit(opt.orbit));
  const auto params = make_params(opt.qbar);
  const long long n = params.expected_points - 1;
  const long long lmax = opt.ell > 0 ? opt.ell : 2 * s.conductor() - s.genus() - 1;
  json doc = semigroup_header(s);
  doc["rows"] = json::array();
  std::vector<std::string> csv = {with_code_params ? "n,k,rho,nu,d_ord" : "l,rho,nu,d_ord"};
  for (long long l = 1; l <= lmax; ++l) {
    const long long rho = s.rho(l), nu = s.nu(l), dord = s.order_bound(l);
    json row{{"l", l}, {"rho", rho}, {"nu", nu}, {"d_ord", dord}};
    std::ostringstream line;
    if (with_code_params) {
      row["n"] = n;
      row["k"] = n - l;
      line << n << "," << n - l << "," << rho << "," << nu << "," << dord;
    } else {
      line << l << "," << rho << "," << nu << "," << dord;
    }
    doc["rows"].push_back(row);
    csv.push_back(line.str());
  }
  emit(opt, doc, csv);
  return 0;
}

int cmd_improved_table(const Options& opt) {
  const auto s = gk_semigroup(opt.qbar, parse_orbit(opt.orbit));
  const auto params = make_params(opt.qbar);
  const long long n = params.expected_points - 1;
  const long long dmax = opt.d > 0 ? opt.d : 2 * s.genus();
  const long long dmin = opt.d > 0 ? opt.d : 2;
  json doc = semigroup_header(s);
  doc["rows"] = json::array();
  std::vector<std::string> csv = {"n,d,r_d,k_lb"};
  for (long long d = dmin; d <= dmax; ++d) {
    const long long rd = s.r_d(d);
    doc["rows"].push_back({{"n", n}, {"d", d}, {"r_d", rd}, {"k_lb", n - rd}});
    std::ostringstream line;
    line << n << "," << d << "," << rd << "," << n - rd;
    csv.push_back(line.str());
  }
  emit(opt, doc, csv);
  return 0;
}

int cmd_improvements(const Options& opt) {
  json doc = json::array();
  std::vector<std::string> csv = {"n,k,d,via"};
  for (const auto& c : improvements_table()) {
    doc.push_back({{"n", c.n}, {"k", c.k}, {"d", c.d}, {"via", c.kind}});
    csv.push_back(std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.d) +
                  "," + c.kind);
  }
  emit(opt, doc, csv);
  return 0;
}

int cmd_matrix(const Options& opt, bool improved) {
  const auto params = make_params(opt.qbar);
  const Orbit orbit = parse_orbit(opt.orbit);
  std::optional<CurvePoint> base;
  if (orbit == Orbit::O2) base = resolve_point(params, opt);

  if (opt.qbar == 3 && !opt.big) {
    // 6075-column matrices are emitted only on request
    const auto s = gk_semigroup(opt.qbar, orbit);
    const long long n = params.expected_points - 1;
    std::ofstream file;
    std::ostream& os = open_out(opt, file);
    if (improved)
      os << "Ctilde:" << opt.d << " n=" << n << " rows=" << s.r_d(opt.d)
         << " (pass --big to emit the matrix)\n";
    else
      os << "Cl:" << opt.ell << " n=" << n << " rows=" << opt.ell
         << " (pass --big to emit the matrix)\n";
    return 0;
  }

  const EvalMatrix M = improved ? parity_matrix_improved(params, orbit, opt.d, base)
                                : parity_matrix_Cl(params, orbit, opt.ell, base);
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  write_gkmat(os, M);
  return 0;
}

int cmd_verify_function(const Options& opt) {
  const auto params = make_params(opt.qbar);
  const Orbit orbit = parse_orbit(opt.orbit);
  if (orbit == Orbit::O1) {
    const auto bp = BasePoint::o1(params);
    std::cout << "base point: X_inf (orbit O1), qbar=" << opt.qbar << "\n";
    for (const auto& g : bp.generators())
      std::cout << g.name << ": pole order " << g.pole_order << ", definition " << g.definition
                << "\n";
    std::cout << "pole orders generate the O1 Weierstrass semigroup; the dimension\n"
                 "certificate is rank(parity matrix) = ell (see selftest)\n";
    return 0;
  }
  const CurvePoint P = resolve_point(params, opt);
  const auto bp = BasePoint::o2(params, P);
  const Field& F = *params.field;
  std::cout << "base point: (" << P.x << ", " << P.y << ", " << P.z << ") (orbit O2), qbar="
            << opt.qbar << "\n";
  const std::vector<std::pair<std::string, std::vector<PlaneMonomial>>> coord_systems = {
      {"xb", {{0, 0}}}, {"yb", {{1, 0}}}, {"zb", {{0, 1}}}};
  for (const auto& g : bp.generators()) {
    std::cout << g.name << ": pole order " << g.pole_order << ", definition " << g.definition
              << "\n";
    IntersectionReport rep;
    if (auto expansion = bp.barred_expansion(g.name)) {
      rep = certify_barred_function(bp, *expansion);
    } else {
      const auto& sys =
          *std::find_if(coord_systems.begin(), coord_systems.end(),
                        [&](const auto& cs) { return cs.first == g.name; });
      rep = certify_nongap(params, P, sys.second, {Field::Elt(1)}, 1);
    }
    std::cout << "  certificate: M=" << rep.M << ", N=" << rep.N
              << (rep.N == g.pole_order ? " (matches)" : " (MISMATCH)") << "\n";
    if (rep.N != g.pole_order) throw invariant_error("pole-order certificate mismatch");
  }
  (void)F;
  return 0;
}

PlaneCurve parse_plane_poly(std::shared_ptr<const Field> field, const std::string& text) {
  // terms c*Y^i*Z^j joined by '+'; coefficients w<k> (generator powers) or
  // prime-field integers; '*' and exponents optional
  const Field& F = *field;
  PlaneCurve out(field);
  std::string s;
  for (char ch : text)
    if (!isspace((unsigned char)ch)) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw std::invalid_argument("empty term in polynomial");
    Field::Elt coeff = 1;
    int degY = 0, degZ = 0;
    std::size_t pos = 0;
    while (pos < term.size()) {
      if (term[pos] == '*') {
        ++pos;
        continue;
      }
      if (term[pos] == 'w') {
        std::size_t end = pos + 1;
        while (end < term.size() && isdigit((unsigned char)term[end])) ++end;
        if (end == pos + 1) throw std::invalid_argument("w must be followed by an exponent");
        coeff = F.mul(coeff, F.gen_pow(std::stoll(term.substr(pos + 1, end - pos - 1))));
        pos = end;
      } else if (isdigit((unsigned char)term[pos])) {
        std::size_t end = pos;
        while (end < term.size() && isdigit((unsigned char)term[end])) ++end;
        const long long v = std::stoll(term.substr(pos, end - pos)) % F.p();
        coeff = F.mul(coeff, Field::Elt(v));
        pos = end;
      } else if (term[pos] == 'Y' || term[pos] == 'Z') {
        const char var = term[pos];
        ++pos;
        int e = 1;
        if (pos < term.size() && term[pos] == '^') {
          std::size_t end = ++pos;
          while (end < term.size() && isdigit((unsigned char)term[end])) ++end;
          if (end == pos) throw std::invalid_argument("^ must be followed by an exponent");
          e = std::stoi(term.substr(pos, end - pos));
          pos = end;
        }
        (var == 'Y' ? degY : degZ) += e;
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + term[pos] +
                                    "' in polynomial");
      }
    }
    out.add_term(degY, degZ, coeff);
  }
  return out;
}

int cmd_imult(const Options& opt, const std::string& f_text, const std::string& g_text) {
  const auto params = make_params(opt.qbar);
  const auto F = parse_plane_poly(params.field, f_text);
  const auto G = parse_plane_poly(params.field, g_text);
  const auto M = imult_origin(F, G);
  if (M.infinite)
    std::cout << "INFINITE (common component through the origin)\n";
  else
    std::cout << M.value << "\n";
  return 0;
}

int cmd_search_nongap(const Options& opt, const std::string& monomials_text) {
  if (opt.qbar != 2)
    throw CLI::ValidationError("--qbar", "the non-gap search is supported only for qbar=2");
  const auto params = make_params(opt.qbar);
  const CurvePoint P = resolve_point(params, opt);
  std::vector<PlaneMonomial> mons;
  if (monomials_text.empty()) {
    mons = standard_search_system();
  } else {
    const auto poly = parse_plane_poly(params.field, monomials_text);
    for (const auto& [key, c] : poly.terms()) mons.push_back({key.first, key.second});
  }
  const auto wits = search_nongaps(params, P, mons);
  std::cout << "distinct non-gaps: " << wits.size() << "\n";
  for (const auto& w : wits) {
    std::cout << "N=" << w.N << " M=" << w.M << " witness=(";
    for (std::size_t i = 0; i < w.coeffs.size(); ++i)
      std::cout << (i ? ":" : "") << w.coeffs[i];
    std::cout << ")\n";
  }
  return 0;
}

int cmd_selftest(const Options& opt, bool all) {
  const auto results = run_selftest(all ? 0 : opt.qbar, opt.big);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.label;
    if (!r.pass) std::cout << " -- " << r.detail;
    std::cout << "\n";
    ok &= r.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-point AG codes on the GK curves over GF(64) and GF(729)"};
  app.require_subcommand(1);
  Options opt;
  std::string imult_f, imult_g, monomials_text;
  bool selftest_all = false;

  auto add_common = [&](CLI::App* cmd, bool with_orbit = true) {
    cmd->add_option("--qbar", opt.qbar, "curve parameter (2 or 3)")->check(CLI::IsMember({2, 3}));
    if (with_orbit)
      cmd->add_option("--orbit", opt.orbit, "point orbit (O1 or O2)")
          ->check(CLI::IsMember({"O1", "O2"}));
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "gkmat"}));
    cmd->add_option("--out", opt.out_path, "write output to a file");
    cmd->add_option("--point", opt.point_spec,
                    "O2 base point as generator exponents aExp,bExp,cExp");
    cmd->add_flag("--big", opt.big, "allow the large GF(729) computations");
  };

  add_common(app.add_subcommand("points", "enumerate all rational points"), false);
  add_common(app.add_subcommand("semigroup", "Weierstrass semigroup data"));
  add_common(app.add_subcommand("nu-table", "rows (l, rho, nu, d_ord)"));
  auto* ct = app.add_subcommand("code-table", "rows (n, k, rho, nu, d_ord) for C_l");
  add_common(ct);
  ct->add_option("--ell", opt.ell, "emit rows up to this l");
  app.get_subcommand("nu-table")->add_option("--ell", opt.ell, "emit rows up to this l");
  auto* it = app.add_subcommand("improved-table", "rows (n, d, r_d, k_lb) for the improved codes");
  add_common(it);
  it->add_option("--d", opt.d, "single designed distance instead of the full range");
  add_common(app.add_subcommand("improvements", "the 70 improved [n,k,d] over GF(64)"), false);
  auto* mx = app.add_subcommand("matrix", "GKMAT parity-check matrix of C_l");
  add_common(mx);
  mx->add_option("--ell", opt.ell, "number of parity rows")->required();
  auto* imx = app.add_subcommand("improved-matrix", "GKMAT parity-check matrix of C~_d");
  add_common(imx);
  imx->add_option("--d", opt.d, "designed distance")->required();
  add_common(app.add_subcommand("verify-function",
                                "generator functions with pole-order certificates"));
  auto* im = app.add_subcommand("imult", "intersection multiplicity of two plane curves at O");
  add_common(im, false);
  im->add_option("F", imult_f, "first polynomial, e.g. 'Z+Z^2+w9*Y^2+Y^3'")->required();
  im->add_option("G", imult_g, "second polynomial")->required();
  auto* sn = app.add_subcommand("search-nongap", "non-gap search over a monomial system");
  add_common(sn, false);
  sn->add_option("--monomials", monomials_text,
                 "monomial system as a polynomial with coefficients 1 (default: the degree-2 system)");
  auto* st = app.add_subcommand("selftest", "run the verification suite");
  add_common(st);
  st->add_flag("--all", selftest_all, "run both curves regardless of --qbar");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("points")) return cmd_points(opt);
    if (app.got_subcommand("semigroup")) return cmd_semigroup(opt);
    if (app.got_subcommand("nu-table")) return cmd_table(opt, false);
    if (app.got_subcommand("code-table")) return cmd_table(opt, true);
    if (app.got_subcommand("improved-table")) return cmd_improved_table(opt);
    if (app.got_subcommand("improvements")) return cmd_improvements(opt);
    if (app.got_subcommand("matrix")) return cmd_matrix(opt, false);
    if (app.got_subcommand("improved-matrix")) return cmd_matrix(opt, true);
    if (app.got_subcommand("verify-function")) return cmd_verify_function(opt);
    if (app.got_subcommand("imult")) return cmd_imult(opt, imult_f, imult_g);
    if (app.got_subcommand("search-nongap")) return cmd_search_nongap(opt, monomials_text);
    if (app.got_subcommand("selftest")) return cmd_selftest(opt, selftest_all);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
