// kleinc: command-line front end for the Kleinian code library.
//
// Exit status: 0 on success, 1 on usage or input errors, 2 when a computed
// certificate disagrees with the closed form it is audited against.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "kleinc/binary.hpp"
#include "kleinc/canon.hpp"
#include "kleinc/classify.hpp"
#include "kleinc/construct.hpp"
#include "kleinc/design.hpp"
#include "kleinc/enumerators.hpp"
#include "kleinc/extremal.hpp"
#include "kleinc/io.hpp"
#include "kleinc/lex.hpp"
#include "kleinc/search.hpp"
#include "kleinc/standard.hpp"
#include "kleinc/sym.hpp"

using Json = nlohmann::ordered_json;
using namespace kleinc;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_certificate = 2;

// Integers that fit into 64 bits become JSON numbers, larger ones strings.
Json big(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}

Json rat(const Rational& q) {
  if (denominator(q) == 1) return big(numerator(q));
  return Json(to_string(q));
}

Json coeffs(const IntPoly& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.n; ++i) a.push_back(big(p[i]));
  return a;
}

Json coeffs(const RatPoly& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.n; ++i) a.push_back(rat(p[i]));
  return a;
}

Json rows(const KCode& c) {
  Json a = Json::array();
  for (const auto& r : c.basis()) a.push_back(r.str());
  return a;
}

Json rows(const BinaryCode& c) {
  Json a = Json::array();
  for (const auto& r : c.basis()) a.push_back(r.str());
  return a;
}

// Sparse enumerator as {"(i,j,k)": count}.
template <class Map>
Json monomials(const Map& terms) {
  Json a = Json::object();
  for (const auto& [k, v] : terms) {
    std::string key = "(";
    for (std::size_t i = 0; i < k.size(); ++i) key += (i ? "," : "") + std::to_string(k[i]);
    a[key + ")"] = big(v);
  }
  return a;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Source of an input code: a file, or a named standard code.
struct CodeArg {
  std::string file;
  std::string std_name;
  int param = 0;

  void add(CLI::App* app, const std::string& flag = "--code") {
    app->add_option(flag, file, "code file (one generator per line over 0,a,b,c)");
    app->add_option("--std", std_name, "named code instead of a file: " + names());
    app->add_option("--param", param, "parameter for delta, delta+, hamming, ext-hamming");
  }

  static std::string names() {
    std::string s;
    for (const auto& n : standard_code_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }

  KCode load() const {
    if (!file.empty() && !std_name.empty()) throw CLI::ValidationError("give either --code or --std, not both");
    if (!std_name.empty()) return standard_code(std_name, param);
    if (file.empty()) throw CLI::ValidationError("an input code is required (--code FILE or --std NAME)");
    return read_code_file(file);
  }
};

int dmax_for(const ClassRecord& r, int n) {
  return dmax_bound(n, r.even && n % 2 == 0 && false);
}

Json class_json(const ClassRecord& r, int n, int index, bool with_children) {
  Json j;
  j["no"] = index + 1;
  j["type"] = r.skel.str();
  j["even"] = r.even;
  j["A"] = coeffs(r.we);
  j["aut_order"] = big(r.aut_order);
  if (is_self_dual(r.rep)) {
    const int d = min_weight(r.rep);
    j["min_weight"] = d;
    j["extremal"] = d == dmax_for(r, n);
    j["shadow_min_weight"] = shadow(r.rep).min_weight();
  }
  if (with_children && r.even) {
    AutResult a{r.aut_order, r.aut_generators};
    const auto ch = children(r.rep, &a);
    int non_primitive = 0;
    for (const auto& c : ch) non_primitive += c.gamma_count > 0;
    j["n1"] = ch.size();
    j["n2"] = non_primitive;
  }
  j["code"] = rows(r.rep);
  return j;
}

std::string table(const Classification& cl, const Json& classes) {
  std::ostringstream out;
  const int n = cl.n;
  out << "n=" << n << (cl.even_only ? " even" : "") << " classes=" << cl.classes.size()
      << " mass=" << cl.mass_sum << "/" << cl.mass_expected << (cl.audit_ok() ? " ok" : " FAILED") << "\n";
  out << std::left << std::setw(4) << "No" << std::setw(16) << "type";
  for (int i = 0; i <= n; ++i) {
    if (cl.even_only && i % 2 != 0) continue;
    out << std::right << std::setw(6) << ("A" + std::to_string(i));
  }
  out << std::right << std::setw(14) << "|Aut|";
  if (cl.even_only) out << std::setw(4) << "n1" << std::setw(4) << "n2";
  out << "\n";
  for (std::size_t c = 0; c < cl.classes.size(); ++c) {
    const auto& r = cl.classes[c];
    out << std::left << std::setw(4) << (c + 1) << std::setw(16) << r.skel.str();
    for (int i = 0; i <= n; ++i) {
      if (cl.even_only && i % 2 != 0) continue;
      out << std::right << std::setw(6) << r.we[i];
    }
    out << std::right << std::setw(14) << r.aut_order;
    if (cl.even_only) {
      const auto& j = classes[c];
      out << std::setw(4) << j.value("n1", 0) << std::setw(4) << j.value("n2", 0);
    }
    out << "\n";
  }
  return out.str();
}

double budget_with_env(double requested) {
  if (const char* env = std::getenv("KLEINC_BUDGET_SECS")) {
    const double cap = std::atof(env);
    if (cap > 0) return requested > 0 ? std::min(requested, cap) : cap;
  }
  return requested;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kleinc: linear codes over the Klein four-group K = {0, a, b, c}"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- code algebra and enumerators ----
  CodeArg dual_in;
  std::string dual_out;
  auto* dual_cmd = app.add_subcommand("dual", "print the dual code in the code file format");
  dual_in.add(dual_cmd);
  dual_cmd->add_option("--out", dual_out, "write to this file instead of standard output");
  dual_cmd->callback([&] {
    const KCode d = dual(dual_in.load());
    if (dual_out.empty())
      std::cout << format_code(d);
    else
      write_code_file(d, dual_out);
  });

  CodeArg we_in;
  auto* we_cmd = app.add_subcommand("we", "Hamming weight enumerator");
  we_in.add(we_cmd);
  we_cmd->callback([&] {
    const KCode c = we_in.load();
    std::cout << Json{{"n", c.length()}, {"A", coeffs(hamming_we(c))}}.dump() << "\n";
  });

  CodeArg cwe_in;
  auto* cwe_cmd = app.add_subcommand("cwe", "complete weight enumerator (exponents count 0, a, b, c)");
  cwe_in.add(cwe_cmd);
  cwe_cmd->callback([&] {
    const KCode c = cwe_in.load();
    print(Json{{"n", c.length()}, {"terms", monomials(complete_we(c).terms)}});
  });

  CodeArg swe_in;
  auto* swe_cmd = app.add_subcommand("swe", "symmetrized weight enumerator (exponents count 0, a, {b,c})");
  swe_in.add(swe_cmd);
  swe_cmd->callback([&] {
    const KCode c = swe_in.load();
    print(Json{{"n", c.length()}, {"terms", monomials(swe(c).terms)}});
  });

  CodeArg mw_in;
  auto* mw_cmd = app.add_subcommand("macwilliams", "check the MacWilliams transforms against the dual code");
  mw_in.add(mw_cmd);
  mw_cmd->callback([&] {
    const KCode c = mw_in.load();
    const BigInt size = BigInt(1) << c.dim2();
    const WeightEnum predicted = macwilliams(hamming_we(c), size);
    const WeightEnum direct = hamming_we(dual(c));
    const bool cwe_ok = macwilliams_complete(complete_we(c), size) == complete_we(dual(c));
    const bool ok = predicted == direct && cwe_ok;
    print(Json{{"n", c.length()},
               {"A", coeffs(hamming_we(c))},
               {"dual_A_transform", coeffs(predicted)},
               {"dual_A_direct", coeffs(direct)},
               {"complete_transform_agrees", cwe_ok},
               {"agree", ok}});
    if (!ok) rc = exit_certificate;
  });

  CodeArg sh_in;
  auto* sh_cmd = app.add_subcommand("shadow", "shadow enumerator and the shadow bounds of a self-dual code");
  sh_in.add(sh_cmd);
  sh_cmd->callback([&] {
    const KCode c = sh_in.load();
    const ShadowSet s = shadow(c);
    const ShadowReport r = shadow_extremal_check(c);
    const RationalWE formula = shadow_we(to_rational(hamming_we(c)), Rational(BigInt(1) << c.dim2()));
    const bool agree = to_rational(s.weight_enumerator()) == formula;
    print(Json{{"n", c.length()},
               {"even", s.even},
               {"shadow_A", coeffs(s.weight_enumerator())},
               {"shadow_A_formula_agrees", agree},
               {"h", r.h},
               {"h_equals_n", r.h_equals_n},
               {"equivalent_to_gamma1_power", r.is_gamma_power},
               {"A1_zero", r.a1_zero},
               {"A2", big(r.a2)},
               {"meets_weight2_bound", r.meets_weight2_bound},
               {"shadow_count_weight_n_minus_2", big(r.shadow_count_n_minus_2)}});
    if (!agree) rc = exit_certificate;
  });

  // ---- classification ----
  int cls_n = 0, cls_jobs = 1;
  bool cls_even = false, cls_table = false, cls_children = false;
  auto* cls_cmd = app.add_subcommand("classify", "classify self-dual codes of length n with mass audit");
  cls_cmd->add_option("--n", cls_n, "length")->required()->check(CLI::Range(1, 10));
  cls_cmd->add_flag("--even", cls_even, "only even self-dual codes");
  cls_cmd->add_flag("--table", cls_table, "render a text table instead of JSON");
  cls_cmd->add_flag("--via-children", cls_children, "derive length n as children of the even classes of length n+1");
  cls_cmd->add_option("--jobs", cls_jobs, "worker threads")->check(CLI::PositiveNumber);
  cls_cmd->callback([&] {
    ClassifyOptions opts;
    opts.jobs = cls_jobs;
    opts.progress = [](const std::string& line) { std::cerr << line << "\n"; };
    Classification cl;
    if (cls_children) {
      if (cls_even) throw CLI::ValidationError("--via-children produces all self-dual codes; drop --even");
      cl = classify_via_children(classify(cls_n + 1, true, opts), opts);
    } else {
      cl = classify(cls_n, cls_even, opts);
    }
    Json classes = Json::array();
    for (std::size_t i = 0; i < cl.classes.size(); ++i)
      classes.push_back(class_json(cl.classes[i], cl.n, static_cast<int>(i), cl.even_only));
    // weighted enumerator sum against the closed form
    RatPoly sum(cl.n);
    const BigInt group = factorial(cl.n) * boost::multiprecision::pow(BigInt(6), static_cast<unsigned>(cl.n));
    for (const auto& r : cl.classes) sum += to_rational(r.we) * Rational(group / r.aut_order);
    const bool avg_ok = sum == average_we(cl.n, cl.even_only);
    if (cls_table) {
      std::cout << table(cl, classes);
      std::cout << "average enumerator audit " << (avg_ok ? "ok" : "FAILED") << "\n";
    } else {
      print(Json{{"n", cl.n},
                 {"even_only", cl.even_only},
                 {"count", cl.classes.size()},
                 {"mass_sum", big(cl.mass_sum)},
                 {"mass_expected", big(cl.mass_expected)},
                 {"mass_audit_ok", cl.audit_ok()},
                 {"average_audit_ok", avg_ok},
                 {"classes", classes}});
    }
    if (!cl.audit_ok() || !avg_ok) rc = exit_certificate;
  });

  int mass_n = 0;
  bool mass_even = false;
  auto* mass_cmd = app.add_subcommand("mass", "number of distinct self-dual codes of length n");
  mass_cmd->add_option("--n", mass_n, "length")->required()->check(CLI::PositiveNumber);
  mass_cmd->add_flag("--even", mass_even, "count even self-dual codes");
  mass_cmd->callback([&] { std::cout << mass(mass_n, mass_even) << "\n"; });

  CodeArg ch_in;
  auto* ch_cmd = app.add_subcommand("children", "children of an even self-dual code, one per Aut-orbit of points");
  ch_in.add(ch_cmd);
  ch_cmd->callback([&] {
    const KCode c = ch_in.load();
    Json out = Json::array();
    for (const auto& ch : children(c)) {
      out.push_back(Json{{"position", ch.position},
                         {"glue", std::string(1, to_char(ch.glue))},
                         {"orbit_size", ch.orbit_size},
                         {"gamma1_factors", ch.gamma_count},
                         {"primitive_type", skeleton(ch.primitive).str()},
                         {"A", coeffs(hamming_we(ch.child))},
                         {"code", rows(ch.child)}});
    }
    print(Json{{"n", c.length()}, {"children", out}});
  });

  CodeArg nb_in;
  auto* nb_cmd = app.add_subcommand("neighbors", "the two even neighbours of a non-even self-dual code");
  nb_in.add(nb_cmd);
  nb_cmd->callback([&] {
    const auto [d2, d3] = neighbors(nb_in.load());
    print(Json{{"first", rows(d2)}, {"second", rows(d3)}, {"equivalent", equivalent(d2, d3).has_value()}});
  });

  int gr_n = 0, gr_jobs = 1;
  auto* gr_cmd = app.add_subcommand("graph", "neighbourhood graph of the self-dual codes of even length n");
  gr_cmd->add_option("--n", gr_n, "even length")->required()->check(CLI::Range(2, 8));
  gr_cmd->add_option("--jobs", gr_jobs, "worker threads")->check(CLI::PositiveNumber);
  gr_cmd->callback([&] {
    if (gr_n % 2 != 0) throw CLI::ValidationError("--n must be even");
    ClassifyOptions opts;
    opts.jobs = gr_jobs;
    const Classification all = classify(gr_n, false, opts);
    const NeighGraph g = neighborhood_graph(all);
    Json verts = Json::array(), edges = Json::array();
    for (int v : g.vertices) {
      const auto& r = all.classes[static_cast<std::size_t>(v)];
      verts.push_back(Json{{"class", v + 1}, {"type", r.skel.str()}, {"A", coeffs(r.we)}});
    }
    for (const auto& e : g.edges)
      edges.push_back(Json{{"u", g.vertices[static_cast<std::size_t>(e.u)] + 1},
                           {"v", g.vertices[static_cast<std::size_t>(e.v)] + 1},
                           {"odd_class", e.odd_class + 1},
                           {"loop", e.loop()}});
    print(Json{{"n", gr_n},
               {"vertex_count", g.vertices.size()},
               {"edge_objects", g.edges.size()},
               {"loops", g.loop_count()},
               {"proper_edges", g.proper_edge_count()},
               {"connected", g.connected()},
               {"vertices", verts},
               {"edges", edges}});
  });

  // ---- extremal codes ----
  int ex_n = 0;
  bool ex_even = false;
  auto* ex_cmd = app.add_subcommand("extremal-we", "extremal weight enumerator by exact Gleason solve");
  ex_cmd->add_option("--n", ex_n, "length")->required()->check(CLI::PositiveNumber);
  ex_cmd->add_flag("--even", ex_even, "even self-dual codes");
  ex_cmd->callback([&] {
    const ExtremalSolve s = extremal_we(ex_n, ex_even);
    Json a = Json::array();
    for (const auto& x : s.a) a.push_back(rat(x));
    print(Json{{"n", ex_n}, {"even", ex_even}, {"dmax", dmax_bound(ex_n, ex_even)}, {"forced_zeros", s.m},
               {"gleason_coefficients", a}, {"A", coeffs(s.A)}});
  });

  int ne_n = 0;
  bool ne_even = false;
  auto* ne_cmd = app.add_subcommand("nonexist", "certificate that no extremal code of length n exists");
  ne_cmd->add_option("--n", ne_n, "length")->required()->check(CLI::PositiveNumber);
  ne_cmd->add_flag("--even", ne_even, "even self-dual codes");
  ne_cmd->callback([&] {
    const auto cert = nonexistence_certificate(ne_n, ne_even);
    Json j{{"n", ne_n}, {"even", ne_even}};
    if (!cert) {
      j["certificate"] = nullptr;
    } else {
      Json c{{"kind", to_string(cert->kind)}, {"index", cert->index}, {"coefficient", rat(cert->coefficient)}};
      if (cert->kind != CertKind::ANegative) {
        c["leading_index"] = cert->leading_index;
        c["leading"] = rat(cert->leading);
      }
      j["certificate"] = c;
    }
    print(j);
  });

  int se_n = 0, se_d = 0, se_jobs = 1;
  double se_budget = 0;
  bool se_even = false, se_exh = false;
  std::uint64_t se_nodes = 0;
  std::string se_out;
  auto* se_cmd = app.add_subcommand("search", "backtracking search for a self-dual code with minimal weight >= d");
  se_cmd->add_option("--n", se_n, "length")->required()->check(CLI::Range(1, 64));
  se_cmd->add_option("--d", se_d, "target minimal weight")->required()->check(CLI::PositiveNumber);
  se_cmd->add_flag("--even", se_even, "even self-dual codes");
  se_cmd->add_option("--budget", se_budget, "wall-clock budget in seconds (capped by KLEINC_BUDGET_SECS)");
  se_cmd->add_flag("--exhaustive", se_exh, "visit the whole tree and count every leaf");
  se_cmd->add_option("--node-limit", se_nodes, "stop after this many nodes");
  se_cmd->add_option("--jobs", se_jobs, "worker threads")->check(CLI::PositiveNumber);
  se_cmd->add_option("--out", se_out, "write a found code to this file");
  se_cmd->callback([&] {
    SearchOptions o;
    o.budget_seconds = budget_with_env(se_budget);
    o.exhaustive = se_exh;
    o.jobs = se_jobs;
    o.node_limit = se_nodes;
    const SearchResult r = search(se_n, se_even, se_d, o);
    Json j{{"n", se_n}, {"d", se_d}, {"even", se_even}, {"status", to_string(r.status)}};
    // node counts of a first-witness run depend on thread scheduling
    if (se_exh) {
      j["nodes"] = r.nodes;
      j["leaves"] = r.solutions;
    } else {
      std::cerr << "search: " << r.nodes << " nodes in " << r.seconds << " s\n";
    }
    if (r.code) {
      j["A"] = coeffs(hamming_we(*r.code));
      j["code"] = rows(*r.code);
      if (!se_out.empty()) write_code_file(*r.code, se_out);
    }
    print(j);
  });

  // ---- designs, orbits, covering radius ----
  CodeArg de_in;
  int de_w = 0, de_t = 0;
  auto* de_cmd = app.add_subcommand("design", "check whether the codewords of one weight form a generalized t-design");
  de_in.add(de_cmd);
  de_cmd->add_option("--weight", de_w, "codeword weight")->required();
  de_cmd->add_option("--t", de_t, "design strength")->required();
  de_cmd->callback([&] {
    const KCode c = de_in.load();
    const DesignSlice s = slice(c, de_w);
    const DesignReport r = check_design(s, de_t);
    Json j{{"n", s.n}, {"k", s.k}, {"t", r.t}, {"blocks", s.Y.size()}, {"is_design", r.is_design},
           {"Xt_size", big(r.xt_size)}};
    if (r.mu) j["mu"] = big(*r.mu);
    if (r.offending) {
      j["offending"] = r.offending->str();
      j["offending_count"] = big(r.offending_count);
    }
    if (de_t == 2 && s.k >= 2) {
      j["fisher_bound"] = big(fisher_bound(s.n, s.k));
      j["fisher_divisibility_minimum"] = big(fisher_divisibility_minimum(s.n, s.k));
    }
    print(j);
  });

  CodeArg or_in;
  int or_w = -1;
  auto* or_cmd = app.add_subcommand("orbits", "orbits of Aut(C) on K^n or on one weight");
  or_in.add(or_cmd);
  or_cmd->add_option("--weight", or_w, "restrict to words of this weight");
  or_cmd->callback([&] {
    const KCode c = or_in.load();
    const OrbitTable t = orbits(c, or_w >= 0 ? std::optional<int>(or_w) : std::nullopt);
    Json out = Json::array();
    for (const auto& o : t.orbits)
      out.push_back(Json{{"weight", o.weight}, {"rep", o.rep.str()}, {"size", o.size}, {"distance", o.distance},
                         {"nearest_codewords", o.nearest}});
    print(Json{{"n", t.n}, {"aut_order", big(t.group_order)}, {"orbit_count", t.orbits.size()}, {"orbits", out}});
  });

  CodeArg cv_in;
  auto* cv_cmd = app.add_subcommand("covering", "covering radius and minimal-weight coset representatives");
  cv_in.add(cv_cmd);
  cv_cmd->callback([&] {
    const KCode c = cv_in.load();
    const CoveringResult r = covering_radius(c);
    Json counts = Json::array(), leaders = Json::array();
    for (auto x : r.count_by_weight) counts.push_back(x);
    for (const auto& l : r.leaders) leaders.push_back(l.rep.str());
    const DeepHoleStats dh = deep_holes(c);
    Json groups = Json::array();
    for (const auto& [size, count] : dh.group_sizes) groups.push_back(Json{{"words_per_coset", size}, {"cosets", count}});
    print(Json{{"n", c.length()},
               {"radius", r.radius},
               {"cosets_by_weight", counts},
               {"deep_holes", Json{{"weight", dh.radius}, {"words", dh.words}, {"cosets", dh.cosets}, {"groups", groups}}},
               {"leaders", leaders}});
  });

  // ---- constructions A and B ----
  CodeArg co_in;
  std::string co_mode = "A", co_norm = "auto";
  auto* co_cmd = app.add_subcommand("construct", "binary code rho_A(C) or rho_B(C) with both sides of the enumerator identities");
  co_in.add(co_cmd);
  co_cmd->add_option("--mode", co_mode, "A or B")->check(CLI::IsMember({"A", "B"}));
  co_cmd->add_option("--normalize", co_norm,
                     "construction B representative: codeword (c^n in C), shadow (c^n in the shadow), "
                     "none, or auto (codeword for even codes, shadow otherwise)")
      ->check(CLI::IsMember({"auto", "codeword", "shadow", "none"}));
  co_cmd->callback([&] {
    KCode c = co_in.load();
    const Construction mode = co_mode == "A" ? Construction::A : Construction::B;
    Json j{{"mode", co_mode}, {"n", c.length()}};
    if (mode == Construction::B && co_norm != "none") {
      std::string how = co_norm;
      if (how == "auto") how = is_even(c) ? "codeword" : "shadow";
      const BNormalized nb = normalize_for_b(c, how == "codeword" ? BTarget::Codeword : BTarget::Shadow);
      j["normalized"] = how;
      j["relabel"] = nb.relabel.str();
      c = nb.code;
    }
    const BinaryCode b = rho(c, mode);
    const IntPoly we = binary_we(b);
    const IntPoly pred = predicted_we(hamming_we(c), mode);
    const MarkedSmwe sm = bin_smwe(b, marking_intervals(Marking::standard(c.length())));
    const MarkedSmwe psm = predicted_smwe(swe(c), mode);
    j["kleinian_code"] = rows(c);
    j["length"] = b.length();
    j["dimension"] = b.dim();
    j["min_weight"] = b.dim() > 0 ? binary_min_weight(b) : 0;
    j["self_dual"] = is_self_dual(b);
    j["doubly_even"] = is_doubly_even(b);
    j["W"] = coeffs(we);
    j["W_predicted"] = coeffs(pred);
    j["W_identity"] = we == pred;
    j["smwe"] = monomials(sm.terms);
    j["smwe_predicted"] = monomials(psm.terms);
    j["smwe_identity"] = sm == psm;
    j["binary_code"] = rows(b);
    print(j);
    if (we != pred || !(sm == psm)) rc = exit_certificate;
  });

  // ---- lexicodes ----
  int lx_n = 0, lx_d = 0;
  auto* lx_cmd = app.add_subcommand("lex", "greedy lexicographic code");
  lx_cmd->add_option("--n", lx_n, "length")->required()->check(CLI::Range(1, 13));
  lx_cmd->add_option("--d", lx_d, "minimal distance")->required()->check(CLI::PositiveNumber);
  lx_cmd->callback([&] {
    const LexTrace t = lexicode(lx_n, lx_d);
    Json words = Json::array();
    for (const auto& w : t.words) words.push_back(w.str());
    print(Json{{"n", t.n}, {"d", t.d}, {"size", t.words.size()}, {"linear", t.linear}, {"words", words},
               {"code", rows(t.code)}});
  });

  int sl_d = 0, sl_max = 0;
  auto* sl_cmd = app.add_subcommand("solex", "self-orthogonal lexicodes for lengths 1..max with period detection");
  sl_cmd->add_option("--d", sl_d, "minimal distance")->required()->check(CLI::PositiveNumber);
  sl_cmd->add_option("--max", sl_max, "largest length")->required()->check(CLI::Range(1, 13));
  sl_cmd->callback([&] {
    const SoLexResult r = so_lexicode(sl_d, sl_max);
    Json per = Json::array();
    for (const auto& t : r.traces) {
      Json words = Json::array();
      for (const auto& w : t.words) words.push_back(w.str());
      per.push_back(Json{{"n", t.n}, {"dim2", t.code.dim2()}, {"words", words}});
    }
    Json j{{"d", r.d}, {"max", r.n_max}, {"lengths", per}};
    if (r.period) {
      j["period"] = *r.period;
      j["element"] = rows(*r.element);
      j["element_A"] = coeffs(hamming_we(*r.element));
    } else {
      j["period"] = nullptr;
    }
    print(j);
  });

  // ---- equivalence utilities ----
  CodeArg au_in;
  auto* au_cmd = app.add_subcommand("aut", "automorphism group order, generators and canonical form");
  au_in.add(au_cmd);
  au_cmd->callback([&] {
    const CanonResult r = canonical_form(au_in.load());
    Json gens = Json::array();
    for (const auto& g : r.aut.generators) gens.push_back(g.str());
    print(Json{{"order", big(r.aut.order)}, {"generators", gens}, {"canonical", rows(r.canonical)}});
  });

  CodeArg eq_a, eq_b;
  auto* eq_cmd = app.add_subcommand("equiv", "equivalence test with witness g (g applied to the first code gives the second)");
  eq_a.add(eq_cmd, "--code");
  eq_cmd->add_option("--other", eq_b.file, "second code file")->required();
  eq_cmd->callback([&] {
    const auto g = equivalent(eq_a.load(), eq_b.load());
    print(Json{{"equivalent", g.has_value()}, {"witness", g ? Json(g->str()) : Json(nullptr)}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return rc;
}
