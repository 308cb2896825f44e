#include "ssp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ssp/json_io.hpp"

namespace ssp::cli {

namespace {

struct Options {
  std::string action;
  std::string form, form2, gram, profile;
  std::string a, b, place, p = "3", det = "square", kind = "nonsplit", variant = "corrected";
  std::string family = "B", K = "default", sigma = "identity", in_file;
  std::string vol = "1", disc;
  int n = 3, m_rank = 2, depth = 3, k_ext = 1, r = 1, m_arg = 1, t = 2, eps = 1;
  long bound = 8;
  bool serial = false;
  bool describe = false;
};

json load_json_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw domain_error(std::string(what) + ": malformed JSON document");
  return j;
}

// Inline document if given, else --in FILE (or '-' for stdin).
json fetch_doc(const std::string& inline_text, const Options& opt,
               std::istream& in, const char* what) {
  if (!inline_text.empty()) return load_json_text(inline_text, what);
  if (opt.in_file.empty())
    throw domain_error(std::string(what) + ": supply the document inline or via --in FILE");
  if (opt.in_file == "-") {
    std::stringstream buf;
    buf << in.rdbuf();
    return load_json_text(buf.str(), what);
  }
  std::ifstream f(opt.in_file);
  if (!f) throw domain_error("cannot open input file " + opt.in_file);
  std::stringstream buf;
  buf << f.rdbuf();
  return load_json_text(buf.str(), what);
}

Place parse_place(const std::string& s) {
  if (s.empty()) throw domain_error("missing --place");
  if (s == "real" || s == "infinity") return Place::at_real();
  return Place::at_prime(Int(s));
}

ExecPolicy policy_of(const Options& opt) {
  return opt.serial ? ExecPolicy::serial : ExecPolicy::parallel;
}

json run_invariants(const Options& opt, std::istream& in) {
  const std::string& act = opt.action;
  if (act == "local" || act.empty()) {
    DiagonalForm f = form_from_json(fetch_doc(opt.form, opt, in, "form"));
    return local_invariants_to_json(local_invariants(f, parse_place(opt.place)));
  }
  if (act == "square-class") {
    SquareClass c = square_class(parse_rat(opt.a), Int(opt.p));
    return {{"p", opt.p}, {"class", square_class_to_json(c)}};
  }
  if (act == "hilbert") {
    int s = hilbert_symbol(parse_rat(opt.a), parse_rat(opt.b), parse_place(opt.place));
    return {{"symbol", s}};
  }
  if (act == "oracle") {
    int s = solvable_oracle(parse_rat(opt.a), parse_rat(opt.b), Int(opt.p),
                            opt.depth, policy_of(opt));
    return {{"symbol", s}};
  }
  if (act == "hasse") {
    DiagonalForm f = form_from_json(fetch_doc(opt.form, opt, in, "form"));
    return {{"hasse", hasse_invariant(f, parse_place(opt.place))}};
  }
  if (act == "isometric") {
    DiagonalForm f1 = form_from_json(load_json_text(opt.form, "form"));
    DiagonalForm f2 = form_from_json(load_json_text(opt.form2, "form2"));
    return {{"isometric", is_isometric_local(f1, f2, parse_place(opt.place))}};
  }
  throw domain_error("invariants: unknown action '" + act + "'");
}

json run_lattice(const Options& opt, std::istream& in) {
  const std::string& act = opt.action;
  if (act == "tmax") {
    SquareClass det = square_class_from_json(json(opt.det), Int(opt.p));
    return {{"t_max", t_max(opt.n, det)}};
  }
  if (act == "construct") {
    SquareClass det = square_class_from_json(json(opt.det), Int(opt.p));
    LatticeKind kind;
    if (opt.kind == "self_dual")
      kind = LatticeKind::self_dual;
    else if (opt.kind == "almost_self_dual")
      kind = LatticeKind::almost_self_dual;
    else
      throw domain_error("lattice construct: --kind must be self_dual or almost_self_dual");
    GramLattice lat = construct_lattice(Int(opt.p), opt.n, det, opt.eps, kind);
    return {{"gram", gram_to_json(lat.gram)}, {"p", opt.p}};
  }
  GramLattice lat{gram_from_json(fetch_doc(opt.gram, opt, in, "gram")), Int(opt.p)};
  if (act == "report" || act.empty()) return vertex_report_to_json(vertex_report(lat));
  if (act == "jordan") return jordan_to_json(jordan_decompose(lat));
  if (act == "valuations") return {{"valuations", dual_quotient(lat)}};
  if (act == "check")
    return {{"self_dual", is_self_dual(lat)},
            {"almost_self_dual", is_almost_self_dual(lat)}};
  throw domain_error("lattice: unknown action '" + act + "'");
}

json run_global(const Options& opt, std::istream& in) {
  const std::string& act = opt.action;
  if (act == "profile" || act.empty()) {
    DiagonalForm f = form_from_json(fetch_doc(opt.form, opt, in, "form"));
    return profile_to_json(profile_of(f));
  }
  InvariantProfile prof = profile_from_json(fetch_doc(opt.profile, opt, in, "profile"));
  if (act == "reciprocity") return {{"reciprocal", reciprocity_check(prof)}};
  if (act == "nearby") return profile_to_json(nearby_profile(prof, Int(opt.p)));
  if (act == "realize") return form_to_json(realize_form(prof, opt.bound));
  throw domain_error("global: unknown action '" + act + "'");
}

json run_eo(const Options& opt) {
  Family family;
  if (opt.family == "B")
    family = Family::B;
  else if (opt.family == "D")
    family = Family::D;
  else
    throw domain_error("eo: --family must be B or D");
  SigmaChoice sigma;
  if (opt.sigma == "identity" || opt.sigma == "id")
    sigma = SigmaChoice::identity;
  else if (opt.sigma == "swap" || opt.sigma == "swap_last_pair")
    sigma = SigmaChoice::swap_last_pair;
  else
    throw domain_error("eo: --sigma must be identity or swap");
  std::optional<std::set<int>> K;
  if (opt.K != "default") {
    json kj = load_json_text(opt.K, "K");
    std::set<int> nodes;
    for (const auto& v : kj) nodes.insert(v.get<int>());
    K = nodes;
  }
  CoxeterDatum datum = CoxeterDatum::build(family, opt.m_rank, sigma, K);

  const std::string& act = opt.action;
  auto element_list = [&](const std::vector<WeylElement>& elems) {
    json arr = json::array();
    for (const auto& e : sorted_by_length_word(datum, elems))
      arr.push_back(weyl_element_to_json(datum, e));
    return arr;
  };
  if (act == "list-adm") return element_list(datum.adm_set());
  if (act == "list-eo") return element_list(datum.eo_set());
  if (act == "list-cox" || act.empty()) {
    // Attach the stratum label and vertex type to each sigma-Coxeter element.
    std::vector<CoxeterDatum::TableRow> rows = datum.table_rows();
    json arr = json::array();
    for (const auto& e : sorted_by_length_word(datum, datum.eo_cox_set())) {
      json item = weyl_element_to_json(datum, e);
      item["t"] = 2 * (datum.length(e) + 1);
      item["sigma"] = nullptr;
      for (const auto& row : rows)
        if (datum.eval_word(row.word, true) == e) {
          item["sigma"] = row.label;
          break;
        }
      arr.push_back(item);
    }
    return arr;
  }
  if (act == "tables") {
    json arr = json::array();
    for (const auto& row : datum.table_rows())
      arr.push_back({{"sigma", row.label},
                     {"word", row.word},
                     {"t", datum.t_sigma(row.label)}});
    return arr;
  }
  if (act == "j-set") {
    json arr = json::array();
    for (const auto& s : datum.j_set()) arr.push_back(s);
    return arr;
  }
  throw domain_error("eo: unknown action '" + act + "'");
}

json run_dl(const Options& opt) {
  SpaceKind kind;
  if (opt.kind == "split")
    kind = SpaceKind::split;
  else if (opt.kind == "nonsplit")
    kind = SpaceKind::nonsplit;
  else
    throw domain_error("dl: --kind must be split or nonsplit");
  int p = std::stoi(opt.p);

  const std::string& act = opt.action;
  if (act == "orientations") {
    FiniteQuadSpace space(opt.t, kind, p);
    auto [l1, l2] = orientations(space);
    FiniteField F(p, 2);
    return {{"lines", {subspace_to_json(l1, F), subspace_to_json(l2, F)}}};
  }

  FiniteQuadSpace space(opt.t, kind, p);
  FiniteField F(p, opt.k_ext);
  std::vector<Subspace> points = s_lambda_points(space, F, policy_of(opt));
  if (act == "count" || act.empty()) {
    json sizes = json::array();
    for (const auto& orbit : frobenius_orbits(points, F))
      sizes.push_back(orbit.size());
    return {{"points", points.size()}, {"orbits", sizes}};
  }
  if (act == "points") {
    json arr = json::array();
    for (const auto& s : points) arr.push_back(subspace_to_json(s, F));
    return {{"points", arr}};
  }
  if (act == "orbits") {
    json arr = json::array();
    for (const auto& orbit : frobenius_orbits(points, F)) {
      json o = json::array();
      for (const auto& s : orbit) o.push_back(subspace_to_json(s, F));
      arr.push_back(o);
    }
    return {{"orbits", arr}};
  }
  throw domain_error("dl: unknown action '" + act + "'");
}

json run_mass(const Options& opt) {
  const std::string& act = opt.action;
  if (act == "value" || act.empty()) {
    MassInput input;
    input.n = opt.n;
    input.p = Int(opt.p);
    input.vol = parse_rat(opt.vol);
    if (!opt.disc.empty()) input.disc = Int(opt.disc);
    if (opt.variant == "corrected")
      input.variant = EvenLocalVariant::corrected;
    else if (opt.variant == "as_printed")
      input.variant = EvenLocalVariant::as_printed;
    else
      throw domain_error("mass: --variant must be corrected or as_printed");
    return mass_output_to_json(mass(input));
  }
  if (act == "zeta") return {{"value", rat_str(zeta_neg(opt.r))}};
  if (act == "l") {
    if (opt.disc.empty()) throw domain_error("mass l: --disc required");
    return {{"value", rat_str(l_neg(opt.m_arg, Int(opt.disc)))}};
  }
  if (act == "bernoulli") return {{"value", rat_str(bernoulli(opt.n))}};
  if (act == "deuring") return {{"value", rat_str(deuring(Int(opt.p)))}};
  throw domain_error("mass: unknown action '" + act + "'");
}

const char* describe_text(const std::string& sub) {
  if (sub == "invariants")
    return R"json({"subcommand":"invariants","actions":{"local":"local invariants of --form at --place","square-class":"square class of --a at --p","hilbert":"Hilbert symbol of --a,--b at --place","oracle":"brute-force solvability of z^2=ax^2+by^2 at --p (depth --depth)","hasse":"Hasse-Witt invariant of --form at --place","isometric":"local isometry of --form,--form2 at --place"},"form":"JSON array of num/den strings","place":"odd prime or 'real'","output":{"det":"square|nonsquare|p*square|p*nonsquare (sign at real)","hasse":"+1|-1"}})json";
  if (sub == "lattice")
    return R"json({"subcommand":"lattice","actions":{"report":"vertex report {is_vertex,t,quotient} of --gram at --p","jordan":"Jordan decomposition with unimodular witness","valuations":"elementary divisor valuations (Smith at p)","check":"{self_dual,almost_self_dual}","tmax":"maximal vertex type for --n,--det","construct":"Gram with requested --n,--det,--eps,--kind"},"gram":"JSON array of arrays of num/den strings","det":"square|nonsquare","output":{"quotient":"anisotropic|split"}})json";
  if (sub == "global")
    return R"json({"subcommand":"global","actions":{"profile":"invariant profile of --form over all places","reciprocity":"product formula check of --profile","nearby":"flip eps at --p, signature to (n,0)","realize":"bounded search for a form realizing --profile"},"profile":"{dim,signature:[r,s],primes:{p:{det?,eps}}}; eps at 2 is the product-formula value","output":"profile or form document"})json";
  if (sub == "eo")
    return R"json({"subcommand":"eo","actions":{"list-adm":"admissible set","list-eo":"EO set (admissible minimal coset reps)","list-cox":"sigma-Coxeter EO elements with stratum labels and types","tables":"stratum table (label, word, t)","j-set":"tau*sigma-stable equidistant node sets"},"flags":{"family":"B|D","m":"rank","sigma":"identity|swap (D only)","K":"default (all nodes but 0) or JSON array"},"element":"{word:[nodes],omega:'e'|'tau',length}"})json";
  if (sub == "dl")
    return R"json({"subcommand":"dl","actions":{"count":"{points,orbits:[sizes]}","points":"echelon bases over F_{p^k}","orbits":"Frobenius orbit partition","orientations":"the two isotropic lines of the t=2 nonsplit space over F_{p^2}"},"flags":{"t":"even dimension","kind":"split|nonsplit","p":"odd prime","k":"extension degree"},"caps":"t<=6, p^k<=125 (env SSP_MAX_Q)"})json";
  if (sub == "mass")
    return R"json({"subcommand":"mass","actions":{"value":"superspecial mass for --n,--p,--vol (--disc,--variant for even n)","zeta":"zeta(1-2r) for --r","l":"L(1-m,chi) for --m,--disc","bernoulli":"B_n for --n","deuring":"(p-1)/24 for --p"},"output":{"value":"num/den","abs_value":"num/den"}})json";
  return "{}";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"exact arithmetic for superspecial loci of orthogonal Shimura varieties"};
  app.require_subcommand(0, 1);

  std::map<std::string, Options> opts;
  std::vector<std::string> subs{"invariants", "lattice", "global", "eo", "dl", "mass"};
  std::map<std::string, CLI::App*> apps;
  for (const std::string& name : subs) {
    Options& o = opts[name];
    CLI::App* sub = app.add_subcommand(name);
    apps[name] = sub;
    sub->add_option("action", o.action, "what to compute (see --describe)");
    sub->add_flag("--describe", o.describe, "print the output schema and exit");
    sub->add_option("--in", o.in_file, "input JSON document (file path or '-' for stdin)");
    if (name == "invariants") {
      sub->add_option("--form", o.form);
      sub->add_option("--form2", o.form2);
      sub->add_option("--a", o.a);
      sub->add_option("--b", o.b);
      sub->add_option("--place", o.place);
      sub->add_option("--p", o.p);
      sub->add_option("--depth", o.depth);
      sub->add_flag("--serial", o.serial);
    } else if (name == "lattice") {
      sub->add_option("--gram", o.gram);
      sub->add_option("--p", o.p);
      sub->add_option("--n", o.n);
      sub->add_option("--det", o.det);
      sub->add_option("--eps", o.eps);
      sub->add_option("--kind", o.kind)->default_str("self_dual");
    } else if (name == "global") {
      sub->add_option("--form", o.form);
      sub->add_option("--profile", o.profile);
      sub->add_option("--p", o.p);
      sub->add_option("--bound", o.bound);
    } else if (name == "eo") {
      sub->add_option("--family", o.family);
      sub->add_option("--m", o.m_rank);
      sub->add_option("--sigma", o.sigma);
      sub->add_option("--K", o.K);
    } else if (name == "dl") {
      sub->add_option("--t", o.t);
      sub->add_option("--kind", o.kind);
      sub->add_option("--p", o.p);
      sub->add_option("--k", o.k_ext);
      sub->add_flag("--serial", o.serial);
    } else if (name == "mass") {
      sub->add_option("--n", o.n);
      sub->add_option("--p", o.p);
      sub->add_option("--vol", o.vol);
      sub->add_option("--disc", o.disc);
      sub->add_option("--variant", o.variant);
      sub->add_option("--r", o.r);
      sub->add_option("--m", o.m_arg);
    }
  }

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  storage.insert(storage.begin(), "ssp");
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::stringstream help;
    (void)app.exit(e, help, help);
    out << help.str();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }

  std::string chosen;
  for (const std::string& name : subs)
    if (apps[name]->parsed()) chosen = name;
  if (chosen.empty()) {
    out << json{{"error", {{"kind", "usage"}, {"message", "choose a subcommand: invariants lattice global eo dl mass"}}}}.dump(2)
        << "\n";
    return 2;
  }

  const Options& o = opts[chosen];
  if (o.describe) {
    out << load_json_text(describe_text(chosen), "describe").dump(2) << "\n";
    return 0;
  }

  try {
    json result;
    if (chosen == "invariants")
      result = run_invariants(o, in);
    else if (chosen == "lattice")
      result = run_lattice(o, in);
    else if (chosen == "global")
      result = run_global(o, in);
    else if (chosen == "eo")
      result = run_eo(o);
    else if (chosen == "dl")
      result = run_dl(o);
    else
      result = run_mass(o);
    out << result.dump(2) << "\n";
    return 0;
  } catch (const resource_error& e) {
    out << json{{"error", {{"kind", "resource"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 3;
  } catch (const inconclusive_error& e) {
    out << json{{"error", {{"kind", "inconclusive"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const not_found_error& e) {
    out << json{{"error", {{"kind", "not_found"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    out << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const json::exception& e) {
    out << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
}

}  // namespace ssp::cli
