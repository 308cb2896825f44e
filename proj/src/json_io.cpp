#include "ssp/json_io.hpp"

namespace ssp {

json form_to_json(const DiagonalForm& form) {
  json arr = json::array();
  for (const Rat& a : form.entries) arr.push_back(rat_str(a));
  return arr;
}

DiagonalForm form_from_json(const json& j) {
  if (!j.is_array()) throw domain_error("form: expected a JSON array of rationals");
  DiagonalForm f;
  for (const auto& e : j) f.entries.push_back(parse_rat(e.get<std::string>()));
  f.validate("form_from_json");
  return f;
}

json gram_to_json(const Mat& gram) {
  json rows = json::array();
  for (const auto& row : gram) {
    json r = json::array();
    for (const Rat& e : row) r.push_back(rat_str(e));
    rows.push_back(r);
  }
  return rows;
}

Mat gram_from_json(const json& j) {
  if (!j.is_array()) throw domain_error("gram: expected a JSON array of arrays");
  Mat m;
  for (const auto& row : j) {
    std::vector<Rat> r;
    for (const auto& e : row) r.push_back(parse_rat(e.get<std::string>()));
    m.push_back(std::move(r));
  }
  return m;
}

json square_class_to_json(const SquareClass& c) {
  std::string s = c.val_parity == 0 ? "" : "p*";
  s += c.unit_square ? "square" : "nonsquare";
  return s;
}

SquareClass square_class_from_json(const json& j, const Int& p) {
  std::string s = j.get<std::string>();
  SquareClass c{p, 0, true};
  if (s.rfind("p*", 0) == 0) {
    c.val_parity = 1;
    s = s.substr(2);
  }
  if (s == "square")
    c.unit_square = true;
  else if (s == "nonsquare")
    c.unit_square = false;
  else
    throw domain_error("square class: expected square|nonsquare|p*square|p*nonsquare");
  return c;
}

json place_to_json(const Place& place) {
  if (place.real) return "real";
  return place.p.get_str();
}

Place place_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "real" || s == "infinity") return Place::at_real();
    return Place::at_prime(Int(s));
  }
  return Place::at_prime(Int(j.get<long>()));
}

json local_invariants_to_json(const LocalInvariants& inv) {
  json out;
  out["dim"] = inv.dim;
  out["hasse"] = inv.hasse;
  out["place"] = place_to_json(inv.place);
  if (inv.place.real) {
    out["det"] = inv.det_sign;
    out["signature"] = {inv.signature.first, inv.signature.second};
  } else {
    out["det"] = square_class_to_json(*inv.det);
  }
  return out;
}

json jordan_to_json(const JordanDecomposition& jd) {
  json blocks = json::array();
  for (const auto& b : jd.blocks)
    blocks.push_back({{"scale", b.scale}, {"unit_block", gram_to_json(b.unit_block)}});
  return {{"blocks", blocks}, {"witness", gram_to_json(jd.witness)}};
}

json vertex_report_to_json(const VertexReport& rep) {
  json out;
  out["is_vertex"] = rep.is_vertex;
  out["t"] = rep.t;
  if (rep.quotient_kind.has_value())
    out["quotient"] =
        *rep.quotient_kind == QuotientKind::anisotropic ? "anisotropic" : "split";
  if (rep.quotient_gram.has_value()) out["quotient_gram"] = *rep.quotient_gram;
  return out;
}

json profile_to_json(const InvariantProfile& prof) {
  json primes = json::object();
  for (const auto& [p, data] : prof.finite) {
    json entry;
    entry["eps"] = data.eps;
    if (data.det.has_value()) entry["det"] = square_class_to_json(*data.det);
    primes[p.get_str()] = entry;
  }
  return {{"dim", prof.dim},
          {"signature", {prof.signature.first, prof.signature.second}},
          {"primes", primes}};
}

InvariantProfile profile_from_json(const json& j) {
  InvariantProfile prof;
  prof.dim = j.at("dim").get<int>();
  prof.signature = {j.at("signature").at(0).get<int>(),
                    j.at("signature").at(1).get<int>()};
  if (j.contains("primes"))
    for (const auto& [key, entry] : j.at("primes").items()) {
      Int p(key);
      PrimeData data;
      data.eps = entry.at("eps").get<int>();
      if (data.eps != 1 && data.eps != -1)
        throw domain_error("profile: eps must be +1 or -1");
      if (entry.contains("det"))
        data.det = square_class_from_json(entry.at("det"), p);
      prof.finite[p] = data;
    }
  return prof;
}

json subspace_to_json(const Subspace& s, const FiniteField& F) {
  json rows = json::array();
  for (const auto& row : s.rows) {
    json r = json::array();
    for (int e : row) {
      json coeffs = json::array();
      int code = e;
      for (int i = 0; i < F.k(); ++i) {
        coeffs.push_back(code % F.p());
        code /= F.p();
      }
      r.push_back(coeffs);
    }
    rows.push_back(r);
  }
  return rows;
}

json weyl_element_to_json(const CoxeterDatum& datum, const WeylElement& x) {
  json out;
  out["word"] = datum.reduced_word(x);
  out["omega"] = datum.omega_component(x) == 1 ? "tau" : "e";
  out["length"] = datum.length(x);
  return out;
}

json mass_output_to_json(const MassOutput& out) {
  return {{"value", rat_str(out.value)}, {"abs_value", rat_str(out.abs_value)}};
}

}  // namespace ssp
