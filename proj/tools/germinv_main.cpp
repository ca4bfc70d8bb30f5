// germinv: local singularity invariants of function germs relative to a
// variety, and condition checks on one-parameter deformations.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "germinv/document.hpp"
#include "germinv/parser.hpp"

using json = nlohmann::ordered_json;
using namespace germinv;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_digest(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv64:") + buf;
}

const MonomialOrder kDisplay = MonomialOrder::global_degrevlex();

std::string poly_str(const Polynomial& p) { return p.str(kDisplay); }

json qd_json(const QuotientDim& d) {
  if (d.is_finite()) return d.count;
  return "infinite";
}

long require_finite_or_report(const QuotientDim& d, const std::string& what) {
  if (d.kind == QuotientDim::Kind::ExceedsBound)
    throw BoundError(what + " exceeds the dimension bound; raise --dim-bound");
  return 0;
}

std::string val_str(const Valuation& v) {
  return v.exact ? std::to_string(v.bound) : ">=" + std::to_string(v.bound);
}

// ---- output rendering ----

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(std::ostream& os, const json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, val] : v.items()) {
      if (is_scalar(val)) {
        os << pad << k << ": " << scalar_str(val) << "\n";
      } else {
        os << pad << k << ":\n";
        render_text(os, val, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& el : v) {
      if (is_scalar(el)) {
        os << pad << "- " << scalar_str(el) << "\n";
      } else {
        os << pad << "-\n";
        render_text(os, el, indent + 2);
      }
    }
  }
}

void emit(const std::string& command, const std::string& digest, const json& payload,
          const std::string& format, long elapsed_ms) {
  if (format == "json") {
    json rec;
    rec["command"] = command;
    rec["input-digest"] = digest;
    rec["payload"] = payload;
    rec["elapsed-ms"] = elapsed_ms;
    std::cout << rec.dump(2) << "\n";
    return;
  }
  std::cout << "command: " << command << "\n";
  std::cout << "input-digest: " << digest << "\n";
  std::cout << "payload:\n";
  render_text(std::cout, payload, 2);
  std::cout << "elapsed-ms: " << elapsed_ms << "\n";
}

// ---- argument helpers ----

Rational parse_rat_flag(const std::string& text, const std::string& flag) {
  try {
    return Rational::from_string(text);
  } catch (const MathError&) {
    throw UsageError("invalid rational for " + flag + ": '" + text + "'");
  }
}

Rational parse_at_flag(const std::string& text) {
  if (text.rfind("t=", 0) != 0)
    throw UsageError("--at expects t=VALUE, got '" + text + "'");
  return parse_rat_flag(text.substr(2), "--at");
}

// --f accepts a polynomial name, or a deformation name plus --at t=VALUE.
Polynomial resolve_germ(const Document& doc, const std::string& name,
                        const std::string& at) {
  if (doc.polys.count(name)) {
    if (!at.empty())
      throw UsageError("--at applies only when --f names a deformation");
    return doc.polys.at(name);
  }
  if (doc.deforms.count(name)) {
    if (at.empty())
      throw UsageError("'" + name + "' is a deformation; give --at t=VALUE");
    return specialize(doc_deformation(doc, name), parse_at_flag(at));
  }
  return doc_poly(doc, name);  // raises the right unavailable/unknown error
}

std::vector<std::vector<Rational>> parse_points(const std::string& text) {
  std::vector<std::vector<Rational>> pts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find('(', pos);
    if (open == std::string::npos) {
      if (text.find_first_not_of(" ;", pos) != std::string::npos)
        throw UsageError("--points expects (v1,v2,...);(...)");
      break;
    }
    std::size_t close = text.find(')', open);
    if (close == std::string::npos)
      throw UsageError("--points has an unbalanced '('");
    std::vector<Rational> pt;
    std::string inner = text.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (start <= inner.size()) {
      std::size_t comma = inner.find(',', start);
      std::string piece = inner.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      std::size_t a = piece.find_first_not_of(" \t");
      if (a == std::string::npos)
        throw UsageError("--points has an empty coordinate");
      std::size_t b = piece.find_last_not_of(" \t");
      pt.push_back(parse_rat_flag(piece.substr(a, b - a + 1), "--points"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    pts.push_back(std::move(pt));
    pos = close + 1;
  }
  if (pts.empty()) throw UsageError("--points lists no points");
  return pts;
}

SampleSet choose_samples(const Document& doc, const std::string& csv) {
  if (!csv.empty()) {
    std::vector<Rational> vals;
    std::size_t start = 0;
    while (start <= csv.size()) {
      std::size_t comma = csv.find(',', start);
      std::string piece = csv.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      vals.push_back(parse_rat_flag(piece, "--samples"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return make_sample_set(std::move(vals));
  }
  if (!doc.sampleset_order.empty())
    return doc.samplesets.at(doc.sampleset_order.front());
  return default_sample_set();
}

Rational choose_t0(const std::string& flag, const SampleSet& S) {
  if (!flag.empty()) return parse_rat_flag(flag, "--t0");
  for (const auto& v : S.values)
    if (!v.is_zero()) return v;
  throw UsageError("no nonzero sample available; give --t0");
}

json point_str(const std::vector<Rational>& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ",";
    s += pt[i].str();
  }
  return s + ")";
}

json poly_list(const std::vector<Polynomial>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(poly_str(p));
  return arr;
}

json radical_json(const RadicalResult& r) {
  json out;
  switch (r.kind) {
    case RadicalResult::Kind::MemberPower:
      out["result"] = "member";
      out["test"] = "power";
      out["witness-power"] = r.witness_power;
      break;
    case RadicalResult::Kind::TrueByRabinowitsch:
      out["result"] = "member";
      out["test"] = "rabinowitsch";
      break;
    default:
      out["result"] = "false-up-to-kmax";
      out["test"] = "none";
      break;
  }
  out["kmax"] = r.k_max;
  return out;
}

json split_json(const SplitCheck& sc, const Rational& t0) {
  json out;
  out["t0"] = t0.str();
  out["base-value"] = sc.base_value;
  out["local-at-origin"] = sc.local_at_origin;
  out["split"] = sc.split ? "true" : "false";
  if (!sc.accounted.empty()) {
    json pts = json::array();
    long sum = sc.local_at_origin;
    for (const auto& [pt, d] : sc.accounted) {
      json e;
      e["point"] = point_str(pt);
      e["value"] = qd_json(d);
      pts.push_back(e);
      if (d.is_finite()) sum += d.count;
    }
    out["accounted-points"] = pts;
    out["accounted-sum"] = sum;
    out["conserved"] = (sc.conserved && *sc.conserved) ? "true" : "false";
  }
  return out;
}

json arc_result_json(const ValuationCriterion& r) {
  json out;
  out["h-valuation"] = val_str(r.h_val);
  json gv = json::array();
  for (const auto& v : r.gen_vals) gv.push_back(val_str(v));
  out["generator-valuations"] = gv;
  out["strict"] = outcome_name(r.strict);
  out["weak"] = outcome_name(r.weak);
  return out;
}

struct Flags {
  std::string file, format = "text";
  long trunc = 50, dim_bound = 10000, kmax = 12;
  std::string f, phi, variety, field, deform, arc, at, t0, samples, points, h, gens;
};

void add_common(CLI::App* cmd, Flags& fl) {
  cmd->add_option("file", fl.file, "input document")->required();
  cmd->add_option("--format", fl.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--trunc", fl.trunc, "series truncation bound (default 50)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dim-bound", fl.dim_bound,
                  "quotient dimension bound (default 10000)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--kmax", fl.kmax, "radical power-test bound (default 12)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of function germs relative to a variety"};
  app.set_version_flag("--version", "germinv 0.1.0");
  app.require_subcommand(1);
  Flags fl;

  CLI::App* milnor = app.add_subcommand("milnor", "Milnor number of a germ");
  add_common(milnor, fl);
  milnor->add_option("--f", fl.f, "germ (poly, or deformation with --at)")->required();
  milnor->add_option("--at", fl.at, "t=VALUE when --f names a deformation");

  CLI::App* mult = app.add_subcommand("multiplicity", "order of a germ at the origin");
  add_common(mult, fl);
  mult->add_option("--f", fl.f, "germ")->required();
  mult->add_option("--at", fl.at, "t=VALUE when --f names a deformation");

  CLI::App* mubr = app.add_subcommand("mu-br", "relative number against a variety");
  add_common(mubr, fl);
  mubr->add_option("--f", fl.f, "germ")->required();
  mubr->add_option("--variety", fl.variety, "variety name")->required();
  mubr->add_option("--at", fl.at, "t=VALUE when --f names a deformation");

  CLI::App* lenum = app.add_subcommand("le-number", "minor-ideal curve invariant");
  add_common(lenum, fl);
  lenum->add_option("--phi", fl.phi, "hypersurface germ")->required();
  lenum->add_option("--f", fl.f, "germ")->required();
  lenum->add_option("--at", fl.at, "t=VALUE when --f names a deformation");

  CLI::App* tang = app.add_subcommand("tangency", "tangency of fields to equations");
  add_common(tang, fl);
  tang->add_option("--variety", fl.variety, "check every field of this variety");
  tang->add_option("--phi", fl.phi, "single equation");
  tang->add_option("--field", fl.field, "single vector field");

  CLI::App* quasi = app.add_subcommand("quasihomog", "weighted homogeneity check");
  add_common(quasi, fl);
  quasi->add_option("--f", fl.f, "germ")->required();
  quasi->add_option("--at", fl.at, "t=VALUE when --f names a deformation");

  CLI::App* fam = app.add_subcommand("family-check", "deformation condition report");
  add_common(fam, fl);
  fam->add_option("--deform", fl.deform, "deformation name")->required();
  fam->add_option("--variety", fl.variety, "variety name")->required();
  fam->add_option("--samples", fl.samples, "t samples v1,v2,... (else document/default)");
  fam->add_option("--t0", fl.t0, "split probe value (default: first nonzero sample)");

  CLI::App* arct = app.add_subcommand("arc-test", "valuation criterion on one arc");
  add_common(arct, fl);
  arct->add_option("--deform", fl.deform, "deformation name")->required();
  arct->add_option("--variety", fl.variety, "variety name")->required();
  arct->add_option("--arc", fl.arc, "arc name")->required();

  CLI::App* radt = app.add_subcommand("radical-test", "radical membership");
  add_common(radt, fl);
  radt->add_option("--deform", fl.deform, "test dF/dt against the family ideal");
  radt->add_option("--variety", fl.variety, "variety name (with --deform)");
  radt->add_option("--elt", fl.h, "explicit element (with --gens)");
  radt->add_option("--gens", fl.gens, "comma-separated polynomial names (with --elt)");

  CLI::App* splt = app.add_subcommand("split-check", "conservation-of-numbers probe");
  add_common(splt, fl);
  splt->add_option("--deform", fl.deform, "deformation name")->required();
  splt->add_option("--variety", fl.variety, "variety name")->required();
  splt->add_option("--t0", fl.t0, "nonzero parameter value")->required();
  splt->add_option("--points", fl.points, "candidate points (v1,...);(w1,...)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    std::string bytes = read_file(fl.file);
    std::string digest = file_digest(bytes);
    Document doc = parse_document(bytes);
    json payload;
    std::string command;
    auto start = std::chrono::steady_clock::now();

    if (milnor->parsed()) {
      command = "milnor";
      Polynomial f = resolve_germ(doc, fl.f, fl.at);
      std::vector<Polynomial> jac = jacobian_ideal(f);
      MonomialOrder ord = pick_local_order(doc.weights, {f});
      QuotientDim mu = milnor_number(f, ord, fl.dim_bound);
      require_finite_or_report(mu, "the Milnor number");
      payload["f"] = poly_str(f);
      payload["jacobian-generators"] = poly_list(jac);
      payload["order"] = ord.describe();
      payload["value"] = qd_json(mu);
    } else if (mult->parsed()) {
      command = "multiplicity";
      Polynomial f = resolve_germ(doc, fl.f, fl.at);
      payload["f"] = poly_str(f);
      payload["value"] = multiplicity(f);
    } else if (mubr->parsed()) {
      command = "mu-br";
      Polynomial f = resolve_germ(doc, fl.f, fl.at);
      VarietyGerm V = doc_variety(doc, fl.variety);
      require_tangency(V);
      std::vector<Polynomial> gens;
      for (const auto& xi : V.theta) gens.push_back(apply_vector_field(f, xi));
      MonomialOrder ord = pick_local_order(doc.weights, gens);
      QuotientDim d = bruce_roberts_number(f, V, ord, fl.dim_bound);
      require_finite_or_report(d, "the relative number");
      payload["f"] = poly_str(f);
      payload["variety"] = fl.variety;
      payload["ideal-generators"] = poly_list(gens);
      payload["order"] = ord.describe();
      payload["value"] = qd_json(d);
    } else if (lenum->parsed()) {
      command = "le-number";
      Polynomial phi = doc_poly(doc, fl.phi);
      Polynomial f = resolve_germ(doc, fl.f, fl.at);
      MonomialOrder ord = pick_local_order(doc.weights, {phi, f});
      LeDetail le = le_milnor_number(phi, f, ord, fl.dim_bound);
      require_finite_or_report(le.total, "the minor-ideal dimension");
      require_finite_or_report(le.mu_phi, "the Milnor number of phi");
      payload["phi"] = poly_str(phi);
      payload["f"] = poly_str(f);
      payload["order"] = ord.describe();
      payload["dim-total"] = qd_json(le.total);
      payload["mu-phi"] = qd_json(le.mu_phi);
      payload["value"] = qd_json(le.value);
    } else if (tang->parsed()) {
      command = "tangency";
      if (!fl.variety.empty()) {
        if (!fl.phi.empty() || !fl.field.empty())
          throw UsageError("give either --variety or --phi/--field");
        VarietyGerm V = doc_variety(doc, fl.variety);
        const DocVariety& dv = doc.varieties.at(fl.variety);
        payload["variety"] = fl.variety;
        json fields = json::array();
        bool all = true;
        for (std::size_t i = 0; i < V.theta.size(); ++i) {
          VarietyGerm one{V.equations, {V.theta[i]}};
          auto fail = find_tangency_failure(one);
          json e;
          e["field"] = dv.fields[i];
          e["tangent"] = fail ? "false" : "true";
          if (fail) e["failing-equation"] = dv.equations[static_cast<std::size_t>(
              fail->equation_index)];
          fields.push_back(e);
          all = all && !fail;
        }
        payload["fields"] = fields;
        payload["all-tangent"] = all ? "true" : "false";
      } else if (!fl.phi.empty() && !fl.field.empty()) {
        Polynomial phi = doc_poly(doc, fl.phi);
        VectorField xi = doc_vfield(doc, fl.field);
        Polynomial applied = apply_vector_field(phi, xi);
        payload["phi"] = poly_str(phi);
        payload["field"] = fl.field;
        payload["applied"] = poly_str(applied);
        payload["tangent"] = check_tangency(phi, xi) ? "true" : "false";
      } else {
        throw UsageError("tangency needs --variety, or --phi and --field");
      }
    } else if (quasi->parsed()) {
      command = "quasihomog";
      if (!doc.weights)
        throw MathError("document declares no weights");
      Polynomial f = resolve_germ(doc, fl.f, fl.at);
      auto deg = is_quasihomogeneous(f, *doc.weights);
      payload["f"] = poly_str(f);
      json ws = json::array();
      for (long w : doc.weights->weights) ws.push_back(w);
      payload["weights"] = ws;
      payload["quasihomogeneous"] = deg ? "true" : "false";
      if (deg) payload["degree"] = *deg;
    } else if (fam->parsed()) {
      command = "family-check";
      Deformation D = doc_deformation(doc, fl.deform);
      VarietyGerm V = doc_variety(doc, fl.variety);
      SampleSet S = choose_samples(doc, fl.samples);
      Rational t0 = choose_t0(fl.t0, S);
      std::vector<Arc> arcs;
      for (const auto& an : doc.arc_order) arcs.push_back(doc_arc(doc, an, fl.trunc));
      ConditionReport rep =
          condition_report(D, V, S, arcs, t0, doc.weights, fl.kmax, fl.dim_bound);

      payload["deformation"] = poly_str(D.F);
      payload["variety"] = fl.variety;
      json samples = json::array();
      for (const auto& v : S.values) samples.push_back(v.str());
      payload["samples"] = samples;
      json vals = json::array();
      for (const auto& [t, dim] : rep.constancy.values) {
        json e;
        e["t"] = t.str();
        e["value"] = qd_json(dim);
        vals.push_back(e);
      }
      payload["family-values"] = vals;
      payload["condition-1"] = rep.c1_holds ? "holds" : "fails";
      payload["condition-2"] = arc_status_name(rep.c2);
      if (rep.c2_witness >= 0)
        payload["condition-2-witness-arc"] =
            doc.arc_order[static_cast<std::size_t>(rep.c2_witness)];
      payload["condition-3"] = arc_status_name(rep.c3);
      payload["condition-4"] = arc_status_name(rep.c4);
      if (rep.c34_witness >= 0)
        payload["condition-4-witness-arc"] =
            doc.arc_order[static_cast<std::size_t>(rep.c34_witness)];
      payload["condition-5"] =
          rep.c5_holds ? "holds" : "not-established-up-to-kmax";
      payload["radical"] = radical_json(rep.radical);
      payload["condition-6"] = rep.c6_holds ? "holds" : "fails";
      payload["split"] = split_json(rep.split, rep.t0);
      json arcres = json::array();
      for (std::size_t i = 0; i < rep.arc_results.size(); ++i) {
        json e;
        e["arc"] = doc.arc_order[i];
        json detail = arc_result_json(rep.arc_results[i]);
        for (auto& [k, v] : detail.items()) e[k] = v;
        arcres.push_back(e);
      }
      payload["arcs"] = arcres;
      payload["arcs-tested"] = rep.arcs_tested;
    } else if (arct->parsed()) {
      command = "arc-test";
      Deformation D = doc_deformation(doc, fl.deform);
      VarietyGerm V = doc_variety(doc, fl.variety);
      require_tangency(V);
      Arc g = doc_arc(doc, fl.arc, fl.trunc);
      Polynomial h = deformation_velocity(D);
      std::vector<Polynomial> gens = relative_jacobian(D, V);
      ValuationCriterion r = valuation_criterion_test(h, gens, g);
      payload["deformation"] = poly_str(D.F);
      payload["arc"] = fl.arc;
      payload["trunc"] = g.trunc;
      payload["h"] = poly_str(h);
      payload["ideal-generators"] = poly_list(gens);
      json detail = arc_result_json(r);
      for (auto& [k, v] : detail.items()) payload[k] = v;
    } else if (radt->parsed()) {
      command = "radical-test";
      Polynomial h = Polynomial::zero(doc.ring ? doc.ring : make_ring({"x"}));
      std::vector<Polynomial> gens;
      if (!fl.deform.empty()) {
        if (fl.variety.empty())
          throw UsageError("--deform needs --variety");
        Deformation D = doc_deformation(doc, fl.deform);
        VarietyGerm V = doc_variety(doc, fl.variety);
        require_tangency(V);
        h = deformation_velocity(D);
        gens = relative_jacobian(D, V);
      } else if (!fl.h.empty() && !fl.gens.empty()) {
        h = doc_poly(doc, fl.h);
        std::size_t start = 0;
        while (start <= fl.gens.size()) {
          std::size_t comma = fl.gens.find(',', start);
          std::string piece = fl.gens.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start);
          gens.push_back(doc_poly(doc, piece));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      } else {
        throw UsageError("radical-test needs --deform/--variety, or --elt/--gens");
      }
      RadicalResult r = radical_membership(h, gens, fl.kmax);
      payload["h"] = poly_str(h);
      payload["ideal-generators"] = poly_list(gens);
      json detail = radical_json(r);
      for (auto& [k, v] : detail.items()) payload[k] = v;
    } else if (splt->parsed()) {
      command = "split-check";
      Deformation D = doc_deformation(doc, fl.deform);
      VarietyGerm V = doc_variety(doc, fl.variety);
      Rational t0 = parse_rat_flag(fl.t0, "--t0");
      std::vector<std::vector<Rational>> pts;
      if (!fl.points.empty()) pts = parse_points(fl.points);
      SplitCheck sc = polar_split_check(D, V, t0, pts, doc.weights, fl.dim_bound);
      payload["deformation"] = poly_str(D.F);
      payload["variety"] = fl.variety;
      json detail = split_json(sc, t0);
      for (auto& [k, v] : detail.items()) payload[k] = v;
    }

    auto end = std::chrono::steady_clock::now();
    long ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count());
    emit(command, digest, payload, fl.format, ms);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 4;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
