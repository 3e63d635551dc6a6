#include "commands.hpp"

#include <fstream>
#include <sstream>

namespace qfrob::cli {

namespace {

QParams params_for(const RootDatum& rd, int ell) {
  try {
    return rd.params(ell);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad ell: ") + e.what());
  }
}

RootDatum datum_for(const std::string& type) {
  try {
    return RootDatum::build(type);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad type: ") + e.what());
  }
}

std::vector<long> parse_coords(const std::string& s, std::size_t rank) {
  std::vector<long> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("bad window coordinate '" + part + "'");
    }
  }
  if (out.size() == 1) out.assign(rank, out[0]);
  if (out.size() != rank) throw UsageError("window bound '" + s + "' does not match the rank");
  return out;
}

std::pair<Weight, Weight> parse_window(const std::string& w, const RootDatum& rd, const QParams& p) {
  const auto r = static_cast<std::size_t>(rd.rank());
  if (w == "box") {
    Weight hi;
    for (std::size_t i = 0; i < r; ++i) hi.push_back(p.ell_i[i] - 1);
    return {Weight(r, 0), hi};
  }
  const auto dots = w.find("..");
  if (dots == std::string::npos) throw UsageError("window must be 'lo..hi' or 'box'");
  return {parse_coords(w.substr(0, dots), r), parse_coords(w.substr(dots + 2), r)};
}

Json weight_json(const Weight& w) { return Json(w); }

}  // namespace

Json block_table_json(const BlockTable& t) {
  Json j;
  j["type"] = t.type;
  j["ell"] = t.ell;
  j["block_count"] = t.block_count();
  Json blocks = Json::array();
  const auto bs = t.blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    Json ws = Json::array();
    for (const auto& w : bs[b]) ws.push_back(weight_json(w));
    blocks.push_back({{"block", b}, {"label", weight_json(t.labels[b])}, {"weights", ws}});
  }
  j["blocks"] = blocks;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["weight"] = weight_json(r.weight);
    row["canonical"] = weight_json(r.canonical);
    row["block"] = r.block;
    row["singular"] = r.singular;
    if (r.steinberg)
      row["steinberg"] = {{"lambda1", weight_json(r.steinberg->lam1)}, {"mu", weight_json(r.steinberg->mu)}};
    else
      row["steinberg"] = nullptr;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

CommandResult cmd_linkage(const RunConfig& c) {
  CommandResult res;
  res.command = "linkage";
  const RootDatum rd = datum_for(c.cartan_type);
  const QParams p = params_for(rd, c.ell);
  if (c.suite != "predict" && c.suite != "verify") throw UsageError("suite must be 'predict' or 'verify'");
  const auto [lo, hi] = parse_window(c.window, rd, p);
  res.params = {{"type", c.cartan_type}, {"ell", c.ell}, {"window", c.window}, {"suite", c.suite}, {"seed", c.seed}};
  const AffineWeyl w(rd, p);
  const BlockTable t = predicted_blocks(w, lo, hi);
  res.report.pass("predicted blocks",
                  std::to_string(t.block_count()) + " blocks over " + std::to_string(t.rows.size()) + " weights");
  if (c.suite == "verify") {
    if (rd.type() != "A1") {
      res.report.skip("observed linkage", "Weyl-module linkage is computed for type A1 only");
    } else if (!t.rows.empty()) {
      res.report.merge(compare_linkage_A1(lo[0], hi[0], p));
    }
  }
  res.artifacts["block_table"] = block_table_json(t);
  return res;
}

CommandResult cmd_frobenius_check(const RunConfig& c) {
  CommandResult res;
  res.command = "frobenius-check";
  if (c.cartan_type != "A1") throw UsageError("frobenius-check supports type A1 only");
  const RootDatum rd = datum_for(c.cartan_type);
  const QParams p = params_for(rd, c.ell);
  res.params = {{"type", c.cartan_type}, {"ell", c.ell}, {"seed", c.seed}, {"corrupt", c.corrupt}};
  Report& r = res.report;

  std::vector<WeightModule> catalog;
  for (long lam = 0; lam <= 8; ++lam) catalog.push_back(weyl_module(lam, p));
  for (long a = 1; a <= 3; ++a)
    for (long b = a; b <= 3; ++b) catalog.push_back(tensor_product(weyl_module(a, p), weyl_module(b, p)));
  for (const auto& m : catalog) {
    r.merge(relation_check(m), m.name);
    r.merge(verify_commutator_identity(m, 0), m.name);
  }
  if (c.corrupt) {
    const WeightModule bad = perturb_entry(weyl_module(3, p), 0, 0, 0, 1, CycloElem(1));
    r.merge(relation_check(bad), "corrupted " + bad.name);
  }

  std::vector<DualGroupRep> reps;
  for (long n = 0; n <= 4; ++n) reps.push_back(sl2_irrep(n));
  reps.push_back(tensor(sl2_irrep(1), sl2_irrep(1)));
  reps.push_back(direct_sum(sl2_irrep(0), sl2_irrep(2)));
  for (const auto& v : reps) {
    const std::string nm = v.name + " (dim " + std::to_string(v.dim()) + ")";
    try {
      const WeightModule fr = frobenius_pullback(v, p);
      r.expect(factorization_reconstruct(fr) == v, "round trip: " + nm, "factorization_reconstruct o Fr* = id");
      r.expect(restrict_to_small(fr, SmallForm::sc).trivial_action(), "trivial small action: " + nm,
               "K_iE_i and F_i vanish and every class is trivial");
    } catch (const std::exception& e) {
      r.fail("round trip: " + nm, "exception", e.what());
    }
  }

  const std::vector<DualGroupRep> small{trivial_rep(rd), sl2_irrep(1), sl2_irrep(2)};
  for (long lam = 0; lam <= 4; ++lam) {
    const HeckeStructure h = build_hecke_structure(weyl_module(lam, p), small, SmallForm::sc, c.seed);
    r.merge(h.report, "Hecke W(" + std::to_string(lam) + ")");
    r.expect(h.complete(), "Hecke structure exists: W(" + std::to_string(lam) + ")",
             "invertible alpha_V for every V of dim <= 3");
  }
  return res;
}

CommandResult cmd_triple_verify(const RunConfig& c) {
  CommandResult res;
  res.command = "triple-verify";
  if (c.group.empty()) throw UsageError("triple-verify needs --group");
  std::ifstream in(c.group);
  if (!in) throw UsageError("cannot open group file '" + c.group + "'");
  GroupFile gf;
  try {
    gf = parse_group_file(in);
  } catch (const GroupFileError& e) {
    throw UsageError(c.group + ": " + e.what());
  }
  if (!is_normal(gf.group, gf.subgroup)) throw UsageError(c.group + ": the subgroup is not normal");
  const TripleFD t = finite_group_triple(gf.group, gf.subgroup);
  res.params = {{"group", c.group}, {"seed", c.seed}};
  Report& r = res.report;

  const ConditionReport cond = check_conditions(t, c.seed);
  r.merge(cond.report, "conditions");
  const Catalog cat = standard_catalog(t);
  r.merge(verify_equivalence(t, cat), "equivalence");
  r.merge(verify_ideal_prop(t), "ideal");
  const FiniteBlocks fb = finite_block_bijection(t);
  r.merge(fb.report, "blocks");

  const auto pts = basis_points(t.O);
  bool composition = true, coherence = true, identity = true;
  for (const auto& x : cat.objects) {
    auto same = [](const TripleObject& a, const TripleObject& b) { return a.action == b.action; };
    identity = identity && same(twist(t, identity_point(t.O), x), x);
    for (const auto& g1 : pts)
      for (const auto& g2 : pts) {
        composition = composition && same(twist(t, g1, twist(t, g2, x)), twist(t, point_product(t.O, g1, g2), x));
        for (const auto& g3 : pts)
          coherence = coherence && same(twist(t, g1, twist(t, g2, twist(t, g3, x))),
                                        twist(t, point_product(t.O, point_product(t.O, g1, g2), g3), x));
      }
  }
  const std::string scope = std::to_string(pts.size()) + " points, " + std::to_string(cat.objects.size()) + " objects";
  r.expect(identity, "twisting: identity point", scope);
  r.expect(composition, "twisting: T_g1 T_g2 = T_g1g2", scope);
  r.expect(coherence, "twisting: triple composition coherence", scope);

  Json simples;
  simples["O"] = simple_comodules(t.O.coalg, t.root_order).size();
  simples["A"] = fb.simples_A.size();
  simples["a"] = fb.simples_a.size();
  res.artifacts["dimensions"] = {{"O", t.O.dim()}, {"A", t.A.dim()}, {"a", t.a.n}};
  res.artifacts["simple_counts"] = simples;
  res.artifacts["blocks"] = {{"A", fb.saturated_A}, {"a", fb.saturated_a}};
  return res;
}

std::string render_json(const CommandResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["params"] = r.params;
  Json checks = Json::array();
  for (const auto& c : r.report.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["details"] = c.details;
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    checks.push_back(e);
  }
  j["checks"] = checks;
  j["artifacts"] = r.artifacts;
  return j.dump(2) + "\n";
}

std::string render_text(const CommandResult& r) {
  std::ostringstream os;
  os << r.command << "\n";
  for (const auto& c : r.report.checks) {
    os << status_name(c.status) << "  " << c.name;
    if (!c.details.empty()) os << "  (" << c.details << ")";
    if (c.counterexample) os << "  counterexample: " << *c.counterexample;
    os << "\n";
  }
  if (r.artifacts.contains("block_table")) {
    for (const auto& b : r.artifacts["block_table"]["blocks"]) os << "block " << b["label"].dump() << ": " << b["weights"].dump() << "\n";
  }
  return os.str();
}

}  // namespace qfrob::cli
