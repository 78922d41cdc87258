// Command-line front end: loads JSON documents, runs the library operations
// and prints a deterministic report. Exit codes: 0 all checks passed,
// 2 a check failed, 3 malformed input, 4 size guard exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "causaltop/causal_site.hpp"
#include "causaltop/framework.hpp"
#include "causaltop/json_io.hpp"
#include "causaltop/minkowski.hpp"
#include "causaltop/region.hpp"
#include "causaltop/region_site.hpp"
#include "causaltop/topology.hpp"

namespace ct = causaltop;

namespace {

struct Finding {
  std::string name;
  bool pass;
  std::string witness;
};

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<Finding> findings;

  void add(std::string name, bool pass, std::string witness = "") {
    findings.push_back({std::move(name), pass, std::move(witness)});
  }

  int print() const {
    std::cout << "command: " << command << "\n";
    for (const auto& in : inputs)
      std::cout << "input: " << in << " digest=" << std::hex << digest_file(in)
                << std::dec << "\n";
    bool all = true;
    for (const auto& f : findings) {
      std::cout << f.name << ": " << (f.pass ? "PASS" : "FAIL");
      if (!f.witness.empty()) std::cout << " (" << f.witness << ")";
      std::cout << "\n";
      all &= f.pass;
    }
    return all ? 0 : 2;
  }

  static std::uint64_t digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    char c;
    while (in.get(c)) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return h;
  }
};

ct::Json load_payload(const std::string& path, const std::string& kind) {
  ct::Document doc = ct::load_document(path);
  if (doc.kind != kind)
    throw ct::ValidationError("expected a " + kind + " document in " + path);
  return doc.payload;
}

ct::MinkVec parse_vec(const std::string& csv) {
  std::vector<ct::Rat> coords;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(ct::rat_from_string(item));
  return ct::MinkVec(std::move(coords));
}

std::vector<std::string> parse_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::string orientation_name(ct::TimeOrientation o) {
  switch (o) {
    case ct::TimeOrientation::Future: return "future";
    case ct::TimeOrientation::Past: return "past";
    default: return "neither";
  }
}

std::string character_name(ct::CausalCharacter c) {
  switch (c) {
    case ct::CausalCharacter::Timelike: return "timelike";
    case ct::CausalCharacter::Null: return "null";
    default: return "spacelike";
  }
}

void print_region(const ct::Region& r) {
  if (r.empty()) {
    std::cout << "region: empty\n";
    return;
  }
  for (const auto& b : r.to_blocks())
    std::cout << "block u:[" << ct::rat_to_string(b.u_lo) << ","
              << ct::rat_to_string(b.u_hi) << "] v:[" << ct::rat_to_string(b.v_lo)
              << "," << ct::rat_to_string(b.v_hi) << "]\n";
}

ct::Json read_plain_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ct::ValidationError("cannot open " + path);
  ct::Json j;
  try {
    in >> j;
  } catch (const ct::Json::exception& e) {
    throw ct::ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"finite causal-structure-to-topology toolkit"};
  app.require_subcommand(1);
  std::string in_path, out_path, partition_path, points_path, a_path, b_path;
  std::string a_name, b_name, vec_csv, p_csv, q_csv, x_csv, subset_csv;
  int level = 0, depth = 2;
  unsigned seed = 0;
  std::size_t cases = 500;
  app.add_option("--seed", seed, "seed for randomized runs");
  app.add_option("--cases", cases, "case count for randomized runs");

  auto* fw = app.add_subcommand("framework", "framework duality operations");
  auto* fw_dual = fw->add_subcommand("dual");
  fw_dual->add_option("--in", in_path)->required();
  fw_dual->add_option("--out", out_path);
  auto* fw_quot = fw->add_subcommand("quotient");
  fw_quot->add_option("--in", in_path)->required();
  fw_quot->add_option("--partition", partition_path)->required();
  fw_quot->add_option("--out", out_path);
  auto* fw_t0 = fw->add_subcommand("t0");
  fw_t0->add_option("--in", in_path)->required();
  auto* fw_dd = fw->add_subcommand("dd-iso");
  fw_dd->add_option("--in", in_path)->required();

  auto* topo = app.add_subcommand("topo", "finite topology operations");
  auto* topo_gen = topo->add_subcommand("generate");
  topo_gen->add_option("--in", in_path)->required();
  topo_gen->add_option("--out", out_path);
  auto* topo_dual = topo->add_subcommand("dual");
  topo_dual->add_option("--in", in_path)->required();
  topo_dual->add_option("--out", out_path);
  auto* topo_iter = topo->add_subcommand("iterate");
  topo_iter->add_option("--in", in_path)->required();
  auto* topo_t1 = topo->add_subcommand("t1");
  topo_t1->add_option("--in", in_path)->required();
  auto* topo_super = topo->add_subcommand("superconnected");
  topo_super->add_option("--in", in_path)->required();
  auto* topo_restrict = topo->add_subcommand("restrict");
  topo_restrict->add_option("--in", in_path)->required();
  topo_restrict->add_option("--subset", subset_csv)->required();
  topo_restrict->add_option("--out", out_path);

  auto* site = app.add_subcommand("site", "causal site operations");
  auto* site_validate = site->add_subcommand("validate");
  site_validate->add_option("--in", in_path)->required();
  auto* site_topo = site->add_subcommand("topology");
  site_topo->add_option("--in", in_path)->required();
  site_topo->add_option("--out", out_path);
  auto* site_cut = site->add_subcommand("cut");
  site_cut->add_option("--in", in_path)->required();
  site_cut->add_option("--a", a_name)->required();
  site_cut->add_option("--b", b_name)->required();

  auto* mink = app.add_subcommand("mink", "exact Minkowski geometry");
  auto* mink_relate = mink->add_subcommand("relate");
  mink_relate->add_option("--p", p_csv)->required();
  mink_relate->add_option("--q", q_csv)->required();
  auto* mink_classify = mink->add_subcommand("classify");
  mink_classify->add_option("--v", vec_csv)->required();
  auto* mink_cut = mink->add_subcommand("cut");
  mink_cut->add_option("--a", a_path)->required();
  mink_cut->add_option("--b", b_path)->required();
  mink_cut->add_option("--out", out_path);
  auto* mink_sep = mink->add_subcommand("separate");
  mink_sep->add_option("--points", points_path)->required();
  mink_sep->add_option("--x", x_csv)->required();
  mink_sep->add_option("--out", out_path);
  auto* mink_refine = mink->add_subcommand("refine");
  mink_refine->add_option("--p", p_csv)->required();
  mink_refine->add_option("--q", q_csv)->required();
  mink_refine->add_option("--level", level)->required();
  auto* mink_vsite = mink->add_subcommand("validate-site");
  mink_vsite->add_option("--in", in_path)->required();
  mink_vsite->add_option("--depth", depth);

  auto* exp = app.add_subcommand("export", "graph export");
  auto* exp_dot = exp->add_subcommand("dot");
  exp_dot->add_option("--in", in_path)->required();
  exp_dot->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  Report rep;
  for (auto* sub : app.get_subcommands())
    for (auto* s2 : sub->get_subcommands())
      rep.command = sub->get_name() + " " + s2->get_name();
  if (!in_path.empty()) rep.inputs.push_back(in_path);

  auto write_doc = [&](const std::string& kind, const ct::Json& payload) {
    if (!out_path.empty()) ct::save_document(out_path, {kind, payload});
  };

  if (fw_dual->parsed()) {
    const auto f = ct::framework_from_json(load_payload(in_path, "framework"));
    const auto d = ct::dualize(f);
    write_doc("framework", ct::framework_to_json(d));
    rep.add("dual-is-T0", ct::is_T0(d));
  } else if (fw_quot->parsed()) {
    const auto f = ct::framework_from_json(load_payload(in_path, "framework"));
    std::vector<std::vector<std::string>> partition;
    for (const auto& cls : read_plain_json(partition_path))
      partition.push_back(cls.get<std::vector<std::string>>());
    const auto q = ct::quotient(f, partition);
    write_doc("framework", ct::framework_to_json(q));
    rep.add("quotient-built", true,
            std::to_string(q.place_count()) + " classes");
  } else if (fw_t0->parsed()) {
    const auto f = ct::framework_from_json(load_payload(in_path, "framework"));
    rep.add("is-T0", ct::is_T0(f));
  } else if (fw_dd->parsed()) {
    const auto f = ct::framework_from_json(load_payload(in_path, "framework"));
    const auto dd = ct::double_dual_isomorphism(f);
    const bool fwd_ok = ct::check_morphism(dd.witness.forward);
    const bool bwd_ok = ct::check_morphism(dd.witness.backward);
    rep.add("double-dual-witness", fwd_ok && bwd_ok,
            dd.t0 ? "T0: isomorphic to the framework itself"
                  : "isomorphic to the kernel quotient");
  } else if (topo_gen->parsed()) {
    const auto payload = load_payload(in_path, "topology");
    std::vector<std::vector<std::string>> subbase;
    for (const auto& member : payload.at("subbase"))
      subbase.push_back(member.get<std::vector<std::string>>());
    const auto t = ct::generate_from_closed_subbase(
        payload.at("ground").get<std::vector<std::string>>(), subbase);
    write_doc("topology", ct::topology_to_json(t));
    rep.add("generated", true,
            std::to_string(t.closed_sets().size()) + " closed sets");
  } else if (topo_dual->parsed()) {
    const auto t = ct::topology_from_json(load_payload(in_path, "topology"));
    const auto d = ct::de_groot_dual(t);
    write_doc("topology", ct::topology_to_json(d));
    rep.add("dualized", true, std::to_string(d.closed_sets().size()) + " closed sets");
  } else if (topo_iter->parsed()) {
    const auto t = ct::topology_from_json(load_payload(in_path, "topology"));
    const auto seq = ct::dual_iteration(t, 8);
    rep.add("at-most-4-distinct", seq.size() <= 4,
            std::to_string(seq.size()) + " distinct");
    const auto g = ct::de_groot_dual(t);
    rep.add("dual-equals-triple-dual",
            ct::de_groot_dual(ct::de_groot_dual(g)) == g);
  } else if (topo_t1->parsed()) {
    const auto t = ct::topology_from_json(load_payload(in_path, "topology"));
    rep.add("is-T1", ct::is_T1(t));
  } else if (topo_super->parsed()) {
    const auto t = ct::topology_from_json(load_payload(in_path, "topology"));
    rep.add("is-superconnected", ct::is_superconnected(t));
  } else if (topo_restrict->parsed()) {
    const auto t = ct::topology_from_json(load_payload(in_path, "topology"));
    const auto r = ct::restrict(t, parse_names(subset_csv));
    write_doc("topology", ct::topology_to_json(r));
    rep.add("restricted", true, std::to_string(r.points().size()) + " points");
  } else if (site_validate->parsed()) {
    const auto cs = ct::causal_site_from_json(load_payload(in_path, "causal_site"));
    const auto report = ct::validate_causal_site(cs);
    for (const auto& v : report.violations) rep.add(v.axiom, false, v.witness);
    if (report.ok()) rep.add("causal-site-axioms", true);
  } else if (site_topo->parsed()) {
    const auto cs = ct::causal_site_from_json(load_payload(in_path, "causal_site"));
    const auto t = ct::synthesize_topology(cs);
    write_doc("topology", ct::topology_to_json(t));
    rep.add("is-T1", ct::is_T1(t));
    rep.add("ground-size", true, std::to_string(t.points().size()) + " points");
  } else if (site_cut->parsed()) {
    const auto cs = ct::causal_site_from_json(load_payload(in_path, "causal_site"));
    const auto cut = ct::find_cutting(cs, cs.index_of(a_name), cs.index_of(b_name));
    rep.add("cutting-exists", cut.greatest.has_value(),
            cut.greatest ? cs.names()[*cut.greatest] : "no candidate");
  } else if (mink_relate->parsed()) {
    const auto p = parse_vec(p_csv), q = parse_vec(q_csv);
    const auto c = ct::classify(q - p);
    rep.add("difference", true,
            character_name(c.character) + ", " + orientation_name(c.orientation));
    rep.add("p-causal-le-q", true, ct::causal_le(p, q) ? "true" : "false");
    rep.add("p-chron-lt-q", true, ct::chron_lt(p, q) ? "true" : "false");
  } else if (mink_classify->parsed()) {
    const auto c = ct::classify(parse_vec(vec_csv));
    rep.add("classification", true,
            character_name(c.character) + ", " + orientation_name(c.orientation));
  } else if (mink_cut->parsed()) {
    rep.inputs = {a_path, b_path};
    const auto a = ct::region_from_json(load_payload(a_path, "region_set"));
    const auto b = ct::region_from_json(load_payload(b_path, "region_set"));
    const auto r = ct::region_cutting(b, a);
    print_region(r);
    write_doc("region_set", ct::region_to_json(r));
    rep.add("cutting-inside-b", ct::region_subset(r, b));
    rep.add("cutting-precedes-a", r.empty() || ct::region_precedes(r, a));
  } else if (mink_sep->parsed()) {
    rep.inputs = {points_path};
    std::vector<ct::NullPoint> pts;
    for (const auto& arr : read_plain_json(points_path))
      pts.push_back(ct::to_null(ct::mink_vec_from_json(arr)));
    const ct::NullPoint x = ct::to_null(parse_vec(x_csv));
    const auto r = ct::separate(pts, x);
    print_region(r);
    write_doc("region_set", ct::region_to_json(r));
    bool covers = true;
    for (const auto& p : pts) covers &= r.contains(p);
    rep.add("contains-all-points", covers);
    rep.add("excludes-x", !r.contains(x));
  } else if (mink_refine->parsed()) {
    const auto p = ct::to_null(parse_vec(p_csv)), q = ct::to_null(parse_vec(q_csv));
    const auto res =
        ct::refine_and_enumerate(ct::Block(p.u, q.u, p.v, q.v), level);
    rep.add("site-size", true, std::to_string(res.site.size()) + " regions");
    rep.add("families", true, std::to_string(res.families.size()));
    bool nonempty = true;
    for (const auto& w : res.witnesses) nonempty &= !w.empty();
    rep.add("families-have-nonempty-intersection", nonempty);
  } else if (mink_vsite->parsed()) {
    const auto regions = ct::region_list_from_json(load_payload(in_path, "region_set"));
    const auto report = ct::validate_region_site(regions, depth);
    for (const auto& v : report.violations) rep.add(v.axiom, false, v.witness);
    if (report.ok()) rep.add("region-site-axioms", true);
  } else if (exp_dot->parsed()) {
    const ct::Document doc = ct::load_document(in_path);
    std::string dot;
    if (doc.kind == "topology")
      dot = ct::export_dot(ct::topology_from_json(doc.payload));
    else if (doc.kind == "causal_site")
      dot = ct::export_dot(ct::causal_site_from_json(doc.payload));
    else
      throw ct::ValidationError("dot export supports topology and causal_site documents");
    if (out_path.empty()) {
      std::cout << dot;
    } else {
      std::ofstream out(out_path);
      out << dot;
    }
    rep.add("dot-exported", true);
  }

  return rep.print();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ct::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 4;
  } catch (const ct::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  }
}
