#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcover/config.hpp"
#include "qcover/json_io.hpp"
#include "qcover/path_group.hpp"
#include "qcover/suite.hpp"
#include "qcover/zoo.hpp"

using namespace qcover;

namespace {

struct Cli {
  RunConfig cfg;
  bool row_acts = false;
  bool json_out = false;
  bool dot_out = false;
};

void emit(const Cli& cli, const json& doc, const std::string& text) {
  if (cli.json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string flags_str(const RackFlags& f) {
  std::string s;
  s += f.is_quandle ? "quandle " : "";
  s += f.is_involutive ? "involutive " : "";
  s += f.is_trivial ? "trivial " : "";
  if (s.empty()) s = "rack ";
  s.pop_back();
  return s;
}

json flags_json(const RackFlags& f) {
  return json{{"quandle", f.is_quandle}, {"involutive", f.is_involutive}, {"trivial", f.is_trivial}};
}

json witness_triple(const FiniteRack& X, const std::array<int, 3>& w) {
  return json{{"x", X.label(w[0])}, {"a", X.label(w[1])}, {"b", X.label(w[2])}};
}

int element_arg(const FiniteRack& X, const std::string& s) {
  int i = X.index_of(s);
  if (i >= 0) return i;
  try {
    std::size_t pos = 0;
    i = std::stoi(s, &pos);
    if (pos == s.size() && i >= 0 && i < X.order()) return i;
  } catch (...) {
  }
  throw ShapeError("no element '" + s + "'");
}

int cmd_validate(const Cli& cli, const std::string& file) {
  try {
    RackPtr X = load_rack_file(file, cli.row_acts);
    RackFlags f = X->classify();
    json doc{{"op", "validate"}, {"verdict", true}, {"name", X->name()},
             {"order", X->order()}, {"flags", flags_json(f)}};
    emit(cli, doc, "valid " + flags_str(f) + " of order " + std::to_string(X->order()) + "\n");
    return 0;
  } catch (const NotBijectiveColumn& e) {
    json doc{{"op", "validate"}, {"verdict", false},
             {"witness", json{{"kind", "column"}, {"column", e.column}}}};
    emit(cli, doc, std::string("invalid: ") + e.what() + "\n");
    return 1;
  } catch (const SelfDistributivityFail& e) {
    json doc{{"op", "validate"}, {"verdict", false},
             {"witness", json{{"kind", "triple"}, {"x", e.x}, {"y", e.y}, {"z", e.z}}}};
    emit(cli, doc, std::string("invalid: ") + e.what() + "\n");
    return 1;
  }
}

int cmd_classify(const Cli& cli, const std::string& file) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  RackFlags f = X->classify();
  emit(cli,
       json{{"op", "classify"}, {"name", X->name()}, {"order", X->order()},
            {"flags", flags_json(f)}},
       X->name() + ": " + flags_str(f) + "\n");
  return 0;
}

int cmd_conj(const Cli& cli, const std::string& file) {
  RackPtr X = load_group_file_as_conj(file);
  json doc = rack_to_json(*X);
  emit(cli, doc, doc.dump(2) + "\n");
  return 0;
}

int cmd_pi0(const Cli& cli, const std::string& file) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  Pi0Result p = pi0(X);
  if (cli.dot_out) {
    std::cout << dot_pi0(*X, p);
    return 0;
  }
  emit(cli,
       json{{"op", "pi0"}, {"name", X->name()}, {"count", p.co.class_count()},
            {"components", congruence_classes_json(*X, p.co)}},
       std::to_string(p.co.class_count()) + " components: " + classes_str(*X, p.co) + "\n");
  return 0;
}

int cmd_component(const Cli& cli, const std::string& file, const std::string& elem) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  RackPtr C = connected_component(X, element_arg(*X, elem));
  json doc = rack_to_json(*C);
  emit(cli, doc,
       "component of " + elem + ": order " + std::to_string(C->order()) + "\n" + doc.dump(2) + "\n");
  return 0;
}

int cmd_inn(const Cli& cli, const std::string& file) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  PermGroup g = inn_group(*X, cli.cfg.closure_cap);
  json gens = json::array();
  std::string lines;
  for (const Perm& p : g.generators()) {
    gens.push_back(perm_cycles(p, X->labels()));
    lines += "  " + perm_cycles(p, X->labels()) + "\n";
  }
  emit(cli,
       json{{"op", "inn"}, {"name", X->name()}, {"order", g.order(cli.cfg.closure_cap)},
            {"generators", gens}},
       "inner group of order " + std::to_string(g.order(cli.cfg.closure_cap)) +
           ", generators:\n" + lines);
  return 0;
}

int cmd_pth(const Cli& cli, const std::string& file) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  PathPresentation P = pth_presentation(X);
  if (cli.json_out) {
    json rels = json::array();
    for (const GroupWord& r : P.relations) rels.push_back(r.str(X->labels()));
    emit(cli, json{{"op", "pth"}, {"generators", X->labels()}, {"relators", rels}}, "");
    return 0;
  }
  std::cout << "generators:";
  for (const auto& l : X->labels()) std::cout << " " << l;
  std::cout << "\n";
  for (const GroupWord& r : P.relations) std::cout << r.str(X->labels()) << "\n";
  return 0;
}

int cmd_abelianize(const Cli& cli, const std::string& file) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  SmithResult s = abelianization(pth_presentation(X));
  json diag = json::array();
  for (long long d : s.diagonal) diag.push_back(d);
  emit(cli,
       json{{"op", "abelianize"}, {"name", X->name()}, {"group", smith_group_str(s)},
            {"rank", s.rank_free}, {"diagonal", diag}},
       smith_group_str(s) + "\n");
  return 0;
}

int cmd_covering(const Cli& cli, const std::string& file) {
  RackHom f = load_hom_file(file, cli.row_acts);
  CoveringReport rep = is_covering(f, cli.cfg.closure_cap);
  json doc{{"op", "covering"},
           {"verdict", rep.verdict},
           {"witness", rep.witness ? witness_triple(*f.dom, *rep.witness) : json(nullptr)},
           {"methods", json{{"scan", rep.method_scan}, {"kernel_image", rep.method_kernel}}}};
  std::string text = rep.verdict ? "covering: yes\n" : "covering: no\n";
  if (rep.witness) {
    auto [x, a, b] = *rep.witness;
    text += "witness: " + f.dom->label(x) + " <| " + f.dom->label(a) + " <|^-1 " +
            f.dom->label(b) + " = " + f.dom->label(f.dom->bwd(f.dom->fwd(x, a), b)) + "\n";
  }
  emit(cli, doc, text);
  return rep.verdict ? 0 : 1;
}

int cmd_trivial(const Cli& cli, const std::string& file) {
  RackHom f = load_hom_file(file, cli.row_acts);
  TrivialReport rep = is_trivial_ext(f);
  json w(nullptr);
  std::string text = rep.verdict ? "trivial extension: yes\n" : "trivial extension: no\n";
  if (rep.witness) {
    w = json{{"a", f.dom->label(rep.witness->first)}, {"b", f.dom->label(rep.witness->second)}};
    text += "witness: connected pair " + f.dom->label(rep.witness->first) + ", " +
            f.dom->label(rep.witness->second) + " with equal image\n";
  }
  emit(cli, json{{"op", "trivial"}, {"verdict", rep.verdict}, {"witness", w}}, text);
  return rep.verdict ? 0 : 1;
}

int cmd_normal(const Cli& cli, const std::string& file) {
  RackHom f = load_hom_file(file, cli.row_acts);
  NormalReport rep = is_normal_ext(f);
  json w(nullptr);
  std::string text = rep.verdict ? "normal extension: yes\n" : "normal extension: no\n";
  if (rep.witness) {
    json steps = json::array();
    for (const auto& [a, b, d] : rep.witness->steps)
      steps.push_back(json::array({f.dom->label(a), f.dom->label(b), d}));
    w = json{{"base", json::array({f.dom->label(rep.witness->base.first),
                                   f.dom->label(rep.witness->base.second)})},
             {"steps", steps},
             {"failing_projection", rep.failing_projection}};
    text += "witness membrane from (" + f.dom->label(rep.witness->base.first) + "," +
            f.dom->label(rep.witness->base.second) + ") with " +
            std::to_string(rep.witness->steps.size()) + " steps\n";
  }
  emit(cli, json{{"op", "normal"}, {"verdict", rep.verdict}, {"witness", w}}, text);
  return rep.verdict ? 0 : 1;
}

int cmd_centralize(const Cli& cli, const std::string& file) {
  RackHom f = load_hom_file(file, cli.row_acts);
  CentralizeResult res = centralize(f, cli.cfg.closure_cap);
  json doc{{"op", "centralize"},
           {"classes", congruence_classes_json(*f.dom, res.c1)},
           {"centralized_order", res.central.dom->order()},
           {"methods", json{{"pairs", res.route_pairs},
                            {"horns", res.route_horns},
                            {"kernel_orbits", res.route_kernel}}}};
  emit(cli, doc,
       "centralizing classes: " + classes_str(*f.dom, res.c1) + "\ncentralized map is a covering onto " +
           f.cod->name() + "\n");
  return 0;
}

int cmd_frq(const Cli& cli, const std::string& file) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  FrqResult q = frq(X);
  json doc{{"op", "frq"},
           {"classes", congruence_classes_json(*X, kernel_pair(q.unit))},
           {"quandle", rack_to_json(*q.quandle)}};
  emit(cli, doc,
       "quandle quotient classes: " + classes_str(*X, kernel_pair(q.unit)) + "\norder " +
           std::to_string(q.quandle->order()) + "\n");
  return 0;
}

int cmd_pullback(const Cli& cli, const std::string& f1, const std::string& f2) {
  RackHom f = load_hom_file(f1, cli.row_acts);
  RackHom g = load_hom_file(f2, cli.row_acts);
  auto pb = pullback(f, g);
  json doc{{"op", "pullback"}, {"rack", rack_to_json(*pb.rack)},
           {"proj1", pb.proj1.map}, {"proj2", pb.proj2.map}};
  emit(cli, doc, "pullback of order " + std::to_string(pb.rack->order()) + "\n");
  return 0;
}

int cmd_endpoint_cover(const Cli& cli, const std::string& file) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  EndpointCoverResult ec = endpoint_cover(X, cli.cfg.closure_cap);
  json doc{{"op", "endpoint-cover"},
           {"order", ec.cover->order()},
           {"covering", true},
           {"inn_truncated", true},
           {"rack", rack_to_json(*ec.cover)}};
  emit(cli, doc,
       "endpoint cover of order " + std::to_string(ec.cover->order()) +
           " (Inn-truncated); endpoint map is a covering\n");
  return 0;
}

int cmd_skeleton(const Cli& cli, const std::string& file, const std::string& pointing_arg) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  std::optional<std::vector<int>> pointing;
  if (!pointing_arg.empty()) {
    std::vector<int> pts;
    std::size_t start = 0;
    while (start <= pointing_arg.size()) {
      std::size_t comma = pointing_arg.find(',', start);
      std::string tok = pointing_arg.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!tok.empty()) pts.push_back(element_arg(*X, tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    pointing = pts;
  }
  SkeletonReport rep = fundamental_skeleton(X, pointing, cli.cfg.closure_cap);
  if (cli.dot_out) {
    std::cout << dot_skeleton(*X, rep);
    return 0;
  }
  json comps = json::array();
  std::string text = "fundamental skeleton (loop groups Inn-truncated):\n";
  for (std::size_t c = 0; c < rep.components.size(); ++c) {
    json gens = json::array();
    for (const Perm& g : rep.loop_generators[c]) gens.push_back(perm_cycles(g, X->labels()));
    json members = json::array();
    for (int x : rep.components[c]) members.push_back(X->label(x));
    comps.push_back(json{{"members", members},
                         {"representative", X->label(rep.pointing[c])},
                         {"loop_order", rep.loop_orders[c]},
                         {"loop_generators", gens}});
    text += "  [" + X->label(rep.pointing[c])
            + "]: loop order " + std::to_string(rep.loop_orders[c]) + "\n";
  }
  emit(cli, json{{"op", "skeleton"}, {"inn_truncated", true}, {"components", comps}}, text);
  return 0;
}

int cmd_horn(const Cli& cli, const std::string& file) {
  Horn h = load_horn_file(file, cli.row_acts);
  HornReport rep = horn_analyze(h);
  const FiniteRack& A = *h.hom.dom;
  emit(cli,
       json{{"op", "horn"},
            {"endpoints", json::array({A.label(rep.end_a), A.label(rep.end_b)})},
            {"closes", rep.closes},
            {"retracts", rep.retracts}},
       "endpoints: (" + A.label(rep.end_a) + ", " + A.label(rep.end_b) + "); closes: " +
           (rep.closes ? "yes" : "no") + "; retracts: " + (rep.retracts ? "yes" : "no") + "\n");
  return rep.closes ? 0 : 1;
}

int cmd_word_eq(const Cli& cli, const std::string& file, const std::string& w1,
                const std::string& w2) {
  RackPtr X = load_rack_file(file, cli.row_acts);
  GroupWord u = GroupWord::parse(w1, X->labels());
  GroupWord v = GroupWord::parse(w2, X->labels());
  Eq3Config ec;
  ec.depth = cli.cfg.rewrite_depth;
  WordEqReport rep = word_eq3(*X, u, v, ec);
  std::string verdict = rep.verdict == Eq3::Equal      ? "Equal"
                        : rep.verdict == Eq3::NotEqual ? "NotEqual"
                                                       : "Unknown";
  emit(cli,
       json{{"op", "word-eq"}, {"verdict", verdict}, {"method", rep.method},
            {"detail", rep.detail}},
       verdict + " (" + rep.method + (rep.detail.empty() ? "" : ": " + rep.detail) + ")\n");
  return rep.verdict == Eq3::NotEqual ? 1 : 0;
}

int cmd_suite(const Cli& cli, int samples, bool mutate, int threads) {
  SuiteConfig sc;
  sc.seed = cli.cfg.seed;
  sc.samples = samples;
  sc.closure_cap = cli.cfg.closure_cap;
  sc.mutate = mutate;
  sc.parallel = threads != 1;
  auto outcomes = run_suite(sc);
  json props = json::array();
  bool ok = true;
  for (const auto& o : outcomes) {
    props.push_back(json{{"name", o.name},
                         {"samples", o.samples},
                         {"failures", o.failures},
                         {"witness", o.first_witness}});
    ok = ok && o.failures == 0;
    if (!cli.json_out) {
      std::cout << (o.failures == 0 ? "pass " : "FAIL ") << o.name << ": "
                << (o.samples - o.failures) << "/" << o.samples << "\n";
      if (o.failures > 0) std::cout << "     witness: " << o.first_witness << "\n";
    }
  }
  if (cli.json_out)
    std::cout << json{{"op", "suite"}, {"seed", sc.seed}, {"ok", ok}, {"properties", props}}.dump(2)
              << "\n";
  else
    std::cout << (ok ? "all properties hold\n" : "property failures found\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite rack and quandle covering calculator"};
  app.require_subcommand(1);
  Cli cli;

  std::string file, file2, elem, w1, w2, pointing;
  int samples = 200;
  bool mutate = false;
  int threads = 0;

  auto add_common = [&](CLI::App* cmd, bool with_rack_flags = true) {
    cmd->add_flag("--json", cli.json_out, "emit one JSON document");
    if (with_rack_flags)
      cmd->add_flag("--row-acts", cli.row_acts, "table rows index the acting element");
    cmd->add_option("--cap", cli.cfg.closure_cap, "closure size cap");
    cmd->add_option("--seed", cli.cfg.seed, "PRNG seed");
    cmd->add_option("--depth", cli.cfg.rewrite_depth, "rewriting search depth");
  };

  auto* validate = app.add_subcommand("validate", "check a rack table");
  validate->add_option("file", file)->required();
  add_common(validate);

  auto* classify = app.add_subcommand("classify", "quandle/involutive/trivial flags");
  classify->add_option("file", file)->required();
  add_common(classify);

  auto* conj = app.add_subcommand("conj", "conjugation rack of a group table");
  conj->add_option("file", file)->required();
  add_common(conj, false);

  auto* pi0c = app.add_subcommand("pi0", "connected components");
  pi0c->add_option("file", file)->required();
  add_common(pi0c);
  pi0c->add_flag("--dot", cli.dot_out, "emit DOT clusters");

  auto* component = app.add_subcommand("component", "subrack of one component");
  component->add_option("file", file)->required();
  component->add_option("element", elem)->required();
  add_common(component);

  auto* inn = app.add_subcommand("inn", "inner automorphism group");
  inn->add_option("file", file)->required();
  add_common(inn);

  auto* pth = app.add_subcommand("pth", "path group presentation");
  pth->add_option("file", file)->required();
  add_common(pth);

  auto* ab = app.add_subcommand("abelianize", "abelianized path group");
  ab->add_option("file", file)->required();
  add_common(ab);

  auto* covering = app.add_subcommand("covering", "covering decision for a hom file");
  covering->add_option("file", file)->required();
  add_common(covering);

  auto* trivial = app.add_subcommand("trivial", "trivial-extension decision");
  trivial->add_option("file", file)->required();
  add_common(trivial);

  auto* normal = app.add_subcommand("normal", "normal-extension decision");
  normal->add_option("file", file)->required();
  add_common(normal);

  auto* central = app.add_subcommand("centralize", "centralizing congruence and reflection");
  central->add_option("file", file)->required();
  add_common(central);

  auto* frqc = app.add_subcommand("frq", "universal quandle quotient");
  frqc->add_option("file", file)->required();
  add_common(frqc);

  auto* pb = app.add_subcommand("pullback", "pullback of two homs over a common codomain");
  pb->add_option("file", file)->required();
  pb->add_option("file2", file2)->required();
  add_common(pb);

  auto* ec = app.add_subcommand("endpoint-cover", "finite endpoint cover");
  ec->add_option("file", file)->required();
  add_common(ec);

  auto* skel = app.add_subcommand("skeleton", "fundamental groupoid skeleton");
  skel->add_option("file", file)->required();
  skel->add_option("--pointing", pointing, "comma-separated representatives");
  add_common(skel);
  skel->add_flag("--dot", cli.dot_out, "emit DOT graph");

  auto* horn = app.add_subcommand("horn", "analyze a horn file");
  horn->add_option("file", file)->required();
  add_common(horn);

  auto* weq = app.add_subcommand("word-eq", "three-valued path-group equality");
  weq->add_option("file", file)->required();
  weq->add_option("word1", w1)->required();
  weq->add_option("word2", w2)->required();
  add_common(weq);

  auto* suite = app.add_subcommand("suite", "run the property batteries");
  add_common(suite, false);
  suite->add_option("--samples", samples, "base sample count per property");
  suite->add_flag("--mutate-table", mutate, "inject table faults (self-test)");
  suite->add_option("--threads", threads, "1 forces the serial runner");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env_seed = std::getenv("QCOVER_SEED")) {
    try {
      cli.cfg.seed = std::stoull(env_seed);
    } catch (...) {
      std::cerr << "bad QCOVER_SEED\n";
      return 2;
    }
  }

  try {
    if (validate->parsed()) return cmd_validate(cli, file);
    if (classify->parsed()) return cmd_classify(cli, file);
    if (conj->parsed()) return cmd_conj(cli, file);
    if (pi0c->parsed()) return cmd_pi0(cli, file);
    if (component->parsed()) return cmd_component(cli, file, elem);
    if (inn->parsed()) return cmd_inn(cli, file);
    if (pth->parsed()) return cmd_pth(cli, file);
    if (ab->parsed()) return cmd_abelianize(cli, file);
    if (covering->parsed()) return cmd_covering(cli, file);
    if (trivial->parsed()) return cmd_trivial(cli, file);
    if (normal->parsed()) return cmd_normal(cli, file);
    if (central->parsed()) return cmd_centralize(cli, file);
    if (frqc->parsed()) return cmd_frq(cli, file);
    if (pb->parsed()) return cmd_pullback(cli, file, file2);
    if (ec->parsed()) return cmd_endpoint_cover(cli, file);
    if (skel->parsed()) return cmd_skeleton(cli, file, pointing);
    if (horn->parsed()) return cmd_horn(cli, file);
    if (weq->parsed()) return cmd_word_eq(cli, file, w1, w2);
    if (suite->parsed()) return cmd_suite(cli, samples, mutate, threads);
  } catch (const MethodDisagreement& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
