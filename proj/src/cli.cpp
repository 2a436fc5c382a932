#include "valgroup/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "valgroup/spec_parser.hpp"
#include "valgroup/structure.hpp"

namespace valgroup::cli {

namespace {

struct Common {
  std::string spec_path;
  std::string context_name;
  int radius = 4;
  std::string format = "text";
  std::size_t cap = kDefaultBallCap;
  std::size_t witnesses = 10;

  SpecFile spec;
  ContextPtr ctx;
  std::string group_label;

  void load() {
    std::ifstream in(spec_path);
    if (!in) fail(errc::parse, "cannot open spec file: " + spec_path);
    std::stringstream buf;
    buf << in.rdbuf();
    spec = parse_spec(buf.str());
    if (context_name.empty()) {
      ctx = spec.primary();
      group_label = spec.contexts.front().first;
    } else {
      ctx = spec.context(context_name);
      group_label = context_name;
    }
  }

  bool records() const { return format == "records"; }
};

void add_common(CLI::App* cmd, Common& c, bool with_radius = true) {
  cmd->add_option("--group", c.spec_path, "path to the group specification file")->required();
  cmd->add_option("--context", c.context_name, "valuated group name (default: first declared)");
  if (with_radius) cmd->add_option("--radius", c.radius, "ball radius");
  cmd->add_option("--format", c.format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
  cmd->add_option("--cap", c.cap, "ball element cap");
  cmd->add_option("--witnesses", c.witnesses, "max witnesses per report");
}

std::string witness_field(const std::vector<std::vector<GroupElement>>& tuples) {
  std::string out = "[";
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < tuples[i].size(); ++j) {
      if (j) out += '|';
      out += render_word(tuples[i][j]);
    }
  }
  return out + "]";
}

using Counts = std::vector<std::pair<std::string, long long>>;

// fixed field order: command group radius status witnesses counts timing_ms
void emit_record(std::ostream& out, const Common& c, const std::string& command,
                 const std::string& status, const std::vector<std::vector<GroupElement>>& tuples,
                 const Counts& counts) {
  out << "command=" << command << " group=" << c.group_label << " radius=" << c.radius
      << " status=" << status << " witnesses=" << witness_field(tuples) << " counts={";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ',';
    out << counts[i].first << '=' << counts[i].second;
  }
  out << "} timing_ms=0\n";
}

const char* status_name(CheckStatus s) {
  return s == CheckStatus::holds_up_to_radius ? "holds_up_to_radius" : "violated";
}

int run_check_axioms(Common& c, const std::string& axioms_csv, std::ostream& out) {
  std::vector<AxiomId> axioms;
  if (axioms_csv.empty()) {
    for (AxiomId id : {AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4})
      axioms.push_back(id);
  } else {
    std::stringstream ss(axioms_csv);
    std::string name;
    while (std::getline(ss, name, ',')) axioms.push_back(axiom_from_name(name));
  }
  bool any_violated = false;
  for (AxiomId id : axioms) {
    AxiomReport rep = check_axiom(*c.ctx, id, c.radius, c.witnesses, c.cap);
    any_violated = any_violated || rep.status == CheckStatus::violated;
    std::string status = std::string(axiom_name(id)) + ":" + status_name(rep.status);
    if (c.records()) {
      emit_record(out, c, "check-axioms", status, rep.witnesses,
                  {{"checked", (long long)rep.checked_count},
                   {"witness_count", (long long)rep.witnesses.size()}});
    } else {
      out << "axiom " << axiom_name(id) << " on " << c.group_label << " (radius " << c.radius
          << ", cap " << c.cap << "): " << status_name(rep.status) << ", checked "
          << rep.checked_count << "\n";
      for (const auto& w : rep.witnesses) {
        out << "  witness:";
        for (const auto& e : w) out << " \"" << render_word(e) << "\"";
        out << "\n";
      }
    }
  }
  return any_violated ? 1 : 0;
}

int run_ball_stats(Common& c, std::ostream& out) {
  Ball ball = enumerate_ball(*c.ctx, c.radius, c.cap);
  std::vector<long long> per_layer(c.radius + 1, 0);
  for (const GroupElement& g : ball.elements) ++per_layer[length(g)];
  if (c.records()) {
    Counts counts{{"size", (long long)ball.size()}};
    for (int l = 0; l <= c.radius; ++l)
      counts.emplace_back("layer" + std::to_string(l), per_layer[l]);
    emit_record(out, c, "ball-stats", "ok", {}, counts);
  } else {
    out << "ball of " << c.group_label << " (" << c.ctx->describe() << ") radius " << c.radius
        << ": " << ball.size() << " elements\n";
    for (int l = 0; l <= c.radius; ++l)
      out << "  length " << l << ": " << per_layer[l] << "\n";
  }
  return 0;
}

int run_normal_form(Common& c, const std::string& word, std::ostream& out) {
  GroupElement g = parse_word(*c.ctx, word);
  if (length(g) == 0) {
    if (c.records())
      emit_record(out, c, "normal-form", "b_element", {{g}}, {{"length", 0}});
    else
      out << "length 0; element of B: \"" << render_word(g) << "\"\n";
    return 0;
  }
  SReducedForm f = s_reduced_decomposition(g);
  if (c.records()) {
    emit_record(out, c, "normal-form", "ok", {f.pieces},
                {{"length", (long long)length(g)}, {"pieces", (long long)f.pieces.size()}});
  } else {
    out << "element \"" << render_word(g) << "\", length " << length(g) << "\npieces: ";
    for (std::size_t i = 0; i < f.pieces.size(); ++i)
      out << (i ? " | " : "") << render_word(f.pieces[i]);
    out << "\njunctions:";
    for (int j : f.junction_lengths) out << ' ' << j;
    out << "\n";
  }
  return 0;
}

int run_cyclic_reduce(Common& c, const std::string& word, std::ostream& out) {
  GroupElement g = parse_word(*c.ctx, word);
  CyclicReduction r = cyclic_reduce(g);
  bool n_identity = length(g) == 2 * length(r.conjugator) + length(r.core);
  if (c.records()) {
    emit_record(out, c, "cyclic-reduce", "ok", {{g, r.conjugator, r.core}},
                {{"length", (long long)length(g)},
                 {"conjugator_length", (long long)length(r.conjugator)},
                 {"core_length", (long long)length(r.core)},
                 {"length_identity", n_identity ? 1 : 0}});
  } else {
    out << "g = \"" << render_word(g) << "\" = y^-1 x y with\n  y = \""
        << render_word(r.conjugator) << "\"\n  x = \"" << render_word(r.core)
        << "\" (cyclically reduced)\n  l(g) = 2 l(y) + l(x): " << (n_identity ? "yes" : "no")
        << (in_N(g) ? " (g in N)" : "") << "\n";
  }
  return 0;
}

int run_conjugacy(Common& c, const std::string& yw, const std::string& zw, int max_conj,
                  std::ostream& out) {
  GroupElement y = parse_word(*c.ctx, yw);
  GroupElement z = parse_word(*c.ctx, zw);
  std::optional<GroupElement> x = conjugate_search(y, z, max_conj, c.cap);
  if (!x) {
    if (c.records())
      emit_record(out, c, "conjugacy", "no_conjugator_within_radius", {},
                  {{"max_conjugator", max_conj}});
    else
      out << "no conjugator with length <= " << max_conj << " found\n";
    return 0;
  }
  if (length(y) < 2 || !is_weakly_cyclically_reduced(y) || !is_weakly_cyclically_reduced(z)) {
    if (c.records())
      emit_record(out, c, "conjugacy", "conjugate_found_no_decomposition", {{*x}},
                  {{"conjugator_length", (long long)length(*x)}});
    else
      out << "conjugator x = \"" << render_word(*x)
          << "\"; decomposition needs l(y) >= 2 and both weakly cyclically reduced\n";
    return 0;
  }
  ConjugacyDecomposition d = conjugacy_decompose(*x, y, z);
  auto form = [](ProductForm f) {
    return f == ProductForm::reduced ? "reduced" : "semi_reduced";
  };
  if (c.records()) {
    emit_record(out, c, "conjugacy",
                std::string("decomposed:ab_") + form(d.form_ab) + ":ba_" + form(d.form_ba),
                {{*x, d.a, d.b}}, {{"n", d.n}, {"m", d.m}});
  } else {
    out << "x = \"" << render_word(*x) << "\"\n"
        << "a = \"" << render_word(d.a) << "\", b = \"" << render_word(d.b) << "\", n = " << d.n
        << ", m = " << d.m << "\n"
        << "ab " << form(d.form_ab) << ", ba " << form(d.form_ba) << "\n";
  }
  return 0;
}

int run_centralizer(Common& c, const std::string& gw, std::ostream& out) {
  GroupElement g = parse_word(*c.ctx, gw);
  CentralizerStructure cs = centralizer_structure(g, c.radius, c.cap);
  if (c.records()) {
    std::vector<std::vector<GroupElement>> tuples{{cs.s}};
    tuples.push_back(cs.b_part);
    emit_record(out, c, "centralizer", "factored", tuples,
                {{"centralizer_size", (long long)cs.certificate.size()},
                 {"b_part_size", (long long)cs.b_part.size()}});
  } else {
    out << "C(\"" << render_word(g) << "\") within radius " << c.radius << ": s = \""
        << render_word(cs.s) << "\", |B cap C| = " << cs.b_part.size() << ", "
        << cs.certificate.size() << " elements factored as s^k h\n";
  }
  return 0;
}

int run_commute_decompose(Common& c, const std::string& xw, const std::string& yw,
                          std::ostream& out) {
  GroupElement x = parse_word(*c.ctx, xw);
  GroupElement y = parse_word(*c.ctx, yw);
  CommutingDecomposition d = commuting_decompose(x, y, c.radius, c.cap);
  if (c.records()) {
    emit_record(out, c, "commute-decompose", "ok", {{d.X, d.h1, d.h2}},
                {{"n", d.n}, {"m", d.m}});
  } else {
    out << "x = h1 X^" << d.n << ", y = h2 X^" << d.m << " with X = \"" << render_word(d.X)
        << "\", h1 = \"" << render_word(d.h1) << "\", h2 = \"" << render_word(d.h2) << "\"\n";
  }
  return 0;
}

std::vector<GroupElement> parse_gens(const GroupContext& ctx, const std::string& gens) {
  std::vector<GroupElement> out;
  std::stringstream ss(gens);
  std::string w;
  while (std::getline(ss, w, ';')) out.push_back(parse_word(ctx, w));
  return out;
}

int run_nielsen(Common& c, const std::string& gens, int nmax, std::ostream& out) {
  NielsenResult r = nielsen_reduce(parse_gens(*c.ctx, gens), nmax);
  if (c.records()) {
    emit_record(out, c, "nielsen", r.completed ? "weakly_reduced" : "stuck", {r.reduced},
                {{"steps", (long long)r.log.size()}, {"size", (long long)r.reduced.size()}});
  } else {
    for (const NielsenStep& s : r.log)
      out << "replace \"" << render_word(s.replaced) << "\" by \"" << render_word(s.replacement)
          << "\"\n";
    out << (r.completed ? "weakly reduced set:" : ("stuck (" + r.stuck_reason + "); partial:"));
    for (const GroupElement& u : r.reduced) out << " \"" << render_word(u) << "\"";
    out << "\n";
  }
  return 0;
}

int run_csa(Common& c, std::ostream& out) {
  CsaReport rep = csa_check(*c.ctx, c.radius, c.cap);
  bool refuted = rep.verdict == CsaVerdict::refuted;
  if (c.records()) {
    std::vector<std::vector<GroupElement>> tuples;
    if (!rep.involution_witnesses.empty()) tuples.push_back(rep.involution_witnesses);
    if (!rep.condition_i_witness.empty()) tuples.push_back(rep.condition_i_witness);
    if (!rep.condition_ii_witness.empty()) tuples.push_back(rep.condition_ii_witness);
    emit_record(out, c, "csa",
                std::string(refuted ? "refuted" : "consistent_with_CSA*") +
                    ":i_" + status_name(rep.condition_i_status) + ":ii_" +
                    status_name(rep.condition_ii_status),
                tuples, {{"involutions", (long long)rep.involution_witnesses.size()}});
  } else {
    out << "csa_check on " << c.group_label << " at radius " << c.radius << ": "
        << (refuted ? "refuted" : "consistent_with_CSA*") << "\n"
        << "  involutions: " << rep.involution_witnesses.size();
    for (const GroupElement& g : rep.involution_witnesses) out << " \"" << render_word(g) << "\"";
    out << "\n  condition (i): " << status_name(rep.condition_i_status)
        << "\n  condition (ii): " << status_name(rep.condition_ii_status) << "\n";
  }
  return refuted ? 1 : 0;
}

int run_subgroup_probe(Common& c, const std::string& gens, std::ostream& out) {
  SubgroupProbeReport rep =
      subgroup_decomposition_probe(*c.ctx, parse_gens(*c.ctx, gens), c.radius, c.cap);
  auto cls_name = [](GeneratorClass g) {
    return g == GeneratorClass::free_part_candidate ? "free-part" : "N(x)-part";
  };
  if (c.records()) {
    std::vector<std::vector<GroupElement>> tuples;
    if (!rep.hypothesis_witness.empty()) tuples.push_back(rep.hypothesis_witness);
    std::string status = rep.hypothesis_holds ? "hypothesis_holds" : "hypothesis_violated";
    for (const GeneratorClassification& g : rep.classifications)
      status += std::string(":") + cls_name(g.cls);
    emit_record(out, c, "subgroup-probe", status, tuples,
                {{"reduced_generators", (long long)rep.classifications.size()}});
  } else {
    out << "bounded probe (no structural certification claimed)\n  hypothesis K cap B^x = 1: "
        << (rep.hypothesis_holds ? "holds up to radius" : "violated") << "\n";
    for (const GeneratorClassification& g : rep.classifications) {
      out << "  \"" << render_word(g.generator) << "\": " << cls_name(g.cls) << " candidate";
      if (g.anchor) out << ", class anchor \"" << render_word(*g.anchor) << "\"";
      out << "\n";
    }
  }
  return rep.hypothesis_holds ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"valuated groups with normal forms: lengths, axioms, and structure checks"};
  app.require_subcommand(1);

  Common c;
  std::string axioms_csv, word, xw, yw, zw, gw, gens;
  int max_conj = 3, nmax = 3;

  auto* check = app.add_subcommand("check-axioms", "exhaustive axiom checks on a ball");
  add_common(check, c);
  check->add_option("--axioms", axioms_csv, "comma-separated list (default A1,A2,A3,A4)");

  auto* ball = app.add_subcommand("ball-stats", "ball sizes per length layer");
  add_common(ball, c);

  auto* nf = app.add_subcommand("normal-form", "S-reduced decomposition of a word");
  add_common(nf, c, false);
  nf->add_option("--word", word, "word to decompose")->required();

  auto* cr = app.add_subcommand("cyclic-reduce", "conjugate to a cyclically reduced core");
  add_common(cr, c, false);
  cr->add_option("--word", word, "word to reduce")->required();

  auto* conj = app.add_subcommand("conjugacy", "find a conjugator and decompose it");
  add_common(conj, c, false);
  conj->add_option("--y", yw, "conjugated element")->required();
  conj->add_option("--z", zw, "conjugation target")->required();
  conj->add_option("--max-conjugator", max_conj, "conjugator search radius");

  auto* cent = app.add_subcommand("centralizer", "centralizer structure of a c.r. element");
  add_common(cent, c);
  cent->add_option("--g", gw, "element")->required();

  auto* comm = app.add_subcommand("commute-decompose", "common-root decomposition");
  add_common(comm, c);
  comm->add_option("--x", xw, "first element")->required();
  comm->add_option("--y", yw, "second element")->required();

  auto* niel = app.add_subcommand("nielsen", "Nielsen reduction of a generating set");
  add_common(niel, c, false);
  niel->add_option("--gens", gens, "semicolon-separated words")->required();
  niel->add_option("--nmax", nmax, "max probe sequence length");

  auto* csa = app.add_subcommand("csa", "bounded CSA* probe");
  add_common(csa, c);

  auto* probe = app.add_subcommand("subgroup-probe", "bounded subgroup decomposition probe");
  add_common(probe, c);
  probe->add_option("--gens", gens, "semicolon-separated words")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    c.load();
    if (check->parsed()) return run_check_axioms(c, axioms_csv, out);
    if (ball->parsed()) return run_ball_stats(c, out);
    if (nf->parsed()) return run_normal_form(c, word, out);
    if (cr->parsed()) return run_cyclic_reduce(c, word, out);
    if (conj->parsed()) return run_conjugacy(c, yw, zw, max_conj, out);
    if (cent->parsed()) return run_centralizer(c, gw, out);
    if (comm->parsed()) return run_commute_decompose(c, xw, yw, out);
    if (niel->parsed()) return run_nielsen(c, gens, nmax, out);
    if (csa->parsed()) return run_csa(c, out);
    if (probe->parsed()) return run_subgroup_probe(c, gens, out);
    err << "no command\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return (e.code() == errc::capacity || e.code() == errc::radius_insufficient) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace valgroup::cli
