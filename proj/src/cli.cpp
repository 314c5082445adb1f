#include "lietrip/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "lietrip/cohom.hpp"
#include "lietrip/corpus.hpp"
#include "lietrip/embed.hpp"
#include "lietrip/error.hpp"
#include "lietrip/io.hpp"

namespace lietrip::cli {

namespace {

using io::Json;

struct Context {
  io::LoadOptions load;
  std::vector<std::string> inputs;
};

struct Outcome {
  bool verdict = true;
  Json dimensions = Json::object();
  Json witnesses = Json::array();
  Json artifacts = Json::object();
  std::optional<io::AlgebraFile> primary;
};

io::AlgebraFile resolve(const std::string& arg, const io::LoadOptions& opts) {
  if (std::filesystem::exists(arg)) return io::load_file(arg, opts);
  const corpus::Entry e = [&] {
    try {
      return corpus::lookup(arg, opts.field.value_or(FieldSpec::rationals()));
    } catch (const corpus::UnknownName&) {
      throw FormatError(arg + ": no such file or corpus entry");
    }
  }();
  if (auto* t = std::get_if<LieTripleSystem>(&e)) return {*t, arg};
  return {std::get<GradedLieAlgebra>(e), arg};
}

template <class T>
T expect_kind(const io::AlgebraFile& file, const std::string& arg, const char* kind) {
  if (auto* x = std::get_if<T>(&file.object)) return *x;
  throw FormatError(arg + ": expected kind " + kind + ", found " + io::kind_of(file.object));
}

LieTripleSystem lts_arg(const Context& c, std::size_t i, bool unchecked = false) {
  io::LoadOptions opts = c.load;
  opts.unchecked = opts.unchecked || unchecked;
  return expect_kind<LieTripleSystem>(resolve(c.inputs.at(i), opts), c.inputs.at(i), "lts");
}

GradedLieAlgebra lie_arg(const Context& c, std::size_t i, bool unchecked = false) {
  io::LoadOptions opts = c.load;
  opts.unchecked = opts.unchecked || unchecked;
  return expect_kind<GradedLieAlgebra>(resolve(c.inputs.at(i), opts), c.inputs.at(i), "graded_lie");
}

Json dims_json(const GradedLieAlgebra& l) { return Json::array({l.even_dim(), l.odd_dim()}); }

Json subspace_json(const Subspace& s) { return io::matrix_json(s.basis()); }

Json matrices_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(io::matrix_json(m));
  return out;
}

Outcome cmd_check_lts(const Context& c) {
  const LieTripleSystem t = lts_arg(c, 0, true);
  const AxiomReport r = check_lts_axioms(t);
  Outcome o;
  o.verdict = r.ok();
  o.dimensions["dim"] = t.dim();
  for (const auto& v : r.violations)
    o.witnesses.push_back({{"identity", to_string(v.identity)}, {"basis", v.witness}, {"defect", io::vector_json(v.defect)}});
  return o;
}

Outcome cmd_check_graded(const Context& c) {
  const GradedLieAlgebra l = lie_arg(c, 0, true);
  const LieReport r = check_graded_lie(l);
  Outcome o;
  o.verdict = r.ok();
  o.dimensions["dims"] = dims_json(l);
  for (const auto& v : r.violations) o.witnesses.push_back({{"identity", to_string(v.identity)}, {"basis", v.witness}});
  return o;
}

Outcome cmd_derive(const Context& c) {
  const LieTripleSystem t = lts_arg(c, 0);
  const DerivationAlgebra der = derivation_algebra(t);
  Outcome o;
  o.dimensions["dim"] = t.dim();
  o.dimensions["der"] = der.dim();
  o.artifacts["basis"] = matrices_json(der.basis);
  GradedLieAlgebra alg = GradedLieAlgebra::make(t.field(), der.dim(), 0, der.bracket);
  o.artifacts["algebra"] = io::to_json(alg);
  o.primary = io::AlgebraFile{std::move(alg), "der"};
  return o;
}

Outcome cmd_inder(const Context& c) {
  const LieTripleSystem t = lts_arg(c, 0);
  const InnerDerivations inder = inder_algebra(t);
  Outcome o;
  o.verdict = inder.ideal_certified;
  o.dimensions["dim"] = t.dim();
  o.dimensions["inder"] = inder.dim();
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < inder.dim(); ++i)
    basis.push_back(Matrix::unflatten(t.field(), t.dim(), t.dim(), inder.span.basis_vector(i)));
  o.artifacts["basis"] = matrices_json(basis);
  o.artifacts["ideal_certified"] = inder.ideal_certified;
  return o;
}

Outcome cmd_ste(const Context& c) {
  const StandardImbedding s = standard_imbedding(lts_arg(c, 0));
  Outcome o;
  o.verdict = check_graded_lie(s.algebra).ok();
  o.dimensions["dims"] = dims_json(s.algebra);
  o.artifacts["algebra"] = io::to_json(s.algebra);
  o.primary = io::AlgebraFile{s.algebra, "ste"};
  return o;
}

Outcome cmd_univ(const Context& c) {
  const UniversalImbedding u = universal_algebra(lts_arg(c, 0));
  Outcome o;
  o.verdict = check_graded_lie(u.algebra).ok() && is_generated_by_odd(u.algebra);
  o.dimensions["dims"] = dims_json(u.algebra);
  o.dimensions["ste_dims"] = dims_json(u.ste.algebra);
  o.dimensions["kernel"] = u.upsilon_kernel.dim();
  o.artifacts["algebra"] = io::to_json(u.algebra);
  o.artifacts["iota"] = io::matrix_json(u.iota);
  o.artifacts["upsilon"] = io::to_json(u.upsilon);
  o.artifacts["kernel"] = subspace_json(u.upsilon_kernel);
  o.artifacts["angle_representatives"] = io::matrix_json(u.angle.space.coset_reps());
  o.artifacts["angle_projection"] = io::matrix_json(u.angle.space.projection());
  o.primary = io::AlgebraFile{u.algebra, "univ"};
  return o;
}

Outcome cmd_extend(const Context& c) {
  const auto hom = expect_kind<LtsHom>(resolve(c.inputs.at(0), c.load), c.inputs.at(0), "lts_hom");
  const GradedLieAlgebra l = lie_arg(c, 1);
  if (!(odd_part_lts(l) == hom.target))
    throw InvalidStructure("extend: hom target is not the odd part of the given algebra");
  const GradedHom ext = extend_hom(hom.source, l, hom.matrix);
  Outcome o;
  o.dimensions["source_dims"] = dims_json(ext.source);
  o.dimensions["image"] = rank(ext.matrix);
  o.artifacts["hom"] = io::to_json(ext);
  o.primary = io::AlgebraFile{ext, "extend"};
  return o;
}

Outcome cmd_h2(const Context& c) {
  const io::AlgebraFile file = resolve(c.inputs.at(0), c.load);
  GradedModule m = GradedModule::trivial(GradedLieAlgebra::abelian(FieldSpec::rationals(), 0, 0), 0);
  if (auto* l = std::get_if<GradedLieAlgebra>(&file.object))
    m = GradedModule::trivial(*l, 1);
  else
    m = expect_kind<GradedModule>(file, c.inputs.at(0), "graded_lie or module");
  const H2Result h = h2_gr(m);
  Outcome o;
  o.verdict = h.dim == 0;
  o.dimensions["h2"] = h.dim;
  o.dimensions["z2"] = h.cocycles.dim();
  o.dimensions["b2"] = h.coboundaries.dim();
  Json reps = Json::array();
  for (const auto& r : h.representatives) reps.push_back(io::to_json(r));
  o.artifacts["representatives"] = std::move(reps);
  if (!h.representatives.empty()) o.primary = io::AlgebraFile{h.representatives.front(), "h2"};
  return o;
}

Outcome cmd_split(const Context& c) {
  const auto phi = expect_kind<GradedHom>(resolve(c.inputs.at(0), c.load), c.inputs.at(0), "graded_hom");
  const SplitResult r = split_central_0_extension(CentralExtensionProblem::make(phi));
  Outcome o;
  o.verdict = r.split();
  o.dimensions["kernel"] = r.sigma.module.dim();
  o.artifacts["sigma"] = io::to_json(r.sigma);
  if (r.psi) {
    o.artifacts["psi"] = io::to_json(*r.psi);
    o.primary = io::AlgebraFile{*r.psi, "split"};
  }
  if (r.certificate) o.witnesses.push_back({{"certificate", io::vector_json(*r.certificate)}});
  return o;
}

Outcome cmd_closed(const Context& c) {
  const GradedLieAlgebra l = lie_arg(c, 0);
  const H2Result h = h2_gr(l);
  Outcome o;
  o.verdict = h.dim == 0;
  o.dimensions["h2"] = h.dim;
  return o;
}

Outcome cmd_thm_a(const Context& c) {
  const GradedLieAlgebra l = lie_arg(c, 0);
  const TheoremAReport r = theorem_a_predicate(l);
  Outcome o;
  o.verdict = r.verdict;
  o.dimensions["dims"] = dims_json(l);
  o.dimensions["h2"] = r.h2_dim;
  o.artifacts["generated_by_odd"] = r.generated_by_odd;
  o.artifacts["closed"] = r.h2_dim == 0;
  if (r.extension) o.dimensions["kernel"] = r.extension->kernel.dim();
  if (!r.generated_by_odd) o.witnesses.push_back({{"obstruction", "not generated by L1"}});
  if (r.h2_dim != 0) o.witnesses.push_back({{"obstruction", "H2_gr dim " + std::to_string(r.h2_dim)}});
  if (r.witness) {
    o.witnesses.push_back({{"isomorphism", io::to_json(*r.witness)}});
    o.primary = io::AlgebraFile{*r.witness, "thm-a"};
  }
  return o;
}

Outcome cmd_u0ext(const Context& c) {
  const UniversalCentralExtension u = universal_central_0_extension(lie_arg(c, 0));
  Outcome o;
  o.dimensions["cover_dims"] = dims_json(u.cover.algebra);
  o.dimensions["kernel"] = u.kernel.dim();
  o.artifacts["map"] = io::to_json(u.map);
  o.artifacts["kernel"] = subspace_json(u.kernel);
  o.primary = io::AlgebraFile{u.map, "u0ext"};
  return o;
}

Outcome cmd_corpus(const Context& c) {
  Outcome o;
  if (c.inputs.empty()) {
    o.artifacts["names"] = corpus::names();
    o.artifacts["patterns"] = {"abl(<n>)", "a_of(<lts name>)"};
    return o;
  }
  io::AlgebraFile file = resolve(c.inputs.at(0), c.load);
  o.artifacts["entry"] = io::to_json(file);
  o.primary = std::move(file);
  return o;
}

struct Command {
  const char* name;
  const char* help;
  std::size_t min_inputs;
  std::size_t max_inputs;
  std::function<Outcome(const Context&)> fn;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"check-lts", "verify the triple system identities", 1, 1, cmd_check_lts},
      {"check-graded", "verify the graded Lie algebra identities", 1, 1, cmd_check_graded},
      {"derive", "derivation algebra of a triple system", 1, 1, cmd_derive},
      {"inder", "inner derivations of a triple system", 1, 1, cmd_inder},
      {"ste", "standard imbedding of a triple system", 1, 1, cmd_ste},
      {"univ", "universal imbedding with iota, upsilon and its kernel", 1, 1, cmd_univ},
      {"extend", "extension of a triple system hom to the universal algebra", 2, 2, cmd_extend},
      {"h2", "graded H2 with trivial coefficients or a module file", 1, 1, cmd_h2},
      {"split", "split a central 0-extension given as a graded hom", 1, 1, cmd_split},
      {"closed", "0-central closedness", 1, 1, cmd_closed},
      {"thm-a", "generated by the odd part and H2_gr = 0, with a witness", 1, 1, cmd_thm_a},
      {"u0ext", "universal central 0-extension", 1, 1, cmd_u0ext},
      {"corpus", "emit a named example (no name: list them)", 0, 1, cmd_corpus},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie triple systems and their universal imbeddings"};
  app.require_subcommand(1);
  std::string field_tag, out_path;
  bool unchecked = false;
  std::vector<std::string> inputs;
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("inputs", inputs, "files or corpus names");
    sub->add_option("--field", field_tag, "Q or Fp:<p>");
    sub->add_flag("--unchecked", unchecked, "skip validation on load");
    sub->add_option("--out", out_path, "write the primary artifact here");
    by_app[sub] = &cmd;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  const Command* cmd = nullptr;
  for (const auto& [sub, c] : by_app)
    if (sub->parsed()) cmd = c;
  if (inputs.size() < cmd->min_inputs || inputs.size() > cmd->max_inputs) {
    err << "error: " << cmd->name << " takes " << cmd->min_inputs
        << (cmd->min_inputs == cmd->max_inputs ? "" : "-" + std::to_string(cmd->max_inputs)) << " input(s)\n";
    return kInvalid;
  }

  Context ctx;
  ctx.inputs = inputs;
  ctx.load.unchecked = unchecked;
  try {
    if (!field_tag.empty()) ctx.load.field = FieldSpec::parse(field_tag);
    Outcome o = cmd->fn(ctx);
    Json report;
    report["command"] = cmd->name;
    report["inputs"] = inputs;
    report["field"] = ctx.load.field ? ctx.load.field->tag() : std::string("input");
    report["verdict"] = o.verdict;
    report["dimensions"] = std::move(o.dimensions);
    report["witnesses"] = std::move(o.witnesses);
    report["artifacts"] = std::move(o.artifacts);
    if (!out_path.empty()) {
      if (!o.primary) throw FormatError(std::string(cmd->name) + ": no artifact to write");
      io::save_file(out_path, *o.primary);
    }
    out << report.dump(2) << '\n';
    return o.verdict ? kTrue : kFalse;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace lietrip::cli
