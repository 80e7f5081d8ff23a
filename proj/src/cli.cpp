#include "cosetal/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "cosetal/cohomology.hpp"
#include "cosetal/text_format.hpp"
#include "json.hpp"

namespace cosetal {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int exit = kExitOk;
  Json json;
  std::string text;
};

std::string join(std::span<const Index> values, const char* sep = " ") {
  std::string out;
  for (Index i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json rows_json(const std::vector<std::vector<Index>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

Json monoid_json(const FiniteMonoid& m) {
  return Json{{"size", m.size()}, {"identity", m.identity()}, {"table", rows_json(m.rows())}};
}

Json partition_json(const PairPartition& e) {
  return Json{{"n_size", e.n_size()},
              {"h_size", e.h_size()},
              {"classes", std::vector<Index>(e.class_of().begin(), e.class_of().end())}};
}

Json vector_json(std::span<const Index> v) { return std::vector<Index>(v.begin(), v.end()); }

// Pairs for building the catalogue lazily, smallest candidates first.
std::vector<std::pair<std::string, FiniteMonoid>> catalogue(Index size) {
  std::vector<std::pair<std::string, FiniteMonoid>> out;
  auto z = [](Index n) { return "Z" + std::to_string(n); };
  auto l = [](Index n) { return "L" + std::to_string(n); };
  out.emplace_back(z(size), cyclic_group(size));
  for (Index a = 2; a * a <= size; ++a) {
    if (size % a) continue;
    out.emplace_back(z(a) + "x" + z(size / a), direct_product(cyclic_group(a), cyclic_group(size / a)));
  }
  out.emplace_back(l(size), meet_semilattice(size));
  for (Index a = 2; a * 2 <= size; ++a) {
    if (size % a) continue;
    const Index b = size / a;
    out.emplace_back(z(a) + "x" + l(b), direct_product(cyclic_group(a), meet_semilattice(b)));
    if (a <= b) out.emplace_back(l(a) + "x" + l(b), direct_product(meet_semilattice(a), meet_semilattice(b)));
  }
  if (size >= 3) {
    for (auto& [name, m] : catalogue(size - 1)) {
      if (name.front() == 'Z') out.emplace_back(name + "+inf", adjoin_absorbing(m));
    }
  }
  return out;
}

std::string describe_data(const ExtensionData& d) {
  std::ostringstream s;
  s << "# kernel order " << d.kernel().size() << ", quotient order " << d.quotient().size()
    << ", " << d.partition().num_classes() << " pair classes\n";
  return s.str();
}

Json data_json(const ExtensionData& d) {
  return Json{{"kernel", monoid_json(d.kernel().monoid())},
              {"quotient", monoid_json(d.quotient())},
              {"partition", partition_json(d.partition())},
              {"action", rows_json(d.action().rows())}};
}

// Names of the kernel and quotient stanzas the data came from, for emission.
struct ResolvedData {
  ExtensionData data;
  std::string kernel;
  std::string quotient;
};

struct DataArgs {
  std::string extension;
  std::string kernel;
  std::string quotient;
  std::string partition;
  std::string action;
};

ResolvedData resolve_data(const Workspace& ws, const DataArgs& a) {
  if (!a.extension.empty()) {
    if (!a.kernel.empty() || !a.quotient.empty() || !a.partition.empty() || !a.action.empty()) {
      throw CLI::ValidationError("--extension excludes --kernel/--quotient/--partition/--action");
    }
    const ExtensionDiagram d = ws.extension_diagram(a.extension);
    const auto& entry = ws.extension(a.extension);
    return {extract_data(d, first_section(d)), entry.kernel, entry.quotient};
  }
  if (a.kernel.empty() || a.quotient.empty()) {
    throw CLI::ValidationError("give either --extension or both --kernel and --quotient");
  }
  const FiniteAbelianGroup n = ws.group(a.kernel);
  const FiniteMonoid& h = ws.monoid(a.quotient);
  const PairPartition e =
      a.partition.empty() ? PairPartition::discrete(n.size(), h.size()) : ws.partition(a.partition);
  const ActionTable phi = a.action.empty() ? ActionTable::trivial(h.size(), n.size()) : ws.action(a.action);
  return {validate_data(n, h, e, phi), a.kernel, a.quotient};
}

Outcome cmd_check(const Workspace& ws, const std::string& name) {
  const auto& entry = ws.extension(name);
  Outcome o;
  Json certs = Json::array();
  std::string text = "# extension " + name + "\n";
  auto add = [&](const std::string& label, std::optional<bool> holds, const std::string& detail) {
    Json c{{"name", label}};
    c["holds"] = holds ? Json(*holds) : Json(nullptr);
    c["detail"] = detail;
    certs.push_back(c);
    text += "#   " + label + ": " + (holds ? yes_no(*holds) : std::string("skipped"));
    if (!detail.empty()) text += " (" + detail + ")";
    text += "\n";
  };

  std::optional<KernelDiagram> d;
  bool kernel_ok = false;
  ErrorCode failure{};
  std::string failure_text;
  try {
    d = ws.kernel_diagram(name);
    kernel_ok = true;
  } catch (const Error& err) {
    failure = err.code();
    failure_text = err.what();
  }
  const bool typed = kernel_ok || (failure != ErrorCode::DataMismatch &&
                                   failure != ErrorCode::NoInverse &&
                                   failure != ErrorCode::NotCommutative);
  add("typed", typed, typed ? "" : failure_text);
  const bool injective = typed && (kernel_ok || failure != ErrorCode::KNotInjective);
  add("k injective", typed ? std::optional<bool>(injective) : std::nullopt,
      typed && !injective ? failure_text : "");
  const bool is_kernel = injective && (kernel_ok || failure != ErrorCode::KNotKernel);
  add("k kernel of e", injective ? std::optional<bool>(is_kernel) : std::nullopt,
      injective && !is_kernel ? failure_text : "");
  add("e surjective", is_kernel ? std::optional<bool>(kernel_ok) : std::nullopt,
      is_kernel && !kernel_ok ? failure_text : "");

  std::optional<bool> cokernel;
  std::optional<bool> cosetal;
  std::optional<bool> weakly;
  std::optional<bool> special;
  std::string cosetal_detail;
  std::string weakly_detail;
  std::string special_detail;
  if (d) {
    cokernel = is_cokernel(*d);
    const CosetalCheck c = is_cosetal(*d);
    cosetal = c.holds;
    if (!c.holds) {
      cosetal_detail = "no n with k(n)g' = g for g=" + std::to_string(c.counterexample->first) +
                       ", g'=" + std::to_string(c.counterexample->second);
    }
    const KernelEquivalence eq = kernel_equivalence_split_extension(*d);
    const WeaklySchreierCheck w = is_weakly_schreier(eq.split);
    weakly = w.holds;
    if (!w.holds) {
      const auto [g, gp] = eq.pairs[*w.counterexample];
      weakly_detail = "no witness at (" + std::to_string(g) + "," + std::to_string(gp) + ")";
    }
    special = is_schreier(eq.split);
    if (w.holds && !*special) {
      for (Index i = 0; i < eq.pairs.size(); ++i) {
        if (w.witness_count[i] != 1) {
          special_detail = "(" + std::to_string(eq.pairs[i].first) + "," +
                           std::to_string(eq.pairs[i].second) + ") has " +
                           std::to_string(w.witness_count[i]) + " witnesses";
          break;
        }
      }
    } else if (!w.holds) {
      special_detail = weakly_detail;
    }
  }
  add("e cokernel of k", cokernel, cokernel && !*cokernel ? "congruence generated by k differs from ker e" : "");
  add("cosetal", cosetal, cosetal_detail);
  add("Eq(e) weakly Schreier", weakly, weakly_detail);
  add("special Schreier", special, special_detail);

  const bool valid = kernel_ok && cokernel.value_or(false);
  auto word = [](std::optional<bool> b) { return b ? yes_no(*b) : std::string("skipped"); };
  text += "extension: " + yes_no(valid) + ", cosetal: " + word(cosetal) +
          ", special-Schreier: " + word(special) + "\n";
  o.exit = valid && cosetal.value_or(false) ? kExitOk : kExitCheckFailed;
  o.json = Json{{"command", "check"},
                {"extension", name},
                {"kernel", entry.kernel},
                {"total", entry.total},
                {"quotient", entry.quotient},
                {"certificates", certs},
                {"valid_extension", valid},
                {"cosetal", cosetal ? Json(*cosetal) : Json(nullptr)},
                {"special_schreier", special ? Json(*special) : Json(nullptr)},
                {"exit", o.exit}};
  o.text = std::move(text);
  return o;
}

std::string section_count(const KernelDiagram& d) {
  // Saturating product of fiber sizes; enumeration is not needed for a count.
  std::size_t count = 1;
  bool overflow = false;
  for (Index h = 0; h < d.quotient().size(); ++h) {
    if (h == d.quotient().identity()) continue;
    const std::size_t f = d.fiber(h).size();
    if (count > static_cast<std::size_t>(-1) / f) overflow = true;
    else count *= f;
  }
  return overflow ? "more than 2^64" : std::to_string(count);
}

Outcome cmd_extract(const Workspace& ws, const std::string& name) {
  // Cosetality first so a non-cosetal diagram reports NotCosetal rather
  // than the cokernel failure that usually accompanies it.
  const KernelDiagram kd = ws.kernel_diagram(name);
  if (const auto c = is_cosetal(kd); !c) {
    throw Error(ErrorCode::NotCosetal, "extension '" + name + "' is not cosetal",
                {c.counterexample->first, c.counterexample->second});
  }
  const ExtensionDiagram d = ws.extension_diagram(name);
  const Section s = first_section(d);
  const ExtensionData data = extract_data(d, s);
  const FactorTable g = extract_factor_set(d, s);
  const std::string count = section_count(d);
  std::string stanzas = emit_partition(name + "_E", data.partition()) +
                        emit_action(name + "_phi", data.action()) +
                        emit_factor_set(name + "_g", g);
  Outcome o;
  o.text = "# extension " + name + "\n# sections: " + count + "\n# first section: " +
           join(s.map()) + "\n" + describe_data(data) + stanzas;
  o.json = Json{{"command", "extract"},
                {"extension", name},
                {"sections", count},
                {"section", vector_json(s.map())},
                {"partition", partition_json(data.partition())},
                {"action", rows_json(data.action().rows())},
                {"factor_set", rows_json(g.rows())},
                {"stanzas", stanzas}};
  return o;
}

Outcome cmd_cohomology(const Workspace& ws, const DataArgs& args, const std::string& prefix,
                       std::size_t bound, bool emit_extensions) {
  const ResolvedData r = resolve_data(ws, args);
  const CohomologyGroup group = cohomology_group(r.data, bound);
  std::vector<ClassRepresentative> reps;
  if (emit_extensions) {
    reps = classify(group);
  } else {
    for (Index c = 0; c < group.order(); ++c) {
      reps.push_back({c, group.representative(c), build_extension(r.data, group.representative(c))});
    }
  }

  std::string stanzas = emit_partition(prefix + "_E", r.data.partition()) +
                        emit_action(prefix + "_phi", r.data.action());
  Json classes = Json::array();
  std::string class_lines;
  std::vector<std::string> carriers;
  for (const ClassRepresentative& rep : reps) {
    const std::string cname = prefix + "_c" + std::to_string(rep.class_id);
    const std::string carrier = describe_monoid(rep.extension.total());
    carriers.push_back(carrier);
    stanzas += emit_factor_set(cname, rep.factor_set);
    if (emit_extensions) stanzas += emit_extension(cname + "_ext", r.kernel, r.quotient, rep.extension);
    class_lines += "# class " + std::to_string(rep.class_id) + ": factorset " + cname +
                   ", carrier " + carrier + " (" + std::to_string(rep.extension.total().size()) +
                   " elements)\n";
    classes.push_back(Json{{"id", rep.class_id},
                           {"factor_set", rows_json(rep.factor_set.rows())},
                           {"carrier", carrier},
                           {"carrier_monoid", monoid_json(rep.extension.total())}});
  }
  std::string factors = "[" + join(group.invariant_factors(), ", ") + "]";
  std::string reps_line;
  for (Index i = 0; i < carriers.size(); ++i) reps_line += (i ? ", " : "") + carriers[i];

  std::string cayley;
  for (Index a = 0; a < group.order(); ++a) {
    cayley += "#   " + join(group.cayley().subspan(a * group.order(), group.order())) + "\n";
  }
  Outcome o;
  o.text = std::string("# ") + (emit_extensions ? "classification" : "cohomology") + "\n" +
           describe_data(r.data) + "# factor sets: " + std::to_string(group.factor_sets().size()) +
           ", inner: " + std::to_string(group.inner().size()) + "\n# order " +
           std::to_string(group.order()) + ", factors " + factors + ", reps: " + reps_line +
           "\n# cayley:\n" + cayley + class_lines + stanzas;
  Json cay = Json::array();
  for (Index a = 0; a < group.order(); ++a) {
    cay.push_back(vector_json(group.cayley().subspan(a * group.order(), group.order())));
  }
  o.json = Json{{"command", emit_extensions ? "classify" : "cohomology"},
                {"data", data_json(r.data)},
                {"factor_sets", group.factor_sets().size()},
                {"inner", group.inner().size()},
                {"order", group.order()},
                {"invariant_factors", group.invariant_factors()},
                {"cayley", cay},
                {"classes", classes},
                {"stanzas", stanzas}};
  return o;
}

Outcome cmd_baer_sum(const Workspace& ws, const std::string& a, const std::string& b,
                     const std::string& name, std::size_t bound) {
  const ExtensionDiagram da = ws.extension_diagram(a);
  const ExtensionDiagram db = ws.extension_diagram(b);
  const ExtensionDiagram sum = baer_sum(da, db);
  const auto& entry = ws.extension(a);
  const std::string stanzas = emit_extension(name, entry.kernel, entry.quotient, sum);
  const std::string carrier = describe_monoid(sum.total());

  Json classes = nullptr;
  std::string class_line;
  try {
    const ZetaWithGroup za = zeta(da, bound);
    const Index cb = zeta(db, za.group).class_id;
    const Index cs = zeta(sum, za.group).class_id;
    classes = Json{{"left", za.result.class_id}, {"right", cb}, {"sum", cs}, {"order", za.group.order()}};
    class_line = "# classes: " + std::to_string(za.result.class_id) + " + " + std::to_string(cb) +
                 " = " + std::to_string(cs) + " in a group of order " +
                 std::to_string(za.group.order()) + "\n";
  } catch (const Error& err) {
    if (err.code() != ErrorCode::TooLarge) throw;
    class_line = std::string("# classes: not computed (") + err.what() + ")\n";
  }
  Outcome o;
  o.text = "# baer sum of " + a + " and " + b + "\n" + class_line + "# carrier " + carrier + " (" +
           std::to_string(sum.total().size()) + " elements)\n" + stanzas;
  o.json = Json{{"command", "baer-sum"},
                {"left", a},
                {"right", b},
                {"classes", classes},
                {"carrier", carrier},
                {"total", monoid_json(sum.total())},
                {"k", vector_json(sum.k().map())},
                {"e", vector_json(sum.e().map())},
                {"stanzas", stanzas}};
  return o;
}

int error_exit(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownName:
    case ErrorCode::DuplicateName:
      return kExitUsage;
    default:
      return kExitCheckFailed;
  }
}

}  // namespace

std::string describe_monoid(const FiniteMonoid& m) {
  if (m.size() == 1) return "trivial";
  for (const auto& [name, candidate] : catalogue(m.size())) {
    if (find_isomorphism(candidate, m)) return name;
  }
  return "order-" + std::to_string(m.size()) + " monoid";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cosetal extensions of finite monoids by finite abelian groups."};
  app.require_subcommand(1);
  bool machine = false;
  std::size_t bound = 1'000'000;
  auto globals = [&](CLI::App* sub) {
    sub->add_flag("--machine", machine, "JSON output");
    sub->add_option("--bound", bound, "enumeration limit")->check(CLI::PositiveNumber);
  };
  globals(&app);

  std::string ext;
  std::string ext2;
  std::vector<std::string> files;
  std::string prefix;
  DataArgs data;
  std::function<Outcome(const Workspace&)> action;

  CLI::App* check = app.add_subcommand("check", "certify an extension and its Schreier hierarchy");
  check->add_option("extension", ext, "extension name")->required();
  check->add_option("files", files, "stanza files")->required();
  globals(check);
  check->callback([&] { action = [&](const Workspace& ws) { return cmd_check(ws, ext); }; });

  CLI::App* extract = app.add_subcommand("extract", "emit E, phi and g of a cosetal extension");
  extract->add_option("extension", ext, "extension name")->required();
  extract->add_option("files", files, "stanza files")->required();
  globals(extract);
  extract->callback([&] { action = [&](const Workspace& ws) { return cmd_extract(ws, ext); }; });

  for (const bool classify_mode : {false, true}) {
    CLI::App* sub = classify_mode
                        ? app.add_subcommand("classify", "one representative extension per class")
                        : app.add_subcommand("cohomology", "second cohomology group of the data");
    sub->add_option("files", files, "stanza files")->required();
    sub->add_option("--extension", data.extension, "take the data extracted from this extension");
    sub->add_option("--kernel", data.kernel, "kernel group stanza");
    sub->add_option("--quotient", data.quotient, "quotient monoid stanza");
    sub->add_option("--partition", data.partition, "partition stanza (default: discrete)");
    sub->add_option("--action", data.action, "action stanza (default: trivial)");
    prefix = "h2";
    sub->add_option("--name", prefix, "prefix for emitted stanzas");
    globals(sub);
    sub->callback([&, classify_mode] {
      action = [&, classify_mode](const Workspace& ws) {
        return cmd_cohomology(ws, data, prefix, bound, classify_mode);
      };
    });
  }

  CLI::App* baer = app.add_subcommand("baer-sum", "Baer sum of two extensions with equal data");
  baer->add_option("left", ext, "extension name")->required();
  baer->add_option("right", ext2, "extension name")->required();
  baer->add_option("files", files, "stanza files")->required();
  std::string sum_name = "sum";
  baer->add_option("--name", sum_name, "name of the emitted extension");
  globals(baer);
  baer->callback([&] {
    action = [&](const Workspace& ws) { return cmd_baer_sum(ws, ext, ext2, sum_name, bound); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Workspace ws = load_workspace(files);
    Outcome o = action(ws);
    if (machine) {
      out << o.json.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.exit;
  } catch (const Error& e) {
    const int code = error_exit(e.code());
    if (machine) {
      out << Json{{"command", command},
                  {"error", Json{{"code", std::string(to_string(e.code()))},
                                 {"message", e.what()},
                                 {"witness", vector_json(e.witness())}}},
                  {"exit", code}}
                 .dump(2)
          << "\n";
    }
    err << "error: " << e.what() << "\n";
    return code;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cosetal
