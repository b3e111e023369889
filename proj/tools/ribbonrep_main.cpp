// Command-line front end for the ribbonrep library. Exit codes: 0 on
// success (and verification pass), 1 on verification failure, 2 on usage,
// parse, or precondition errors.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbonrep/characters.hpp"
#include "ribbonrep/ribbons.hpp"
#include "ribbonrep/signs.hpp"
#include "ribbonrep/verify.hpp"

namespace {

using nlohmann::json;
using namespace ribbonrep;

struct Options {
  std::string format = "plain";
  std::string lambda;
  std::string label;
  std::string mu;
  std::string cls;
  std::string group;
  std::string kind = "identity";
  int r = 0;
  int n = 0;
  int jobs = 1;
  std::optional<int> pad;
  std::optional<int> k;
  bool anchor = false;
  bool traces = false;
  bool compositions = false;
};

void emit(const Options& opt, const std::string& plain, const json& doc) {
  if (opt.format == "json")
    std::cout << doc.dump() << "\n";
  else
    std::cout << plain << "\n";
}

AbelianGroupSpec group_of(const Options& opt) {
  if (!opt.group.empty()) return AbelianGroupSpec::parse(opt.group);
  if (opt.r >= 1) return AbelianGroupSpec({opt.r});
  throw std::invalid_argument("need -r or -g");
}

int run_boundary(const Options& opt) {
  Partition lambda = Partition::parse(opt.lambda);
  BoundarySequence b = opt.pad ? boundary_sequence(lambda, *opt.pad)
                               : boundary_sequence(lambda);
  json doc{{"schema", "ribbonrep.boundary/1"},
           {"lambda", lambda.str()},
           {"bits", b.bits()},
           {"anchor", b.anchor()}};
  if (opt.pad) doc["pad"] = *opt.pad;
  emit(opt, b.display(opt.anchor), doc);
  return 0;
}

int run_core(const Options& opt) {
  Partition lambda = Partition::parse(opt.lambda);
  Partition core = r_core(lambda, opt.r);
  emit(opt, core.str(),
       json{{"schema", "ribbonrep.core/1"},
            {"lambda", lambda.str()},
            {"r", opt.r},
            {"core", core.str()}});
  return 0;
}

int run_quotient(const Options& opt) {
  Partition lambda = Partition::parse(opt.lambda);
  RPartitePartition q = r_quotient(lambda, opt.r);
  emit(opt, q.str(),
       json{{"schema", "ribbonrep.quotient/1"},
            {"lambda", lambda.str()},
            {"r", opt.r},
            {"quotient", q.str()}});
  return 0;
}

int run_compose(const Options& opt) {
  RPartitePartition t = RPartitePartition::parse(opt.label);
  if (opt.r >= 1 && opt.r != t.arity())
    throw std::invalid_argument("-r disagrees with the literal's arity");
  Partition lambda = phi_r(t);
  emit(opt, lambda.str(),
       json{{"schema", "ribbonrep.compose/1"},
            {"components", t.str()},
            {"r", t.arity()},
            {"lambda", lambda.str()}});
  return 0;
}

int run_sign(const Options& opt) {
  Partition lambda = Partition::parse(opt.lambda);
  SignReport report = sign_report(lambda, opt.r, opt.k);
  emit(opt, report.str(), json::parse(report.to_json()));
  return 0;
}

int run_chi(const Options& opt) {
  Partition lambda = Partition::parse(opt.lambda);
  Composition mu = Composition::parse(opt.mu);
  Int value = chi_sn(lambda, mu);
  emit(opt, value.str(),
       json{{"schema", "ribbonrep.chi/1"},
            {"lambda", lambda.str()},
            {"mu", mu.str()},
            {"value", value.str()}});
  return 0;
}

int run_psi(const Options& opt) {
  if (!opt.label.empty() && opt.label.front() == '[') {
    RPartitePartition label = RPartitePartition::parse(opt.label);
    AbelianGroupSpec group = !opt.group.empty()
                                 ? AbelianGroupSpec::parse(opt.group)
                                 : AbelianGroupSpec({label.arity()});
    if (group.order() != label.arity())
      throw std::invalid_argument("group order disagrees with label arity");
    if (opt.cls.empty() && opt.mu.empty())
      throw std::invalid_argument("need a class (-c) or a cycle type (-m)");
    ColoredCycleType cls =
        !opt.cls.empty()
            ? ColoredCycleType::parse(opt.cls)
            : ColoredCycleType::zero_colored(Composition::parse(opt.mu),
                                             group.order());
    CyclotomicInt value = psi_wreath(label, cls, group);
    emit(opt, value.str(),
         json{{"schema", "ribbonrep.psi/1"},
              {"label", label.str()},
              {"class", cls.str()},
              {"group", group.str()},
              {"value", value.str()}});
    return 0;
  }
  Partition lambda = Partition::parse(opt.label);
  int r = opt.r >= 1 ? opt.r : group_of(opt).order();
  if (opt.mu.empty())
    throw std::invalid_argument("need a cycle type (-m) for a plain partition");
  Composition mu = Composition::parse(opt.mu);
  Int value = psi_zero_colored(lambda, mu, r);
  json doc{{"schema", "ribbonrep.psi/1"},
           {"lambda", lambda.str()},
           {"mu", mu.str()},
           {"r", r},
           {"value", value.str()}};
  std::string plain = value.str();
  if (opt.traces) {
    auto traces = enumerate_mu_peelings(lambda, mu, r);
    json jtraces = json::array();
    for (const PeelTrace& t : traces) {
      plain += "\n\n" + t.str();
      plain.pop_back();  // trailing newline of trace format
      json steps = json::array();
      for (const PeelStep& s : t.steps)
        steps.push_back({{"q", s.switch_index},
                         {"len", s.ribbon_length},
                         {"ht", s.height},
                         {"component", s.component}});
      jtraces.push_back({{"steps", std::move(steps)}, {"sign", t.sign}});
    }
    doc["traces"] = std::move(jtraces);
  }
  emit(opt, plain, doc);
  return 0;
}

int run_table(const Options& opt) {
  CharacterTable table = character_table(group_of(opt), opt.n);
  if (opt.format == "json")
    std::cout << table.to_json() << "\n";
  else
    std::cout << table.to_tsv();
  return 0;
}

int run_verify(const Options& opt) {
  VerificationReport report;
  if (opt.kind == "degree") {
    report = verify_degree_fact(opt.n);
  } else if (!opt.group.empty()) {
    report = verify_identity_abelian(AbelianGroupSpec::parse(opt.group),
                                     opt.n, opt.jobs);
  } else {
    if (opt.r < 1) throw std::invalid_argument("need -r or -g");
    report = verify_identity(opt.r, opt.n, opt.jobs, opt.compositions);
  }
  emit(opt, report.str(), json::parse(report.to_json()));
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Murnaghan-Nakayama characters for S_n and wreath "
               "products, with r-quotient combinatorics"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd, bool tsv = false) {
    cmd->add_option("--format", opt.format,
                    tsv ? "plain|tsv|json" : "plain|json")
        ->check(CLI::IsMember(tsv
                                  ? std::vector<std::string>{"plain", "tsv",
                                                             "json"}
                                  : std::vector<std::string>{"plain", "json"}));
  };

  CLI::App* boundary = app.add_subcommand("boundary", "boundary word of a partition");
  boundary->add_option("lambda", opt.lambda)->required();
  boundary->add_option("--pad", [&](const CLI::results_t& v) {
    opt.pad = std::stoi(v[0]);
    return true;
  }, "pad with leading 0s to this many rows");
  boundary->add_flag("--anchor", opt.anchor, "mark the anchor with |");
  add_format(boundary);

  CLI::App* core = app.add_subcommand("core", "r-core of a partition");
  core->add_option("-r", opt.r)->required();
  core->add_option("lambda", opt.lambda)->required();
  add_format(core);

  CLI::App* quotient = app.add_subcommand("quotient", "r-quotient of a partition");
  quotient->add_option("-r", opt.r)->required();
  quotient->add_option("lambda", opt.lambda)->required();
  add_format(quotient);

  CLI::App* compose = app.add_subcommand("compose", "partition composed from an r-tuple");
  compose->add_option("-r", opt.r);
  compose->add_option("components", opt.label)->required();
  add_format(compose);

  CLI::App* sign = app.add_subcommand("sign", "r-sign report of a partition");
  sign->add_option("-r", opt.r)->required();
  sign->add_option("lambda", opt.lambda)->required();
  sign->add_option("--k", [&](const CLI::results_t& v) {
    opt.k = std::stoi(v[0]);
    return true;
  }, "row count override");
  add_format(sign);

  CLI::App* chi = app.add_subcommand("chi", "S_n character value");
  chi->add_option("lambda", opt.lambda)->required();
  chi->add_option("mu", opt.mu)->required();
  add_format(chi);

  CLI::App* psi = app.add_subcommand("psi", "wreath product character value");
  psi->add_option("label", opt.label, "partition or [..|..] tuple")->required();
  psi->add_option("-r", opt.r);
  psi->add_option("-g,--group", opt.group);
  psi->add_option("-m,--mu", opt.mu, "zero-colored class of this cycle type");
  psi->add_option("-c,--class", opt.cls, "colored class, [..|..] format");
  psi->add_flag("--traces", opt.traces, "list the contributing peelings");
  add_format(psi);

  CLI::App* table = app.add_subcommand("table", "full character table of G wr S_n");
  table->add_option("-g,--group", opt.group)->required();
  table->add_option("-n", opt.n)->required();
  add_format(table, true);

  CLI::App* verify = app.add_subcommand("verify", "check the sign identity or the degree fact");
  verify->add_option("-r", opt.r);
  verify->add_option("-g,--group", opt.group);
  verify->add_option("-n", opt.n)->required();
  verify->add_option("--kind", opt.kind)->check(CLI::IsMember({"identity", "degree"}));
  verify->add_option("-j,--jobs", opt.jobs);
  verify->add_flag("--compositions", opt.compositions,
                   "also check reordered compositions");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (boundary->parsed()) return run_boundary(opt);
    if (core->parsed()) return run_core(opt);
    if (quotient->parsed()) return run_quotient(opt);
    if (compose->parsed()) return run_compose(opt);
    if (sign->parsed()) return run_sign(opt);
    if (chi->parsed()) return run_chi(opt);
    if (psi->parsed()) return run_psi(opt);
    if (table->parsed()) return run_table(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
