#include "gcon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>

#include "gcon/error.hpp"
#include "gcon/json_io.hpp"
#include "gcon/render.hpp"
#include "gcon/verify.hpp"

namespace gcon {

namespace {

void require_order(const char* what, GroupOrder doc, int k) {
  if (doc.value() != k)
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + " has k=" +
                                                   std::to_string(doc.value()) + ", expected " +
                                                   std::to_string(k));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"G-constellations for Z/kZ in SL(2,C): stairs, stability, chambers, fibers", "gcon"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  int k = 0;
  bool simple = false, derived = false, verbose = false;
  std::string theta_text, stair_text, chamber_text, format = "ascii";
  std::uint64_t seed = kDefaultSeed;
  auto k_range = CLI::Range(2, GroupOrder::kMax);

  auto* stairs = app.add_subcommand("stairs", "List the G-stairs of order k, one JSON document per line");
  stairs->add_option("--k", k, "Group order")->required()->check(k_range);

  auto* chambers = app.add_subcommand("chambers", "List the chambers of order k as JSON lines");
  chambers->add_option("--k", k, "Group order")->required()->check(k_range);
  chambers->add_flag("--simple", simple, "Only simple chambers");
  chambers->add_flag("--derived", derived, "Include stairs, chamber stair and representative theta");

  auto* simples = app.add_subcommand("simple-chambers", "List the simple chambers of order k");
  simples->add_option("--k", k, "Group order")->required()->check(k_range);
  simples->add_flag("--derived", derived, "Include stairs, chamber stair and representative theta");

  auto* counts = app.add_subcommand("counts", "Count stairs, chambers, simple chambers and generator classes");
  counts->add_option("--k", k, "Group order")->required()->check(k_range);

  auto* stability = app.add_subcommand("stability", "Classify a stair under a stability condition");
  stability->add_option("--k", k, "Group order")->required()->check(k_range);
  stability->add_option("--theta", theta_text, "theta document")->required();
  stability->add_option("--stair", stair_text, "stair document")->required();

  auto* chamber_of = app.add_subcommand("chamber-of", "The chamber containing a generic theta");
  chamber_of->add_option("--k", k, "Group order")->required()->check(k_range);
  chamber_of->add_option("--theta", theta_text, "theta document")->required();

  auto* fibers = app.add_subcommand("fibers", "Tautological fibers at the chart origins of a chamber");
  fibers->add_option("--chamber", chamber_text, "chamber document")->required();

  auto* render = app.add_subcommand("render", "Draw a stair, realized stair or chamber read from stdin");
  render->add_option("--format", format, "Output format")->check(CLI::IsMember({"ascii", "svg", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria at order k");
  verify_cmd->add_option("--k", k, "Group order")->required()->check(CLI::Range(2, 10));
  verify_cmd->add_flag("--verbose", verbose, "Print one line per criterion");
  verify_cmd->add_option("--seed", seed, "Seed for the random samples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_invalid;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_invalid;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_invalid;
  }

  try {
    if (*stairs) {
      for (const Stair& s : enumerate_stairs(GroupOrder(k))) out << emit_json(s) << '\n';
    } else if (*chambers || *simples) {
      const GroupOrder g(k);
      const auto list = (simple || *simples) ? enumerate_simple_chambers(g) : enumerate_chambers(g);
      for (const Chamber& c : list) out << emit_json(c, derived) << '\n';
    } else if (*counts) {
      out << emit_json(count_report(GroupOrder(k))) << '\n';
    } else if (*stability) {
      const auto theta = parse_json_as<StabilityCondition>(theta_text);
      const auto stair = parse_json_as<Stair>(stair_text);
      require_order("theta", theta.order(), k);
      require_order("stair", stair.order(), k);
      out << to_string(classify(stair, theta)) << '\n';
    } else if (*chamber_of) {
      const auto theta = parse_json_as<StabilityCondition>(theta_text);
      require_order("theta", theta.order(), k);
      out << emit_json(chamber_of_theta(GroupOrder(k), theta), true) << '\n';
    } else if (*fibers) {
      const FiberReport report = verify_tautological(parse_json_as<Chamber>(chamber_text));
      out << emit_json(report) << '\n';
      if (!report.pass) {
        err << "tautological fibers do not match the chamber stairs\n";
        return exit_failed;
      }
    } else if (*render) {
      const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
        throw Error(ErrorCode::parse_error, "empty input");
      const Document doc = parse_json(text);
      if (format == "json") {
        out << emit_json(doc, true) << '\n';
      } else {
        const auto rs = figure_of(doc);
        if (!rs)
          throw Error(ErrorCode::schema_error,
                      std::string("cannot draw a ") + document_kind(doc) + " document");
        out << (format == "svg" ? render_svg(*rs) : render_ascii(*rs));
      }
    } else if (*verify_cmd) {
      VerifyOptions opt;
      opt.seed = seed;
      const VerifyReport report = verify(GroupOrder(k), opt);
      if (verbose)
        for (const CriterionResult& r : report.results)
          out << "criterion " << r.id << ' ' << to_string(r.verdict) << ": " << r.detail << '\n';
      out << report.summary() << '\n';
      if (!report.pass()) {
        for (const CriterionResult& r : report.results)
          if (r.verdict == Verdict::fail) err << "criterion " << r.id << " failed: " << r.detail << '\n';
        return exit_failed;
      }
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_ok;
}

}  // namespace gcon
