#include "hypermorse/commands.hpp"
#include "hypermorse/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace hypermorse;
using namespace hypermorse::cli;

namespace {

struct RawFlags {
  std::string lambda = "1";
  std::string c = "0";
  std::string constants_file;
  int a2_denominator = 38;
  std::string format = "json";
  std::string endpoints;
  std::optional<double> r[5];
  std::int64_t from = -1;
  std::int64_t to = -1;
};

void add_common(CLI::App* sub, CommandOptions& o, RawFlags& raw) {
  sub->add_option("--gen", o.gen, "generator spec, e.g. tree:d=3,R=4 or tess:p=7,q=3,layers=4");
  sub->add_option("--input", o.input, "edge-list file (one 'u v' pair per line)");
  sub->add_option("--seed", o.seed, "master seed");
  sub->add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--constants", raw.constants_file, "file of 'key = value' constant overrides");
  sub->add_option("--a2-denominator", raw.a2_denominator, "exponent denominator in A2 (38 or 28)")
      ->check(CLI::IsMember({38, 28}));
  sub->add_option("--max-exact", o.max_exact, "largest space scanned exhaustively for four-point delta");
  sub->add_option("--sample", o.sample_quadruples, "sampled quadruples when the space exceeds --max-exact");
}

void add_qg(CLI::App* sub, CommandOptions& o, RawFlags& raw) {
  sub->add_option("--lambda", raw.lambda, "multiplicative constant (integer, fraction or decimal)");
  sub->add_option("--c", raw.c, "additive constant");
  sub->add_option("--trials", o.trials, "number of trials");
  sub->add_option("--delta-param", o.delta_param, "mesh for Delta-length");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments on Morse-type bounds in hyperbolic graphs"};
  app.require_subcommand(1);

  CommandOptions o;
  RawFlags raw;

  auto* hyp = app.add_subcommand("hyperbolicity", "four-point and thin-triangle delta");
  add_common(hyp, o, raw);

  auto* morse = app.add_subcommand("morse", "random quasi-geodesics against the Morse bound");
  add_common(morse, o, raw);
  add_qg(morse, o, raw);
  morse->add_flag("--extremal", o.extremal, "use the extremal tree construction");

  auto* disp = app.add_subcommand("displacement", "center-shifting quasi-isometry of a tree ball");
  add_common(disp, o, raw);
  add_qg(disp, o, raw);
  const char* rnames[] = {"--r0", "--r1", "--r2", "--r3", "--r4"};
  for (int i = 0; i < 5; ++i) disp->add_option(rnames[i], raw.r[i], "richness constant");

  auto* con = app.add_subcommand("contraction", "projection extent of curves far from a geodesic");
  add_common(con, o, raw);
  add_qg(con, o, raw);
  con->add_option("--curve", o.curve_file, "curve JSON file");
  con->add_option("--from", raw.from, "geodesic start (default: lowest diametral pair)");
  con->add_option("--to", raw.to, "geodesic end");
  con->add_option("--walk-length", o.walk_length, "samples per generated curve");

  auto* rich = app.add_subcommand("richness", "geodesic richness check");
  add_common(rich, o, raw);
  for (int i = 0; i < 5; ++i) rich->add_option(rnames[i], raw.r[i], "threshold");
  rich->add_option("--endpoints", raw.endpoints, "comma-separated pool endpoints ('none' for empty)");
  rich->add_option("--max-endpoints", o.richness.max_endpoints, "cap on pool endpoints");

  auto* dl = app.add_subcommand("delta-length", "Delta-length of a curve");
  add_common(dl, o, raw);
  dl->add_option("--delta-param", o.delta_param, "mesh");
  dl->add_option("--curve", o.curve_file, "curve JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    o.lambda = Rational::parse(raw.lambda);
    o.c = Rational::parse(raw.c);
    o.format = raw.format == "csv" ? Format::csv : Format::json;
    o.constants.a2_exponent_denominator = raw.a2_denominator;
    if (!raw.constants_file.empty()) o.constants = load_constants_file(raw.constants_file, o.constants);
    if (raw.from >= 0) o.from = static_cast<PointId>(raw.from);
    if (raw.to >= 0) o.to = static_cast<PointId>(raw.to);

    if (rich->parsed()) {
      double* thresholds[] = {&o.richness.r0, &o.richness.r1, &o.richness.r2, &o.richness.r3, &o.richness.r4};
      for (int i = 0; i < 5; ++i)
        if (raw.r[i]) *thresholds[i] = *raw.r[i];
      if (rich->count("--endpoints") > 0) {
        o.endpoints_given = true;
        o.richness.endpoints = parse_id_list(raw.endpoints);
      }
    } else {
      double* constants[] = {&o.constants.r0, &o.constants.r1, &o.constants.r2, &o.constants.r3, &o.constants.r4};
      for (int i = 0; i < 5; ++i)
        if (raw.r[i]) *constants[i] = *raw.r[i];
    }

    CommandResult result;
    if (hyp->parsed()) result = cmd_hyperbolicity(o);
    else if (morse->parsed()) result = cmd_morse(o);
    else if (disp->parsed()) result = cmd_displacement(o);
    else if (con->parsed()) result = cmd_contraction(o);
    else if (rich->parsed()) result = cmd_richness(o);
    else result = cmd_delta_length(o);

    std::cout << result.render(o.format);
    return result.ok ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
