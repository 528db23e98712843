#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chowtower/error.hpp"
#include "chowtower/report.hpp"
#include "chowtower/tower.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  bool json = false;
  std::string tower_path = CHOWTOWER_DEFAULT_TOWER;
  std::string expectations_path = CHOWTOWER_DEFAULT_EXPECTATIONS;
  std::optional<std::int64_t> n;
  std::string n_range = "1..60";
  std::optional<std::string> stage;
  std::vector<std::string> exprs;
};

std::int64_t require_n(const Options& o, const std::string& command) {
  if (!o.n) throw CLI::RequiredError(command + " needs --n");
  if (*o.n < 1) throw CLI::ValidationError("--n", "n must be a positive integer");
  return *o.n;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace chowtower;

  CLI::App app{"Intersection numbers, linear systems and double covers on a tower of blow-ups of a P1-bundle over F_n"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Print the report as JSON");
    sub->add_option("--tower", o.tower_path, "Tower file, or - for stdin");
    sub->add_option("--n-range", o.n_range, "Working range a..b for symbolic sign decisions and sweeps");
    return sub;
  };
  auto with_stage = [&](CLI::App* sub) {
    sub->add_option("--stage", o.stage, "Stage name (X, X1, ...) or index; default: last");
    return sub;
  };

  common(app.add_subcommand("chern", "c1, c2 and Euler number at every stage"));
  auto* intersect = with_stage(common(app.add_subcommand("intersect", "Triple intersection D1.D2.D3")));
  intersect->add_option("divisors", o.exprs, "Three divisor expressions")->required()->expected(3);
  auto* h0 = common(app.add_subcommand("h0", "Sections of a scroll divisor at a given n"));
  h0->add_option("divisor", o.exprs, "Divisor expression on X")->required()->expected(1);
  h0->add_option("--n", o.n, "Value of n");
  auto* base = common(app.add_subcommand("baselocus", "Base curve of |-2K| at a given n"));
  base->add_option("--n", o.n, "Value of n");
  auto* filt = common(app.add_subcommand("filtration", "Filtration D_i = -2K - i(tau+A) at a given n"));
  filt->add_option("--n", o.n, "Value of n");
  auto* ediv = with_stage(common(app.add_subcommand("euler-divisor", "Euler number of a smooth divisor")));
  ediv->add_option("divisor", o.exprs, "Divisor expression")->required()->expected(1);
  common(app.add_subcommand("cover", "Invariants of the double cover"));
  auto* repro = common(app.add_subcommand("reproduce-paper", "Run every check against the expectations fixture"));
  repro->add_option("--expectations", o.expectations_path, "Expectations JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string stage_context;
  try {
    const NRange range = parse_nrange(o.n_range);
    const TowerSpec spec = parse_tower(read_source(o.tower_path));
    const Tower tower = build_tower(spec, range);
    const std::size_t stage =
        o.stage ? resolve_stage(tower, *o.stage) : tower.stages.size() - 1;
    stage_context = tower.stage(stage).name();

    Report report;
    if (command == "chern") {
      report = run_chern(tower);
    } else if (command == "intersect") {
      report = run_intersect(tower, stage, {o.exprs[0], o.exprs[1], o.exprs[2]});
    } else if (command == "h0") {
      stage_context = tower.stage(0).name();
      report = run_h0(tower, o.exprs[0], require_n(o, command));
    } else if (command == "baselocus") {
      stage_context = tower.stage(0).name();
      report = run_baselocus(tower, require_n(o, command));
    } else if (command == "filtration") {
      stage_context = tower.stage(0).name();
      report = run_filtration(tower, require_n(o, command));
    } else if (command == "euler-divisor") {
      report = run_euler_divisor(tower, stage, o.exprs[0]);
    } else if (command == "cover") {
      report = run_cover(tower);
    } else {
      const json expectations = json::parse(read_source(o.expectations_path));
      report = reproduce_paper(tower, expectations);
    }

    if (o.json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.to_text();
    }
    return report.all_pass() ? kExitOk : kExitCheckFailed;
  } catch (const CLI::Error& e) {
    std::cerr << "chowtower: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "chowtower: parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BasisError& e) {
    std::cerr << "chowtower: " << (stage_context.empty() ? "" : "[" + stage_context + "] ")
              << e.what() << "\n";
    return kExitInputError;
  } catch (const FileError& e) {
    std::cerr << "chowtower: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::parse_error& e) {
    std::cerr << "chowtower: bad expectations file: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "chowtower: " << (stage_context.empty() ? "" : "[" + stage_context + "] ")
              << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "chowtower: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
