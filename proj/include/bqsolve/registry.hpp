#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bqsolve/model.hpp"
#include "bqsolve/sampleset.hpp"

namespace bqsolve {

enum class ArgKind { Integer, Real, String, Choice };

/// Whether a parameter is routed to the solver factory or to sample().
enum class ArgScope { Init, Sample };

using ArgValue = std::variant<std::int64_t, double, std::string>;
using ArgValues = std::map<std::string, ArgValue>;

/// One solver parameter as it appears on the command line. The long option
/// is always "--" + name. A spec without a default is required unless
/// `optional` is set, in which case the argument may simply be absent from
/// the parsed values (used for entropy-seeded seeds).
struct ArgSpec {
  std::string name;
  ArgKind kind = ArgKind::Integer;
  ArgScope scope = ArgScope::Sample;
  std::string help;
  std::optional<ArgValue> default_value;
  std::vector<std::string> choices;  // Choice kind only
  bool optional = false;

  std::string flag() const { return "--" + name; }
  bool required() const { return !default_value.has_value() && !optional; }
};

/// A constructed solver instance. `values` holds the sample-scoped
/// arguments.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual SampleSet sample(const BinaryQuadraticModel& bqm,
                           const ArgValues& values) = 0;
};

/// Declarative description of one solver: its subcommand name, the help
/// description, the ordered parameter specs, and a factory receiving the
/// init-scoped arguments.
struct SolverDescriptor {
  std::string name;
  std::string description;
  std::vector<ArgSpec> args;
  std::function<std::unique_ptr<Solver>(const ArgValues&)> construct;
};

class Registry {
 public:
  /// Throws std::invalid_argument when the name is already registered or a
  /// descriptor repeats an argument name.
  void register_solver(SolverDescriptor descriptor);

  const SolverDescriptor* find(std::string_view name) const;

  /// Names in registration order.
  std::vector<std::string> solver_names() const;

  const std::vector<SolverDescriptor>& solvers() const noexcept {
    return solvers_;
  }

 private:
  std::vector<SolverDescriptor> solvers_;
};

/// One command line parameter of a synthesized subcommand: either the
/// common trio (input, --output, --vartype) or a solver ArgSpec.
struct CliParam {
  std::string name;
  bool positional = false;
  ArgKind kind = ArgKind::String;
  std::vector<std::string> choices;
  std::string help;
  std::optional<ArgValue> default_value;
  bool required = false;
  ArgScope scope = ArgScope::Sample;  // meaningful for solver params only
  bool framework = false;             // common trio, consumed by the CLI
};

struct CliSubcommand {
  std::string name;
  std::string description;
  std::vector<CliParam> params;  // common trio first, then solver args
};

struct CliSchema {
  std::vector<CliSubcommand> subcommands;  // registration order
};

/// Synthesizes the full command line schema from the registry: one
/// subcommand per solver, each carrying the positional input, --output and
/// --vartype followed by the solver's own parameters.
CliSchema build_cli(const Registry& registry);

/// Top-level help: usage line with the subcommand set, then the Solvers
/// section. Pure function of the schema.
std::string render_main_help(const CliSchema& schema, std::string_view prog);

/// Per-solver help in the usual argparse layout: usage line, description,
/// positional and optional argument sections.
std::string render_solver_help(const CliSubcommand& sub, std::string_view prog);

/// Routes `values` to the named solver: init-scoped entries go to the
/// factory, sample-scoped ones to sample(). Defaults fill in missing
/// entries; a missing required argument or unknown solver raises UsageError.
SampleSet dispatch(const Registry& registry, const std::string& solver,
                   const ArgValues& values, const BinaryQuadraticModel& bqm);

}  // namespace bqsolve
