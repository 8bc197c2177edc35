#include "bqsolve/registry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "bqsolve/errors.hpp"

namespace bqsolve {

namespace {

constexpr std::size_t kHelpColumn = 24;
constexpr std::size_t kIndent = 2;

const char* kInputHelp =
    "Path of the input BQM file in COO format. If not specified, stdin is "
    "used.";
const char* kOutputHelp =
    "Path of the output file. If not specified, stdout is used.";
const char* kVartypeHelp = "Variable type";
const char* kHelpHelp = "show this help message and exit";

std::string metavar(const CliParam& param) {
  if (param.kind == ArgKind::Choice) {
    std::string out = "{";
    for (std::size_t i = 0; i < param.choices.size(); ++i) {
      if (i > 0) out += ',';
      out += param.choices[i];
    }
    out += '}';
    return out;
  }
  std::string out = param.name;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

std::string help_entry(const std::string& invocation, const std::string& help) {
  std::string out(kIndent, ' ');
  out += invocation;
  if (kIndent + invocation.size() + 2 <= kHelpColumn) {
    out.append(kHelpColumn - kIndent - invocation.size(), ' ');
  } else {
    out += '\n';
    out.append(kHelpColumn, ' ');
  }
  out += help;
  out += '\n';
  return out;
}

void check_value_kind(const ArgSpec& spec, const ArgValue& value) {
  switch (spec.kind) {
    case ArgKind::Integer:
      if (!std::holds_alternative<std::int64_t>(value)) {
        throw UsageError("argument --" + spec.name + " expects an integer");
      }
      break;
    case ArgKind::Real:
      if (!std::holds_alternative<double>(value) &&
          !std::holds_alternative<std::int64_t>(value)) {
        throw UsageError("argument --" + spec.name + " expects a real number");
      }
      break;
    case ArgKind::String:
      if (!std::holds_alternative<std::string>(value)) {
        throw UsageError("argument --" + spec.name + " expects a string");
      }
      break;
    case ArgKind::Choice: {
      if (!std::holds_alternative<std::string>(value) ||
          std::find(spec.choices.begin(), spec.choices.end(),
                    std::get<std::string>(value)) == spec.choices.end()) {
        std::string choices;
        for (std::size_t i = 0; i < spec.choices.size(); ++i) {
          if (i > 0) choices += ", ";
          choices += spec.choices[i];
        }
        throw UsageError("argument --" + spec.name + " must be one of: " +
                         choices);
      }
      break;
    }
  }
}

}  // namespace

void Registry::register_solver(SolverDescriptor descriptor) {
  if (descriptor.name.empty()) {
    throw std::invalid_argument("registry: solver name must be non-empty");
  }
  if (find(descriptor.name) != nullptr) {
    throw std::invalid_argument("registry: solver '" + descriptor.name +
                                "' is already registered");
  }
  if (!descriptor.construct) {
    throw std::invalid_argument("registry: solver '" + descriptor.name +
                                "' has no construct hook");
  }
  for (std::size_t i = 0; i < descriptor.args.size(); ++i) {
    const ArgSpec& spec = descriptor.args[i];
    if (spec.kind == ArgKind::Choice && spec.choices.empty()) {
      throw std::invalid_argument("registry: choice argument --" + spec.name +
                                  " has no choices");
    }
    if (spec.default_value) {
      check_value_kind(spec, *spec.default_value);
    }
    for (std::size_t j = i + 1; j < descriptor.args.size(); ++j) {
      if (descriptor.args[j].name == spec.name) {
        throw std::invalid_argument("registry: duplicate argument --" +
                                    spec.name + " in solver '" +
                                    descriptor.name + "'");
      }
    }
  }
  solvers_.push_back(std::move(descriptor));
}

const SolverDescriptor* Registry::find(std::string_view name) const {
  for (const auto& descriptor : solvers_) {
    if (descriptor.name == name) {
      return &descriptor;
    }
  }
  return nullptr;
}

std::vector<std::string> Registry::solver_names() const {
  std::vector<std::string> names;
  names.reserve(solvers_.size());
  for (const auto& descriptor : solvers_) {
    names.push_back(descriptor.name);
  }
  return names;
}

CliSchema build_cli(const Registry& registry) {
  CliSchema schema;
  for (const auto& descriptor : registry.solvers()) {
    CliSubcommand sub;
    sub.name = descriptor.name;
    sub.description = descriptor.description;

    CliParam input;
    input.name = "input";
    input.positional = true;
    input.kind = ArgKind::String;
    input.help = kInputHelp;
    input.framework = true;
    sub.params.push_back(input);

    CliParam output;
    output.name = "output";
    output.kind = ArgKind::String;
    output.help = kOutputHelp;
    output.framework = true;
    sub.params.push_back(output);

    CliParam vartype;
    vartype.name = "vartype";
    vartype.kind = ArgKind::Choice;
    vartype.choices = {"SPIN", "BINARY"};
    vartype.help = kVartypeHelp;
    vartype.required = true;
    vartype.framework = true;
    sub.params.push_back(vartype);

    for (const ArgSpec& spec : descriptor.args) {
      CliParam param;
      param.name = spec.name;
      param.kind = spec.kind;
      param.choices = spec.choices;
      param.help = spec.help;
      param.default_value = spec.default_value;
      param.required = spec.required();
      param.scope = spec.scope;
      sub.params.push_back(param);
    }
    schema.subcommands.push_back(std::move(sub));
  }
  return schema;
}

std::string render_main_help(const CliSchema& schema, std::string_view prog) {
  std::string names = "{";
  for (std::size_t i = 0; i < schema.subcommands.size(); ++i) {
    if (i > 0) names += ',';
    names += schema.subcommands[i].name;
  }
  names += '}';

  std::string out = "usage: ";
  out += prog;
  out += " [-h] ";
  out += names;
  out += " ...\n\n";
  out += "optional arguments:\n";
  out += help_entry("-h, --help", kHelpHelp);
  out += "\nSolvers:\n";
  out += std::string(kIndent, ' ') + names + '\n';
  return out;
}

std::string render_solver_help(const CliSubcommand& sub,
                               std::string_view prog) {
  std::string usage = "usage: ";
  usage += prog;
  usage += ' ';
  usage += sub.name;
  usage += " [-h]";
  for (const CliParam& param : sub.params) {
    if (param.positional) continue;
    const std::string item = "--" + param.name + ' ' + metavar(param);
    usage += ' ';
    usage += param.required ? item : '[' + item + ']';
  }
  for (const CliParam& param : sub.params) {
    if (param.positional) usage += ' ' + param.name;
  }

  std::string out = usage + "\n\n";
  if (!sub.description.empty()) {
    out += sub.description;
    out += "\n\n";
  }
  out += "positional arguments:\n";
  for (const CliParam& param : sub.params) {
    if (param.positional) out += help_entry(param.name, param.help);
  }
  out += "\noptional arguments:\n";
  out += help_entry("-h, --help", kHelpHelp);
  for (const CliParam& param : sub.params) {
    if (param.positional) continue;
    out += help_entry("--" + param.name + ' ' + metavar(param), param.help);
  }
  return out;
}

SampleSet dispatch(const Registry& registry, const std::string& solver,
                   const ArgValues& values, const BinaryQuadraticModel& bqm) {
  const SolverDescriptor* descriptor = registry.find(solver);
  if (descriptor == nullptr) {
    std::string names;
    for (const auto& name : registry.solver_names()) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    throw UsageError("unknown solver '" + solver + "' (choose from " + names +
                     ")");
  }

  for (const auto& [name, value] : values) {
    (void)value;
    const bool known =
        std::any_of(descriptor->args.begin(), descriptor->args.end(),
                    [&](const ArgSpec& spec) { return spec.name == name; });
    if (!known) {
      throw UsageError("unknown argument --" + name + " for solver '" +
                       solver + "'");
    }
  }

  ArgValues init_values;
  ArgValues sample_values;
  for (const ArgSpec& spec : descriptor->args) {
    ArgValues& target =
        spec.scope == ArgScope::Init ? init_values : sample_values;
    const auto it = values.find(spec.name);
    if (it != values.end()) {
      check_value_kind(spec, it->second);
      target[spec.name] = it->second;
    } else if (spec.default_value) {
      target[spec.name] = *spec.default_value;
    } else if (!spec.optional) {
      throw UsageError("missing required argument --" + spec.name);
    }
  }

  const auto instance = descriptor->construct(init_values);
  return instance->sample(bqm, sample_values);
}

}  // namespace bqsolve
