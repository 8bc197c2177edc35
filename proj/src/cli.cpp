#include "bqsolve/cli.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bqsolve/errors.hpp"
#include "bqsolve/serio.hpp"
#include "bqsolve/solvers/bruteforce.hpp"
#include "bqsolve/solvers/pt.hpp"
#include "bqsolve/solvers/random.hpp"

namespace bqsolve {

namespace {

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

ArgValue parse_cli_value(const CliParam& param, const std::string& text) {
  switch (param.kind) {
    case ArgKind::Integer: {
      std::int64_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("argument --" + param.name +
                         ": invalid integer value '" + text + "'");
      }
      return value;
    }
    case ArgKind::Real: {
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("argument --" + param.name +
                         ": invalid real value '" + text + "'");
      }
      return value;
    }
    case ArgKind::String:
      return text;
    case ArgKind::Choice: {
      for (const auto& choice : param.choices) {
        if (text == choice) return text;
      }
      std::string choices;
      for (std::size_t i = 0; i < param.choices.size(); ++i) {
        if (i > 0) choices += ", ";
        choices += param.choices[i];
      }
      throw UsageError("argument --" + param.name + ": invalid choice '" +
                       text + "' (choose from " + choices + ")");
    }
  }
  throw UsageError("argument --" + param.name + ": unsupported kind");
}

struct ParsedCommand {
  bool help = false;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  Vartype vartype = Vartype::SPIN;
  ArgValues solver_values;
};

ParsedCommand parse_subcommand(const CliSubcommand& sub,
                               const std::vector<std::string>& args,
                               std::size_t start) {
  ParsedCommand parsed;
  ArgValues framework_values;

  auto find_param = [&](const std::string& name) -> const CliParam* {
    for (const auto& param : sub.params) {
      if (!param.positional && param.name == name) return &param;
    }
    return nullptr;
  };

  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& token = args[i];
    if (token == "-h" || token == "--help") {
      parsed.help = true;
      return parsed;
    }
    if (token.rfind("--", 0) == 0) {
      std::string name = token.substr(2);
      std::string value;
      bool have_value = false;
      if (const auto eq = name.find('='); eq != std::string::npos) {
        value = name.substr(eq + 1);
        name = name.substr(0, eq);
        have_value = true;
      }
      const CliParam* param = find_param(name);
      if (param == nullptr) {
        throw UsageError("unrecognized argument: " + token);
      }
      if (!have_value) {
        if (i + 1 >= args.size()) {
          throw UsageError("argument --" + name + ": expected a value");
        }
        value = args[++i];
      }
      ArgValues& target =
          param->framework ? framework_values : parsed.solver_values;
      target[name] = parse_cli_value(*param, value);
    } else if (token.rfind('-', 0) == 0 && token.size() > 1) {
      throw UsageError("unrecognized argument: " + token);
    } else {
      if (parsed.input_path) {
        throw UsageError("unrecognized extra positional argument: " + token);
      }
      parsed.input_path = token;
    }
  }

  for (const auto& param : sub.params) {
    if (param.positional || !param.required) continue;
    const ArgValues& source =
        param.framework ? framework_values : parsed.solver_values;
    if (source.find(param.name) == source.end()) {
      throw UsageError("the following argument is required: --" + param.name);
    }
  }

  if (const auto it = framework_values.find("output");
      it != framework_values.end()) {
    parsed.output_path = std::get<std::string>(it->second);
  }
  parsed.vartype =
      parse_vartype(std::get<std::string>(framework_values.at("vartype")));
  return parsed;
}

}  // namespace

Registry default_registry() {
  Registry registry;
  registry.register_solver(pt_descriptor());
  registry.register_solver(random_descriptor());
  registry.register_solver(bruteforce_descriptor());
  return registry;
}

int run(const Registry& registry, const std::vector<std::string>& args,
        std::istream& in, std::ostream& out, std::ostream& err,
        const std::string& prog) {
  const CliSchema schema = build_cli(registry);
  const std::string main_usage = first_line(render_main_help(schema, prog));

  if (args.empty()) {
    err << main_usage << '\n'
        << prog << ": error: a solver subcommand is required\n";
    return 1;
  }
  if (args[0] == "-h" || args[0] == "--help") {
    out << render_main_help(schema, prog);
    return 0;
  }

  const CliSubcommand* sub = nullptr;
  for (const auto& candidate : schema.subcommands) {
    if (candidate.name == args[0]) {
      sub = &candidate;
      break;
    }
  }
  if (sub == nullptr) {
    std::string names;
    for (const auto& candidate : schema.subcommands) {
      if (!names.empty()) names += ", ";
      names += candidate.name;
    }
    err << main_usage << '\n'
        << prog << ": error: unknown solver '" << args[0]
        << "' (choose from " << names << ")\n";
    return 1;
  }

  ParsedCommand parsed;
  try {
    parsed = parse_subcommand(*sub, args, 1);
  } catch (const UsageError& e) {
    err << first_line(render_solver_help(*sub, prog)) << '\n'
        << prog << ": error: " << e.what() << '\n';
    return 1;
  }
  if (parsed.help) {
    out << render_solver_help(*sub, prog);
    return 0;
  }

  BinaryQuadraticModel bqm(parsed.vartype);
  try {
    if (parsed.input_path) {
      std::ifstream file(*parsed.input_path);
      if (!file) {
        err << prog << ": error: cannot open input file '"
            << *parsed.input_path << "'\n";
        return 2;
      }
      bqm = read_coo(file, parsed.vartype);
    } else {
      bqm = read_coo(in, parsed.vartype);
    }
  } catch (const ParseError& e) {
    err << prog << ": error: " << e.what() << '\n';
    return 2;
  }

  SampleSet result;
  try {
    result = dispatch(registry, sub->name, parsed.solver_values, bqm);
  } catch (const UsageError& e) {
    err << prog << ": error: " << e.what() << '\n';
    return 1;
  } catch (const SolverError& e) {
    err << prog << ": error: " << e.what() << '\n';
    return 3;
  }

  if (parsed.output_path) {
    std::ofstream file(*parsed.output_path);
    if (!file) {
      err << prog << ": error: cannot open output file '"
          << *parsed.output_path << "'\n";
      return 1;
    }
    write_csv(result, file);
  } else {
    write_csv(result, out);
  }
  return 0;
}

}  // namespace bqsolve
