#pragma once

#include "report/envelope.hpp"
#include "superlie/algebra.hpp"

namespace twistlab::report {

/// Each command reads a JSON object of parameters; unknown keys or bad values
/// raise InvalidArgument. threads only affects speed.
Envelope cmd_algebra(const Json& args, unsigned threads);
Envelope cmd_classify(const Json& args, unsigned threads);
Envelope cmd_scan(const Json& args, unsigned threads);
Envelope cmd_cohomology(const Json& args, unsigned threads);
Envelope cmd_superspace(const Json& args, unsigned threads);
Envelope cmd_twistor(const Json& args, unsigned threads);
Envelope cmd_selftest(const Json& args, unsigned threads);

/// Parameters as for cmd_algebra.
superlie::SuperLieAlgebra algebra_from_params(const Json& params);

/// Dispatch by command name.
Envelope run_command(const std::string& command, const Json& args, unsigned threads);
std::vector<std::string> command_names();

}  // namespace twistlab::report
