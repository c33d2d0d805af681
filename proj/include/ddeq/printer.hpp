#pragma once

#include <string>

#include "ddeq/parser.hpp"
#include "ddeq/solver.hpp"

namespace ddeq {

/// Canonical printers. Output always reparses (and re-lowers) to the same
/// canonical object; Euler's number prints as exp(1), never as a bare e.
std::string to_string(const Rat& r);
std::string to_string(const GaussRat& g);
std::string to_string(const MPoly& p, const ParamSet& params);
std::string to_string(const RatFunc& r, const ParamSet& params);
std::string to_string(const Scalar& s, const ParamSet& params);
std::string to_string(const ZPoly& p, const ParamSet& params);
std::string to_string(const ExpPoly& f, const ParamSet& params);
std::string to_string(const LinOp& op, const ParamSet& params);

/// Equation file body (params/n/L/q/p lines) that parse_equation_file
/// round-trips.
std::string equation_to_file(const Equation& eq, const ParamSet& params);

} // namespace ddeq
