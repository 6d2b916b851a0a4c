/**
 * @file builtins.hpp
 * @brief Registry of exact root-datum presentations.
 *
 * SL2, PGL2, GL2, GL3, SL3, PGL3, Sp4 and SO5. SL3 uses the weight lattice
 * with fundamental-weight coordinates, PGL3 the root lattice; SO5 is the dual
 * of Sp4.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "langdual/rootdatum.hpp"

namespace langdual {

const std::vector<std::string>& builtin_names();

/// Case-sensitive lookup; absent for unknown names.
std::optional<RootDatum> find_builtin(const std::string& name);

/// Throws std::invalid_argument for unknown names.
RootDatum builtin_datum(const std::string& name);

/// Rank-0 datum with no roots; its extension is the multiplicative group alone.
RootDatum trivial_datum();

}  // namespace langdual
