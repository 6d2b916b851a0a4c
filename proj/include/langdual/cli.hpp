/**
 * @file cli.hpp
 * @brief Command dispatch behind the `langdual` executable.
 *
 * run() never throws: every failure is turned into an exit code and a message.
 *   0 success, 1 usage, 2 validation, 3 resource cap, 4 pole or domain, 5 internal.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "langdual/rootdatum.hpp"
#include "langdual/tree_oracle.hpp"

namespace langdual {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitValidation = 2,
    kExitResourceCap = 3,
    kExitPole = 4,
    kExitInternal = 5,
};

struct ResourceCaps {
    std::size_t weyl_order = kDefaultWeylCap;
    Int coweight_height = 6;
    Int tree_depth = kDefaultTreeDepthCap;
};

/// Applies LANGDUAL_WEYL_CAP when set to a positive integer.
ResourceCaps caps_from_environment(ResourceCaps caps = {});

struct RunConfig {
    std::string command;
    std::string datum;  // builtin name, "trivial", or path to a JSON document
    std::string format = "text";

    IntVector coweight;
    IntVector lhs;
    IntVector rhs;

    Int oracle_q = 2;
    Int max_height = 4;

    std::string q = "2";                 // residue cardinality, a rational
    std::vector<IntVector> weights;      // on Y~; empty means the trivial representation
    std::vector<std::string> values;     // on the basis of Y, rationals
    std::optional<std::string> delta_value;
    std::optional<long double> s;

    std::vector<Int> places;
    std::optional<Int> primes_below;
    bool trivial = false;
    int sqrt_sign = 1;

    ResourceCaps caps;
};

struct RunResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

RunResult run(const RunConfig& config);

const std::vector<std::string>& command_names();

/// "1,0,-1" or "[1,0,-1]"; the empty string is the empty vector. Throws std::invalid_argument.
IntVector parse_int_vector(const std::string& text);

/// Vectors separated by ';', e.g. "1,1;-1,0".
std::vector<IntVector> parse_vector_list(const std::string& text);

}  // namespace langdual
