#include "langdual/errors.hpp"

namespace langdual {

namespace {

std::string join_violations(const std::vector<std::string>& v)
{
    std::string out;
    for (const auto& s : v) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error("validation failed: " + join_violations(violations)),
      violations_(std::move(violations))
{
}

ValidationError::ValidationError(const std::string& what, std::vector<std::string> violations)
    : std::runtime_error(what), violations_(std::move(violations))
{
}

}  // namespace langdual
