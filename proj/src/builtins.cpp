#include "langdual/builtins.hpp"

#include <stdexcept>

namespace langdual {

namespace {

RootDatum make(std::string name, std::size_t rank, std::vector<IntVector> roots, std::vector<IntVector> coroots)
{
    return RootDatum{std::move(name), rank, std::move(roots), std::move(coroots)};
}

std::vector<RootDatum> registry()
{
    std::vector<RootDatum> r;
    r.push_back(make("SL2", 1, {{2}}, {{1}}));
    r.push_back(make("PGL2", 1, {{1}}, {{2}}));
    r.push_back(make("GL2", 2, {{1, -1}}, {{1, -1}}));
    r.push_back(make("GL3", 3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}}));
    r.push_back(make("SL3", 2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}));
    r.push_back(make("PGL3", 2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}}));
    r.push_back(make("Sp4", 2, {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}}));
    r.push_back(make("SO5", 2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}));
    return r;
}

}  // namespace

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& d : registry()) out.push_back(d.name);
        return out;
    }();
    return names;
}

std::optional<RootDatum> find_builtin(const std::string& name)
{
    for (auto& d : registry())
        if (d.name == name) return d;
    return std::nullopt;
}

RootDatum builtin_datum(const std::string& name)
{
    auto d = find_builtin(name);
    if (!d) throw std::invalid_argument("unknown builtin datum '" + name + "'");
    return *d;
}

RootDatum trivial_datum()
{
    return make("trivial", 0, {}, {});
}

}  // namespace langdual
