#include "langdual/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "langdual/builtins.hpp"
#include "langdual/datum_json.hpp"
#include "langdual/dualdata.hpp"
#include "langdual/errors.hpp"
#include "langdual/rfunc.hpp"
#include "langdual/satake.hpp"
#include "langdual/smith.hpp"

namespace langdual {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

RootDatum load_datum(const RunConfig& c)
{
    if (c.trivial || c.datum == "trivial") return trivial_datum();
    if (c.datum.empty()) throw UsageError("command '" + c.command + "' needs a datum (builtin name or JSON file)");
    if (auto b = find_builtin(c.datum)) return *b;
    std::ifstream in(c.datum);
    if (!in) throw UsageError("'" + c.datum + "' is neither a builtin datum nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_datum(buf.str());
}

std::shared_ptr<const LanglandsDualData> load_dual_data(const RunConfig& c)
{
    return std::make_shared<const LanglandsDualData>(langlands_dual_data(load_datum(c), c.caps.weyl_order));
}

json matrix_json(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

void require_height(const RunConfig& c, const IntVector& v)
{
    if (coweight_height(v) > c.caps.coweight_height) {
        throw ResourceCapError("coweight " + to_string(v) + " has height " + std::to_string(coweight_height(v)) +
                               " above the cap " + std::to_string(c.caps.coweight_height));
    }
}

json terms_json(const GroupAlgebraElement& f)
{
    json out = json::array();
    // Highest exponent first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        out.push_back({{"exponent", it->first}, {"coefficient", it->second.to_string()}});
    return out;
}

Rational parse_q(const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError("cannot parse q = '" + text + "'");
    }
}

std::vector<QuadNum> parse_values(const std::vector<std::string>& texts)
{
    std::vector<QuadNum> out;
    for (const auto& t : texts) {
        try {
            out.emplace_back(parse_rational(t));
        } catch (const std::exception&) {
            throw UsageError("cannot parse value '" + t + "'");
        }
    }
    return out;
}

std::vector<std::string> strings(const std::vector<QuadNum>& v)
{
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

UnramifiedParameter parameter_from(const RunConfig& c, std::shared_ptr<const LanglandsDualData> dd)
{
    std::vector<QuadNum> base = parse_values(c.values);
    if (c.values.empty()) base.assign(dd->base().rank, QuadNum(1));
    std::optional<QuadNum> delta;
    if (c.delta_value) delta = QuadNum(parse_q(*c.delta_value));
    return make_parameter(std::move(dd), parse_q(c.q), base, delta);
}

DualRepresentation representation_from(const RunConfig& c, const LanglandsDualData& dd)
{
    if (c.weights.empty()) return DualRepresentation({zero_vector(dd.ext_rank())});
    for (const auto& w : c.weights) {
        if (w.size() != dd.ext_rank()) {
            throw ValidationError("invalid representation", {"weight " + to_string(w) + " must have length " +
                                                                 std::to_string(dd.ext_rank()) + " (coordinates of Y~)"});
        }
    }
    return DualRepresentation(c.weights);
}

// ---- commands ---------------------------------------------------------------

json cmd_dual(const RunConfig& c)
{
    const RootDatum d = load_datum(c);
    return {{"datum", datum_to_json(d)}, {"dual", datum_to_json(dual_datum(d))}};
}

json cmd_roots(const RunConfig& c)
{
    const RootDatum d = load_datum(c);
    const RootSystem rs = generate_roots(d);
    return {{"cartan_matrix", matrix_json(d.cartan_matrix())},
            {"positive_roots", rs.positive_roots},
            {"positive_coroots", rs.positive_coroots},
            {"count", rs.positive_roots.size()},
            {"sum_of_positive_roots", rs.sum_of_positive_roots(d.rank)}};
}

json cmd_weyl(const RunConfig& c)
{
    const RootDatum d = load_datum(c);
    const auto w = enumerate_weyl(d, c.caps.weyl_order);
    const auto& w0 = longest_element(w);
    return {{"order", w.size()}, {"longest_length", w0.length()}, {"longest_word", w0.word},
            {"positive_roots", generate_roots(d).positive_roots.size()}};
}

json cmd_rho(const RunConfig& c)
{
    const auto sol = solve_rho_weights(load_datum(c));
    if (!sol) return {{"exists", false}};
    return {{"exists", true}, {"particular", sol->particular}, {"kernel", sol->kernel}};
}

// Generators of the cocharacters orthogonal to every root, when that lattice has rank 1.
std::vector<IntVector> central_cocharacters(const RootDatum& d)
{
    if (d.semisimple_rank() == 0) return {};
    const auto sol = solve_integer(IntMatrix::from_rows(d.simple_roots, d.rank), zero_vector(d.semisimple_rank()));
    if (!sol || sol->kernel.size() != 1) return {};
    return {sol->kernel[0], -sol->kernel[0]};
}

json cmd_extend(const RunConfig& c)
{
    const RootDatum d = load_datum(c);
    const auto dd = langlands_dual_data(d, c.caps.weyl_order);
    const auto& ext = dd.extended.ext;
    json hints = json::array();
    for (const auto& name : builtin_names()) {
        const RootDatum b = builtin_datum(name);
        if (b.rank != ext.rank) continue;
        std::optional<IntMatrix> m;
        // Prefer identifications that send delta to a central cocharacter of the target.
        for (const auto& z : central_cocharacters(b)) {
            m = datum_isomorphic(ext, b, {IsoAnchor{IsoAnchor::Side::coweight, dd.i, z}});
            if (m) break;
        }
        if (!m) m = datum_isomorphic(ext, b);
        if (!m) continue;
        const auto r_image = solve_integer(*m, dd.extended.r);
        const auto j_image = solve_integer(*m, dd.j);
        json h{{"name", name}, {"matrix", matrix_json(*m)}};
        if (r_image) h["r_maps_to"] = r_image->particular;
        if (j_image) h["j_maps_to"] = j_image->particular;
        hints.push_back(h);
    }
    return {{"extended", datum_to_json(ext)}, {"r", dd.extended.r}, {"delta_index", dd.delta_index()},
            {"isomorphic_builtins", hints}};
}

json cmd_epsilon(const RunConfig& c)
{
    const Epsilon e = epsilon_of(load_datum(c));
    return {{"order", e.order}, {"t", e.t}};
}

json cmd_dualdata(const RunConfig& c)
{
    const auto dd = langlands_dual_data(load_datum(c), c.caps.weyl_order);
    const auto q = decompose_quotient(dd);
    std::vector<std::string> preimage;
    for (const auto& u : q.preimage) preimage.push_back(to_string(u));
    return {{"extended", datum_to_json(dd.extended.ext)},
            {"r", dd.extended.r},
            {"t", dd.t_ext},
            {"j", dd.j},
            {"i", dd.i},
            {"p", dd.p},
            {"delta_index", dd.delta_index()},
            {"epsilon_order", dd.epsilon_order},
            {"pairings", {{"r_i", dot(dd.extended.r, dd.i)}, {"j_i", dot(dd.j, dd.i)}}},
            {"decomposition",
             {{"cokernel_invariants", q.cokernel_invariants},
              {"cokernel_generator", q.cokernel_generator},
              {"preimage_of_generator", preimage},
              {"kernel_element", {{"central", q.central_sign}, {"epsilon_t", q.epsilon_t}, {"epsilon_order", q.epsilon_order}}},
              {"description", q.describe()}}}};
}

json cmd_satake(const RunConfig& c)
{
    const auto dd = load_dual_data(c);
    require_height(c, c.coweight);
    SatakeTable table(*dd);
    const auto& f = table.image(c.coweight);
    return {{"coweight", c.coweight},
            {"terms", terms_json(f.poly)},
            {"extended_terms", terms_json(f.extended)},
            {"dot_invariant", is_dot_invariant(dd->base(), f.poly)}};
}

json cmd_mult(const RunConfig& c)
{
    const auto dd = load_dual_data(c);
    require_height(c, c.lhs);
    require_height(c, c.rhs);
    SatakeTable table(*dd);
    const auto ex = table.multiply(c.lhs, c.rhs);
    json rows = json::array();
    for (const auto& nu : dominant_below(dd->base(), c.lhs + c.rhs)) {
        const auto a = ex.coefficient(nu);
        if (a.is_zero()) continue;
        const Int k = dot(dd->t, c.lhs + c.rhs - nu);
        rows.push_back({{"nu", nu}, {"coefficient", a.to_string()}, {"rescaled", a.shifted(k).to_string()},
                        {"rescaling_exponent", k}});
    }
    return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"expansion", rows}};
}

json cmd_oracle(const RunConfig& c)
{
    if (c.max_height > c.caps.coweight_height) {
        throw ResourceCapError("max height " + std::to_string(c.max_height) + " above the cap " +
                               std::to_string(c.caps.coweight_height));
    }
    if (c.oracle_q < 2) throw ValidationError("invalid oracle request", {"q must be at least 2"});
    const auto report = compare_rank1_oracle(c.oracle_q, c.max_height, c.caps.tree_depth);
    json entries = json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"m", e.m}, {"n", e.n}, {"d", e.d}, {"polynomial", e.polynomial.to_string()},
                           {"exponent", e.exponent}, {"rescaled", to_string(e.rescaled)},
                           {"tree_count", e.tree_count}, {"ok", e.ok}});
    }
    return {{"q", report.q0}, {"max_height", report.max_height}, {"entries", entries},
            {"failures", report.failures}, {"rescaled_in_polynomial_ring", report.rescaled_in_polynomial_ring}};
}

json cmd_rfactor(const RunConfig& c)
{
    const auto dd = load_dual_data(c);
    const auto x = parameter_from(c, dd);
    const auto tau = representation_from(c, *dd);
    const RFactor r = local_rfactor(x, tau);
    json out{{"q", to_string(x.q)},
             {"values", strings(x.values)},
             {"canonical_values", strings(canonical_representative(*dd, x.values))},
             {"weights", tau.weights},
             {"inverse_roots", strings(r.inverse_roots)},
             {"denominator", strings(r.denominator())},
             {"factor", r.to_string()}};
    if (c.s) {
        out["s"] = static_cast<double>(*c.s);
        out["value"] = static_cast<double>(r.evaluate(*c.s));
    }
    return out;
}

json cmd_euler(const RunConfig& c)
{
    if (!c.s) throw UsageError("euler needs --s");
    const auto dd = load_dual_data(c);
    std::vector<Int> qs = c.places;
    if (c.primes_below) {
        const auto ps = primes_below(*c.primes_below);
        qs.insert(qs.end(), ps.begin(), ps.end());
    }
    const auto tau = representation_from(c, *dd);
    std::vector<Place> places;
    for (Int qv : qs) {
        RunConfig local = c;
        local.q = std::to_string(qv);
        places.push_back({Rational(qv), parameter_from(local, dd)});
    }
    const long double v = partial_rfunction(places, tau, *c.s);
    return {{"places", qs.size()}, {"s", static_cast<double>(*c.s)}, {"weights", tau.weights},
            {"value", static_cast<double>(v)}};
}

json cmd_split(const RunConfig& c)
{
    const auto dd = load_dual_data(c);
    const auto x = parameter_from(c, dd);
    Rational root;
    QuadNum sq;
    if (is_rational_square(x.q, &root)) {
        sq = QuadNum(root);
    } else {
        if (!is_integral(x.q)) throw ValidationError("unsupported q", {"non-square q must be an integer"});
        sq = QuadNum::sqrt_of(static_cast<Int>(boost::multiprecision::numerator(x.q)));
    }
    if (c.sqrt_sign < 0) sq = -sq;
    const Assignment split = split_by_sqrt(x, sq);
    const Assignment other = split_by_sqrt(x, -sq);
    return {{"q", to_string(x.q)},
            {"sqrt", sq.to_string()},
            {"values", strings(x.values)},
            {"split_values", strings(split)},
            {"split_delta_value", evaluate_assignment(split, dd->i).to_string()},
            {"other_sign_is_epsilon_twist", other == epsilon_twist(*dd, split)},
            {"epsilon_order", dd->epsilon_order}};
}

const std::map<std::string, std::function<json(const RunConfig&)>>& commands()
{
    static const std::map<std::string, std::function<json(const RunConfig&)>> table{
        {"dual", cmd_dual},       {"roots", cmd_roots},   {"weyl", cmd_weyl},     {"rho", cmd_rho},
        {"extend", cmd_extend},   {"epsilon", cmd_epsilon}, {"dualdata", cmd_dualdata}, {"satake", cmd_satake},
        {"mult", cmd_mult},       {"oracle", cmd_oracle}, {"rfactor", cmd_rfactor}, {"euler", cmd_euler},
        {"split", cmd_split},
    };
    return table;
}

// ---- text rendering ---------------------------------------------------------

void render_text(const json& j, const std::string& indent, std::ostream& os)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << indent << it.key() << ":";
        const json& v = it.value();
        if (v.is_object()) {
            os << "\n";
            render_text(v, indent + "  ", os);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << "\n";
            for (const auto& row : v) {
                os << indent << "  -";
                for (auto f = row.begin(); f != row.end(); ++f)
                    os << " " << f.key() << "=" << (f->is_string() ? f->get<std::string>() : f->dump());
                os << "\n";
            }
        } else {
            os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

std::string render(const json& body, const RunConfig& c)
{
    if (c.format == "json") return body.dump(2) + "\n";
    std::ostringstream os;
    render_text(body, "", os);
    return os.str();
}

}  // namespace

ResourceCaps caps_from_environment(ResourceCaps caps)
{
    if (const char* env = std::getenv("LANGDUAL_WEYL_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) caps.weyl_order = static_cast<std::size_t>(v);
    }
    return caps;
}

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, _] : commands()) n.push_back(k);
        return n;
    }();
    return names;
}

IntVector parse_int_vector(const std::string& text)
{
    std::string s = trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unbalanced brackets in '" + text + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    IntVector out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<IntVector> parse_vector_list(const std::string& text)
{
    std::vector<IntVector> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!trim(item).empty()) out.push_back(parse_int_vector(item));
    return out;
}

RunResult run(const RunConfig& config)
{
    RunResult res;
    const std::string ctx = config.command.empty() ? std::string("langdual") : config.command;
    try {
        if (config.format != "text" && config.format != "json") throw UsageError("format must be text or json");
        if (config.caps.weyl_order == 0 || config.caps.coweight_height <= 0 || config.caps.tree_depth <= 0)
            throw UsageError("resource caps must be positive");
        const auto it = commands().find(config.command);
        if (it == commands().end()) throw UsageError("unknown command '" + config.command + "'");
        res.out = render(it->second(config), config);
    } catch (const UsageError& e) {
        res.exit_code = kExitUsage;
        res.err = "error: " + ctx + ": " + e.what() + "\n";
    } catch (const ValidationError& e) {
        res.exit_code = kExitValidation;
        res.err = "error: " + ctx + ": " + e.what() + "\n";
        for (const auto& v : e.violations()) res.err += "  - " + v + "\n";
    } catch (const StructuralError& e) {
        res.exit_code = kExitValidation;
        res.err = "error: " + ctx + ": " + e.what() + "\n";
    } catch (const ResourceCapError& e) {
        res.exit_code = kExitResourceCap;
        res.err = "error: " + ctx + ": resource cap: " + e.what() + "\n";
    } catch (const PoleError& e) {
        res.exit_code = kExitPole;
        res.err = "error: " + ctx + ": " + e.what() + "\n";
    } catch (const NotDivisibleError& e) {
        res.exit_code = kExitInternal;
        res.err = "internal error: " + ctx + ": " + e.what() + "\n";
    } catch (const std::domain_error& e) {
        res.exit_code = kExitPole;
        res.err = "error: " + ctx + ": " + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        res.exit_code = kExitValidation;
        res.err = "error: " + ctx + ": " + e.what() + "\n";
    } catch (const std::overflow_error& e) {
        res.exit_code = kExitResourceCap;
        res.err = "error: " + ctx + ": " + e.what() + "\n";
    } catch (const std::exception& e) {
        res.exit_code = kExitInternal;
        res.err = "internal error: " + ctx + ": " + e.what() + "\n";
    }
    return res;
}

}  // namespace langdual
