#include "arithsite/eval.hpp"

#include <json.hpp>

#include "arithsite/grothendieck.hpp"
#include "arithsite/numeric.hpp"

namespace arithsite {

std::string sort_name(Sort s) {
    switch (s) {
        case Sort::Sieve: return "sieve";
        case Sort::Supernatural: return "supernatural";
        case Sort::Class: return "class";
        case Sort::Theta: return "theta";
        case Sort::Constructible: return "constructible";
        case Sort::PrimeSet: return "primeset";
        case Sort::Rational: return "rational";
        case Sort::Nat: return "nat";
        case Sort::Bool: return "bool";
        case Sort::Ring: return "ring";
        case Sort::SieveSet: return "sieveset";
        case Sort::Lattice: return "lattice";
    }
    return "?";
}

namespace {

std::string primes_str(const std::vector<std::uint64_t>& ps) {
    std::string out = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ps[i]);
    }
    return out + "}";
}

[[noreturn]] void bad_sorts(const std::string& what, const std::vector<Sort>& sorts,
                            std::size_t pos) {
    std::string msg = what + " is not defined for (";
    for (std::size_t i = 0; i < sorts.size(); ++i) {
        if (i) msg += ", ";
        msg += sort_name(sorts[i]);
    }
    msg += ")";
    throw SortError(msg, pos);
}

bool numeric_sort(Sort s) { return s == Sort::Nat || s == Sort::Rational; }

} // namespace

std::string Value::to_string() const {
    switch (sort()) {
        case Sort::Sieve: return std::get<Sieve>(data).to_string();
        case Sort::Supernatural: return std::get<Supernatural>(data).to_string();
        case Sort::Class: return std::get<SupernaturalClass>(data).to_string();
        case Sort::Theta: return std::get<Fluctuation>(data).to_string();
        case Sort::Constructible: return std::get<Constructible>(data).to_string();
        case Sort::PrimeSet: return primes_str(std::get<std::vector<std::uint64_t>>(data));
        case Sort::Rational: return std::get<Rational>(data).to_string();
        case Sort::Nat: return std::to_string(std::get<std::uint64_t>(data));
        case Sort::Bool: return std::get<bool>(data) ? "true" : "false";
        case Sort::Ring: return std::get<DenominatorSpec>(data).to_string();
        case Sort::SieveSet: {
            const auto& sieves = std::get<std::vector<Sieve>>(data);
            std::string out = "{";
            for (std::size_t i = 0; i < sieves.size(); ++i) {
                if (i) out += ", ";
                out += sieves[i].to_string();
            }
            return out + "}";
        }
        case Sort::Lattice: return std::get<ConwayLattice>(data).to_string();
    }
    return "?";
}

std::string Value::to_json_record() const {
    nlohmann::json value;
    switch (sort()) {
        case Sort::Sieve: value = std::get<Sieve>(data).generators(); break;
        case Sort::Supernatural: {
            const auto& s = std::get<Supernatural>(data);
            nlohmann::json exc = nlohmann::json::object();
            for (const auto& [p, e] : s.exceptions())
                exc[std::to_string(p)] = e.to_string();
            value = {{"default",
                      s.default_exponent() == Supernatural::Default::Zero ? "0" : "inf"},
                     {"exponents", exc}};
            break;
        }
        case Sort::Class: {
            const auto& c = std::get<SupernaturalClass>(data);
            value = {{"mode", c.inf_support.is_finite() ? "finite" : "cofinite"},
                     {"primes", c.inf_support.primes}};
            break;
        }
        case Sort::Theta: {
            const auto& t = std::get<Fluctuation>(data);
            value = {{"domain", t.domain.generators()},
                     {"support", t.support.to_string()}};
            break;
        }
        case Sort::Constructible: value = std::get<Constructible>(data).to_string(); break;
        case Sort::PrimeSet: value = std::get<std::vector<std::uint64_t>>(data); break;
        case Sort::Rational: {
            const auto& r = std::get<Rational>(data);
            value = {{"num", r.num()}, {"den", r.den()}};
            break;
        }
        case Sort::Nat: value = std::get<std::uint64_t>(data); break;
        case Sort::Bool: value = std::get<bool>(data); break;
        case Sort::Ring: {
            const auto& spec = std::get<DenominatorSpec>(data);
            value = {{"invertible_mode",
                      spec.invertible.is_finite() ? "finite" : "cofinite"},
                     {"primes", spec.invertible.primes}};
            break;
        }
        case Sort::SieveSet: {
            nlohmann::json arr = nlohmann::json::array();
            for (const Sieve& s : std::get<std::vector<Sieve>>(data))
                arr.push_back(s.generators());
            value = arr;
            break;
        }
        case Sort::Lattice: value = std::get<ConwayLattice>(data).to_string(); break;
    }
    nlohmann::json record = {
        {"sort", sort_name(sort())}, {"value", value}, {"canonical", to_string()}};
    return record.dump();
}

namespace {

Sort call_result_sort(const std::string& name, const std::vector<Sort>& args,
                      std::size_t pos) {
    auto is = [&](std::initializer_list<Sort> sig) {
        return args.size() == sig.size() && std::equal(args.begin(), args.end(), sig.begin());
    };
    if (name == "gcd" && is({Sort::Sieve})) return Sort::Nat;
    if (name == "orbit" && is({Sort::Sieve, Sort::Sieve})) return Sort::SieveSet;
    if (name == "shadow" && is({Sort::Theta})) return Sort::Sieve;
    if (name == "restrict" && is({Sort::Theta, Sort::Sieve})) return Sort::Theta;
    if (name == "act" && is({Sort::Sieve, Sort::Nat})) return Sort::Sieve;
    if ((name == "pi" || name == "class") && is({Sort::Supernatural})) return Sort::Class;
    if (name == "ddneg" && is({Sort::Sieve, Sort::Sieve})) return Sort::Sieve;
    if ((name == "stalk_i" || name == "stalk_j") &&
        (is({Sort::Supernatural}) || is({Sort::Class})))
        return Sort::Ring;
    if (name == "sections_i" && is({Sort::PrimeSet})) return Sort::Ring;
    if (name == "sections_j" && is({Sort::Sieve})) return Sort::Ring;
    if (name == "hyperdistance" && is({Sort::Lattice, Sort::Lattice})) return Sort::Nat;
    if (name == "leq?" && (is({Sort::Sieve, Sort::Sieve}) || is({Sort::Theta, Sort::Theta})))
        return Sort::Bool;
    if (name == "equiv?" && (is({Sort::Supernatural, Sort::Supernatural}) ||
                             is({Sort::Theta, Sort::Theta})))
        return Sort::Bool;
    if (name == "commutes?" && is({Sort::Theta, Sort::Theta})) return Sort::Bool;
    if (name == "empty?" && is({Sort::Constructible})) return Sort::Bool;
    if (name == "eq?" && args.size() == 2 && args[0] == args[1] &&
        args[0] != Sort::SieveSet && args[0] != Sort::Lattice)
        return Sort::Bool;
    if (name == "in-gp?" && is({Sort::Sieve, Sort::PrimeSet})) return Sort::Bool;
    bad_sorts("'" + name + "'", args, pos);
}

Sort in_result_sort(Sort lhs, Sort rhs, std::size_t pos) {
    if (lhs == Sort::Nat && rhs == Sort::Sieve) return Sort::Bool;
    if (lhs == Sort::Supernatural && rhs == Sort::Sieve) return Sort::Bool;
    if (lhs == Sort::Supernatural && rhs == Sort::Constructible) return Sort::Bool;
    if (lhs == Sort::Class && rhs == Sort::Constructible) return Sort::Bool;
    if (lhs == Sort::Class && rhs == Sort::Sieve) return Sort::Bool;
    if (lhs == Sort::Rational && rhs == Sort::Ring) return Sort::Bool;
    if (lhs == Sort::Nat && rhs == Sort::Ring) return Sort::Bool;
    bad_sorts("'in'", {lhs, rhs}, pos);
}

} // namespace

Sort sort_of(const Expr& e, const Environment& env) {
    switch (e.kind) {
        case Expr::Kind::SieveLit: return Sort::Sieve;
        case Expr::Kind::SupernaturalLit: return Sort::Supernatural;
        case Expr::Kind::PrimeSetLit: return Sort::PrimeSet;
        case Expr::Kind::NatLit: return Sort::Nat;
        case Expr::Kind::RatLit: return Sort::Rational;
        case Expr::Kind::BoolLit: return Sort::Bool;
        case Expr::Kind::RingLit: return Sort::Ring;
        case Expr::Kind::ConstructibleLit: return Sort::Constructible;
        case Expr::Kind::ThetaLit: {
            Sort dom = sort_of(e.args[0], env);
            Sort sup = sort_of(e.args[1], env);
            if (dom != Sort::Sieve || sup != Sort::Constructible)
                bad_sorts("'th'", {dom, sup}, e.pos);
            return Sort::Theta;
        }
        case Expr::Kind::LatticePair: {
            Sort a = sort_of(e.args[0], env);
            Sort b = sort_of(e.args[1], env);
            if (!numeric_sort(a) || !numeric_sort(b)) bad_sorts("lattice pair", {a, b}, e.pos);
            return Sort::Lattice;
        }
        case Expr::Kind::Ident: {
            auto it = env.find(e.name);
            if (it == env.end())
                throw SortError("unbound identifier '" + e.name + "'", e.pos);
            return it->second.sort();
        }
        case Expr::Kind::Neg: {
            Sort a = sort_of(e.args[0], env);
            if (a != Sort::Sieve) bad_sorts("'neg'", {a}, e.pos);
            return Sort::Sieve;
        }
        case Expr::Kind::Not: {
            Sort a = sort_of(e.args[0], env);
            if (a != Sort::Constructible) bad_sorts("'!'", {a}, e.pos);
            return Sort::Constructible;
        }
        case Expr::Kind::Meet:
        case Expr::Kind::Join: {
            Sort a = sort_of(e.args[0], env);
            Sort b = sort_of(e.args[1], env);
            bool formulas = a == b && a == Sort::Constructible;
            bool lattice = a == b && (a == Sort::Sieve || a == Sort::Theta);
            if (e.formula_op ? formulas : lattice) return a;
            bad_sorts(e.kind == Expr::Kind::Meet ? (e.formula_op ? "'&'" : "'/\\'")
                                                 : (e.formula_op ? "'|'" : "'\\/'"),
                      {a, b}, e.pos);
        }
        case Expr::Kind::Implies: {
            Sort a = sort_of(e.args[0], env);
            Sort b = sort_of(e.args[1], env);
            if (a == b && (a == Sort::Sieve || a == Sort::Theta)) return a;
            bad_sorts("'->'", {a, b}, e.pos);
        }
        case Expr::Kind::Act: {
            Sort a = sort_of(e.args[0], env);
            Sort b = sort_of(e.args[1], env);
            if (a == Sort::Sieve && b == Sort::Nat) return Sort::Sieve;
            bad_sorts("'(.)'", {a, b}, e.pos);
        }
        case Expr::Kind::In:
            return in_result_sort(sort_of(e.args[0], env), sort_of(e.args[1], env), e.pos);
        case Expr::Kind::Call: {
            if (e.name == "member?") {
                if (e.args.size() != 2)
                    throw SortError("'member?' takes two arguments", e.pos);
                return in_result_sort(sort_of(e.args[0], env), sort_of(e.args[1], env),
                                      e.pos);
            }
            std::vector<Sort> args;
            for (const Expr& a : e.args) args.push_back(sort_of(a, env));
            return call_result_sort(e.name, args, e.pos);
        }
    }
    throw SortError("unreachable expression kind", e.pos);
}

namespace {

Rational as_rational(const Value& v) {
    if (v.sort() == Sort::Rational) return std::get<Rational>(v.data);
    std::uint64_t n = std::get<std::uint64_t>(v.data);
    if (n > INT64_MAX) throw OverflowError("number too large for a rational");
    return Rational(static_cast<std::int64_t>(n), 1);
}

Value eval_in(const Value& lhs, const Value& rhs, std::size_t pos) {
    Sort a = lhs.sort(), b = rhs.sort();
    if (a == Sort::Nat && b == Sort::Sieve)
        return Value{std::get<Sieve>(rhs.data).contains(std::get<std::uint64_t>(lhs.data))};
    if (a == Sort::Supernatural && b == Sort::Sieve)
        return Value{in_Xl(std::get<Supernatural>(lhs.data), std::get<Sieve>(rhs.data))};
    if (a == Sort::Supernatural && b == Sort::Constructible)
        return Value{c_member(class_of(std::get<Supernatural>(lhs.data)),
                              std::get<Constructible>(rhs.data))};
    if (a == Sort::Class && b == Sort::Constructible)
        return Value{c_member(std::get<SupernaturalClass>(lhs.data),
                              std::get<Constructible>(rhs.data))};
    if (a == Sort::Class && b == Sort::Sieve)
        return Value{in_Xs(std::get<SupernaturalClass>(lhs.data), std::get<Sieve>(rhs.data))};
    if ((a == Sort::Rational || a == Sort::Nat) && b == Sort::Ring)
        return Value{std::get<DenominatorSpec>(rhs.data).contains(as_rational(lhs))};
    bad_sorts("'in'", {a, b}, pos);
}

Value eval_call(const std::string& name, std::vector<Value> args, std::size_t pos) {
    auto sieve = [&](std::size_t i) -> const Sieve& { return std::get<Sieve>(args[i].data); };
    auto theta = [&](std::size_t i) -> const Fluctuation& {
        return std::get<Fluctuation>(args[i].data);
    };

    if (name == "gcd") return Value{gcd_of(sieve(0))};
    if (name == "orbit") return Value{orbit(sieve(0), sieve(1))};
    if (name == "shadow") return Value{shadow(theta(0))};
    if (name == "restrict") return Value{restrict_to(theta(0), sieve(1))};
    if (name == "act") return Value{act(sieve(0), std::get<std::uint64_t>(args[1].data))};
    if (name == "pi" || name == "class")
        return Value{class_of(std::get<Supernatural>(args[0].data))};
    if (name == "ddneg") return Value{relative_double_neg(sieve(0), sieve(1))};
    if (name == "stalk_i" || name == "stalk_j") {
        SupernaturalClass c = args[0].sort() == Sort::Class
                                  ? std::get<SupernaturalClass>(args[0].data)
                                  : class_of(std::get<Supernatural>(args[0].data));
        return Value{name == "stalk_i" ? stalk_i(c) : stalk_j(c)};
    }
    if (name == "sections_i")
        return Value{sections_i(std::get<std::vector<std::uint64_t>>(args[0].data))};
    if (name == "sections_j") return Value{sections_j(sieve(0))};
    if (name == "hyperdistance")
        return Value{hyperdistance(std::get<ConwayLattice>(args[0].data),
                                   std::get<ConwayLattice>(args[1].data))};
    if (name == "leq?") {
        if (args[0].sort() == Sort::Sieve) return Value{leq(sieve(0), sieve(1))};
        return Value{leq(theta(0), theta(1))};
    }
    if (name == "equiv?") {
        if (args[0].sort() == Sort::Supernatural)
            return Value{equivalent(std::get<Supernatural>(args[0].data),
                                    std::get<Supernatural>(args[1].data))};
        return Value{equiv(theta(0), theta(1))};
    }
    if (name == "commutes?") return Value{commutes(theta(0), theta(1))};
    if (name == "empty?")
        return Value{c_is_empty(std::get<Constructible>(args[0].data))};
    if (name == "eq?") {
        switch (args[0].sort()) {
            case Sort::Constructible:
                return Value{c_equal(std::get<Constructible>(args[0].data),
                                     std::get<Constructible>(args[1].data))};
            case Sort::Theta: return Value{theta_equal(theta(0), theta(1))};
            case Sort::Sieve: return Value{sieve(0) == sieve(1)};
            case Sort::Supernatural:
                return Value{std::get<Supernatural>(args[0].data) ==
                             std::get<Supernatural>(args[1].data)};
            case Sort::Class:
                return Value{std::get<SupernaturalClass>(args[0].data) ==
                             std::get<SupernaturalClass>(args[1].data)};
            case Sort::PrimeSet:
                return Value{std::get<std::vector<std::uint64_t>>(args[0].data) ==
                             std::get<std::vector<std::uint64_t>>(args[1].data)};
            case Sort::Rational:
                return Value{std::get<Rational>(args[0].data) ==
                             std::get<Rational>(args[1].data)};
            case Sort::Nat:
                return Value{std::get<std::uint64_t>(args[0].data) ==
                             std::get<std::uint64_t>(args[1].data)};
            case Sort::Bool:
                return Value{std::get<bool>(args[0].data) == std::get<bool>(args[1].data)};
            case Sort::Ring:
                return Value{std::get<DenominatorSpec>(args[0].data) ==
                             std::get<DenominatorSpec>(args[1].data)};
            default: bad_sorts("'eq?'", {args[0].sort(), args[1].sort()}, pos);
        }
    }
    if (name == "in-gp?")
        return Value{in_GP(sieve(0), std::get<std::vector<std::uint64_t>>(args[1].data))};
    if (name == "member?") return eval_in(args[0], args[1], pos);
    throw SortError("unknown operation '" + name + "'", pos);
}

} // namespace

namespace {

// Tags a module error with the position of the node that raised it; errors
// already carrying a location pass through unchanged.
template <typename E>
[[noreturn]] void rethrow_located(const E& err, std::size_t pos) {
    std::string msg = err.what();
    if (msg.find("(at offset") != std::string::npos) throw err;
    throw E(msg + " (at offset " + std::to_string(pos) + ")");
}

Value eval_node(const Expr& e, const Environment& env);

} // namespace

Value eval(const Expr& e, const Environment& env) {
    sort_of(e, env); // sort errors first, with their own positions
    try {
        return eval_node(e, env);
    } catch (const ParseError&) {
        throw;
    } catch (const SortError&) {
        throw;
    } catch (const ResourceLimitError& err) {
        rethrow_located(err, e.pos);
    } catch (const OverflowError& err) {
        rethrow_located(err, e.pos);
    } catch (const EmptySieveError& err) {
        rethrow_located(err, e.pos);
    } catch (const FrameDomainError& err) {
        rethrow_located(err, e.pos);
    } catch (const InvalidInputError& err) {
        rethrow_located(err, e.pos);
    } catch (const Error& err) {
        rethrow_located(err, e.pos);
    }
}

namespace {

Value eval_node(const Expr& e, const Environment& env) {
    switch (e.kind) {
        case Expr::Kind::SieveLit: return Value{e.sieve};
        case Expr::Kind::SupernaturalLit: return Value{e.sn};
        case Expr::Kind::PrimeSetLit: return Value{e.primes};
        case Expr::Kind::NatLit: return Value{e.nat};
        case Expr::Kind::RatLit: return Value{e.rat};
        case Expr::Kind::BoolLit: return Value{e.boolean};
        case Expr::Kind::RingLit: return Value{e.ring};
        case Expr::Kind::ConstructibleLit: return Value{e.formula};
        case Expr::Kind::ThetaLit: {
            Value dom = eval(e.args[0], env);
            Value sup = eval(e.args[1], env);
            return Value{Fluctuation(std::get<Sieve>(dom.data),
                                     std::get<Constructible>(sup.data))};
        }
        case Expr::Kind::LatticePair: {
            Value a = eval(e.args[0], env);
            Value b = eval(e.args[1], env);
            return Value{ConwayLattice(as_rational(a), as_rational(b))};
        }
        case Expr::Kind::Ident: return env.at(e.name);
        case Expr::Kind::Neg: return Value{neg(std::get<Sieve>(eval(e.args[0], env).data))};
        case Expr::Kind::Not:
            return Value{Constructible::negation(
                std::get<Constructible>(eval(e.args[0], env).data))};
        case Expr::Kind::Meet: {
            Value a = eval(e.args[0], env);
            Value b = eval(e.args[1], env);
            if (a.sort() == Sort::Sieve)
                return Value{meet(std::get<Sieve>(a.data), std::get<Sieve>(b.data))};
            if (a.sort() == Sort::Theta)
                return Value{meet(std::get<Fluctuation>(a.data),
                                  std::get<Fluctuation>(b.data))};
            return Value{Constructible::conjunction(std::get<Constructible>(a.data),
                                                    std::get<Constructible>(b.data))};
        }
        case Expr::Kind::Join: {
            Value a = eval(e.args[0], env);
            Value b = eval(e.args[1], env);
            if (a.sort() == Sort::Sieve)
                return Value{join(std::get<Sieve>(a.data), std::get<Sieve>(b.data))};
            if (a.sort() == Sort::Theta)
                return Value{join(std::get<Fluctuation>(a.data),
                                  std::get<Fluctuation>(b.data))};
            return Value{Constructible::disjunction(std::get<Constructible>(a.data),
                                                    std::get<Constructible>(b.data))};
        }
        case Expr::Kind::Implies: {
            Value a = eval(e.args[0], env);
            Value b = eval(e.args[1], env);
            if (a.sort() == Sort::Sieve)
                return Value{implies(std::get<Sieve>(a.data), std::get<Sieve>(b.data))};
            return Value{implies(std::get<Fluctuation>(a.data),
                                 std::get<Fluctuation>(b.data))};
        }
        case Expr::Kind::Act: {
            Value a = eval(e.args[0], env);
            Value b = eval(e.args[1], env);
            return Value{act(std::get<Sieve>(a.data), std::get<std::uint64_t>(b.data))};
        }
        case Expr::Kind::In: {
            Value a = eval(e.args[0], env);
            Value b = eval(e.args[1], env);
            return eval_in(a, b, e.pos);
        }
        case Expr::Kind::Call: {
            std::vector<Value> args;
            for (const Expr& a : e.args) args.push_back(eval(a, env));
            return eval_call(e.name, std::move(args), e.pos);
        }
    }
    throw Error("unreachable expression kind");
}

} // namespace

} // namespace arithsite
