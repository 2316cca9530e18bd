#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "liptree/expr.hpp"
#include "liptree/spaces.hpp"
#include "liptree/tree.hpp"

namespace liptree {

/// The multiplier symbol: a radial expression in x = |v|, a per-depth table,
/// or an explicit vertex map in BFS order.  Radial and tabulated symbols are
/// constant on spheres.
class Symbol {
public:
    enum class Kind { Radial, Tabulated, Explicit };

    static Symbol radial(ExprPtr expr, std::optional<Complex> root_value = std::nullopt) {
        Symbol s;
        s.kind_ = Kind::Radial;
        s.expr_ = std::move(expr);
        s.root_value_ = root_value;
        return s;
    }

    static Symbol radial(const std::string& text,
                         std::optional<Complex> root_value = std::nullopt) {
        return radial(parse_expr(text), root_value);
    }

    static Symbol constant(Complex c) {
        return tabulated_constant(c);
    }

    /// Per-depth complex values; entry j is the value on the sphere |v| = j.
    static Symbol tabulated(std::vector<Complex> values) {
        if (values.empty()) throw std::invalid_argument("Symbol: tabulated values empty");
        Symbol s;
        s.kind_ = Kind::Tabulated;
        s.table_ = std::move(values);
        return s;
    }

    static Symbol explicit_map(std::vector<Complex> values) {
        if (values.empty()) throw std::invalid_argument("Symbol: explicit values empty");
        Symbol s;
        s.kind_ = Kind::Explicit;
        s.table_ = std::move(values);
        return s;
    }

    static Symbol explicit_map(const TreeFunction& f) { return explicit_map(f.values()); }

    Kind kind() const { return kind_; }
    bool is_radial() const { return kind_ != Kind::Explicit; }

    /// Value on the sphere |v| = depth; radial/tabulated kinds only.
    Complex value_at_depth(int depth) const {
        switch (kind_) {
            case Kind::Radial: {
                if (depth == 0) {
                    if (root_value_) return *root_value_;
                    return eval_at(1.0, 0);
                }
                return eval_at(static_cast<double>(depth), depth);
            }
            case Kind::Tabulated: {
                if (constant_) return table_[0];
                if (depth < 0 || static_cast<std::size_t>(depth) >= table_.size())
                    throw EvalError("tabulated symbol has no value at depth " +
                                    std::to_string(depth));
                return table_[static_cast<std::size_t>(depth)];
            }
            case Kind::Explicit:
                throw std::logic_error("value_at_depth: explicit symbol is not radial");
        }
        throw std::logic_error("Symbol: bad kind");
    }

    Complex value_at(const TreeTruncation& t, std::size_t bfs_index) const {
        if (kind_ == Kind::Explicit) {
            if (table_.size() != t.vertex_count())
                throw std::invalid_argument(
                    "Symbol: explicit value count does not match truncation");
            return table_[bfs_index];
        }
        return value_at_depth(t.depth_of_index(bfs_index));
    }

    Complex value_at(const TreeTruncation& t, const VertexId& v) const {
        if (kind_ == Kind::Explicit) return value_at(t, t.index_of(v));
        return value_at_depth(v.depth());
    }

    TreeFunction materialize(const TreeTruncation& t) const {
        TreeFunction f{t};
        if (is_radial()) {
            for (int j = 0; j <= t.depth(); ++j) {
                Complex c = value_at_depth(j);
                std::size_t off = t.sphere_offset(j);
                for (std::size_t i = 0; i < t.sphere_size(j); ++i) f[off + i] = c;
            }
        } else {
            if (table_.size() != t.vertex_count())
                throw std::invalid_argument(
                    "Symbol: explicit value count does not match truncation");
            for (std::size_t i = 0; i < table_.size(); ++i) f[i] = table_[i];
        }
        return f;
    }

    static Symbol from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    Complex eval_at(double x, int depth) const {
        try {
            return Complex{eval_expr(expr_, x), 0.0};
        } catch (const EvalError& e) {
            throw EvalError(std::string(e.what()) + " (at vertex depth " +
                            std::to_string(depth) + ")");
        }
    }

    Kind kind_ = Kind::Tabulated;
    ExprPtr expr_;
    std::optional<Complex> root_value_;
    std::vector<Complex> table_;

    static Symbol tabulated_constant(Complex c) {
        Symbol s;
        s.kind_ = Kind::Tabulated;
        s.constant_ = true;
        s.table_ = {c};
        return s;
    }

    bool constant_ = false;

public:
    bool is_constant() const { return constant_; }
};

inline Complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return Complex{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return Complex{j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("expected number or [re, im] pair");
}

inline nlohmann::json complex_to_json(Complex c) {
    return nlohmann::json::array({c.real(), c.imag()});
}

inline Symbol Symbol::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("symbol JSON: object with \"kind\" required");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "radial") {
        std::optional<Complex> root;
        if (j.contains("root_value")) root = complex_from_json(j.at("root_value"));
        return radial(j.at("expr").get<std::string>(), root);
    }
    if (kind == "tabulated" || kind == "explicit") {
        std::vector<Complex> vals;
        for (const auto& e : j.at("values")) vals.push_back(complex_from_json(e));
        return kind == "tabulated" ? tabulated(std::move(vals)) : explicit_map(std::move(vals));
    }
    throw std::invalid_argument("symbol JSON: unknown kind \"" + kind + "\"");
}

inline nlohmann::json Symbol::to_json() const {
    nlohmann::json j;
    switch (kind_) {
        case Kind::Radial:
            j["kind"] = "radial";
            j["expr"] = print_expr(expr_);
            if (root_value_) j["root_value"] = complex_to_json(*root_value_);
            break;
        case Kind::Tabulated: {
            j["kind"] = "tabulated";
            auto arr = nlohmann::json::array();
            for (Complex c : table_) arr.push_back(complex_to_json(c));
            j["values"] = arr;
            break;
        }
        case Kind::Explicit: {
            j["kind"] = "explicit";
            auto arr = nlohmann::json::array();
            for (Complex c : table_) arr.push_back(complex_to_json(c));
            j["values"] = arr;
            break;
        }
    }
    return j;
}

}  // namespace liptree
