#include "lisinv/gf_catalog.hpp"

#include "lisinv_catalog_data.inc"

#include <nlohmann/json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace lisinv {

namespace {

using nlohmann::json;

Permutation rotated_identity(int k) {
    // k 1 2 ... (k-1)
    std::vector<Permutation::value_type> e{static_cast<Permutation::value_type>(k)};
    for (int i = 1; i < k; ++i) e.push_back(static_cast<Permutation::value_type>(i));
    return Permutation(std::move(e));
}

GfSpec family_spec(Construction c, int k) {
    GfSpec s;
    s.construction = c;
    s.k = k;
    Permutation pattern;
    switch (c) {
        case Construction::FkRecurrence:
            s.name = "F_k(" + std::to_string(k) + ")";
            pattern = Permutation::identity(static_cast<std::size_t>(k));
            break;
        case Construction::FkNarayana:
            s.name = "F_k_narayana(" + std::to_string(k) + ")";
            pattern = Permutation::identity(static_cast<std::size_t>(k));
            break;
        case Construction::Gk:
            s.name = "G_k(" + std::to_string(k) + ")";
            pattern = rotated_identity(k);
            break;
        case Construction::DecRecurrence:
            s.name = "Dec_k(" + std::to_string(k) + ")";
            pattern = Permutation::decreasing(static_cast<std::size_t>(k));
            break;
        case Construction::DecChebyshev:
            s.name = "Dec_k_chebyshev(" + std::to_string(k) + ")";
            pattern = Permutation::decreasing(static_cast<std::size_t>(k));
            break;
        default:
            throw std::logic_error("not a family construction");
    }
    s.classes.push_back(PatternSet::with_3412({pattern}));
    return s;
}

std::optional<AsymptoticTarget> read_target(const json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    const auto& t = j.at(key);
    return AsymptoticTarget{t.at("constant").get<std::string>(), parse_growth(t.at("growth").get<std::string>())};
}

}  // namespace

Catalog Catalog::from_json(const std::string& text) {
    const json doc = json::parse(text);
    Catalog c;
    for (const auto& [key, poly] : doc.at("roots").items()) c.roots_.emplace_back(key, poly.get<std::string>());
    for (const auto& jc : doc.at("constants")) {
        ConstantEntry e;
        e.name = jc.at("name").get<std::string>();
        e.expr_text = jc.at("expr").get<std::string>();
        e.expr = parse_expr(e.expr_text);
        e.root = jc.value("root", std::string{});
        c.constants_.push_back(std::move(e));
    }
    for (const auto& jg : doc.at("closed_forms")) {
        GfSpec s;
        s.name = jg.at("name").get<std::string>();
        s.construction = Construction::ClosedForm;
        s.expr_text = jg.at("expr").get<std::string>();
        s.expr = parse_expr(s.expr_text);
        for (const auto& p : jg.at("patterns")) s.classes.push_back(PatternSet::with_3412({Permutation::parse(p.get<std::string>())}));
        s.mean = read_target(jg, "mean");
        s.variance = read_target(jg, "variance");
        s.note = jg.value("note", std::string{});
        c.specs_.push_back(std::move(s));
    }
    for (const auto& jt : doc.at("theorem_targets")) {
        c.theorems_.push_back({jt.at("name").get<std::string>(), jt.at("gf").get<std::string>(),
                               {jt.at("constant").get<std::string>(), parse_growth(jt.at("growth").get<std::string>())}});
    }

    GfSpec h;
    h.name = "H_3412";
    h.construction = Construction::H3412;
    h.classes.push_back(PatternSet::with_3412());
    c.specs_.push_back(std::move(h));
    for (int k = 1; k <= 6; ++k) c.specs_.push_back(family_spec(Construction::FkRecurrence, k));
    for (int k = 3; k <= 5; ++k) c.specs_.push_back(family_spec(Construction::Gk, k));
    for (int k = 1; k <= 6; ++k) c.specs_.push_back(family_spec(Construction::DecRecurrence, k));
    return c;
}

Catalog Catalog::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

const Catalog& Catalog::builtin() {
    static const Catalog c = from_json(kBuiltinCatalogJson);
    return c;
}

GfSpec Catalog::find(const std::string& name) const {
    for (const auto& s : specs_)
        if (s.name == name) return s;
    static const std::regex family(R"((F_k|F_k_narayana|G_k|Dec_k|Dec_k_chebyshev)\((\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, family)) {
        const std::string kind = m[1];
        const int k = std::stoi(m[2]);
        if (kind == "F_k" && k >= 1) return family_spec(Construction::FkRecurrence, k);
        if (kind == "F_k_narayana" && k >= 1) return family_spec(Construction::FkNarayana, k);
        if (kind == "G_k" && k >= 3) return family_spec(Construction::Gk, k);
        if (kind == "Dec_k" && k >= 1) return family_spec(Construction::DecRecurrence, k);
        if (kind == "Dec_k_chebyshev" && k >= 3) return family_spec(Construction::DecChebyshev, k);
    }
    throw UnknownName("unknown generating function '" + name + "'");
}

std::vector<const GfSpec*> Catalog::table1_rows() const {
    std::vector<const GfSpec*> rows;
    for (const auto& s : specs_)
        if (s.name.starts_with("Table1_")) rows.push_back(&s);
    return rows;
}

const std::string& Catalog::root_polynomial(const std::string& key) const {
    for (const auto& [k, poly] : roots_)
        if (k == key) return poly;
    throw UnknownName("unknown root '" + key + "'");
}

AlgebraicRoot Catalog::root(const std::string& key) const {
    return smallest_root(polynomial_in_alpha(*parse_expr(root_polynomial(key))));
}

mpf_class Catalog::constant(const std::string& name) const {
    for (const auto& c : constants_) {
        if (c.name != name) continue;
        const mpf_class alpha = c.root.empty() ? mpf_class(0, 256) : root(c.root).value;
        return eval_real(*c.expr, alpha);
    }
    throw UnknownName("unknown constant '" + name + "'");
}

template <SeriesCoefficient C>
Series<C> Catalog::evaluate(const GfSpec& spec, int order) const {
    switch (spec.construction) {
        case Construction::ClosedForm:
            return eval_series<C>(*spec.expr, order);
        case Construction::H3412:
            return h_3412<C>(order);
        case Construction::FkRecurrence:
            return f_k_recurrence<C>(spec.k, order);
        case Construction::FkNarayana:
            return f_k_narayana<C>(spec.k, order);
        case Construction::Gk:
            return g_k<C>(spec.k, order);
        case Construction::DecRecurrence:
            return dec_k<C>(spec.k, order);
        case Construction::DecChebyshev:
            return dec_k_chebyshev<C>(spec.k, order);
    }
    throw std::logic_error("unreachable");
}

template Series<QPoly> Catalog::evaluate<QPoly>(const GfSpec&, int) const;
template Series<QJet> Catalog::evaluate<QJet>(const GfSpec&, int) const;

std::string constant_decimal(const Catalog& catalog, const std::string& name) {
    return to_decimal(catalog.constant(name), 12);
}

}  // namespace lisinv
