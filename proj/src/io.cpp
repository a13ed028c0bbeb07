#include "loopmod/io.hpp"

#include <cctype>
#include <sstream>

namespace loopmod {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "dot") return Format::Dot;
    throw Error(errc::config_error, "unknown format: " + name);
}

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, unsigned zeta_order)
        : text_(text), zeta_order_(zeta_order) {}

    FieldElem parse() {
        FieldElem value = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw Error(errc::config_error, "trailing characters in expression: " + text_);
        return value;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    FieldElem expr() {
        FieldElem value = term();
        for (;;) {
            if (eat('+'))
                value += term();
            else if (eat('-'))
                value -= term();
            else
                return value;
        }
    }

    FieldElem term() {
        FieldElem value = unary();
        for (;;) {
            if (eat('*')) {
                value *= unary();
            } else if (eat('/')) {
                FieldElem divisor = unary();
                if (divisor.is_zero())
                    throw Error(errc::division_by_zero, "division by zero in expression");
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    FieldElem unary() {
        if (eat('-')) return -unary();
        return primary();
    }

    FieldElem primary() {
        FieldElem base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_)
            throw Error(errc::config_error, "expected an integer in expression: " + text_);
        return std::stol(text_.substr(start, pos_ - start));
    }

    FieldElem atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            FieldElem value = expr();
            if (!eat(')')) throw Error(errc::config_error, "missing ')' in expression: " + text_);
            return value;
        }
        if (c == 'q') {
            ++pos_;
            return FieldElem::q(1);
        }
        if (c == 'z') {
            ++pos_;
            return FieldElem::zeta(zeta_order_, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FieldElem(Rat(integer()));
        throw Error(errc::config_error, "unexpected character '" + std::string(1, c) +
                                            "' in expression: " + text_);
    }

    const std::string& text_;
    unsigned zeta_order_;
    size_t pos_ = 0;
};

std::string strip_comments(const std::string& text) {
    std::string out;
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        if (!in_comment) out.push_back(c);
    }
    return out;
}

// Parse "[[e, e], [e], ...]" into raw expression strings.
std::vector<std::vector<std::string>> parse_nested_list(const std::string& text, size_t& pos) {
    auto skip = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw Error(errc::config_error,
                        std::string("expected '") + c + "' in tuple literal");
        ++pos;
    };
    std::vector<std::vector<std::string>> out;
    expect('[');
    skip();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
        return out;
    }
    for (;;) {
        expect('[');
        std::vector<std::string> entries;
        std::string current;
        int depth = 0;
        for (;;) {
            if (pos >= text.size())
                throw Error(errc::config_error, "unterminated tuple literal");
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == ',' || c == ']')) {
                std::string trimmed = current;
                size_t a = trimmed.find_first_not_of(" \t\r\n");
                size_t b = trimmed.find_last_not_of(" \t\r\n");
                if (a != std::string::npos) entries.push_back(trimmed.substr(a, b - a + 1));
                current.clear();
                ++pos;
                if (c == ']') break;
            } else {
                current.push_back(c);
                ++pos;
            }
        }
        out.push_back(std::move(entries));
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        expect(']');
        return out;
    }
}

}  // namespace

FieldElem parse_field_elem(const std::string& text, unsigned zeta_order) {
    return ExprParser(text, zeta_order).parse();
}

DrinfeldTuple parse_tuple(const std::string& text, unsigned zeta_order) {
    std::string clean = strip_comments(text);
    size_t colon = clean.find(':');
    if (colon == std::string::npos)
        throw Error(errc::config_error, "tuple text must start with 'roots:' or 'coeffs:'");
    std::string key = clean.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t\r\n"));
    key.erase(key.find_last_not_of(" \t\r\n") + 1);
    size_t pos = colon + 1;
    auto lists = parse_nested_list(clean, pos);
    if (lists.empty()) throw Error(errc::config_error, "tuple needs at least one component");
    unsigned n = static_cast<unsigned>(lists.size());

    if (key == "roots") {
        std::vector<std::vector<FieldElem>> roots(n);
        for (unsigned i = 0; i < n; ++i)
            for (const std::string& e : lists[i])
                roots[i].push_back(parse_field_elem(e, zeta_order));
        return DrinfeldTuple::from_roots(n, std::move(roots));
    }
    if (key == "coeffs") {
        std::vector<UPoly> polys(n);
        for (unsigned i = 0; i < n; ++i) {
            if (lists[i].empty())
                throw Error(errc::config_error, "coefficient list may not be empty");
            for (const std::string& e : lists[i])
                polys[i].push_back(parse_field_elem(e, zeta_order));
        }
        return DrinfeldTuple::from_coeffs(n, std::move(polys));
    }
    throw Error(errc::config_error, "unknown tuple form '" + key + "' (want roots or coeffs)");
}

Json decomposition_to_json(const DecompositionReport& report) {
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["d"] = report.d;
    j["pi0_roots"] = report.pi0_roots;
    Json components = Json::array();
    for (const auto& component : report.components) {
        Json jc;
        jc["s"] = component.s;
        Json dims = Json::array();
        for (const auto& entry : component.dims) {
            Json je;
            je["composition"] = entry.composition.parts;
            je["r"] = entry.r;
            je["dim"] = entry.dim;
            dims.push_back(std::move(je));
        }
        jc["dims"] = std::move(dims);
        components.push_back(std::move(jc));
    }
    j["components"] = std::move(components);
    return j;
}

Json comparison_to_json(const ComparisonReport& report) {
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json jr;
        jr["composition"] = row.composition.parts;
        jr["nu"] = row.varpi;
        jr["k"] = row.k;
        jr["closed"] = static_cast<long>(row.closed.get_si());
        jr["brute"] = static_cast<long>(row.brute.get_si());
        jr["maj"] = static_cast<long>(row.maj_census.get_si());
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["discrepancies"] = report.discrepancies;
    return j;
}

std::string comparison_to_csv(const ComparisonReport& report) {
    std::ostringstream os;
    os << "composition,nu,k,closed,brute,maj\n";
    for (const auto& row : report.rows) {
        std::ostringstream nu;
        for (size_t i = 0; i < row.varpi.size(); ++i) {
            if (i) nu << ",";
            nu << row.varpi[i];
        }
        os << '"' << row.composition.str() << '"' << ",\"" << nu.str() << "\"," << row.k << ","
           << row.closed << "," << row.brute << "," << row.maj_census << "\n";
    }
    return os.str();
}

Json crystal_to_json(const CrystalGraph& graph) {
    Json j;
    Json nodes = Json::array();
    for (const auto& node : graph.nodes) {
        Json jn;
        jn["word"] = node.word;
        jn["r"] = node.r;
        jn["boundary"] = node.boundary;
        nodes.push_back(std::move(jn));
    }
    Json edges = Json::array();
    for (const auto& edge : graph.edges) {
        Json je;
        je["from"] = edge.from;
        je["to"] = edge.to;
        je["i"] = edge.i;
        je["zeta_exp"] = edge.zeta_exp;
        edges.push_back(std::move(je));
    }
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(edges);
    return j;
}

std::string crystal_to_dot(const CrystalGraph& graph) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    for (size_t k = 0; k < graph.nodes.size(); ++k) {
        const auto& node = graph.nodes[k];
        os << "  n" << k << " [label=\"";
        for (size_t r = 0; r < node.word.size(); ++r) {
            if (r) os << ",";
            os << node.word[r];
        }
        os << " | r=" << node.r << "\"";
        if (node.boundary) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& edge : graph.edges) {
        os << "  n" << edge.from << " -> n" << edge.to << " [label=\"" << edge.i;
        if (edge.zeta_exp != 0) os << "/z^" << edge.zeta_exp;
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

Json axioms_to_json(const AxiomReport& report) {
    Json j;
    j["n"] = report.n;
    j["N"] = report.N;
    j["zeta_order"] = report.zeta_order;
    j["passed"] = report.passed();
    j["violations"] = report.violations;
    return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace loopmod
