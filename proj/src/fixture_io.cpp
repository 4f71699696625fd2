#include "rigiditylab/fixture_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rigiditylab {

namespace {

double parse_double_strict(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("complex: empty numeric part");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw std::invalid_argument("complex: cannot parse '" + s + "'");
    return v;
}

double parse_coefficient(std::string s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double_strict(s);
}

void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const char* what) {
    for (const char* k : required)
        if (!obj.contains(k))
            throw FixtureError(std::string(what) + ": missing key '" + k + "'");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : required) known = known || it.key() == k;
        for (const char* k : optional) known = known || it.key() == k;
        if (!known)
            throw FixtureError(std::string(what) + ": unknown key '" + it.key() + "'");
    }
}

long get_integer(const nlohmann::json& v, const char* what) {
    if (!v.is_number_integer())
        throw FixtureError(std::string(what) + ": expected an integer");
    return v.get<long>();
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("complex: empty string");

    bool has_i = s.back() == 'i' || s.back() == 'I';
    // Split before a sign that is not an exponent sign and not leading.
    size_t split = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
            split = k;  // keep the last one: "1e+2-3i" splits at '-'
    }

    if (!has_i) {
        if (split != std::string::npos)
            throw std::invalid_argument("complex: trailing part lacks 'i' in '" + text + "'");
        return {parse_double_strict(s), 0.0};
    }

    std::string imag_part = s.substr(0, s.size() - 1);
    if (split == std::string::npos) return {0.0, parse_coefficient(imag_part)};

    std::string real_part = s.substr(0, split);
    imag_part = s.substr(split, s.size() - 1 - split);
    return {parse_double_strict(real_part), parse_coefficient(imag_part)};
}

std::string format_complex(std::complex<double> z, int digits) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, z.real(), digits, z.imag());
    return buf;
}

ManifoldFixture parse_fixture_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError(std::string("fixture: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FixtureError("fixture: top level must be an object");
    require_keys(doc, {"name", "d", "l", "components"}, {"comment"}, "fixture");

    ManifoldFixture f;
    if (!doc["name"].is_string()) throw FixtureError("fixture: 'name' must be a string");
    f.name = doc["name"].get<std::string>();
    f.d = static_cast<int>(get_integer(doc["d"], "fixture 'd'"));
    f.l = static_cast<int>(get_integer(doc["l"], "fixture 'l'"));

    if (!doc["components"].is_array())
        throw FixtureError("fixture: 'components' must be an array");
    for (const auto& item : doc["components"]) {
        if (!item.is_object()) throw FixtureError("fixture: component must be an object");
        require_keys(item, {"sign", "tangent_weights", "bundle_weights"}, {}, "component");
        FixedPointComponent comp;
        comp.sign = static_cast<int>(get_integer(item["sign"], "component 'sign'"));
        for (const char* key : {"tangent_weights", "bundle_weights"}) {
            if (!item[key].is_array())
                throw FixtureError(std::string("component: '") + key + "' must be an array");
            auto& dst = std::string(key) == "tangent_weights" ? comp.tangent_weights
                                                              : comp.bundle_weights;
            for (const auto& w : item[key]) dst.push_back(get_integer(w, key));
        }
        f.components.push_back(std::move(comp));
    }
    return validate_fixture(f);
}

ManifoldFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("fixture: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture_json(buf.str());
}

nlohmann::ordered_json fixture_to_json(const ManifoldFixture& f) {
    nlohmann::ordered_json doc;
    doc["name"] = f.name;
    doc["d"] = f.d;
    doc["l"] = f.l;
    doc["components"] = nlohmann::ordered_json::array();
    for (const auto& comp : f.components) {
        nlohmann::ordered_json c;
        c["sign"] = comp.sign;
        c["tangent_weights"] = comp.tangent_weights;
        c["bundle_weights"] = comp.bundle_weights;
        doc["components"].push_back(std::move(c));
    }
    return doc;
}

nlohmann::ordered_json rigidity_report_json(const ManifoldFixture& f, int lambda,
                                            int order, const RigidityReport& report,
                                            const AnomalyReport& anomaly) {
    nlohmann::ordered_json doc;
    doc["fixture"] = f.name;
    doc["lambda"] = lambda;
    doc["K"] = order;  // coefficients are indexed by half-orders: q^{k/2}, k = 0..K
    doc["orders"] = nlohmann::ordered_json::array();
    for (const auto& v : report.orders) {
        nlohmann::ordered_json o;
        o["k"] = v.k;
        o["is_laurent"] = v.is_laurent;
        o["is_constant"] = v.is_constant;
        if (v.is_constant) {
            o["constant"] = v.constant_value.str();
            o["constant_is_integer"] = v.constant_is_integer;
        }
        o["coefficient"] = v.coefficient.str();
        doc["orders"].push_back(std::move(o));
    }
    nlohmann::ordered_json an;
    an["components"] = nlohmann::ordered_json::array();
    for (const auto& c : anomaly.components)
        an["components"].push_back({{"sum_m2", c.sum_m2}, {"sum_mb", c.sum_mb}});
    an["rigid_condition_met"] = anomaly.rigid_condition_met;
    an["uniform_anomaly"] = anomaly.uniform_anomaly;
    doc["anomaly"] = std::move(an);
    nlohmann::ordered_json verdict;
    verdict["all_laurent"] = report.all_laurent;
    verdict["all_constant"] = report.all_constant;
    verdict["all_zero"] = report.all_zero;
    doc["verdict"] = std::move(verdict);
    return doc;
}

std::string rigidity_report_csv(const RigidityReport& report) {
    std::string out = "k,verdict,constant\n";
    for (const auto& v : report.orders) {
        out += std::to_string(v.k);
        out += v.is_constant ? ",constant," + v.constant_value.str()
               : v.is_laurent ? ",laurent,"
                              : ",non-laurent,";
        out += '\n';
    }
    return out;
}

}  // namespace rigiditylab
