#include "rigiditylab/laurent.hpp"

namespace rigiditylab {

std::complex<double> LaurentPoly::eval(std::complex<double> z) const {
    // Horner over the exponent range, so only one inversion is needed for
    // the negative part.
    if (c_.empty()) return {0.0, 0.0};
    std::complex<double> acc{0.0, 0.0};
    int prev = max_degree();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        for (int k = prev; k > it->first; --k) acc *= z;
        acc += it->second.to_complex();
        prev = it->first;
    }
    int low = min_degree();
    if (low > 0) {
        for (int k = 0; k < low; ++k) acc *= z;
    } else if (low < 0) {
        std::complex<double> zi = 1.0 / z;
        for (int k = 0; k < -low; ++k) acc *= zi;
    }
    return acc;
}

namespace {

std::string term_str(const GaussRat& v, int e) {
    std::string cs = v.str();
    bool needs_paren = cs.find('+', 1) != std::string::npos ||
                       cs.find('-', 1) != std::string::npos;
    if (needs_paren) cs = "(" + cs + ")";
    if (e == 0) return cs;
    std::string zs = e == 1 ? "z" : "z^" + std::to_string(e);
    if (cs == "1") return zs;
    if (cs == "-1") return "-" + zs;
    return cs + "*" + zs;
}

}  // namespace

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        std::string t = term_str(it->second, it->first);
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace rigiditylab
