#include "ncm/neutro.hpp"

#include <cstdio>

namespace ncm {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    std::string s(buf);
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        auto last = s.find_last_not_of('0');
        s.erase(last == dot ? dot : last + 1);
    }
    if (s == "-0") s = "0";
    return s;
}

std::string to_string(const NeutroValue& v) {
    if (v.ind == 0.0) return format_real(v.det);
    std::string i_part = (v.ind == 1.0) ? "I" : format_real(v.ind) + "*I";
    if (v.det == 0.0) return i_part;
    return format_real(v.det) + " + " + i_part;
}

std::string to_string(TriState s) {
    switch (s) {
        case TriState::On: return "1";
        case TriState::Indeterminate: return "I";
        case TriState::Off: break;
    }
    return "0";
}

}  // namespace ncm
