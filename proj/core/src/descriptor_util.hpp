#ifndef DEGREELAB_DESCRIPTOR_UTIL_HPP
#define DEGREELAB_DESCRIPTOR_UTIL_HPP

#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "degreelab/errors.hpp"

namespace degreelab::detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

inline double to_double(std::string_view s, std::string_view context) {
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty())
        throw config_error("bad numeric value '" + buf + "' in " + std::string(context));
    return v;
}

// Parses "k1=v1,k2=v2" into an ordered map of doubles.
inline std::map<std::string, double> parse_kv(std::string_view body,
                                              std::string_view context) {
    std::map<std::string, double> out;
    if (body.empty()) return out;
    for (auto item : split(body, ',')) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw config_error("expected key=value in '" + std::string(item) +
                               "' (" + std::string(context) + ")");
        out[std::string(item.substr(0, eq))] =
            to_double(item.substr(eq + 1), context);
    }
    return out;
}

inline double require(const std::map<std::string, double>& kv,
                      const std::string& key, std::string_view context) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw config_error("missing '" + key + "' in " + std::string(context));
    return it->second;
}

} // namespace degreelab::detail

#endif
