#include "hyproj/app.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace hyproj::app {

using json = Json;

namespace {

void write(const json& j, std::string& out)
{
    switch (j.type()) {
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            out += json(key).dump();
            out += ':';
            write(value, out);
        }
        out += '}';
        break;
    }
    case json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            if (!first) {
                out += ',';
            }
            first = false;
            write(value, out);
        }
        out += ']';
        break;
    }
    case json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            out += "null";
            break;
        }
        std::array<char, 32> buf{};
        std::snprintf(buf.data(), buf.size(), "%.17g", v);
        out += buf.data();
        break;
    }
    default:
        out += j.dump();
    }
}

}  // namespace

std::string dump_json(const json& j)
{
    std::string out;
    write(j, out);
    return out;
}

json pair_to_json(const PairPoint& z)
{
    return {{"x", z.first().to_vector()}, {"y", z.second().to_vector()}};
}

PairPoint pair_from_json(const json& j)
{
    try {
        if (j.is_object()) {
            return {Point(j.at("x").get<std::vector<double>>()), Point(j.at("y").get<std::vector<double>>())};
        }
        if (j.is_array() && j.size() == 2) {
            return {Point(j[0].get<std::vector<double>>()), Point(j[1].get<std::vector<double>>())};
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed pair: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("invalid pair: ") + e.what());
    }
    throw InputError("pair must be {\"x\": [...], \"y\": [...]} or [[...], [...]]");
}

}  // namespace hyproj::app
