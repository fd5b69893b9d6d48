#include "trichain/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace trichain {

namespace {

double require_number(const Json& j, const char* what) {
    if (!j.is_number()) throw MalformedInputError(std::string("expected a number for ") + what);
    return j.get<double>();
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw MalformedInputError(std::string("missing field: ") + key);
    }
    return j.at(key);
}

std::vector<double> number_list(const Json& j, const char* what) {
    if (!j.is_array()) throw MalformedInputError(std::string("expected an array for ") + what);
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(require_number(v, what));
    return out;
}

PointH point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw MalformedInputError("points must be [x, y] pairs");
    }
    try {
        return PointH(require_number(j[0], "x"), require_number(j[1], "y"));
    } catch (const DomainError& e) {
        throw MalformedInputError(e.what());
    }
}

Json point_to_json(const PointH& p) { return Json::array({p.x, p.y}); }

}  // namespace

Json alpha_to_json(const AngleVector& alpha) {
    Json j;
    j["n"] = alpha.n();
    j["alpha"] = alpha.values();
    j["lambda"] = alpha.lambda();
    return j;
}

AngleVector alpha_from_json(const Json& j) {
    const Json& src = j.is_object() ? require_field(j, "alpha") : j;
    try {
        return AngleVector(number_list(src, "alpha"));
    } catch (const DomainError& e) {
        throw MalformedInputError(e.what());
    }
}

Json isometry_to_json(const Isometry& g) {
    return Json::array({Json::array({g.a(), g.b()}), Json::array({g.c(), g.d()})});
}

Isometry isometry_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2) {
        throw MalformedInputError("isometries must be [[a,b],[c,d]] matrices");
    }
    try {
        return Isometry(require_number(j[0][0], "a"), require_number(j[0][1], "b"),
                        require_number(j[1][0], "c"), require_number(j[1][1], "d"));
    } catch (const DomainError& e) {
        throw MalformedInputError(e.what());
    }
}

Json rep_to_json(const DTRepresentation& rep) {
    Json j;
    j["n"] = rep.n();
    j["alpha"] = rep.alpha.values();
    Json gens = Json::array();
    for (const Isometry& g : rep.gens) gens.push_back(isometry_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

DTRepresentation rep_from_json(const Json& j) {
    AngleVector alpha = alpha_from_json(j);
    const Json& gens = require_field(j, "generators");
    if (!gens.is_array() || static_cast<int>(gens.size()) != alpha.n()) {
        throw MalformedInputError("generator count must match the angle count");
    }
    DTRepresentation rep{std::move(alpha), {}};
    for (const auto& g : gens) rep.gens.push_back(isometry_from_json(g));
    return rep;
}

Json chain_to_json(const TriangleChain& chain) {
    Json j;
    j["alpha"] = chain.alpha.values();
    Json c = Json::array(), b = Json::array();
    for (const PointH& p : chain.C) c.push_back(point_to_json(p));
    for (const PointH& p : chain.B) b.push_back(point_to_json(p));
    j["C"] = std::move(c);
    j["B"] = std::move(b);
    return j;
}

TriangleChain chain_from_json(const Json& j) {
    AngleVector alpha = alpha_from_json(j);
    const Json& c = require_field(j, "C");
    const Json& b = require_field(j, "B");
    if (!c.is_array() || static_cast<int>(c.size()) != alpha.n() || !b.is_array() ||
        static_cast<int>(b.size()) != alpha.n() - 3) {
        throw MalformedInputError("chain point counts must be n and n-3");
    }
    TriangleChain chain{std::move(alpha), {}, {}};
    for (const auto& p : c) chain.C.push_back(point_from_json(p));
    for (const auto& p : b) chain.B.push_back(point_from_json(p));
    return chain;
}

Json projective_to_json(const ProjectivePoint& p) {
    Json z = Json::array();
    for (const Complex& c : p.z) z.push_back(Json::array({c.real(), c.imag()}));
    Json j;
    j["z"] = std::move(z);
    return j;
}

ProjectivePoint projective_from_json(const Json& j) {
    const Json& z = j.is_object() ? require_field(j, "z") : j;
    if (!z.is_array() || z.empty()) {
        throw MalformedInputError("projective points must carry a nonempty coordinate array");
    }
    ProjectivePoint p;
    for (const auto& c : z) {
        if (!c.is_array() || c.size() != 2) {
            throw MalformedInputError("complex coordinates must be [re, im] pairs");
        }
        p.z.emplace_back(require_number(c[0], "re"), require_number(c[1], "im"));
    }
    return p;
}

Json coords_to_json(const ActionAngleCoords& c) {
    Json j;
    j["a"] = c.a;
    j["gamma"] = c.gamma;
    j["sigma"] = c.sigma;
    return j;
}

namespace {

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            size_t k = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++k) {
                out += pad_in;
                out += Json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
                if (k + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Flat arrays of numbers stay on one line.
            bool flat = true;
            for (const auto& v : j) flat = flat && v.is_number();
            out += flat ? "[" : "[\n";
            size_t k = 0;
            for (const auto& v : j) {
                if (!flat) out += pad_in;
                dump_rec(v, out, indent, flat ? depth : depth + 1);
                if (k + 1 < j.size()) out += flat ? ", " : ",";
                if (!flat) out += '\n';
                ++k;
            }
            out += flat ? "]" : pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += '\n';
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInputError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

}  // namespace trichain
