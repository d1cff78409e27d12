#include "martex/instance.hpp"

#include "martex/error.hpp"

#include <fstream>
#include <sstream>

namespace martex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational rational_from_json(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_unsigned()) return Rational(static_cast<long>(v.get<unsigned long>()));
    // binary floats are not exact; decimals must come as strings
    throw Error("parse", "rationals must be strings or integers, got " + v.dump());
}

std::vector<DiscreteMeasure::Atom> atoms_from_json(const json& v, const char* field) {
    if (!v.is_array()) throw Error("parse", std::string(field) + " must be an array");
    std::vector<DiscreteMeasure::Atom> atoms;
    for (const auto& entry : v) {
        if (!entry.is_array() || entry.size() != 2)
            throw Error("parse", std::string(field) + " entries must be [point, mass]");
        atoms.push_back({rational_from_json(entry[0]), rational_from_json(entry[1])});
    }
    return atoms;
}

} // namespace

Support InstanceFile::support_set() const {
    if (support) return Support(*support);
    if (weights) {
        std::vector<Path> paths;
        for (const auto& w : *weights) paths.push_back(w.path);
        return Support(std::move(paths));
    }
    throw Error("no-support", "instance carries neither support nor weights");
}

MartingaleCoupling InstanceFile::coupling() const {
    if (!weights) throw Error("no-weights", "instance carries no weights");
    return MartingaleCoupling(*weights, mu_measure(), nu_measure());
}

InstanceFile InstanceFile::from_coupling(const MartingaleCoupling& q) {
    InstanceFile f;
    f.mu = q.mu().atoms();
    f.nu = q.nu().atoms();
    f.support = q.support().paths();
    f.weights = q.weights();
    return f;
}

InstanceFile parse_instance_json(const json& doc) {
    if (!doc.is_object()) throw Error("parse", "instance must be a JSON object");
    if (!doc.contains("mu") || !doc.contains("nu"))
        throw Error("parse", "instance needs mu and nu");

    InstanceFile f;
    f.mu = atoms_from_json(doc.at("mu"), "mu");
    f.nu = atoms_from_json(doc.at("nu"), "nu");

    if (doc.contains("support") && !doc.at("support").is_null()) {
        const auto& sv = doc.at("support");
        if (!sv.is_array()) throw Error("parse", "support must be an array");
        std::vector<Path> paths;
        for (const auto& entry : sv) {
            if (!entry.is_array() || entry.size() != 2)
                throw Error("parse", "support entries must be [x, y]");
            paths.push_back({rational_from_json(entry[0]), rational_from_json(entry[1])});
        }
        f.support = std::move(paths);
    }
    if (doc.contains("weights") && !doc.at("weights").is_null()) {
        const auto& wv = doc.at("weights");
        if (!wv.is_array()) throw Error("parse", "weights must be an array");
        std::vector<WeightedPath> weights;
        for (const auto& entry : wv) {
            if (!entry.is_array() || entry.size() != 3)
                throw Error("parse", "weight entries must be [x, y, w]");
            weights.push_back({{rational_from_json(entry[0]), rational_from_json(entry[1])},
                               rational_from_json(entry[2])});
        }
        for (const auto& w : weights)
            if (w.weight.sign() <= 0)
                throw Error("parse", "weights must be strictly positive");
        f.weights = std::move(weights);
    }

    // structural sanity now, so downstream code can trust the file
    (void)f.mu_measure();
    (void)f.nu_measure();
    if (f.support && f.weights) {
        Support from_weights = [&] {
            std::vector<Path> paths;
            for (const auto& w : *f.weights) paths.push_back(w.path);
            return Support(std::move(paths));
        }();
        if (!(Support(*f.support) == from_weights))
            throw Error("parse", "explicit support disagrees with the positive-weight paths");
    }
    if (f.support && f.support->empty()) throw Error("parse", "support must not be empty");
    return f;
}

InstanceFile parse_instance(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error("parse", "invalid JSON");
    return parse_instance_json(doc);
}

ordered_json instance_to_json(const InstanceFile& f) {
    ordered_json doc;
    auto atoms = [](const std::vector<DiscreteMeasure::Atom>& list) {
        ordered_json arr = ordered_json::array();
        for (const auto& a : list) arr.push_back({a.point.str(), a.mass.str()});
        return arr;
    };
    doc["mu"] = atoms(f.mu);
    doc["nu"] = atoms(f.nu);
    if (f.support) {
        ordered_json arr = ordered_json::array();
        for (const auto& p : *f.support) arr.push_back({p.x.str(), p.y.str()});
        doc["support"] = std::move(arr);
    }
    if (f.weights) {
        ordered_json arr = ordered_json::array();
        for (const auto& w : *f.weights)
            arr.push_back({w.path.x.str(), w.path.y.str(), w.weight.str()});
        doc["weights"] = std::move(arr);
    }
    return doc;
}

std::string serialize_instance(const InstanceFile& f) {
    return instance_to_json(f).dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << content;
}

InstanceFile load_instance(const std::string& path) {
    return parse_instance(read_file(path));
}

void save_instance(const InstanceFile& f, const std::string& path) {
    write_file(path, serialize_instance(f));
}

} // namespace martex
