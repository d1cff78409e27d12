#pragma once

#include "martex/coupling.hpp"
#include "martex/measure.hpp"
#include "martex/support.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace martex {

/// On-disk instance: marginals plus an optional support and optional
/// weights. Numbers travel as exact strings ("p/q", integers, or decimal
/// strings converted by place value); parse -> serialize -> parse is the
/// identity.
struct InstanceFile {
    std::vector<DiscreteMeasure::Atom> mu;
    std::vector<DiscreteMeasure::Atom> nu;
    std::optional<std::vector<Path>> support;
    std::optional<std::vector<WeightedPath>> weights;

    DiscreteMeasure mu_measure() const { return DiscreteMeasure(mu); }
    DiscreteMeasure nu_measure() const { return DiscreteMeasure(nu); }

    bool has_support() const { return support || weights; }
    /// The explicit support, or the one carried by the positive weights.
    Support support_set() const;
    /// Requires weights. Throws Error("no-weights") otherwise.
    MartingaleCoupling coupling() const;

    static InstanceFile from_coupling(const MartingaleCoupling& q);
};

/// Throws Error("parse", ...) on malformed documents, including weights
/// inconsistent with an explicit support and malformed rationals ("1/0").
InstanceFile parse_instance(const std::string& text);
InstanceFile parse_instance_json(const nlohmann::json& doc);

std::string serialize_instance(const InstanceFile& instance);
nlohmann::ordered_json instance_to_json(const InstanceFile& instance);

InstanceFile load_instance(const std::string& path);
void save_instance(const InstanceFile& instance, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace martex
