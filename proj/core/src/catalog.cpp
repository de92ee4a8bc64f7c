#include "degreelab/catalog.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "degreelab/errors.hpp"

namespace degreelab {

using json = nlohmann::json;

const char* to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
        default: return "unknown";
    }
}

namespace {

std::string betti_string(const std::vector<std::size_t>& b) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
}

bool is_sphere_betti(const std::vector<std::size_t>& b) {
    if (b.size() < 2 || b.front() != 1 || b.back() != 1) return false;
    for (std::size_t i = 1; i + 1 < b.size(); ++i)
        if (b[i] != 0) return false;
    return true;
}

} // namespace

const CatalogEntry* Catalog::find(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

const CatalogEntry& Catalog::require(std::string_view name) const {
    if (const auto* e = find(name)) return *e;
    throw config_error("no catalog entry named '" + std::string(name) + "'");
}

std::vector<std::size_t> Catalog::rational_betti(const CatalogEntry& entry) const {
    if (entry.known_betti) return *entry.known_betti;
    if (!entry.complex_descriptor)
        throw config_error("entry '" + entry.name + "' has no homology data");
    const auto groups =
        homology(parse_space(*entry.complex_descriptor), Coefficients::Rationals);
    std::vector<std::size_t> betti;
    betti.reserve(groups.size());
    for (const auto& g : groups) betti.push_back(g.betti);
    return betti;
}

bool Catalog::entry_is_rhs(const CatalogEntry& entry) const {
    // the gauge-theoretic predicate needs H^n = R, so only orientable
    // entries qualify regardless of the betti pattern
    return entry.orientable && is_sphere_betti(rational_betti(entry));
}

void Catalog::validate() const {
    for (const auto& e : entries_) {
        if (e.cover.type == CoverInfo::Type::SelfCover &&
            (!e.sheets || *e.sheets != 1))
            throw consistency_error(e.name + ": self-cover forces sheets = 1");
        if (e.cover.type == CoverInfo::Type::NonCompact && e.sheets)
            throw consistency_error(e.name + ": noncompact cover forces infinite "
                                             "sheet count");
        if (e.complex_descriptor) {
            const auto complex = parse_space(*e.complex_descriptor);
            if (static_cast<int>(complex.top_dimension()) != e.dim)
                throw consistency_error(e.name + ": complex dimension " +
                                        std::to_string(complex.top_dimension()) +
                                        " != entry dimension " +
                                        std::to_string(e.dim));
        }
        if (e.cover.type == CoverInfo::Type::Named && !find(e.cover.detail))
            throw consistency_error(e.name + ": cover entry '" + e.cover.detail +
                                    "' not in catalog");
    }
    // covering consistency over the shipped data, orientable entries only
    for (const auto& e : entries_) {
        if (!e.orientable) continue;
        if (e.cover.type != CoverInfo::Type::Named) continue;
        const CatalogEntry& cover = require(e.cover.detail);
        if (!entry_is_rhs(cover)) continue;
        if (!entry_is_rhs(e))
            throw consistency_error(e.name + ": covered by a rational homology "
                                             "sphere but is not one itself");
        if (e.dim % 2 == 0 && e.sheets && *e.sheets > 1)
            throw consistency_error(e.name + ": even-dimensional with a multi-sheet "
                                             "rational-homology-sphere cover");
    }
    // the dim-4 specialization must agree with the general predicate
    for (const auto& e : entries_) {
        if (e.dim != 4) continue;
        const auto a = degree_well_defined(*this, e);
        const auto b = degree_well_defined_dim4(*this, e);
        if (a.answer != b.answer)
            throw consistency_error(e.name + ": dimension-4 degree predicate "
                                             "disagrees with the general one");
    }
}

TheoremVerdict degree_well_defined(const Catalog& catalog,
                                   const CatalogEntry& target) {
    TheoremVerdict v;
    v.predicate = "degree_well_defined";
    if (!target.orientable) {
        v.answer = Answer::Unknown;
        v.justification.push_back(target.name + " is not orientable; the degree "
                                                "predicate needs an oriented target");
        return v;
    }
    if (target.dim < 2) {
        v.answer = Answer::Unknown;
        v.justification.push_back("predicate stated for dimension >= 2");
        return v;
    }
    switch (target.cover.type) {
        case CoverInfo::Type::NonCompact:
            v.answer = Answer::Yes;
            v.justification.push_back("universal cover " + target.cover.detail +
                                      " is noncompact, hence has vanishing top "
                                      "cohomology and is not a rational homology "
                                      "sphere");
            break;
        case CoverInfo::Type::SelfCover: {
            const auto betti = catalog.rational_betti(target);
            const bool rhs = is_sphere_betti(betti);
            v.answer = rhs ? Answer::No : Answer::Yes;
            v.justification.push_back(target.name + " is simply connected: the "
                                      "cover is itself, rational betti " +
                                      betti_string(betti));
            v.justification.push_back(rhs ? "betti vector matches a sphere"
                                          : "betti vector differs from a sphere");
            break;
        }
        case CoverInfo::Type::Named: {
            const CatalogEntry& cover = catalog.require(target.cover.detail);
            const auto betti = catalog.rational_betti(cover);
            const bool rhs = cover.orientable && is_sphere_betti(betti);
            v.answer = rhs ? Answer::No : Answer::Yes;
            v.justification.push_back("universal cover " + cover.name +
                                      " has rational betti " + betti_string(betti));
            v.justification.push_back(rhs ? "the cover is a rational homology sphere"
                                          : "the cover is not a rational homology "
                                            "sphere");
            break;
        }
    }
    return v;
}

TheoremVerdict degree_well_defined_dim4(const Catalog& catalog,
                                        const CatalogEntry& target) {
    TheoremVerdict v;
    v.predicate = "degree_well_defined_dim4";
    if (target.dim != 4) {
        v.answer = Answer::Unknown;
        v.justification.push_back(target.name + " has dimension " +
                                  std::to_string(target.dim) +
                                  "; this specialization needs dimension 4");
        return v;
    }
    if (!target.orientable) {
        v.answer = Answer::Unknown;
        v.justification.push_back(target.name + " is not orientable");
        return v;
    }
    if (!target.homeomorphic_to_s4) {
        // fall back to the general predicate when the flag is not curated
        auto general = degree_well_defined(catalog, target);
        general.predicate = v.predicate;
        general.justification.push_back("no homeomorphism flag recorded; decided "
                                        "via the universal cover");
        return general;
    }
    if (*target.homeomorphic_to_s4) {
        v.answer = Answer::No;
        v.justification.push_back(target.name + " is homeomorphic to the 4-sphere");
    } else {
        v.answer = Answer::Yes;
        v.justification.push_back(target.name +
                                  " is not homeomorphic to the 4-sphere");
    }
    return v;
}

TheoremVerdict homotopy_classes_defined(const Catalog& catalog,
                                        const CatalogEntry& target, int n,
                                        std::string_view domain_name) {
    (void)catalog;
    TheoremVerdict v;
    v.predicate = "homotopy_classes_defined";
    const std::string sphere_domain = "s" + std::to_string(n);
    const bool domain_is_sphere = domain_name.empty() || domain_name == sphere_domain;

    switch (target.pi_n.status) {
        case PiN::Status::Zero:
            v.answer = Answer::Yes;
            v.justification.push_back("pi_" + std::to_string(n) + "(" + target.name +
                                      ") = 0 (" + target.pi_n.source + ")");
            break;
        case PiN::Status::NonZero:
            if (domain_is_sphere) {
                v.answer = Answer::No;
                v.justification.push_back("pi_" + std::to_string(n) + "(" +
                                          target.name + ") = " + target.pi_n.group +
                                          " != 0 (" + target.pi_n.source + ")");
                v.justification.push_back("bubble families on the " +
                                          std::to_string(n) +
                                          "-sphere domain converge to a constant "
                                          "while staying homotopically nontrivial");
            } else {
                v.answer = Answer::Unknown;
                v.justification.push_back("pi_" + std::to_string(n) + "(" +
                                          target.name + ") = " + target.pi_n.group +
                                          " != 0, but the obstruction argument "
                                          "needs a sphere domain; domain is " +
                                          std::string(domain_name));
                if (domain_name == "cp2" && (target.name == "cp1" ||
                                             target.name == "s2"))
                    v.justification.push_back("in fact every continuous map from "
                                              "the complex projective plane to the "
                                              "2-sphere is null-homotopic, so "
                                              "classes are trivially defined here");
            }
            break;
        default:
            v.answer = Answer::Unknown;
            v.justification.push_back("pi_" + std::to_string(n) + "(" + target.name +
                                      ") is not recorded in the catalog");
    }
    return v;
}

namespace {

json entry_to_json(const CatalogEntry& e) {
    json j;
    j["name"] = e.name;
    j["dim"] = e.dim;
    j["orientable"] = e.orientable;
    if (e.complex_descriptor) j["complex"] = *e.complex_descriptor;
    if (e.known_betti) j["betti"] = *e.known_betti;
    switch (e.cover.type) {
        case CoverInfo::Type::SelfCover: j["cover"] = {{"type", "self"}}; break;
        case CoverInfo::Type::Named:
            j["cover"] = {{"type", "named"}, {"name", e.cover.detail}};
            break;
        case CoverInfo::Type::NonCompact:
            j["cover"] = {{"type", "noncompact"}, {"desc", e.cover.detail}};
            break;
    }
    if (e.sheets) j["sheets"] = *e.sheets;
    json pin;
    pin["status"] = e.pi_n.status == PiN::Status::Zero      ? "zero"
                    : e.pi_n.status == PiN::Status::NonZero ? "nonzero"
                                                            : "unknown";
    if (!e.pi_n.group.empty()) pin["group"] = e.pi_n.group;
    if (!e.pi_n.source.empty()) pin["source"] = e.pi_n.source;
    j["pi_n"] = pin;
    if (e.homeomorphic_to_s4) j["homeomorphic_to_s4"] = *e.homeomorphic_to_s4;
    if (!e.notes.empty()) j["notes"] = e.notes;
    return j;
}

CatalogEntry entry_from_json(const json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.dim = j.at("dim").get<int>();
    e.orientable = j.at("orientable").get<bool>();
    if (j.contains("complex")) e.complex_descriptor = j["complex"].get<std::string>();
    if (j.contains("betti"))
        e.known_betti = j["betti"].get<std::vector<std::size_t>>();
    const auto& c = j.at("cover");
    const std::string type = c.at("type").get<std::string>();
    if (type == "self")
        e.cover = {CoverInfo::Type::SelfCover, ""};
    else if (type == "named")
        e.cover = {CoverInfo::Type::Named, c.at("name").get<std::string>()};
    else if (type == "noncompact")
        e.cover = {CoverInfo::Type::NonCompact,
                   c.contains("desc") ? c["desc"].get<std::string>() : ""};
    else
        throw config_error("bad cover type '" + type + "'");
    if (j.contains("sheets")) e.sheets = j["sheets"].get<long long>();
    if (j.contains("pi_n")) {
        const auto& p = j["pi_n"];
        const std::string s = p.value("status", "unknown");
        e.pi_n.status = s == "zero"      ? PiN::Status::Zero
                        : s == "nonzero" ? PiN::Status::NonZero
                                         : PiN::Status::Unknown;
        e.pi_n.group = p.value("group", "");
        e.pi_n.source = p.value("source", "");
    }
    if (j.contains("homeomorphic_to_s4"))
        e.homeomorphic_to_s4 = j["homeomorphic_to_s4"].get<bool>();
    e.notes = j.value("notes", "");
    return e;
}

} // namespace

Catalog Catalog::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("bad catalog JSON: ") + e.what());
    }
    Catalog c;
    for (const auto& je : j.at("entries")) c.entries_.push_back(entry_from_json(je));
    c.validate();
    return c;
}

std::string Catalog::to_json() const {
    json j;
    json arr = json::array();
    for (const auto& e : entries_) arr.push_back(entry_to_json(e));
    j["entries"] = std::move(arr);
    return j.dump(2);
}

Catalog Catalog::extended(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("bad catalog JSON: ") + e.what());
    }
    Catalog c = builtin();
    for (const auto& je : j.at("entries")) {
        CatalogEntry entry = entry_from_json(je);
        if (c.find(entry.name))
            throw config_error("catalog entry '" + entry.name +
                               "' already exists");
        c.entries_.push_back(std::move(entry));
    }
    c.validate();
    return c;
}

extern const char* builtin_catalog_json;

const Catalog& Catalog::builtin() {
    static const Catalog c = Catalog::from_json(builtin_catalog_json);
    return c;
}

} // namespace degreelab
