#ifndef DEGREELAB_CATALOG_HPP
#define DEGREELAB_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degreelab/homology.hpp"

namespace degreelab {

/// Universal-cover data of a catalog entry.
struct CoverInfo {
    enum class Type { SelfCover, Named, NonCompact };
    Type type = Type::SelfCover;
    std::string detail; // covered-by entry name, or a description like "R^3"
};

/// Curated homotopy-group datum.  pi_n is not computable here; every
/// value carries its source note.
struct PiN {
    enum class Status { Zero, NonZero, Unknown };
    Status status = Status::Unknown;
    std::string group;  // e.g. "Z", "Z_2"
    std::string source; // where the fact comes from
};

struct CatalogEntry {
    std::string name;
    int dim = 0;
    bool orientable = true;
    // homology either as a buildable complex or a known rational betti table
    std::optional<std::string> complex_descriptor;
    std::optional<std::vector<std::size_t>> known_betti;
    CoverInfo cover;
    std::optional<long long> sheets; // nullopt = infinite
    PiN pi_n;
    std::optional<bool> homeomorphic_to_s4;
    std::string notes;
};

enum class Answer { Yes, No, Unknown };

const char* to_string(Answer a);

/// A predicate evaluation with the chain of facts it used.
/// Yes/No verdicts always carry a non-empty justification.
struct TheoremVerdict {
    std::string predicate;
    Answer answer = Answer::Unknown;
    std::vector<std::string> justification;
};

class Catalog {
public:
    /// The manifolds shipped with the artifact.
    static const Catalog& builtin();
    static Catalog from_json(const std::string& text);
    /// Shipped entries plus user entries parsed from `text` (which may
    /// reference shipped entries as covers).
    static Catalog extended(const std::string& text);
    std::string to_json() const;

    const CatalogEntry* find(std::string_view name) const;
    const CatalogEntry& require(std::string_view name) const;
    const std::vector<CatalogEntry>& entries() const { return entries_; }

    /// Entry invariants plus the covering-space consistency checks over
    /// the whole catalog; throws consistency_error on violation.
    void validate() const;

    /// Rational betti vector of an entry (from its complex or known table).
    std::vector<std::size_t> rational_betti(const CatalogEntry& entry) const;
    /// Is the entry itself a rational homology sphere?
    bool entry_is_rhs(const CatalogEntry& entry) const;

private:
    std::vector<CatalogEntry> entries_;
};

/// Is the degree a continuous integer invariant for maps into this
/// target?  Yes exactly when the universal cover is not a rational
/// homology sphere (noncompact covers never are).
TheoremVerdict degree_well_defined(const Catalog& catalog,
                                   const CatalogEntry& target);

/// Dimension-4 specialization: No exactly for targets homeomorphic to
/// the 4-sphere.
TheoremVerdict degree_well_defined_dim4(const Catalog& catalog,
                                        const CatalogEntry& target);

/// Are homotopy classes stable for maps of an n-dimensional domain into
/// this target?  Yes when pi_n vanishes; No when pi_n != 0 and the domain
/// is the n-sphere; Unknown otherwise.
TheoremVerdict homotopy_classes_defined(const Catalog& catalog,
                                        const CatalogEntry& target, int n,
                                        std::string_view domain_name = "");

} // namespace degreelab

#endif
