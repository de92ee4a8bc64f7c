#include "degreelab/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "degreelab/errors.hpp"
#include "descriptor_util.hpp"

namespace degreelab {

using json = nlohmann::json;

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw config_error("ragged matrix rows");
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw config_error("matrix shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t m = 0; m < a.cols(); ++m) {
            const BigInt& arm = a.at(r, m);
            if (arm == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.at(r, c) += arm * b.at(m, c);
        }
    return out;
}

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// true when row s and column s are zero outside the pivot
bool pivot_isolated(const IntMatrix& m, std::size_t s) {
    for (std::size_t i = s + 1; i < m.rows(); ++i)
        if (m.at(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < m.cols(); ++j)
        if (m.at(s, j) != 0) return false;
    return true;
}

bool find_min_pivot(const IntMatrix& m, std::size_t s, std::size_t& pr,
                    std::size_t& pc) {
    bool found = false;
    BigInt best;
    for (std::size_t i = s; i < m.rows(); ++i)
        for (std::size_t j = s; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            BigInt a = abs_big(m.at(i, j));
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SNFResult smith_normal_form(IntMatrix m) {
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::vector<BigInt> diag;

    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pr = s, pc = s;
        if (!find_min_pivot(m, s, pr, pc)) break; // remaining block is zero

        // move pivot to (s, s)
        if (pr != s)
            for (std::size_t j = s; j < m.cols(); ++j)
                std::swap(m.at(s, j), m.at(pr, j));
        if (pc != s)
            for (std::size_t i = s; i < m.rows(); ++i)
                std::swap(m.at(i, s), m.at(i, pc));

        while (!pivot_isolated(m, s)) {
            // reduce column s below the pivot
            for (std::size_t i = s + 1; i < m.rows(); ++i) {
                if (m.at(i, s) == 0) continue;
                const BigInt q = m.at(i, s) / m.at(s, s);
                if (q != 0)
                    for (std::size_t j = s; j < m.cols(); ++j)
                        m.at(i, j) -= q * m.at(s, j);
            }
            // reduce row s right of the pivot
            for (std::size_t j = s + 1; j < m.cols(); ++j) {
                if (m.at(s, j) == 0) continue;
                const BigInt q = m.at(s, j) / m.at(s, s);
                if (q != 0)
                    for (std::size_t i = s; i < m.rows(); ++i)
                        m.at(i, j) -= q * m.at(i, s);
            }
            // remainders may survive when the pivot does not divide its
            // row/column; re-pivot on the new minimal entry
            std::size_t nr = s, nc = s;
            if (!find_min_pivot(m, s, nr, nc)) break;
            if (nr != s)
                for (std::size_t j = s; j < m.cols(); ++j)
                    std::swap(m.at(s, j), m.at(nr, j));
            if (nc != s)
                for (std::size_t i = s; i < m.rows(); ++i)
                    std::swap(m.at(i, s), m.at(i, nc));
        }
        if (m.at(s, s) == 0) break;
        if (m.at(s, s) < 0)
            for (std::size_t j = s; j < m.cols(); ++j) m.at(s, j) = -m.at(s, j);
        diag.push_back(m.at(s, s));
    }

    // enforce d_i | d_{i+1}: diag(a, b) ~ diag(gcd(a,b), lcm(a,b))
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] == 0) continue;
            const BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
            const BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());

    SNFResult out;
    out.rank = diag.size();
    out.invariant_factors = std::move(diag);
    return out;
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty()) throw config_error("chain complex needs at least one rank");
    if (boundaries_.size() != ranks_.size() - 1)
        throw config_error("chain complex needs one boundary map per positive "
                           "degree");
    for (std::size_t i = 1; i < ranks_.size(); ++i) {
        const IntMatrix& d = boundaries_[i - 1];
        if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i])
            throw config_error("boundary d_" + std::to_string(i) + " must be " +
                               std::to_string(ranks_[i - 1]) + "x" +
                               std::to_string(ranks_[i]));
    }
    for (std::size_t i = 1; i + 1 < ranks_.size(); ++i)
        if (!multiply(boundaries_[i - 1], boundaries_[i]).is_zero())
            throw consistency_error("boundary of boundary is nonzero between "
                                    "degrees " + std::to_string(i + 1) + " and " +
                                    std::to_string(i - 1));
}

const IntMatrix& ChainComplex::boundary(std::size_t i) const {
    if (i < 1 || i > top_dimension())
        throw config_error("boundary index out of range");
    return boundaries_[i - 1];
}

std::vector<HomologyGroup> homology(const ChainComplex& complex,
                                    Coefficients coefficients) {
    const std::size_t n = complex.top_dimension();
    std::vector<SNFResult> snf(n + 1); // snf[i] for d_i, i >= 1
    for (std::size_t i = 1; i <= n; ++i)
        snf[i] = smith_normal_form(complex.boundary(i));

    std::vector<HomologyGroup> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const std::size_t rank_di = i >= 1 ? snf[i].rank : 0;
        const std::size_t rank_dnext = i + 1 <= n ? snf[i + 1].rank : 0;
        out[i].betti = complex.ranks()[i] - rank_di - rank_dnext;
        if (coefficients == Coefficients::Integers && i + 1 <= n)
            for (const auto& d : snf[i + 1].invariant_factors)
                if (d > 1) out[i].torsion.push_back(d);
    }
    return out;
}

std::string to_string(const HomologyGroup& g) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < g.betti; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& t : g.torsion) {
        os << (first ? "" : " + ") << "Z_" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

RhsVerdict is_rational_homology_sphere(const ChainComplex& complex) {
    const std::size_t n = complex.top_dimension();
    if (n < 1 || complex.ranks()[n] == 0)
        throw config_error("rational homology sphere test needs top dimension "
                           ">= 1 with cells");
    const auto groups = homology(complex, Coefficients::Rationals);
    RhsVerdict v;
    v.betti.reserve(groups.size());
    for (const auto& g : groups) v.betti.push_back(g.betti);
    v.value = v.betti.front() == 1 && v.betti.back() == 1;
    for (std::size_t i = 1; i + 1 < v.betti.size() && v.value; ++i)
        if (v.betti[i] != 0) v.value = false;
    return v;
}

EulerCharacteristic euler_both_ways(const ChainComplex& complex) {
    EulerCharacteristic chi;
    const auto& ranks = complex.ranks();
    for (std::size_t i = 0; i < ranks.size(); ++i)
        chi.from_cells += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(ranks[i]);
    const auto groups = homology(complex, Coefficients::Rationals);
    for (std::size_t i = 0; i < groups.size(); ++i)
        chi.from_betti += (i % 2 == 0 ? 1 : -1) *
                          static_cast<long long>(groups[i].betti);
    return chi;
}

long long euler_characteristic(const ChainComplex& complex) {
    const auto chi = euler_both_ways(complex);
    if (chi.from_cells != chi.from_betti)
        throw consistency_error("Euler characteristic mismatch: cells give " +
                                std::to_string(chi.from_cells) + ", betti give " +
                                std::to_string(chi.from_betti));
    return chi.from_cells;
}

bool covering_chi_check(const ChainComplex& base, const ChainComplex& cover,
                        long long sheets) {
    return euler_characteristic(cover) == sheets * euler_characteristic(base);
}

ChainComplex sphere_complex(int n) {
    if (n < 1) throw config_error("sphere complex needs n >= 1");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
    ranks.front() = ranks.back() = 1;
    if (n == 1) ranks = {1, 1};
    std::vector<IntMatrix> boundaries;
    for (int i = 1; i <= n; ++i)
        boundaries.emplace_back(ranks[static_cast<std::size_t>(i - 1)],
                                ranks[static_cast<std::size_t>(i)]);
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex lens_complex(int m, int dim) {
    if (m < 2) throw config_error("lens space needs m >= 2");
    if (dim < 3 || dim % 2 == 0)
        throw config_error("lens space has odd dimension >= 3");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 1, 1);
    std::vector<IntMatrix> boundaries;
    for (int i = 1; i <= dim; ++i) {
        IntMatrix d(1, 1);
        d.at(0, 0) = i % 2 == 0 ? m : 0;
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex rp_complex(int n) {
    if (n < 1) throw config_error("projective space needs n >= 1");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 1);
    std::vector<IntMatrix> boundaries;
    for (int i = 1; i <= n; ++i) {
        IntMatrix d(1, 1);
        d.at(0, 0) = i % 2 == 0 ? 2 : 0;
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex torus2_complex() {
    // one vertex, two loops, one face glued along the commutator
    std::vector<std::size_t> ranks{1, 2, 1};
    std::vector<IntMatrix> boundaries;
    boundaries.emplace_back(1, 2);
    boundaries.emplace_back(2, 1);
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex cpn_complex(int n) {
    if (n != 1 && n != 2)
        throw config_error("complex projective space shipped for n in {1, 2}");
    std::vector<std::size_t> ranks(static_cast<std::size_t>(2 * n) + 1, 0);
    for (std::size_t i = 0; i < ranks.size(); i += 2) ranks[i] = 1;
    std::vector<IntMatrix> boundaries;
    for (int i = 1; i <= 2 * n; ++i)
        boundaries.emplace_back(ranks[static_cast<std::size_t>(i - 1)],
                                ranks[static_cast<std::size_t>(i)]);
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

ChainComplex parse_space(std::string_view d) {
    if (d == "t2") return torus2_complex();
    if (d == "cp1") return cpn_complex(1);
    if (d == "cp2") return cpn_complex(2);
    if (d.size() == 2 && d[0] == 's' && d[1] >= '1' && d[1] <= '9')
        return sphere_complex(d[1] - '0');
    if (d.size() == 3 && d.rfind("rp", 0) == 0 && d[2] >= '1' && d[2] <= '9')
        return rp_complex(d[2] - '0');
    if (d.rfind("sphere:", 0) == 0) {
        auto kv = detail::parse_kv(d.substr(7), d);
        return sphere_complex(static_cast<int>(detail::require(kv, "n", d)));
    }
    if (d.rfind("rp:", 0) == 0) {
        auto kv = detail::parse_kv(d.substr(3), d);
        return rp_complex(static_cast<int>(detail::require(kv, "n", d)));
    }
    if (d.rfind("lens:", 0) == 0) {
        auto kv = detail::parse_kv(d.substr(5), d);
        const int m = static_cast<int>(detail::require(kv, "m", d));
        const int dim = kv.count("dim") ? static_cast<int>(kv.at("dim")) : 3;
        return lens_complex(m, dim);
    }
    throw config_error("unknown space descriptor '" + std::string(d) + "'");
}

ChainComplex complex_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("bad complex JSON: ") + e.what());
    }
    if (!j.contains("ranks") || !j.contains("boundaries"))
        throw config_error("complex JSON needs 'ranks' and 'boundaries'");
    std::vector<std::size_t> ranks;
    for (const auto& r : j["ranks"]) ranks.push_back(r.get<std::size_t>());
    std::vector<IntMatrix> boundaries;
    const auto& bs = j["boundaries"];
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        if (bs.size() < i)
            throw config_error("complex JSON missing boundary " + std::to_string(i));
        const auto& flat = bs[i - 1];
        IntMatrix m(ranks[i - 1], ranks[i]);
        if (flat.size() != ranks[i - 1] * ranks[i])
            throw config_error("boundary " + std::to_string(i) +
                               " has the wrong entry count");
        std::size_t idx = 0;
        for (const auto& v : flat) {
            BigInt value;
            if (v.is_string())
                value = BigInt(v.get<std::string>());
            else if (v.is_number_integer())
                value = BigInt(v.get<long long>());
            else
                throw config_error("boundary entries must be integers or "
                                   "decimal strings");
            m.at(idx / ranks[i], idx % ranks[i]) = value;
            ++idx;
        }
        boundaries.push_back(std::move(m));
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

std::string complex_to_json(const ChainComplex& complex) {
    json j;
    j["ranks"] = complex.ranks();
    json bs = json::array();
    for (std::size_t i = 1; i <= complex.top_dimension(); ++i) {
        const IntMatrix& m = complex.boundary(i);
        json flat = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                const BigInt& v = m.at(r, c);
                if (v >= std::numeric_limits<long long>::min() &&
                    v <= std::numeric_limits<long long>::max())
                    flat.push_back(v.convert_to<long long>());
                else
                    flat.push_back(v.str());
            }
        bs.push_back(std::move(flat));
    }
    j["boundaries"] = std::move(bs);
    return j.dump();
}

} // namespace degreelab
