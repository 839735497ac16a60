#include "hodgepair/simplicial.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "hodgepair/error.hpp"
#include "hodgepair/rng.hpp"

namespace hodgepair {

namespace {

std::string format_tuple(const std::vector<int>& simplex) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i) out << ",";
        out << simplex[i];
    }
    out << "]";
    return out.str();
}

/// Sorted copy of a raw tuple; rejects empty tuples, negative vertices, and
/// repeated vertices.
std::vector<int> normalize_tuple(const std::vector<int>& raw) {
    if (raw.empty()) throw Error("empty simplex tuple");
    std::vector<int> simplex = raw;
    std::sort(simplex.begin(), simplex.end());
    if (simplex.front() < 0) {
        throw Error("negative vertex id in simplex " + format_tuple(raw));
    }
    if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end()) {
        throw Error("repeated vertex in simplex " + format_tuple(raw));
    }
    return simplex;
}

/// Face closure of a set of normalized tuples, bucketed by dimension.
std::vector<std::set<std::vector<int>>> close_under_faces(
    const std::vector<std::vector<int>>& tuples) {
    std::size_t max_dim = 0;
    for (const auto& t : tuples) max_dim = std::max(max_dim, t.size() - 1);
    std::vector<std::set<std::vector<int>>> by_dim(
        tuples.empty() ? 0 : max_dim + 1);
    for (const auto& t : tuples) by_dim[t.size() - 1].insert(t);
    for (int q = static_cast<int>(by_dim.size()) - 1; q > 0; --q) {
        for (const auto& simplex : by_dim[static_cast<std::size_t>(q)]) {
            for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t i = 0; i < simplex.size(); ++i) {
                    if (i != drop) face.push_back(simplex[i]);
                }
                by_dim[static_cast<std::size_t>(q - 1)].insert(face);
            }
        }
    }
    return by_dim;
}

const char* kMeshHint =
    " (mesh JSON: {\"simplices\": [[v,...],...], \"weights\": {\"<dim>\": "
    "[w,...]}, \"boundary\": \"auto\" | [[v,...],...]})";

Rational parse_weight(const nlohmann::json& value, const std::string& where) {
    Rational w;
    if (value.is_number_integer()) {
        w = Rational(value.get<long long>());
    } else if (value.is_string()) {
        try {
            w = parse_rational(value.get<std::string>());
        } catch (const Error& e) {
            throw Error(std::string(e.what()) + " at " + where);
        }
    } else {
        throw Error("weight at " + where +
                    " must be an integer or a rational string \"p/q\"");
    }
    if (w <= 0) throw Error("nonpositive weight at " + where);
    return w;
}

std::vector<std::vector<int>> parse_tuple_list(const nlohmann::json& array,
                                               const std::string& pointer) {
    if (!array.is_array()) {
        throw Error(pointer + " must be an array of simplex tuples" + kMeshHint);
    }
    std::vector<std::vector<int>> tuples;
    for (std::size_t i = 0; i < array.size(); ++i) {
        const auto& entry = array[i];
        const std::string where = pointer + "/" + std::to_string(i);
        if (!entry.is_array() || entry.empty()) {
            throw Error(where + " must be a nonempty array of vertex ids");
        }
        std::vector<int> tuple;
        for (const auto& v : entry) {
            if (!v.is_number_integer()) {
                throw Error(where + " has a non-integer vertex id");
            }
            tuple.push_back(v.get<int>());
        }
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

/// --- Independent reference rank routine -------------------------------
///
/// Everything below until the next rule is the oracle path: it builds its
/// own incidence matrices over the integers and computes ranks by
/// fraction-free (Bareiss) elimination, exact at every step. It must stay
/// disjoint from the RREF/relation machinery it is used to check.

int bareiss_rank(std::vector<std::vector<BigInt>> a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    BigInt prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

struct ReferenceLevel {
    std::map<std::vector<int>, int> index;  // free simplices only
};

/// Signed incidence matrix between free simplices at q and q+1.
std::vector<std::vector<BigInt>> reference_coboundary(
    const ReferenceLevel& low, const ReferenceLevel& high) {
    std::vector<std::vector<BigInt>> m(
        high.index.size(), std::vector<BigInt>(low.index.size(), 0));
    for (const auto& [simplex, row] : high.index) {
        for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < simplex.size(); ++i) {
                if (i != drop) face.push_back(simplex[i]);
            }
            const auto it = low.index.find(face);
            if (it == low.index.end()) continue;  // face lies on the boundary
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(
                it->second)] = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

std::vector<int> reference_dims(const SimplicialComplex& k,
                                const BoundarySubcomplex& b) {
    const int d = k.dim();
    if (d < 0) return {};
    std::vector<ReferenceLevel> levels(static_cast<std::size_t>(d) + 1);
    for (int q = 0; q <= d; ++q) {
        int next = 0;
        for (const auto& simplex : k.simplices[static_cast<std::size_t>(q)]) {
            if (!b.contains(q, simplex)) {
                levels[static_cast<std::size_t>(q)].index.emplace(simplex,
                                                                  next++);
            }
        }
    }
    std::vector<int> ranks(static_cast<std::size_t>(d) + 1, 0);
    for (int q = 0; q < d; ++q) {
        ranks[static_cast<std::size_t>(q)] = bareiss_rank(reference_coboundary(
            levels[static_cast<std::size_t>(q)],
            levels[static_cast<std::size_t>(q + 1)]));
    }
    std::vector<int> dims;
    for (int q = 0; q <= d; ++q) {
        const int free = static_cast<int>(levels[static_cast<std::size_t>(q)]
                                              .index.size());
        const int below =
            q > 0 ? ranks[static_cast<std::size_t>(q - 1)] : 0;
        dims.push_back(free - ranks[static_cast<std::size_t>(q)] - below);
    }
    return dims;
}

/// --- end of reference routine -----------------------------------------

}  // namespace

int SimplicialComplex::count(int q) const {
    if (q < 0 || q > dim()) return 0;
    return static_cast<int>(simplices[static_cast<std::size_t>(q)].size());
}

std::optional<int> SimplicialComplex::index_of(
    int q, const std::vector<int>& simplex) const {
    if (q < 0 || q > dim()) return std::nullopt;
    const auto& level = simplices[static_cast<std::size_t>(q)];
    const auto it = std::lower_bound(level.begin(), level.end(), simplex);
    if (it == level.end() || *it != simplex) return std::nullopt;
    return static_cast<int>(it - level.begin());
}

bool BoundarySubcomplex::empty() const {
    for (const auto& level : simplices) {
        if (!level.empty()) return false;
    }
    return true;
}

bool BoundarySubcomplex::contains(int q, const std::vector<int>& simplex) const {
    if (q < 0 || q >= static_cast<int>(simplices.size())) return false;
    const auto& level = simplices[static_cast<std::size_t>(q)];
    return std::binary_search(level.begin(), level.end(), simplex);
}

SimplicialComplex make_complex(
    const std::vector<std::vector<int>>& simplices,
    const std::map<int, std::vector<Rational>>& weights) {
    std::vector<std::vector<int>> normalized;
    for (const auto& raw : simplices) normalized.push_back(normalize_tuple(raw));

    SimplicialComplex k;
    const auto closed = close_under_faces(normalized);
    for (const auto& level : closed) {
        k.simplices.emplace_back(level.begin(), level.end());
        k.weights.emplace_back(k.simplices.back().size(), Rational(1));
    }
    for (int q = 0; q <= k.dim(); ++q) {
        for (const auto& simplex : k.simplices[static_cast<std::size_t>(q)]) {
            k.vertex_count = std::max(k.vertex_count, simplex.back() + 1);
        }
    }

    for (const auto& [q, values] : weights) {
        if (q < 0 || q > k.dim()) {
            throw Error("weights given for dimension " + std::to_string(q) +
                        " but the complex has none");
        }
        if (static_cast<int>(values.size()) != k.count(q)) {
            throw Error(
                "weights for dimension " + std::to_string(q) + " list " +
                std::to_string(values.size()) + " entries but the face-closed "
                "complex has " + std::to_string(k.count(q)) + " simplices "
                "(lexicographic order)");
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] <= 0) {
                throw Error("nonpositive weight for simplex " +
                            format_tuple(k.simplices[static_cast<std::size_t>(
                                q)][i]));
            }
        }
        k.weights[static_cast<std::size_t>(q)] = values;
    }
    return k;
}

SimplicialComplex load_complex(const std::string& json_text) {
    return load_mesh(json_text).complex;
}

LoadedMesh load_mesh(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid mesh JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("simplices")) {
        throw Error(std::string("mesh JSON must be an object with /simplices") +
                    kMeshHint);
    }

    const auto tuples = parse_tuple_list(doc["simplices"], "/simplices");

    std::map<int, std::vector<Rational>> weights;
    if (doc.contains("weights")) {
        const auto& w = doc["weights"];
        if (!w.is_object()) {
            throw Error("/weights must map dimension strings to arrays" +
                        std::string(kMeshHint));
        }
        for (const auto& [key, values] : w.items()) {
            int dim = 0;
            try {
                dim = std::stoi(key);
            } catch (const std::exception&) {
                throw Error("/weights key \"" + key +
                            "\" is not a dimension number");
            }
            if (!values.is_array()) {
                throw Error("/weights/" + key + " must be an array");
            }
            std::vector<Rational> parsed;
            for (std::size_t i = 0; i < values.size(); ++i) {
                parsed.push_back(parse_weight(
                    values[i], "/weights/" + key + "/" + std::to_string(i)));
            }
            weights.emplace(dim, std::move(parsed));
        }
    }

    LoadedMesh mesh;
    mesh.complex = make_complex(tuples, weights);

    if (!doc.contains("boundary") ||
        (doc["boundary"].is_string() &&
         doc["boundary"].get<std::string>() == "auto")) {
        mesh.boundary = boundary_subcomplex(mesh.complex);
    } else if (doc["boundary"].is_array()) {
        mesh.boundary = explicit_subcomplex(
            mesh.complex, parse_tuple_list(doc["boundary"], "/boundary"));
    } else {
        throw Error(std::string("/boundary must be \"auto\" or a simplex list") +
                    kMeshHint);
    }
    return mesh;
}

BoundarySubcomplex boundary_subcomplex(const SimplicialComplex& k) {
    const int d = k.dim();
    BoundarySubcomplex b;
    if (d <= 0) {
        b.simplices.resize(static_cast<std::size_t>(std::max(d + 1, 0)));
        return b;  // points (or nothing) have empty boundary
    }

    // Purity: every simplex below the top dimension must have a coface.
    for (int q = 0; q < d; ++q) {
        std::set<std::vector<int>> faces_of_next;
        for (const auto& simplex :
             k.simplices[static_cast<std::size_t>(q + 1)]) {
            for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t i = 0; i < simplex.size(); ++i) {
                    if (i != drop) face.push_back(simplex[i]);
                }
                faces_of_next.insert(std::move(face));
            }
        }
        for (const auto& simplex : k.simplices[static_cast<std::size_t>(q)]) {
            if (!faces_of_next.count(simplex)) {
                throw Error("complex is not pure: simplex " +
                            format_tuple(simplex) + " of dimension " +
                            std::to_string(q) +
                            " is maximal below the top dimension " +
                            std::to_string(d));
            }
        }
    }

    // Pseudomanifold: every ridge lies in at most two top simplices; the
    // boundary collects those lying in exactly one.
    std::map<std::vector<int>, int> top_incidence;
    for (const auto& simplex : k.simplices[static_cast<std::size_t>(d)]) {
        for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
            std::vector<int> face;
            for (std::size_t i = 0; i < simplex.size(); ++i) {
                if (i != drop) face.push_back(simplex[i]);
            }
            ++top_incidence[face];
        }
    }
    std::vector<std::vector<int>> boundary_ridges;
    for (const auto& [ridge, incidence] : top_incidence) {
        if (incidence > 2) {
            throw Error("not a pseudomanifold: ridge " + format_tuple(ridge) +
                        " lies in " + std::to_string(incidence) +
                        " top simplices");
        }
        if (incidence == 1) boundary_ridges.push_back(ridge);
    }

    const auto closed = close_under_faces(boundary_ridges);
    b.simplices.assign(static_cast<std::size_t>(d) + 1, {});
    for (std::size_t q = 0; q < closed.size(); ++q) {
        b.simplices[q].assign(closed[q].begin(), closed[q].end());
    }
    return b;
}

BoundarySubcomplex explicit_subcomplex(
    const SimplicialComplex& k, const std::vector<std::vector<int>>& simplices) {
    std::vector<std::vector<int>> normalized;
    for (const auto& raw : simplices) normalized.push_back(normalize_tuple(raw));
    const auto closed = close_under_faces(normalized);

    BoundarySubcomplex b;
    b.simplices.assign(static_cast<std::size_t>(std::max(k.dim(), 0)) + 1, {});
    for (std::size_t q = 0; q < closed.size(); ++q) {
        for (const auto& simplex : closed[q]) {
            if (!k.index_of(static_cast<int>(q), simplex)) {
                throw Error("boundary simplex " + format_tuple(simplex) +
                            " is not part of the complex");
            }
        }
        b.simplices[q].assign(closed[q].begin(), closed[q].end());
    }
    return b;
}

RatMatrix coboundary_matrix(const SimplicialComplex& k, int q) {
    std::vector<std::vector<long long>> entries(
        static_cast<std::size_t>(k.count(q + 1)),
        std::vector<long long>(static_cast<std::size_t>(k.count(q)), 0));
    if (q >= 0 && q + 1 <= k.dim()) {
        const auto& rows = k.simplices[static_cast<std::size_t>(q + 1)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& simplex = rows[r];
            for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t i = 0; i < simplex.size(); ++i) {
                    if (i != drop) face.push_back(simplex[i]);
                }
                const auto col = k.index_of(q, face);
                if (!col) {
                    throw Error("complex is not face-closed at " +
                                format_tuple(face));
                }
                entries[r][static_cast<std::size_t>(*col)] =
                    (drop % 2 == 0) ? 1 : -1;
            }
        }
    }
    if (entries.empty()) return RatMatrix(0, static_cast<int>(k.count(q)));
    return RatMatrix::from_int(entries);
}

ComplexPair cochain_pair(const SimplicialComplex& k,
                         const BoundarySubcomplex& b) {
    const int d = k.dim();
    if (d < 0) throw Error("cannot build a cochain pair on an empty complex");

    std::vector<InnerProductSpace> spaces;
    for (int q = 0; q <= d; ++q) {
        const int n = k.count(q);
        RatMatrix gram = RatMatrix::identity(n);
        for (int i = 0; i < n; ++i) {
            gram.at(i, i) = k.weights[static_cast<std::size_t>(q)]
                                     [static_cast<std::size_t>(i)];
        }
        spaces.emplace_back(n, std::move(gram));
    }

    std::vector<LinearRelation> big_diffs;
    std::vector<LinearRelation> small_diffs;
    for (int q = 0; q < d; ++q) {
        const RatMatrix c = coboundary_matrix(k, q);
        big_diffs.push_back(LinearRelation::from_matrix(
            c, spaces[static_cast<std::size_t>(q)],
            spaces[static_cast<std::size_t>(q + 1)]));

        // Relative cochains: coordinates indexed by non-boundary simplices.
        const auto& level = k.simplices[static_cast<std::size_t>(q)];
        std::vector<int> free;
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (!b.contains(q, level[i])) free.push_back(static_cast<int>(i));
        }
        RatMatrix indicator(static_cast<int>(free.size()), k.count(q));
        for (std::size_t r = 0; r < free.size(); ++r) {
            indicator.at(static_cast<int>(r), free[r]) = 1;
        }
        const Subspace relative = Subspace::from_rows(indicator, k.count(q));
        small_diffs.push_back(LinearRelation::from_matrix(
            c, relative, spaces[static_cast<std::size_t>(q)],
            spaces[static_cast<std::size_t>(q + 1)]));
    }

    HilbertComplex big(spaces, big_diffs);
    HilbertComplex small(std::move(spaces), std::move(small_diffs));
    return ComplexPair(std::move(big), std::move(small));
}

SimplicialComplex cone(const SimplicialComplex& k) {
    const int apex = k.vertex_count;
    std::vector<std::vector<int>> tuples;
    tuples.push_back({apex});
    for (int q = 0; q <= k.dim(); ++q) {
        for (const auto& simplex : k.simplices[static_cast<std::size_t>(q)]) {
            tuples.push_back(simplex);
            std::vector<int> joined = simplex;
            joined.push_back(apex);  // apex has the largest id, so still sorted
            tuples.push_back(std::move(joined));
        }
    }

    SimplicialComplex out = make_complex(tuples);
    // Keep the original weights; everything new stays at weight 1.
    for (int q = 0; q <= k.dim(); ++q) {
        const auto& level = k.simplices[static_cast<std::size_t>(q)];
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto idx = out.index_of(q, level[i]);
            out.weights[static_cast<std::size_t>(q)]
                       [static_cast<std::size_t>(*idx)] =
                k.weights[static_cast<std::size_t>(q)][i];
        }
    }
    return out;
}

std::vector<int> reference_cohomology(const SimplicialComplex& k) {
    return reference_dims(k, BoundarySubcomplex{});
}

std::vector<int> reference_cohomology(const SimplicialComplex& k,
                                      const BoundarySubcomplex& b) {
    return reference_dims(k, b);
}

SimplicialComplex reweight(const SimplicialComplex& k, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SimplicialComplex out = k;
    for (auto& level : out.weights) {
        for (auto& w : level) {
            const auto num = 1 + rng.next_below(12);
            const auto den = 1 + rng.next_below(7);
            w = Rational(static_cast<long long>(num),
                         static_cast<long long>(den));
        }
    }
    return out;
}

}  // namespace hodgepair
