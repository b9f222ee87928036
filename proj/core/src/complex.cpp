#include "anumber/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "anumber/error.hpp"

namespace anumber {

namespace {

// Drops faces contained in another face; input must be deduplicated.
std::vector<Face> maximal_faces(std::vector<Face> faces, int vertex_count) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Face> kept;
  std::vector<std::vector<std::size_t>> containing(static_cast<std::size_t>(vertex_count));
  for (auto& face : faces) {
    if (face.empty()) continue;
    const std::vector<std::size_t>* shortest = nullptr;
    for (int v : face) {
      const auto& list = containing[static_cast<std::size_t>(v)];
      if (!shortest || list.size() < shortest->size()) shortest = &list;
    }
    bool covered = false;
    for (std::size_t id : *shortest) {
      const Face& big = kept[id];
      if (big.size() > face.size() &&
          std::includes(big.begin(), big.end(), face.begin(), face.end())) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    for (int v : face) containing[static_cast<std::size_t>(v)].push_back(kept.size());
    kept.push_back(std::move(face));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<VertexSubset> labels, std::vector<Face> facets) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return CanonicalOrder{}(labels[a], labels[b]); });
  for (int k = 1; k < n; ++k) {
    if (labels[order[k]] == labels[order[k - 1]]) {
      throw DomainError("duplicate vertex label " + labels[order[k]].to_string());
    }
  }
  std::vector<int> remap(static_cast<std::size_t>(n));
  labels_.reserve(labels.size());
  for (int k = 0; k < n; ++k) {
    remap[order[k]] = k;
    labels_.push_back(labels[order[k]]);
  }

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (auto& facet : facets) {
    for (int& v : facet) {
      if (v < 0 || v >= n) throw DomainError("facet refers to vertex " + std::to_string(v));
      v = remap[v];
      used[v] = 1;
    }
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
  }
  for (int v = 0; v < n; ++v) {
    if (!used[v]) facets.push_back(Face{v});
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  facets_ = maximal_faces(std::move(facets), n);
}

int SimplicialComplex::dimension() const {
  std::size_t largest = 0;
  for (const auto& f : facets_) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

int SimplicialComplex::index_of(VertexSubset label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label, CanonicalOrder{});
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool SimplicialComplex::has_face(std::span<const VertexSubset> labels) const {
  Face face;
  for (auto label : labels) {
    int v = index_of(label);
    if (v < 0) return false;
    face.push_back(v);
  }
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
  if (face.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return std::includes(f.begin(), f.end(), face.begin(), face.end());
  });
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const std::function<bool(VertexSubset)>& keep) {
  const auto& labels = complex.labels();
  std::vector<int> remap(labels.size(), -1);
  std::vector<VertexSubset> kept_labels;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (keep(labels[v])) {
      remap[v] = static_cast<int>(kept_labels.size());
      kept_labels.push_back(labels[v]);
    }
  }
  std::vector<Face> facets;
  facets.reserve(complex.facets().size());
  for (const auto& facet : complex.facets()) {
    Face restricted;
    for (int v : facet) {
      if (remap[static_cast<std::size_t>(v)] >= 0) {
        restricted.push_back(remap[static_cast<std::size_t>(v)]);
      }
    }
    if (!restricted.empty()) facets.push_back(std::move(restricted));
  }
  return SimplicialComplex(std::move(kept_labels), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& complex, VertexSubset apex) {
  auto labels = complex.labels();
  const int apex_index = static_cast<int>(labels.size());
  labels.push_back(apex);
  std::vector<Face> facets;
  for (auto facet : complex.facets()) {
    facet.push_back(apex_index);
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) facets.push_back(Face{apex_index});
  return SimplicialComplex(std::move(labels), std::move(facets));
}

std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& complex,
                                                  std::size_t max_faces) {
  std::size_t raw = 0;
  for (const auto& facet : complex.facets()) {
    if (facet.size() >= 40) throw ResourceLimit("facet too large for face enumeration");
    raw += std::size_t{1} << facet.size();
    if (raw > 64 * max_faces) {
      throw ResourceLimit("face enumeration exceeds the cap of " + std::to_string(max_faces) +
                          " faces");
    }
  }
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(complex.dimension() + 2));
  out[0].push_back(Face{});
  for (const auto& facet : complex.facets()) {
    const std::size_t count = std::size_t{1} << facet.size();
    for (std::size_t mask = 1; mask < count; ++mask) {
      Face face;
      for (std::size_t k = 0; k < facet.size(); ++k) {
        if ((mask >> k) & 1U) face.push_back(facet[k]);
      }
      out[face.size()].push_back(std::move(face));
    }
  }
  std::size_t total = 0;
  for (auto& level : out) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    total += level.size();
  }
  if (total > max_faces) {
    throw ResourceLimit("complex has " + std::to_string(total) + " faces, above the cap of " +
                        std::to_string(max_faces));
  }
  return out;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::int64_t> f;
  for (const auto& level : faces_by_dimension(complex)) {
    f.push_back(static_cast<std::int64_t>(level.size()));
  }
  return f;
}

std::vector<std::int64_t> h_vector_from_f(std::span<const std::int64_t> f) {
  if (f.empty()) return {};
  const long d = static_cast<long>(f.size()) - 1;
  auto choose = [](long n, long k) -> std::int64_t {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (long j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
  };
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (long k = 0; k <= d; ++k) {
    for (long i = 0; i <= k; ++i) {
      const std::int64_t sign = (k - i) % 2 == 0 ? 1 : -1;
      h[static_cast<std::size_t>(k)] += sign * choose(d - i, k - i) * f[static_cast<std::size_t>(i)];
    }
  }
  return h;
}

std::vector<std::int64_t> h_vector(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw DomainError("h-vector requires a pure complex");
  return h_vector_from_f(f_vector(complex));
}

std::string complex_to_json(const SimplicialComplex& complex) {
  nlohmann::json labels = nlohmann::json::array();
  for (auto label : complex.labels()) {
    nlohmann::json members = nlohmann::json::array();
    for (int v : label) members.push_back(v);
    labels.push_back(std::move(members));
  }
  nlohmann::json doc;
  doc["vertex_labels"] = std::move(labels);
  doc["facets"] = complex.facets();
  return doc.dump();
}

SimplicialComplex complex_from_json(std::string_view text) {
  try {
    auto doc = nlohmann::json::parse(text);
    std::vector<VertexSubset> labels;
    for (const auto& members : doc.at("vertex_labels")) {
      VertexSubset label;
      for (const auto& v : members) label = label.with(v.get<int>());
      labels.push_back(label);
    }
    auto facets = doc.at("facets").get<std::vector<Face>>();
    return SimplicialComplex(std::move(labels), std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid complex JSON: ") + e.what());
  }
}

}  // namespace anumber
