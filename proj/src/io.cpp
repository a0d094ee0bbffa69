#include "ratcat/io.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace ratcat {

using nlohmann::json;

std::string complex_to_json(const SimplicialComplex& k) {
    json j;
    j["vertices"] = json::array();
    for (long v = 0; v < k.vertex_count(); ++v) j["vertices"].push_back(v);
    j["facets"] = k.facets();
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<long> labels = j.at("vertices").get<std::vector<long>>();
    std::vector<long> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("complex_from_json: repeated vertex label");
    std::map<long, int> index;
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) {
        std::vector<int> face;
        for (long v : f.get<std::vector<long>>()) {
            auto it = index.find(v);
            if (it == index.end())
                throw std::invalid_argument("complex_from_json: facet vertex not in ground set");
            face.push_back(it->second);
        }
        facets.push_back(std::move(face));
    }
    return SimplicialComplex(static_cast<long>(labels.size()), facets);
}

std::string complex_to_json(const AssComplex& k) {
    json j;
    j["vertices"] = json::array();
    for (const Diagonal& d : k.vertices) j["vertices"].push_back({d.u, d.v});
    j["facets"] = json::array();
    for (std::uint64_t m : k.complex.facet_masks()) {
        json facet = json::array();
        for (const Diagonal& d : k.face_of(m)) facet.push_back({d.u, d.v});
        j["facets"].push_back(facet);
    }
    return j.dump();
}

}  // namespace ratcat
