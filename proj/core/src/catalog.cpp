#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "swob/charseries.hpp"

namespace swob {

namespace {

CatalogEntry entry(std::string name, std::string display, int lowest, int truncation, const char* ssw,
                   std::string provenance) {
    CatalogEntry e;
    e.name = std::move(name);
    e.display = std::move(display);
    e.codimension = 0;
    e.lowest_degree = lowest;
    e.truncation = truncation;
    e.ssw = parse_poly<WVar>(ssw);
    e.provenance = std::move(provenance);
    return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        entry("A2", "A2(0)", 2, 6,
              "w2+w1^2 + w3+w1^3 + w4+w2^2 + w5+w2^2*w1"
              " + w6+w4*w2+w2^3+w3*w2*w1+w4*w1^2+w3*w1^3+w2*w1^4+w1^6",
              "tabulated (cusp series, two printed sources agree)"),
        entry("A3", "A3(0)", 3, 6, "w2*w1+w1^3 + w4*w1+w2^2*w1 + w3^2+w4*w2+w2^3+w4*w1^2", "tabulated"),
        entry("A4", "A4(0)", 4, 6,
              "w1^4+w1*w3 + w1^5+w1^2*w3 + w1^6+w1*w2*w3+w1*w5+w2^3+w2*w4+w3^2", "tabulated"),
        entry("A5", "A5(0)", 5, 6, "w1^5+w1^2*w3 + w1^4*w2+w1^3*w3+w1^2*w2^2+w1^2*w4", "tabulated"),
        entry("I22", "I22(0)", 4, 6, "w1*w3+w2^2 + w1^2*w4+w1*w5+w2^3+w2*w4", "tabulated"),
        entry("Sigma1", "Sigma1(0)", 1, 6,
              "w1+w1^2+w1^3+w1^4 + w1^5+w2^2*w1+w3*w1^2 + w1^6+w2^2*w1^2+w3*w1^3",
              "tabulated; matches the determinantal formula"),
        entry("Sigma2", "Sigma2(0)", 4, 6,
              "w2^2+w3*w1 + w2^2*w1^2+w3*w1^3+w3*w2*w1+w3^2+w4*w1^2+w5*w1",
              "tabulated; matches the determinantal formula"),
    };
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    auto lower = [](std::string s) {
        for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    };
    const std::string key = lower(name);
    for (const auto& e : catalog())
        if (lower(e.name) == key || lower(e.display) == key) return e;
    throw std::invalid_argument("no catalog entry named " + name);
}

}  // namespace swob
