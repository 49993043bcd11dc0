// Fingerprint a few closures and look one up in an in-memory catalog.
#include "braidseq/catalog.hpp"

#include <iostream>

int main() {
    using namespace braidseq;

    const BraidWord trefoil = parse_braid("1 1 1", 2);
    const KnotFingerprint fp = fingerprint(trefoil);
    std::cout << "closure of '1 1 1' on 2 strands:\n"
              << fingerprint_to_json(fp).dump(2) << "\n";

    Catalog cat = Catalog::seeded();
    cat.add({"trefoil", fp, "sample", 1});

    const BraidWord mirror = trefoil.inverse();
    const CatalogMatches m = cat.lookup_with_mirrors(fingerprint(mirror));
    for (const auto& label : m.exact) std::cout << "exact match: " << label << "\n";
    for (const auto& label : m.mirror) std::cout << "mirror of: " << label << "\n";
    return 0;
}
