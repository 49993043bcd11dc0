#pragma once

#include "braidseq/fingerprint.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braidseq {

// Persistent fingerprint catalog: label -> invariant tuple, stored as one
// pretty-printed JSON file sorted by label so diffs stay readable. A fresh
// store is seeded with the unknot so lookups have a base anchor.

struct CatalogEntry {
    std::string label;
    KnotFingerprint fp;
    std::string provenance;
    std::optional<long long> claimed_u;

    bool operator==(const CatalogEntry& o) const {
        return label == o.label && fp == o.fp && provenance == o.provenance &&
               claimed_u == o.claimed_u;
    }
};

struct CatalogMatches {
    std::vector<std::string> exact;
    std::vector<std::string> mirror;  // labels whose mirror image matches
};

class Catalog {
public:
    static Catalog seeded() {
        Catalog c;
        CatalogEntry unknot;
        unknot.label = "unknot";
        unknot.fp = fingerprint(BraidWord::identity(1));
        unknot.provenance = "seed";
        unknot.claimed_u = 0;
        c.entries_.emplace("unknot", std::move(unknot));
        return c;
    }

    // Idempotent on identical fingerprints; a label may not change meaning.
    void add(const CatalogEntry& entry) {
        if (entry.label.empty()) throw std::invalid_argument("catalog: empty label");
        auto it = entries_.find(entry.label);
        if (it == entries_.end()) {
            entries_.emplace(entry.label, entry);
            return;
        }
        if (it->second.fp != entry.fp)
            throw std::runtime_error("catalog: label '" + entry.label +
                                     "' already maps to a different fingerprint");
        it->second = entry;  // refresh provenance and claimed_u
    }

    std::vector<std::string> lookup(const KnotFingerprint& fp) const {
        std::vector<std::string> out;
        for (const auto& [label, e] : entries_)
            if (e.fp == fp) out.push_back(label);
        return out;
    }

    CatalogMatches lookup_with_mirrors(const KnotFingerprint& fp) const {
        CatalogMatches out;
        for (const auto& [label, e] : entries_) {
            if (e.fp == fp) out.exact.push_back(label);
            else if (e.fp.mirrored() == fp) out.mirror.push_back(label);
        }
        return out;
    }

    const CatalogEntry* find(const std::string& label) const {
        auto it = entries_.find(label);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return entries_.size(); }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [label, e] : entries_) {
            nlohmann::ordered_json je;
            je["label"] = e.label;
            je["fingerprint"] = fingerprint_to_json(e.fp);
            je["provenance"] = e.provenance;
            if (e.claimed_u) je["claimed_u"] = *e.claimed_u;
            arr.push_back(std::move(je));
        }
        return arr;
    }

    static Catalog from_json(const nlohmann::json& arr) {
        if (!arr.is_array()) throw std::runtime_error("catalog: top-level JSON must be an array");
        Catalog c;
        for (const auto& je : arr) {
            CatalogEntry e;
            e.label = je.at("label").get<std::string>();
            e.fp = fingerprint_from_json(je.at("fingerprint"));
            e.provenance = je.at("provenance").get<std::string>();
            if (je.contains("claimed_u")) e.claimed_u = je.at("claimed_u").get<long long>();
            c.add(e);
        }
        return c;
    }

    // Missing file -> fresh seeded store; malformed file -> error.
    static Catalog load(const std::string& path) {
        std::ifstream in(path);
        if (!in) return seeded();
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("catalog: cannot parse " + path + ": " + e.what());
        }
        return from_json(j);
    }

    void save(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("catalog: cannot write " + path);
        out << to_json().dump(2) << "\n";
    }

private:
    std::map<std::string, CatalogEntry> entries_;
};

}  // namespace braidseq
