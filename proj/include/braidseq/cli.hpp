#pragma once

#include "braidseq/catalog.hpp"
#include "braidseq/quasitoric.hpp"
#include "braidseq/torus.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace braidseq {

// Command-line surface. Payload goes to `out` (stdout), diagnostics and
// per-step progress to `err` (stderr). Exit codes: 0 success, 1 verification
// or operational failure, 2 usage error.

namespace cli_detail {

inline std::string default_catalog_path() {
    if (const char* env = std::getenv("BRAIDSEQ_CATALOG")) return env;
    return "catalog.json";
}

inline void print_fingerprint_text(const KnotFingerprint& fp, std::ostream& out) {
    out << "components  = " << fp.components << "\n";
    out << "jones       = " << halfgrid_to_string(fp.jones) << "\n";
    if (fp.alexander) out << "alexander   = " << fp.alexander->to_string() << "\n";
    if (fp.determinant) out << "determinant = " << *fp.determinant << "\n";
    if (fp.signature) out << "signature   = " << *fp.signature << "\n";
}

inline int run_sequence(int p, int q, bool verify, bool json, std::ostream& out,
                        std::ostream& err) {
    const UnknottingSequence seq = assemble_sequence(p, q);
    if (json) {
        out << sequence_to_json(seq).dump(2) << "\n";
    } else {
        out << "K(" << p << "," << q << "): u = " << seq.u << ", " << seq.steps.size()
            << " steps\n";
        for (const SequenceStep& s : seq.steps) {
            out << "  [" << s.index << "] strands=" << s.word.strands() << " word='"
                << format_braid(s.word) << "'";
            if (s.flip) out << " flip@" << *s.flip;
            if (s.junction) out << " (junction)";
            out << "\n";
        }
    }
    if (!verify) return 0;
    const SequenceReport rep = verify_sequence(seq);
    for (const SequenceCheck& c : rep.checks) {
        err << (c.pass ? "[ ok ] " : "[FAIL] ") << "index " << c.index << " " << c.what;
        if (!c.detail.empty()) err << ": " << c.detail;
        err << "\n";
    }
    err << (rep.ok ? "sequence verified" : "sequence verification FAILED") << "\n";
    return rep.ok ? 0 : 1;
}

inline int run_table1(bool json, const std::string& catalog_path, std::ostream& out,
                      std::ostream& err) {
    Catalog cat = Catalog::load(catalog_path);
    bool all = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Table1Row& row : table1_rows()) {
        err << "checking " << row.label << " on K(" << row.p << "," << row.q << ")\n";
        const Table1RowReport rep = check_table1_row(row);
        all = all && rep.pass();
        if (rep.pass()) {
            CatalogEntry entry;
            entry.label = row.label;
            entry.fp = rep.selected_fp;
            entry.provenance = "table1 K(" + std::to_string(row.p) + "," + std::to_string(row.q) +
                               ") selection " + format_positions(row.selection);
            entry.claimed_u = row.claimed_u;
            cat.add(entry);
        }
        if (json) {
            nlohmann::ordered_json jr;
            jr["label"] = row.label;
            jr["p"] = row.p;
            jr["q"] = row.q;
            jr["u_torus"] = rep.u_torus;
            jr["mucd"] = row.mucd;
            jr["selection"] = row.selection;
            jr["claimed_u"] = row.claimed_u;
            jr["size_matches_u"] = rep.size_matches_u;
            jr["selection_in_mucd"] = rep.selection_in_mucd;
            jr["full_flip_unknots"] = rep.full_flip_unknots;
            jr["selection_nontrivial"] = rep.selection_nontrivial;
            jr["u_arithmetic"] = rep.u_arithmetic;
            jr["residual_unknots"] = rep.residual_unknots;
            jr["fingerprint"] = fingerprint_to_json(rep.selected_fp);
            rows.push_back(std::move(jr));
        } else {
            out << row.label << ": K(" << row.p << "," << row.q << ") u=" << rep.u_torus
                << " |mucd|=" << row.mucd.size() << " |selection|=" << row.selection.size()
                << " claimed_u=" << row.claimed_u << " -> " << (rep.pass() ? "pass" : "FAIL")
                << "\n";
        }
    }
    if (json) {
        nlohmann::ordered_json payload;
        payload["rows"] = std::move(rows);
        payload["all_pass"] = all;
        out << payload.dump(2) << "\n";
    } else {
        out << (all ? "all rows pass" : "some rows FAILED") << "\n";
    }
    cat.save(catalog_path);
    err << "catalog written to " << catalog_path << "\n";
    return all ? 0 : 1;
}

inline int run_quasitoric(const std::string& family, int q, bool raw, bool json,
                          std::ostream& out, std::ostream&) {
    const QuasitoricFamily f = parse_family(family);
    if (raw) {
        const BraidWord w = quasitoric_braid(f, q);
        const KnotFingerprint fp = fingerprint(w);
        if (json) {
            nlohmann::ordered_json j;
            j["family"] = std::string(1, family_letter(f));
            j["q"] = q;
            j["word"] = format_braid(w);
            j["fingerprint"] = fingerprint_to_json(fp);
            out << j.dump(2) << "\n";
        } else {
            out << "family " << family_letter(f) << " q=" << q << " word='" << format_braid(w)
                << "'\n";
            print_fingerprint_text(fp, out);
        }
        return 0;
    }
    const QuasitoricResult r = quasitoric_check(f, q);
    if (json) {
        out << quasitoric_to_json(r).dump(2) << "\n";
    } else {
        out << "family " << family_letter(r.family) << " q=" << r.q
            << ": pattern = " << format_positions(r.pattern.positions) << ", bound = " << r.bound
            << ", unknot after pattern = " << (r.is_unknot_after_pattern ? "yes" : "NO") << "\n";
        print_fingerprint_text(r.fp, out);
    }
    return r.is_unknot_after_pattern ? 0 : 1;
}

inline int run_invariants(const std::string& word_text, int strands, bool json, std::ostream& out,
                          std::ostream&) {
    const BraidWord w = parse_braid(word_text, strands);
    const KnotFingerprint fp = fingerprint(w);
    if (json) out << fingerprint_to_json(fp).dump(2) << "\n";
    else print_fingerprint_text(fp, out);
    return 0;
}

inline int run_catalog_add(const std::string& catalog_path, const std::string& label,
                           const std::string& word_text, int strands,
                           const std::string& provenance, std::optional<long long> claimed_u,
                           bool json, std::ostream& out, std::ostream&) {
    Catalog cat = Catalog::load(catalog_path);
    CatalogEntry entry;
    entry.label = label;
    entry.fp = fingerprint(parse_braid(word_text, strands));
    entry.provenance = provenance;
    entry.claimed_u = claimed_u;
    cat.add(entry);
    cat.save(catalog_path);
    if (json) {
        nlohmann::ordered_json j;
        j["label"] = label;
        j["fingerprint"] = fingerprint_to_json(entry.fp);
        j["catalog"] = catalog_path;
        out << j.dump(2) << "\n";
    } else {
        out << "added '" << label << "' to " << catalog_path << "\n";
    }
    return 0;
}

inline int run_catalog_lookup(const std::string& catalog_path, const std::string& word_text,
                              int strands, bool json, std::ostream& out, std::ostream&) {
    const Catalog cat = Catalog::load(catalog_path);
    const KnotFingerprint fp = fingerprint(parse_braid(word_text, strands));
    const CatalogMatches m = cat.lookup_with_mirrors(fp);
    if (json) {
        nlohmann::ordered_json j;
        j["matches"] = m.exact;
        j["mirror_matches"] = m.mirror;
        out << j.dump(2) << "\n";
    } else {
        if (m.exact.empty() && m.mirror.empty()) out << "no matches\n";
        for (const std::string& label : m.exact) out << label << "\n";
        for (const std::string& label : m.mirror) out << "mirror of " << label << "\n";
    }
    return 0;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"unknotting sequences for torus knots as explicit braid words"};
    app.require_subcommand(1);
    std::string catalog_path = cli_detail::default_catalog_path();
    app.add_option("--catalog", catalog_path, "catalog JSON file (or $BRAIDSEQ_CATALOG)");

    int p = 0, q = 0, strands = 0;
    bool verify = false, raw = false;
    std::string family, word_text, label;
    std::string provenance = "cli";
    long long claimed_u_arg = -1;
    bool json_sequence = false, json_table1 = false, json_quasi = false, json_inv = false;
    bool json_cat_add = false, json_cat_lookup = false;

    CLI::App* c_seq = app.add_subcommand("sequence", "assemble the descent for K(p,q)");
    c_seq->add_option("p", p, "strand count of the toric word")->required();
    c_seq->add_option("q", q, "power of the toric word")->required();
    c_seq->add_flag("--verify", verify, "check every transition and set the exit code");
    c_seq->add_flag("--json", json_sequence, "JSON payload");

    CLI::App* c_t1 = app.add_subcommand("table1", "run the fixed crossing-change fixtures");
    c_t1->add_flag("--json", json_table1, "JSON payload");

    CLI::App* c_qt = app.add_subcommand("quasitoric", "quasitoric family checks");
    c_qt->add_option("family", family, "A or B")->required();
    c_qt->add_option("q", q, "repetition count")->required();
    c_qt->add_flag("--raw", raw, "report the unflipped closure instead");
    c_qt->add_flag("--json", json_quasi, "JSON payload");

    CLI::App* c_inv = app.add_subcommand("invariants", "fingerprint of a braid closure");
    c_inv->add_option("word", word_text, "braid word, signed generator indices")->required();
    c_inv->add_option("strands", strands, "strand count")->required();
    c_inv->add_flag("--json", json_inv, "JSON payload");

    CLI::App* c_cat = app.add_subcommand("catalog", "fingerprint catalog");
    c_cat->require_subcommand(1);
    CLI::App* c_add = c_cat->add_subcommand("add", "add a labelled closure");
    c_add->add_option("label", label, "catalog label")->required();
    c_add->add_option("word", word_text, "braid word")->required();
    c_add->add_option("strands", strands, "strand count")->required();
    c_add->add_option("--provenance", provenance, "how the entry was produced");
    c_add->add_option("--claimed-u", claimed_u_arg, "claimed unknotting number");
    c_add->add_flag("--json", json_cat_add, "JSON payload");
    CLI::App* c_look = c_cat->add_subcommand("lookup", "find labels matching a closure");
    c_look->add_option("word", word_text, "braid word")->required();
    c_look->add_option("strands", strands, "strand count")->required();
    c_look->add_flag("--json", json_cat_lookup, "JSON payload");

    // The global --catalog should be usable in the natural trailing position
    // (braidseq table1 --catalog x), so unmatched options rise to the parent.
    for (CLI::App* sub : {c_seq, c_t1, c_qt, c_inv, c_cat, c_add, c_look}) sub->fallthrough();

    try {
        std::vector<const char*> argv;
        argv.push_back("braidseq");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (c_seq->parsed()) {
            if (p < 2 || q < 1) throw std::invalid_argument("sequence: need p >= 2 and q >= 1");
            return cli_detail::run_sequence(p, q, verify, json_sequence, out, err);
        }
        if (c_t1->parsed()) return cli_detail::run_table1(json_table1, catalog_path, out, err);
        if (c_qt->parsed()) {
            if (q < 1) throw std::invalid_argument("quasitoric: need q >= 1");
            return cli_detail::run_quasitoric(family, q, raw, json_quasi, out, err);
        }
        if (c_inv->parsed()) return cli_detail::run_invariants(word_text, strands, json_inv, out, err);
        if (c_add->parsed())
            return cli_detail::run_catalog_add(
                catalog_path, label, word_text, strands, provenance,
                claimed_u_arg >= 0 ? std::optional<long long>(claimed_u_arg) : std::nullopt,
                json_cat_add, out, err);
        if (c_look->parsed())
            return cli_detail::run_catalog_lookup(catalog_path, word_text, strands,
                                                  json_cat_lookup, out, err);
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace braidseq
