#include "knotnum/knotnum.h"

#include "knotnum/audit.hpp"
#include "knotnum/fixtures.hpp"
#include "knotnum/notation.hpp"
#include "knotnum/serialize.hpp"
#include "knotnum/table.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

struct kn_table {
    knotnum::ClassificationTable table;
};

namespace {

thread_local std::string g_last_error;

kn_status fail(kn_status s, const std::string& message) {
    g_last_error = message;
    return s;
}

kn_status ok() {
    g_last_error.clear();
    return KN_OK;
}

char* dup(const std::string& s) {
    auto* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p)
        std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

kn_status put_string(const std::string& s, char** out) {
    if (!out)
        return fail(KN_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = dup(s);
    if (!*out)
        return fail(KN_ERR_INTERNAL, "out of memory");
    return ok();
}

template <class F>
kn_status guarded(F&& f) {
    try {
        return f();
    } catch (const knotnum::ParseError& e) {
        return fail(KN_ERR_PARSE, e.what());
    } catch (const knotnum::UnknownAtom& e) {
        return fail(KN_ERR_PARSE, e.what());
    } catch (const knotnum::BuildError& e) {
        return fail(KN_ERR_BUILD, e.what());
    } catch (const knotnum::Error& e) {
        return fail(KN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(KN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(KN_ERR_INTERNAL, "unknown error");
    }
}

} // namespace

extern "C" {

const char* kn_last_error(void) { return g_last_error.c_str(); }

const char* kn_status_name(kn_status status) {
    switch (status) {
    case KN_OK:
        return "ok";
    case KN_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case KN_ERR_PARSE:
        return "parse error";
    case KN_ERR_BUILD:
        return "build error";
    case KN_ERR_NOT_FOUND:
        return "not found";
    case KN_ERR_IO:
        return "i/o error";
    case KN_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void kn_string_free(char* s) { std::free(s); }

kn_status kn_table_build(int max_step, kn_table** out) {
    if (!out)
        return fail(KN_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] {
        auto t = std::make_unique<kn_table>(kn_table{knotnum::build_table(max_step)});
        *out = t.release();
        return ok();
    });
}

void kn_table_free(kn_table* table) { delete table; }

int kn_table_max_step(const kn_table* table) { return table ? table->table.max_step() : 0; }

uint64_t kn_table_max_position(const kn_table* table) { return table ? table->table.max_position() : 0; }

kn_status kn_table_knot_at(const kn_table* table, uint64_t position, char** knot_out) {
    if (!table)
        return fail(KN_ERR_INVALID_ARGUMENT, "null table");
    if (position == 2)
        return fail(KN_ERR_NOT_FOUND, "unassigned (reserved; related to 3_1)");
    const auto k = table->table.knot_at(position);
    if (!k)
        return fail(KN_ERR_NOT_FOUND, "position " + std::to_string(position) + " is outside the table");
    return put_string(k->text(), knot_out);
}

kn_status kn_table_position_of(const kn_table* table, const char* notation, uint64_t* position_out) {
    if (!table || !notation || !position_out)
        return fail(KN_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto k = knotnum::parse(notation);
        const auto p = table->table.position_of(k);
        if (!p)
            return fail(KN_ERR_NOT_FOUND, k.text() + " is not assigned within positions 1.." +
                                              std::to_string(table->table.max_position()));
        *position_out = *p;
        return ok();
    });
}

kn_status kn_table_serialize(const kn_table* table, kn_format format, char** out) {
    if (!table)
        return fail(KN_ERR_INVALID_ARGUMENT, "null table");
    return guarded([&] {
        switch (format) {
        case KN_FORMAT_TSV:
            return put_string(knotnum::table_tsv(table->table), out);
        case KN_FORMAT_JSON:
            return put_string(knotnum::table_json(table->table), out);
        }
        return fail(KN_ERR_INVALID_ARGUMENT, "unknown format");
    });
}

kn_status kn_table_override(kn_table* table, uint64_t position, const char* notation) {
    if (!table || !notation)
        return fail(KN_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        table->table.override_position(position, knotnum::parse(notation));
        return ok();
    });
}

kn_status kn_table_verify(const kn_table* table, size_t* mismatches_out, size_t* rows_checked_out,
                          char** report_out) {
    if (!table)
        return fail(KN_ERR_INVALID_ARGUMENT, "null table");
    return guarded([&] {
        const auto rep = knotnum::verify_against_fixtures(table->table);
        if (mismatches_out)
            *mismatches_out = rep.mismatches.size();
        if (rows_checked_out)
            *rows_checked_out = rep.rows_checked;
        if (report_out) {
            std::string s;
            for (const auto& m : rep.mismatches)
                s += std::to_string(m.position) + '\t' + m.field + '\t' + m.expected + '\t' + m.actual + '\n';
            return put_string(s, report_out);
        }
        return ok();
    });
}

kn_status kn_table_step_json(const kn_table* table, int step, char** json_out) {
    if (!table)
        return fail(KN_ERR_INVALID_ARGUMENT, "null table");
    return guarded([&] {
        const auto& s = table->table.step(step);
        nlohmann::ordered_json j;
        j["step"] = step;
        j["outgoing"] = s.outgoing;
        auto chains = nlohmann::ordered_json::array();
        for (const auto& c : s.chains)
            chains.push_back({{"path", c.path}, {"ends_in_jumper", c.ends_in_jumper}});
        j["chains"] = std::move(chains);
        auto incoming = nlohmann::ordered_json::array();
        for (const auto& k : s.incoming)
            incoming.push_back(k.text());
        j["incoming"] = std::move(incoming);
        j["diagnostics"] = s.diagnostics;
        return put_string(j.dump(2), json_out);
    });
}

kn_status kn_jumpers_json(int step, char** json_out) {
    return guarded([&] {
        if (step < 2 || step > 30)
            return fail(KN_ERR_INVALID_ARGUMENT, "step must be in [2, 30]");
        return put_string(knotnum::numbers_json(knotnum::jumpers(knotnum::StepIndex(step))), json_out);
    });
}

kn_status kn_normalize(const char* notation, char** canonical_out) {
    if (!notation)
        return fail(KN_ERR_INVALID_ARGUMENT, "null notation");
    return guarded([&] { return put_string(knotnum::parse(notation).text(), canonical_out); });
}

kn_status kn_alt_crossings(const char* notation, int64_t* out) {
    if (!notation || !out)
        return fail(KN_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = knotnum::parse(notation).alt_crossings();
        return ok();
    });
}

kn_status kn_audit(const char* claim, const kn_audit_options* options, int with_timing, char** json_out,
                   kn_verdict* verdict_out) {
    if (!claim || !options)
        return fail(KN_ERR_INVALID_ARGUMENT, "null argument");
    const auto c = knotnum::claim_from_tag(claim);
    if (!c)
        return fail(KN_ERR_INVALID_ARGUMENT, std::string("unknown claim '") + claim + "'");
    return guarded([&] {
        knotnum::AuditOptions o;
        o.limit = options->limit;
        o.max_step = options->max_step;
        o.threads = options->threads;
        o.budget_secs = options->budget_secs;
        const auto reports = knotnum::audit_range({*c}, o);
        const auto& r = reports.front();
        if (verdict_out)
            *verdict_out = r.truncated ? KN_VERDICT_TRUNCATED : r.pass ? KN_VERDICT_PASS : KN_VERDICT_FAIL;
        return put_string(knotnum::report_json(r, with_timing != 0), json_out);
    });
}

} // extern "C"
