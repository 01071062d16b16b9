#include "tightsf/tightsf.h"

#include "tightsf/classifier.hpp"
#include "tightsf/reports.hpp"
#include "tightsf/seifert.hpp"

#include <array>
#include <new>
#include <string>

using namespace tightsf;

struct tsf_manifold {
    SeifertData data;
    std::string text;
    std::string e0;
    std::array<std::string, 3> invariants;
    std::string h1;
    std::string family;
};

struct tsf_classification {
    ClassificationResult result;
    std::string count;
    std::string fillability;
};

struct tsf_report {
    Report report;
    std::string json;
};

namespace {

thread_local std::string last_error;

template <class F>
tsf_status guarded(F&& body)
{
    try {
        last_error.clear();
        body();
        return TSF_OK;
    } catch (const ParseError& e) {
        last_error = e.what();
        return TSF_E_PARSE;
    } catch (const DomainError& e) {
        last_error = e.what();
        return TSF_E_DOMAIN;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return TSF_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return TSF_E_INTERNAL;
    }
}

tsf_status missing(const char* what)
{
    last_error = std::string(what) + " is NULL";
    return TSF_E_ARGUMENT;
}

template <class F>
tsf_status make_report(tsf_report** out, F&& build)
{
    if (!out)
        return missing("out");
    *out = nullptr;
    return guarded([&] {
        auto* r = new tsf_report{build(), {}};
        r->json = r->report.json();
        *out = r;
    });
}

std::optional<std::string> optional_arg(const char* s)
{
    return s ? std::optional<std::string>(s) : std::nullopt;
}

}  // namespace

extern "C" {

const char* tsf_version(void)
{
    return kVersion;
}

const char* tsf_status_string(tsf_status status)
{
    switch (status) {
    case TSF_OK:
        return "ok";
    case TSF_E_PARSE:
        return "parse error";
    case TSF_E_DOMAIN:
        return "domain error";
    case TSF_E_ARGUMENT:
        return "invalid argument";
    case TSF_E_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* tsf_last_error(void)
{
    return last_error.c_str();
}

tsf_status tsf_manifold_parse(const char* spec, tsf_manifold** out)
{
    if (!spec)
        return missing("spec");
    if (!out)
        return missing("out");
    *out = nullptr;
    return guarded([&] {
        auto* m = new tsf_manifold;
        try {
            m->data = parse_seifert(spec);
            m->text = to_string(m->data);
            m->e0 = m->data.e0.get_str();
            for (std::size_t i = 0; i < 3; ++i)
                m->invariants[i] = to_string(m->data.r[i]);
            m->h1 = h1_order(m->data).get_str();
            for (const FamilyTag& t : detect_family(m->data))
                m->family += (m->family.empty() ? "" : ",") + t.str();
        } catch (...) {
            delete m;
            throw;
        }
        *out = m;
    });
}

void tsf_manifold_free(tsf_manifold* m)
{
    delete m;
}

const char* tsf_manifold_string(const tsf_manifold* m)
{
    return m ? m->text.c_str() : nullptr;
}

const char* tsf_manifold_e0(const tsf_manifold* m)
{
    return m ? m->e0.c_str() : nullptr;
}

tsf_status tsf_manifold_invariant(const tsf_manifold* m, int i, const char** out)
{
    if (!m)
        return missing("manifold");
    if (!out)
        return missing("out");
    if (i < 1 || i > 3) {
        last_error = "invariant index must be 1, 2 or 3";
        return TSF_E_ARGUMENT;
    }
    *out = m->invariants[static_cast<std::size_t>(i - 1)].c_str();
    return TSF_OK;
}

const char* tsf_manifold_h1_order(const tsf_manifold* m)
{
    return m ? m->h1.c_str() : nullptr;
}

const char* tsf_manifold_family(const tsf_manifold* m)
{
    return m ? m->family.c_str() : nullptr;
}

tsf_status tsf_manifold_classify(const tsf_manifold* m, tsf_classification** out)
{
    if (!m)
        return missing("manifold");
    if (!out)
        return missing("out");
    *out = nullptr;
    return guarded([&] {
        auto* c = new tsf_classification{classify(m->data), {}, {}};
        if (c->result.count)
            c->count = c->result.count->get_str();
        c->fillability = c->result.fillability.str();
        *out = c;
    });
}

tsf_count_status tsf_classification_status(const tsf_classification* c)
{
    if (!c)
        return TSF_COUNT_UNKNOWN;
    switch (c->result.status) {
    case CountStatus::exact:
        return TSF_COUNT_EXACT;
    case CountStatus::infinite:
        return TSF_COUNT_INFINITE;
    case CountStatus::unknown:
        break;
    }
    return TSF_COUNT_UNKNOWN;
}

const char* tsf_classification_count(const tsf_classification* c)
{
    if (!c || !c->result.count)
        return nullptr;
    return c->count.c_str();
}

const char* tsf_classification_case(const tsf_classification* c)
{
    return c ? c->result.certificate.case_tag.c_str() : nullptr;
}

const char* tsf_classification_fillability(const tsf_classification* c)
{
    return c ? c->fillability.c_str() : nullptr;
}

void tsf_classification_free(tsf_classification* c)
{
    delete c;
}

tsf_status tsf_cmd_cf(const char* slope, tsf_report** out)
{
    if (!slope)
        return missing("slope");
    return make_report(out, [&] { return cf_report(slope); });
}

tsf_status tsf_cmd_bypass(const char* dividing, const char* ruling, const char* side, int oracle, tsf_report** out)
{
    if (!dividing || !ruling || !side)
        return missing("dividing, ruling or side");
    return make_report(out, [&] { return bypass_report(dividing, ruling, side, oracle != 0); });
}

tsf_status tsf_cmd_seifert(const char* spec, tsf_report** out)
{
    if (!spec)
        return missing("spec");
    return make_report(out, [&] { return seifert_report(spec); });
}

tsf_status tsf_cmd_slopes(const char* spec, const char* n1, const char* n2, const char* n3, tsf_report** out)
{
    if (!spec || !n1)
        return missing("spec or n1");
    return make_report(out, [&] { return slopes_report(spec, n1, optional_arg(n2), optional_arg(n3)); });
}

tsf_status tsf_cmd_floer(long n, int has_index, long i, long j, tsf_report** out)
{
    return make_report(out, [&] {
        return floer_report(n, has_index ? std::optional<std::pair<long, long>>({i, j}) : std::nullopt);
    });
}

tsf_status tsf_cmd_theta(const char* diagram_json, tsf_report** out)
{
    if (!diagram_json)
        return missing("diagram");
    return make_report(out, [&] { return theta_report(diagram_json); });
}

tsf_status tsf_cmd_classify(const char* spec, tsf_report** out)
{
    if (!spec)
        return missing("spec");
    return make_report(out, [&] { return classify_report(spec); });
}

tsf_status tsf_cmd_selftest(tsf_report** out)
{
    return make_report(out, [] { return selftest_report(); });
}

const char* tsf_report_json(const tsf_report* r)
{
    return r ? r->json.c_str() : nullptr;
}

const char* tsf_report_text(const tsf_report* r)
{
    return r ? r->report.text.c_str() : nullptr;
}

int tsf_report_exit_code(const tsf_report* r)
{
    return r ? r->report.exit_code : 1;
}

void tsf_report_free(tsf_report* r)
{
    delete r;
}

}  // extern "C"
