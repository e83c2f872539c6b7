#include "cornerhom/cornerhom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "cornerhom/builders.hpp"
#include "cornerhom/document.hpp"
#include "cornerhom/homology.hpp"
#include "cornerhom/products.hpp"
#include "cornerhom/report.hpp"
#include "cornerhom/selftest.hpp"

struct ch_complex
{
    cornerhom::FaceComplex value;
};

namespace {

thread_local std::string last_error;

ch_status fail(ch_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string violations_text(const cornerhom::ValidationReport& report)
{
    std::ostringstream out;
    if (report.ok) {
        out << "valid\n";
        return out.str();
    }
    for (const auto& v : report.violations) {
        out << "violation " << v.rule << ":";
        for (const auto& f : v.faces)
            out << " " << f;
        out << "\n";
    }
    return out.str();
}

ch_status require_valid_handle(const ch_complex* c)
{
    auto report = cornerhom::validate(c->value);
    if (!report.ok)
        return fail(CH_VALIDATION_ERROR, "invalid complex\n" + violations_text(report));
    return CH_OK;
}

// Maps exceptions thrown by the core onto status codes.
template <class F>
ch_status guarded(F&& body)
{
    try {
        last_error.clear();
        return body();
    } catch (const cornerhom::DocumentError& e) {
        return fail(CH_PARSE_ERROR, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CH_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(CH_HYPOTHESIS_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CH_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(CH_INTERNAL_ERROR, e.what());
    }
}

#define CH_REQUIRE(cond)                                                          \
    do {                                                                          \
        if (!(cond))                                                              \
            return fail(CH_INVALID_ARGUMENT, "null argument: " #cond);            \
    } while (0)

} // namespace

extern "C" {

const char* ch_version(void)
{
    return "0.1.0";
}

const char* ch_last_error(void)
{
    return last_error.c_str();
}

const char* ch_status_name(ch_status status)
{
    switch (status) {
    case CH_OK:
        return "ok";
    case CH_INVALID_ARGUMENT:
        return "invalid argument";
    case CH_PARSE_ERROR:
        return "parse error";
    case CH_VALIDATION_ERROR:
        return "validation error";
    case CH_IO_ERROR:
        return "i/o error";
    case CH_HYPOTHESIS_ERROR:
        return "hypothesis not satisfied";
    case CH_INTERNAL_ERROR:
        return "internal error";
    }
    return "unknown";
}

void ch_string_free(char* s)
{
    std::free(s);
}

ch_status ch_complex_from_builder(const char* name, ch_complex** out)
{
    CH_REQUIRE(name && out);
    return guarded([&] {
        *out = new ch_complex{cornerhom::build(std::string_view(name))};
        return CH_OK;
    });
}

ch_status ch_complex_from_document(const char* text, ch_complex** out)
{
    CH_REQUIRE(text && out);
    return guarded([&] {
        *out = new ch_complex{cornerhom::parse_document(text)};
        return CH_OK;
    });
}

ch_status ch_complex_load(const char* path, ch_complex** out)
{
    CH_REQUIRE(path && out);
    return guarded([&] {
        try {
            *out = new ch_complex{cornerhom::load_document(path)};
        } catch (const cornerhom::DocumentError& e) {
            // load_document reports unreadable files with the path as location.
            if (e.issues().size() == 1 && e.issues()[0].location == path)
                return fail(CH_IO_ERROR, e.what());
            throw;
        }
        return CH_OK;
    });
}

ch_status ch_complex_save(const ch_complex* c, const char* path)
{
    CH_REQUIRE(c && path);
    return guarded([&] {
        try {
            cornerhom::save_document(path, c->value);
        } catch (const cornerhom::DocumentError& e) {
            return fail(CH_IO_ERROR, e.what());
        }
        return CH_OK;
    });
}

void ch_complex_free(ch_complex* c)
{
    delete c;
}

ch_status ch_complex_product(const ch_complex* a, const ch_complex* b, ch_complex** out)
{
    CH_REQUIRE(a && b && out);
    return guarded([&] {
        if (auto s = require_valid_handle(a); s != CH_OK)
            return s;
        if (auto s = require_valid_handle(b); s != CH_OK)
            return s;
        *out = new ch_complex{cornerhom::product(a->value, b->value)};
        return CH_OK;
    });
}

ch_status ch_complex_serialize(const ch_complex* c, char** out)
{
    CH_REQUIRE(c && out);
    return guarded([&] {
        *out = dup_string(cornerhom::serialize(c->value));
        return CH_OK;
    });
}

ch_status ch_complex_face_count(const ch_complex* c, size_t* out)
{
    CH_REQUIRE(c && out);
    *out = c->value.num_faces();
    return CH_OK;
}

ch_status ch_validate(const ch_complex* c, int* ok, char** text)
{
    CH_REQUIRE(c && ok);
    return guarded([&] {
        auto report = cornerhom::validate(c->value);
        *ok = report.ok ? 1 : 0;
        if (text)
            *text = dup_string(violations_text(report));
        return CH_OK;
    });
}

ch_status ch_homology(const ch_complex* c, ch_format format, char** out)
{
    CH_REQUIRE(c && out);
    return guarded([&] {
        if (auto s = require_valid_handle(c); s != CH_OK)
            return s;
        auto table = cornerhom::conormal_homology(c->value);
        if (format == CH_FORMAT_JSON)
            *out = dup_string(cornerhom::homology_json(table).dump(2) + "\n");
        else
            *out = dup_string(cornerhom::homology_text(c->value, table));
        return CH_OK;
    });
}

ch_status ch_characters_text(const ch_complex* c, ch_format format, char** out)
{
    CH_REQUIRE(c && out);
    return guarded([&] {
        if (auto s = require_valid_handle(c); s != CH_OK)
            return s;
        auto chars = cornerhom::corner_characters(c->value);
        if (format == CH_FORMAT_JSON)
            *out = dup_string(cornerhom::characters_json(chars).dump(2) + "\n");
        else
            *out = dup_string(cornerhom::characters_text(chars));
        return CH_OK;
    });
}

ch_status ch_corner_characters(const ch_complex* c, ch_characters* out)
{
    CH_REQUIRE(c && out);
    return guarded([&] {
        if (auto s = require_valid_handle(c); s != CH_OK)
            return s;
        auto chars = cornerhom::corner_characters(c->value);
        *out = {chars.chi0, chars.chi1, chars.chi, chars.chi_from_faces};
        return CH_OK;
    });
}

ch_status ch_report(const ch_complex* c, ch_format format, char** out)
{
    CH_REQUIRE(c && out);
    return guarded([&] {
        if (auto s = require_valid_handle(c); s != CH_OK)
            return s;
        auto report = cornerhom::make_report(c->value);
        if (format == CH_FORMAT_JSON)
            *out = dup_string(cornerhom::report_json(report).dump(2) + "\n");
        else
            *out = dup_string(cornerhom::report_text(report));
        return CH_OK;
    });
}

ch_status ch_les(const ch_complex* c, size_t m, int* exact, char** text)
{
    CH_REQUIRE(c && exact);
    return guarded([&] {
        if (auto s = require_valid_handle(c); s != CH_OK)
            return s;
        if (m > c->value.max_codim())
            return fail(CH_INVALID_ARGUMENT, "m = " + std::to_string(m) + " exceeds max_codim " +
                                                 std::to_string(c->value.max_codim()));
        auto les = cornerhom::les_exactness(c->value, m);
        auto sub = cornerhom::sub_homology(c->value, m);
        auto whole = cornerhom::conormal_homology(c->value);
        auto rel = cornerhom::relative_homology(c->value, m);
        *exact = les.exact ? 1 : 0;
        if (text) {
            std::ostringstream out;
            out << "m = " << m << "\n";
            for (std::size_t p = whole.graded.size(); p-- > 0;) {
                out << "H" << p << "(X" << m << ") = " << sub.graded[p].to_string() << "\n";
                out << "H" << p << "(X) = " << whole.graded[p].to_string() << "\n";
                out << "H" << p << "(X,X" << m << ") = " << rel.graded[p].to_string() << "\n";
            }
            for (const auto& node : les.nodes)
                out << "exact at " << node.label << " = " << (node.exact ? "true" : "false") << "\n";
            out << "exact = " << (les.exact ? "true" : "false") << "\n";
            *text = dup_string(out.str());
        }
        return CH_OK;
    });
}

ch_status ch_selftest(uint64_t seed, int* passed, char** log)
{
    CH_REQUIRE(passed);
    return guarded([&] {
        cornerhom::SelftestOptions options;
        options.seed = seed;
        auto result = cornerhom::run_selftest(options);
        *passed = result.passed ? 1 : 0;
        if (log)
            *log = dup_string(result.log);
        return CH_OK;
    });
}

} // extern "C"
