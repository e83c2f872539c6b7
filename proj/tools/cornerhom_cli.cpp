// cornerhom: command-line front end over the C API.
//
// Exit codes: 0 success, 1 validation or analysis failure, 2 usage error.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cornerhom/cornerhom.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct ComplexDeleter
{
    void operator()(ch_complex* c) const { ch_complex_free(c); }
};
using ComplexPtr = std::unique_ptr<ch_complex, ComplexDeleter>;

struct OwnedString
{
    char* s = nullptr;
    ~OwnedString() { ch_string_free(s); }
};

struct Source
{
    std::string file;
    std::string builder;
};

int report_status(ch_status status)
{
    std::cerr << "error: " << ch_status_name(status) << "\n" << ch_last_error() << "\n";
    if (status == CH_INVALID_ARGUMENT)
        return kUsage;
    return kFailure;
}

// Loads the complex named by a source; returns an exit code on failure.
int load(const Source& src, ComplexPtr& out)
{
    if (src.file.empty() == src.builder.empty()) {
        std::cerr << "error: give exactly one of <file> or --builder NAME[:k]\n";
        return kUsage;
    }
    ch_complex* raw = nullptr;
    ch_status status = src.builder.empty() ? ch_complex_load(src.file.c_str(), &raw)
                                           : ch_complex_from_builder(src.builder.c_str(), &raw);
    if (status != CH_OK)
        return report_status(status);
    out.reset(raw);
    return kOk;
}

void add_source(CLI::App* cmd, Source& src)
{
    cmd->add_option("file", src.file, "complex document");
    cmd->add_option("--builder,-b", src.builder, "builder name, e.g. cube or two_chambers:3");
}

int emit(ch_status status, OwnedString& text)
{
    if (status != CH_OK)
        return report_status(status);
    std::fputs(text.s, stdout);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Conormal homology of manifolds with embedded corners"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ch_version()));

    Source validate_src, homology_src, chars_src, report_src, les_src;
    bool homology_json = false, chars_json = false, report_json = false;
    std::string product_a, product_b, product_out;
    std::size_t les_m = 0;
    std::uint64_t seed = 7;

    auto* validate_cmd = app.add_subcommand("validate", "check the face complex axioms");
    add_source(validate_cmd, validate_src);

    auto* homology_cmd = app.add_subcommand("homology", "graded and periodic conormal homology");
    add_source(homology_cmd, homology_src);
    homology_cmd->add_flag("--json", homology_json, "structured output");

    auto* chars_cmd = app.add_subcommand("chars", "corner characters");
    add_source(chars_cmd, chars_src);
    chars_cmd->add_flag("--json", chars_json, "structured output");

    auto* report_cmd = app.add_subcommand("report", "full report: homology, K-theory, Fredholm flags");
    add_source(report_cmd, report_src);
    report_cmd->add_flag("--json", report_json, "structured output");

    auto* product_cmd = app.add_subcommand("product", "product of two complexes");
    product_cmd->add_option("f1", product_a, "first factor")->required();
    product_cmd->add_option("f2", product_b, "second factor")->required();
    product_cmd->add_option("-o,--output", product_out, "output document")->required();

    auto* les_cmd = app.add_subcommand("les", "long exact sequence of (X, X_m)");
    add_source(les_cmd, les_src);
    les_cmd->add_option("--m", les_m, "filtration level")->required();

    Source export_src;
    std::string export_out;
    auto* export_cmd = app.add_subcommand("export", "write a complex as a document");
    add_source(export_cmd, export_src);
    export_cmd->add_option("-o,--output", export_out, "output file (default: standard output)");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suite");
    selftest_cmd->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const auto format = [](bool json) { return json ? CH_FORMAT_JSON : CH_FORMAT_TEXT; };
    ComplexPtr complex;
    OwnedString text;

    if (*validate_cmd) {
        if (int rc = load(validate_src, complex))
            return rc;
        int ok = 0;
        if (auto s = ch_validate(complex.get(), &ok, &text.s); s != CH_OK)
            return report_status(s);
        std::fputs(text.s, stdout);
        return ok ? kOk : kFailure;
    }
    if (*homology_cmd) {
        if (int rc = load(homology_src, complex))
            return rc;
        return emit(ch_homology(complex.get(), format(homology_json), &text.s), text);
    }
    if (*chars_cmd) {
        if (int rc = load(chars_src, complex))
            return rc;
        return emit(ch_characters_text(complex.get(), format(chars_json), &text.s), text);
    }
    if (*report_cmd) {
        if (int rc = load(report_src, complex))
            return rc;
        return emit(ch_report(complex.get(), format(report_json), &text.s), text);
    }
    if (*product_cmd) {
        ComplexPtr a, b;
        if (int rc = load({product_a, {}}, a))
            return rc;
        if (int rc = load({product_b, {}}, b))
            return rc;
        ch_complex* raw = nullptr;
        if (auto s = ch_complex_product(a.get(), b.get(), &raw); s != CH_OK)
            return report_status(s);
        complex.reset(raw);
        if (auto s = ch_complex_save(complex.get(), product_out.c_str()); s != CH_OK)
            return report_status(s);
        std::size_t n = 0;
        ch_complex_face_count(complex.get(), &n);
        std::cout << "wrote " << product_out << " (" << n << " faces)\n";
        return kOk;
    }
    if (*les_cmd) {
        if (int rc = load(les_src, complex))
            return rc;
        int exact = 0;
        if (auto s = ch_les(complex.get(), les_m, &exact, &text.s); s != CH_OK)
            return report_status(s);
        std::fputs(text.s, stdout);
        return exact ? kOk : kFailure;
    }
    if (*export_cmd) {
        if (int rc = load(export_src, complex))
            return rc;
        if (!export_out.empty()) {
            if (auto s = ch_complex_save(complex.get(), export_out.c_str()); s != CH_OK)
                return report_status(s);
            return kOk;
        }
        return emit(ch_complex_serialize(complex.get(), &text.s), text);
    }
    if (*selftest_cmd) {
        int passed = 0;
        if (auto s = ch_selftest(seed, &passed, &text.s); s != CH_OK)
            return report_status(s);
        std::fputs(text.s, stdout);
        return passed ? kOk : kFailure;
    }
    return kUsage;
}
