#include "cornerhom/document.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace cornerhom {

namespace {

std::string summarize(const std::vector<DocumentIssue>& issues)
{
    std::ostringstream out;
    out << "invalid complex document";
    for (const auto& i : issues)
        out << "\n  " << i.location << ": " << i.message;
    return out.str();
}

class IssueCollector
{
public:
    void add(std::string location, std::string message)
    {
        issues_.push_back({std::move(location), std::move(message)});
    }

    bool empty() const { return issues_.empty(); }

    [[noreturn]] void raise() { throw DocumentError(std::move(issues_)); }

    void raise_if_any()
    {
        if (!issues_.empty())
            raise();
    }

private:
    std::vector<DocumentIssue> issues_;
};

std::optional<int> read_int(const nlohmann::json& j)
{
    if (!j.is_number_integer())
        return std::nullopt;
    auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        return std::nullopt;
    return static_cast<int>(v);
}

std::optional<int> parse_label_key(const std::string& key)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
    if (ec != std::errc() || ptr != key.data() + key.size())
        return std::nullopt;
    return value;
}

} // namespace

DocumentError::DocumentError(std::vector<DocumentIssue> issues)
    : std::runtime_error(summarize(issues)), issues_(std::move(issues))
{
}

FaceComplex from_json(const nlohmann::json& doc)
{
    IssueCollector issues;
    if (!doc.is_object()) {
        issues.add("$", "document must be an object");
        issues.raise();
    }

    auto version = doc.contains("format_version") ? read_int(doc["format_version"]) : std::nullopt;
    if (!version)
        issues.add("format_version", "missing or not an integer");
    else if (*version != kFormatVersion)
        issues.add("format_version", "unsupported version " + std::to_string(*version));

    auto n = doc.contains("num_hyperfaces") ? read_int(doc["num_hyperfaces"]) : std::nullopt;
    if (!n || *n < 0)
        issues.add("num_hyperfaces", "missing or not a nonnegative integer");

    std::string name;
    if (doc.contains("name")) {
        if (doc["name"].is_string())
            name = doc["name"].get<std::string>();
        else
            issues.add("name", "must be a string");
    }

    std::vector<Face> faces;
    if (!doc.contains("faces") || !doc["faces"].is_array()) {
        issues.add("faces", "missing or not an array");
    } else {
        const auto& list = doc["faces"];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& jf = list[i];
            const std::string loc = "faces[" + std::to_string(i) + "]";
            if (!jf.is_object()) {
                issues.add(loc, "must be an object");
                continue;
            }
            Face f;
            if (jf.contains("id") && jf["id"].is_string() && !jf["id"].get<std::string>().empty())
                f.id = jf["id"].get<std::string>();
            else
                issues.add(loc + ".id", "missing or not a nonempty string");

            if (!jf.contains("tuple") || !jf["tuple"].is_array()) {
                issues.add(loc + ".tuple", "missing or not an array");
            } else {
                for (std::size_t k = 0; k < jf["tuple"].size(); ++k) {
                    auto label = read_int(jf["tuple"][k]);
                    if (!label)
                        issues.add(loc + ".tuple[" + std::to_string(k) + "]", "not an integer");
                    else
                        f.tuple.push_back(*label);
                }
            }

            if (jf.contains("parents")) {
                if (!jf["parents"].is_object()) {
                    issues.add(loc + ".parents", "must be an object");
                } else {
                    for (const auto& [key, value] : jf["parents"].items()) {
                        auto label = parse_label_key(key);
                        if (!label)
                            issues.add(loc + ".parents." + key, "key is not an integer label");
                        else if (!value.is_string())
                            issues.add(loc + ".parents." + key, "value must be a face id");
                        else
                            f.parents[*label] = value.get<std::string>();
                    }
                }
            } else {
                issues.add(loc + ".parents", "missing");
            }
            faces.push_back(std::move(f));
        }
    }

    std::vector<FactorInfo> factors;
    if (doc.contains("factors")) {
        if (!doc["factors"].is_array()) {
            issues.add("factors", "must be an array");
        } else {
            for (std::size_t i = 0; i < doc["factors"].size(); ++i) {
                const auto& jf = doc["factors"][i];
                const std::string loc = "factors[" + std::to_string(i) + "]";
                FactorInfo info;
                auto codim = jf.contains("max_codim") ? read_int(jf["max_codim"]) : std::nullopt;
                auto nh = jf.contains("num_hyperfaces") ? read_int(jf["num_hyperfaces"]) : std::nullopt;
                auto off = jf.contains("label_offset") ? read_int(jf["label_offset"]) : std::optional<int>(0);
                if (!jf.contains("name") || !jf["name"].is_string())
                    issues.add(loc + ".name", "missing or not a string");
                else
                    info.name = jf["name"].get<std::string>();
                if (!codim || *codim < 0)
                    issues.add(loc + ".max_codim", "missing or not a nonnegative integer");
                if (!nh || *nh < 0)
                    issues.add(loc + ".num_hyperfaces", "missing or not a nonnegative integer");
                if (!off)
                    issues.add(loc + ".label_offset", "not an integer");
                info.max_codim = codim.value_or(0);
                info.num_hyperfaces = nh.value_or(0);
                info.label_offset = off.value_or(0);
                factors.push_back(std::move(info));
            }
        }
    }

    issues.raise_if_any();
    return FaceComplex(*n, std::move(faces), std::move(factors), std::move(name));
}

FaceComplex parse_document(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError({{"byte " + std::to_string(e.byte), "malformed JSON"}});
    }
    return from_json(doc);
}

FaceComplex parse_document_checked(std::string_view text)
{
    FaceComplex complex = parse_document(text);
    auto report = validate(complex);
    if (report.ok)
        return complex;
    std::vector<DocumentIssue> issues;
    for (const auto& v : report.violations) {
        std::string where = "faces";
        for (std::size_t k = 0; k < v.faces.size(); ++k)
            where += (k ? "," : " ") + v.faces[k];
        issues.push_back({where, "violates " + v.rule});
    }
    throw DocumentError(std::move(issues));
}

nlohmann::json to_json(const FaceComplex& complex)
{
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : complex.faces()) {
        nlohmann::json parents = nlohmann::json::object();
        for (const auto& [label, pid] : f.parents)
            parents[std::to_string(label)] = pid;
        faces.push_back({{"id", f.id}, {"tuple", f.tuple}, {"parents", parents}});
    }
    nlohmann::json doc = {{"format_version", kFormatVersion},
                          {"num_hyperfaces", complex.num_hyperfaces()},
                          {"faces", faces}};
    if (!complex.name().empty())
        doc["name"] = complex.name();
    if (!complex.factors().empty()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& f : complex.factors())
            factors.push_back({{"name", f.name},
                               {"max_codim", f.max_codim},
                               {"num_hyperfaces", f.num_hyperfaces},
                               {"label_offset", f.label_offset}});
        doc["factors"] = factors;
    }
    return doc;
}

std::string serialize(const FaceComplex& complex)
{
    return to_json(complex).dump(2) + "\n";
}

FaceComplex load_document(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DocumentError({{path.string(), "cannot open file"}});
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void save_document(const std::filesystem::path& path, const FaceComplex& complex)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DocumentError({{path.string(), "cannot open file for writing"}});
    out << serialize(complex);
    if (!out)
        throw DocumentError({{path.string(), "write failed"}});
}

} // namespace cornerhom
