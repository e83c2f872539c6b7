/**
 * Versioned JSON document format for face complexes.
 *
 *   {
 *     "format_version": 1,
 *     "name": "quarter_plane",                      (optional)
 *     "num_hyperfaces": 2,
 *     "faces": [
 *       {"id": "X",  "tuple": [],     "parents": {}},
 *       {"id": "C",  "tuple": [1, 2], "parents": {"1": "H2", "2": "H1"}},
 *       ...
 *     ],
 *     "factors": [                                   (optional)
 *       {"name": "interval", "max_codim": 1, "num_hyperfaces": 2, "label_offset": 0}
 *     ]
 *   }
 *
 * Serialization is canonical: keys sorted, faces in canonical order.
 */
#ifndef CORNERHOM_DOCUMENT_HPP
#define CORNERHOM_DOCUMENT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cornerhom/complex.hpp"

namespace cornerhom {

inline constexpr int kFormatVersion = 1;

struct DocumentIssue
{
    std::string location; ///< e.g. "faces[3].parents.2"
    std::string message;
};

class DocumentError : public std::runtime_error
{
public:
    explicit DocumentError(std::vector<DocumentIssue> issues);

    const std::vector<DocumentIssue>& issues() const { return issues_; }

private:
    std::vector<DocumentIssue> issues_;
};

/// Structural parse only; the complex may still violate the axioms.
/// Throws DocumentError.
FaceComplex parse_document(std::string_view text);
FaceComplex from_json(const nlohmann::json& doc);

/// Structural parse followed by validate(); violations become issues that
/// name the offending faces.
FaceComplex parse_document_checked(std::string_view text);

nlohmann::json to_json(const FaceComplex& complex);
std::string serialize(const FaceComplex& complex);

/// Throws DocumentError for unreadable files.
FaceComplex load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const FaceComplex& complex);

} // namespace cornerhom

#endif
