/**
 * Combinatorial model of a compact connected manifold with embedded corners.
 *
 * A complex is a finite set of open connected faces. Each face carries the
 * strictly increasing tuple of hyperface labels whose defining functions
 * vanish on it, and for every label in the tuple the face obtained by
 * dropping that label (its parent). Hyperfaces are labelled 1..N.
 */
#ifndef CORNERHOM_COMPLEX_HPP
#define CORNERHOM_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cornerhom {

using Label = int;
using Tuple = std::vector<Label>;

struct Face
{
    std::string id;
    Tuple tuple;
    std::map<Label, std::string> parents;

    std::size_t codim() const { return tuple.size(); }

    bool operator==(const Face&) const = default;
};

/// One factor of a recorded product decomposition.
struct FactorInfo
{
    std::string name;
    int max_codim = 0;
    int num_hyperfaces = 0;
    int label_offset = 0;

    bool operator==(const FactorInfo&) const = default;
};

/// Canonical face order: codimension, then tuple, then id.
bool canonical_less(const Face& a, const Face& b);

class FaceComplex
{
public:
    FaceComplex() = default;

    /// Stores the faces in canonical order. No axiom is checked here; use
    /// validate() before handing the complex to any algebraic routine.
    FaceComplex(int num_hyperfaces, std::vector<Face> faces,
                std::vector<FactorInfo> factors = {}, std::string name = {});

    int num_hyperfaces() const { return num_hyperfaces_; }
    std::size_t max_codim() const { return max_codim_; }
    std::size_t num_faces() const { return faces_.size(); }
    const std::string& name() const { return name_; }

    /// All faces in canonical order. Position in this vector is the face's
    /// global index.
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(std::size_t index) const { return faces_[index]; }

    std::optional<std::size_t> index_of(const std::string& id) const;

    /// Global index of parents(f, label), if it resolves.
    std::optional<std::size_t> parent_index(std::size_t face, Label label) const;

    /// Range [begin, end) of global indices holding codimension p faces.
    std::pair<std::size_t, std::size_t> codim_range(std::size_t p) const;
    std::size_t count_codim(std::size_t p) const;

    /// Recorded factorization. Empty means the complex was not declared as
    /// a product; effective_factors() then returns the trivial one.
    const std::vector<FactorInfo>& factors() const { return factors_; }
    std::vector<FactorInfo> effective_factors() const;

    FaceComplex with_name(std::string name) const;
    FaceComplex with_factors(std::vector<FactorInfo> factors) const;

    bool operator==(const FaceComplex& other) const;

private:
    int num_hyperfaces_ = 0;
    std::size_t max_codim_ = 0;
    std::vector<Face> faces_;
    std::vector<std::size_t> codim_offsets_{0};
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<FactorInfo> factors_;
    std::string name_;
};

struct Violation
{
    std::string rule;
    std::vector<std::string> faces;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport
{
    bool ok = true;
    std::vector<Violation> violations;
};

/// Rule names reported by validate().
namespace rules {
inline constexpr const char* kDuplicateId = "duplicate-id";
inline constexpr const char* kInteriorUnique = "interior-unique";
inline constexpr const char* kHyperfaceUnique = "hyperface-unique";
inline constexpr const char* kTupleIncreasing = "tuple-increasing";
inline constexpr const char* kTupleRange = "tuple-range";
inline constexpr const char* kParentKeys = "parent-keys";
inline constexpr const char* kParentResolves = "parent-resolves";
inline constexpr const char* kParentTuple = "parent-tuple";
inline constexpr const char* kDiamond = "diamond";
} // namespace rules

ValidationReport validate(const FaceComplex& complex);

/// Throws std::invalid_argument listing the first violations if the complex
/// is not admissible.
void require_valid(const FaceComplex& complex);

/// The unique face with tuple f.tuple \ drop whose closure contains f.
/// Throws std::invalid_argument when drop is not a subset of f.tuple or
/// when the chain of parents does not resolve.
std::size_t ancestor(const FaceComplex& complex, std::size_t face, std::span<const Label> drop);

/// Faces of codimension p in canonical order; this is the basis of C_p.
std::span<const Face> faces_of_codim(const FaceComplex& complex, std::size_t p);

/// Partition of the hyperface labels into boundary components. Labels i and
/// j are adjacent when a codimension 2 face has both in its tuple.
std::vector<std::vector<Label>> boundary_components(const FaceComplex& complex);

/// Face counts #F_p for p = 0..max_codim.
std::vector<std::size_t> face_counts(const FaceComplex& complex);

/// Poset isomorphism test that preserves tuples: the two complexes must
/// have the same hyperface labels and a bijection of faces commuting with
/// the parent maps. Ids may differ.
bool isomorphic(const FaceComplex& a, const FaceComplex& b);

} // namespace cornerhom

#endif
