#include "cornerhom/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cornerhom {

bool canonical_less(const Face& a, const Face& b)
{
    if (a.tuple.size() != b.tuple.size())
        return a.tuple.size() < b.tuple.size();
    if (a.tuple != b.tuple)
        return a.tuple < b.tuple;
    return a.id < b.id;
}

FaceComplex::FaceComplex(int num_hyperfaces, std::vector<Face> faces,
                         std::vector<FactorInfo> factors, std::string name)
    : num_hyperfaces_(num_hyperfaces),
      faces_(std::move(faces)),
      factors_(std::move(factors)),
      name_(std::move(name))
{
    std::stable_sort(faces_.begin(), faces_.end(), canonical_less);
    max_codim_ = faces_.empty() ? 0 : faces_.back().codim();

    codim_offsets_.assign(max_codim_ + 2, faces_.size());
    codim_offsets_[0] = 0;
    for (std::size_t p = 1; p <= max_codim_ + 1; ++p) {
        auto it = std::find_if(faces_.begin(), faces_.end(),
                               [p](const Face& f) { return f.codim() >= p; });
        codim_offsets_[p] = static_cast<std::size_t>(it - faces_.begin());
    }

    for (std::size_t i = 0; i < faces_.size(); ++i)
        index_.emplace(faces_[i].id, i); // first occurrence wins on duplicates
}

std::optional<std::size_t> FaceComplex::index_of(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FaceComplex::parent_index(std::size_t face, Label label) const
{
    const auto& parents = faces_[face].parents;
    auto it = parents.find(label);
    if (it == parents.end())
        return std::nullopt;
    return index_of(it->second);
}

std::pair<std::size_t, std::size_t> FaceComplex::codim_range(std::size_t p) const
{
    if (p > max_codim_)
        return {faces_.size(), faces_.size()};
    return {codim_offsets_[p], codim_offsets_[p + 1]};
}

std::size_t FaceComplex::count_codim(std::size_t p) const
{
    auto [b, e] = codim_range(p);
    return e - b;
}

std::vector<FactorInfo> FaceComplex::effective_factors() const
{
    if (!factors_.empty())
        return factors_;
    return {FactorInfo{name_.empty() ? "input" : name_, static_cast<int>(max_codim_),
                       num_hyperfaces_, 0}};
}

FaceComplex FaceComplex::with_name(std::string name) const
{
    FaceComplex copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

FaceComplex FaceComplex::with_factors(std::vector<FactorInfo> factors) const
{
    FaceComplex copy = *this;
    copy.factors_ = std::move(factors);
    return copy;
}

bool FaceComplex::operator==(const FaceComplex& other) const
{
    return num_hyperfaces_ == other.num_hyperfaces_ && faces_ == other.faces_ &&
           factors_ == other.factors_ && name_ == other.name_;
}

namespace {

class ViolationLog
{
public:
    void add(const std::string& rule, std::vector<std::string> faces)
    {
        auto key = std::make_pair(rule, faces);
        if (seen_.insert(key).second)
            list_.push_back(Violation{rule, std::move(faces)});
    }

    std::vector<Violation> take() { return std::move(list_); }

private:
    std::set<std::pair<std::string, std::vector<std::string>>> seen_;
    std::vector<Violation> list_;
};

Tuple without(const Tuple& tuple, Label label)
{
    Tuple out;
    out.reserve(tuple.size());
    for (Label l : tuple)
        if (l != label)
            out.push_back(l);
    return out;
}

} // namespace

ValidationReport validate(const FaceComplex& complex)
{
    ViolationLog log;
    const auto& faces = complex.faces();
    const int n = complex.num_hyperfaces();

    std::map<std::string, std::size_t> id_count;
    for (const auto& f : faces)
        ++id_count[f.id];
    for (const auto& [id, count] : id_count)
        if (count > 1)
            log.add(rules::kDuplicateId, {id});

    std::vector<std::string> interiors;
    std::map<Label, std::vector<std::string>> hyperfaces;
    for (const auto& f : faces) {
        if (f.tuple.empty())
            interiors.push_back(f.id);
        if (f.tuple.size() == 1)
            hyperfaces[f.tuple[0]].push_back(f.id);
    }
    if (interiors.size() != 1)
        log.add(rules::kInteriorUnique, interiors);
    for (Label i = 1; i <= n; ++i) {
        auto it = hyperfaces.find(i);
        if (it == hyperfaces.end())
            log.add(rules::kHyperfaceUnique, {"label:" + std::to_string(i)});
        else if (it->second.size() != 1)
            log.add(rules::kHyperfaceUnique, it->second);
    }

    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        for (std::size_t k = 0; k < f.tuple.size(); ++k) {
            if (f.tuple[k] < 1 || f.tuple[k] > n)
                log.add(rules::kTupleRange, {f.id});
            if (k > 0 && f.tuple[k] <= f.tuple[k - 1])
                log.add(rules::kTupleIncreasing, {f.id});
        }

        std::set<Label> keys;
        for (const auto& [label, _] : f.parents)
            keys.insert(label);
        if (keys != std::set<Label>(f.tuple.begin(), f.tuple.end()))
            log.add(rules::kParentKeys, {f.id});

        for (const auto& [label, pid] : f.parents) {
            auto pi = complex.index_of(pid);
            if (!pi) {
                log.add(rules::kParentResolves, {f.id, pid});
                continue;
            }
            if (faces[*pi].tuple != without(f.tuple, label))
                log.add(rules::kParentTuple, {f.id, pid});
        }
    }

    // Iterated parents must not depend on the order labels are dropped in.
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        for (std::size_t a = 0; a < f.tuple.size(); ++a) {
            for (std::size_t b = a + 1; b < f.tuple.size(); ++b) {
                Label i = f.tuple[a], j = f.tuple[b];
                auto pi = complex.parent_index(fi, i);
                auto pj = complex.parent_index(fi, j);
                if (!pi || !pj)
                    continue;
                auto pij = complex.parent_index(*pi, j);
                auto pji = complex.parent_index(*pj, i);
                if (!pij || !pji || *pij != *pji)
                    log.add(rules::kDiamond, {f.id, faces[*pi].id, faces[*pj].id});
            }
        }
    }

    ValidationReport report;
    report.violations = log.take();
    report.ok = report.violations.empty();
    return report;
}

void require_valid(const FaceComplex& complex)
{
    auto report = validate(complex);
    if (report.ok)
        return;
    std::ostringstream msg;
    msg << "complex violates " << report.violations.size() << " axiom(s):";
    std::size_t shown = 0;
    for (const auto& v : report.violations) {
        if (shown++ == 5) {
            msg << " ...";
            break;
        }
        msg << " " << v.rule << "(";
        for (std::size_t k = 0; k < v.faces.size(); ++k)
            msg << (k ? "," : "") << v.faces[k];
        msg << ")";
    }
    throw std::invalid_argument(msg.str());
}

std::size_t ancestor(const FaceComplex& complex, std::size_t face, std::span<const Label> drop)
{
    const auto& tuple = complex.face(face).tuple;
    for (Label l : drop)
        if (std::find(tuple.begin(), tuple.end(), l) == tuple.end())
            throw std::invalid_argument("ancestor: label " + std::to_string(l) +
                                        " is not in the tuple of face " + complex.face(face).id);
    std::size_t current = face;
    for (Label l : drop) {
        auto next = complex.parent_index(current, l);
        if (!next)
            throw std::invalid_argument("ancestor: unresolved parent of face " +
                                        complex.face(current).id);
        current = *next;
    }
    return current;
}

std::span<const Face> faces_of_codim(const FaceComplex& complex, std::size_t p)
{
    auto [b, e] = complex.codim_range(p);
    return std::span<const Face>(complex.faces()).subspan(b, e - b);
}

std::vector<std::vector<Label>> boundary_components(const FaceComplex& complex)
{
    const int n = complex.num_hyperfaces();
    std::vector<int> root(static_cast<std::size_t>(n + 1));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };

    for (const auto& f : faces_of_codim(complex, 2)) {
        int a = find(f.tuple[0]), b = find(f.tuple[1]);
        if (a != b)
            root[std::max(a, b)] = std::min(a, b);
    }

    std::map<int, std::vector<Label>> groups;
    for (Label i = 1; i <= n; ++i)
        groups[find(i)].push_back(i);

    std::vector<std::vector<Label>> out;
    for (auto& [_, labels] : groups)
        out.push_back(std::move(labels));
    return out;
}

std::vector<std::size_t> face_counts(const FaceComplex& complex)
{
    std::vector<std::size_t> counts(complex.max_codim() + 1);
    for (std::size_t p = 0; p <= complex.max_codim(); ++p)
        counts[p] = complex.count_codim(p);
    return counts;
}

bool isomorphic(const FaceComplex& a, const FaceComplex& b)
{
    if (a.num_hyperfaces() != b.num_hyperfaces() || a.num_faces() != b.num_faces())
        return false;
    if (face_counts(a) != face_counts(b))
        return false;

    const std::size_t n = a.num_faces();
    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);

    // Faces of a are matched in canonical order, so parents are always
    // matched before their children.
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == n)
            return true;
        const Face& fa = a.face(i);
        auto [lo, hi] = b.codim_range(fa.codim());
        for (std::size_t j = lo; j < hi; ++j) {
            if (used[j] || b.face(j).tuple != fa.tuple)
                continue;
            bool consistent = true;
            for (Label l : fa.tuple) {
                auto pa = a.parent_index(i, l);
                auto pb = b.parent_index(j, l);
                if (!pa || !pb || image[*pa] != *pb) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent)
                continue;
            image[i] = j;
            used[j] = true;
            if (extend(i + 1))
                return true;
            used[j] = false;
            image[i] = n;
        }
        return false;
    };
    return extend(0);
}

} // namespace cornerhom
