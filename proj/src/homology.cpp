#include "cornerhom/homology.hpp"

#include <stdexcept>

#include "cornerhom/chains.hpp"

namespace cornerhom {

HomologyTable HomologyTable::from_graded(std::vector<AbelianGroup> graded)
{
    HomologyTable t;
    t.graded = std::move(graded);
    for (std::size_t p = 0; p < t.graded.size(); ++p) {
        auto& slot = p % 2 == 0 ? t.even : t.odd;
        slot = direct_sum(slot, t.graded[p]);
    }
    return t;
}

bool FiltrationPiece::contains(std::size_t codim) const
{
    switch (mode) {
    case Mode::Whole:
        return true;
    case Mode::Sub:
        return codim <= m;
    case Mode::Quotient:
        return codim > m;
    }
    return false;
}

IntegerMatrix GradedComplex::incoming(std::size_t p) const
{
    if (p + 1 < boundary.size())
        return boundary[p + 1];
    return IntegerMatrix(ranks[p], 0);
}

GradedComplex graded_complex(const FaceComplex& complex, FiltrationPiece piece)
{
    require_valid(complex);
    const std::size_t d = complex.max_codim();
    GradedComplex g;
    g.ranks.resize(d + 1);
    for (std::size_t p = 0; p <= d; ++p)
        g.ranks[p] = piece.contains(p) ? complex.count_codim(p) : 0;
    g.boundary.reserve(d + 1);
    g.boundary.emplace_back(0, g.ranks[0]);
    for (std::size_t p = 1; p <= d; ++p) {
        if (piece.contains(p) && piece.contains(p - 1))
            g.boundary.push_back(delta(complex, p).matrix.to_dense());
        else
            g.boundary.emplace_back(g.ranks[p - 1], g.ranks[p]);
    }
    return g;
}

HomologyTable homology_of(const GradedComplex& chains)
{
    std::vector<AbelianGroup> graded;
    for (std::size_t p = 0; p < chains.ranks.size(); ++p)
        graded.push_back(homology_at(chains.incoming(p), chains.outgoing(p)));
    return HomologyTable::from_graded(std::move(graded));
}

HomologyTable conormal_homology(const FaceComplex& complex)
{
    return homology_of(graded_complex(complex));
}

std::pair<AbelianGroup, AbelianGroup> periodic_homology_direct(const FaceComplex& complex)
{
    require_valid(complex);
    auto pcn = delta_pcn(complex);
    IntegerMatrix even_to_odd = pcn.even_to_odd.to_dense();
    IntegerMatrix odd_to_even = pcn.odd_to_even.to_dense();
    return {homology_at(odd_to_even, even_to_odd), homology_at(even_to_odd, odd_to_even)};
}

namespace {

void check_level(const FaceComplex& complex, std::size_t m)
{
    if (m > complex.max_codim())
        throw std::invalid_argument("filtration level m=" + std::to_string(m) +
                                    " exceeds max_codim " + std::to_string(complex.max_codim()));
}

std::vector<HomologyPresentation> present_all(const GradedComplex& g)
{
    std::vector<HomologyPresentation> out;
    for (std::size_t p = 0; p < g.ranks.size(); ++p)
        out.push_back(present_homology(g.incoming(p), g.outgoing(p)));
    return out;
}

// Identity on the shared coordinates when both ambients are the full C_p,
// otherwise the empty map between the (possibly zero) ambients.
IntegerMatrix inclusion_or_zero(std::size_t rows, std::size_t cols)
{
    if (rows == cols)
        return IntegerMatrix::identity(rows);
    return IntegerMatrix(rows, cols);
}

ConnectingMap connecting_from(const FaceComplex& complex, std::size_t m, std::size_t p,
                              const FiltrationPresentations& pres)
{
    const auto& source = pres.quotient[p];
    ConnectingMap out;
    const std::size_t k_src = source.num_generators();
    if (p == 0) {
        out.matrix = IntegerMatrix(0, k_src);
        out.well_defined = true;
        return out;
    }
    const auto& target = pres.sub[p - 1];
    out.matrix = IntegerMatrix(target.num_generators(), k_src);
    out.well_defined = true;
    if (k_src == 0)
        return out;

    // Here p > m, so rho(c) is c itself inside C_p(X).
    IntegerMatrix d = delta(complex, p).matrix.to_dense();
    const bool lands_in_sub = p - 1 <= m;
    auto image_of = [&](const IntVector& relative_chain) -> std::optional<IntVector> {
        IntVector img = d * relative_chain;
        if (!lands_in_sub) {
            for (const auto& x : img)
                if (sgn(x) != 0)
                    return std::nullopt;
            return IntVector{};
        }
        return target.coordinates(img);
    };

    for (std::size_t j = 0; j < k_src; ++j) {
        auto coords = image_of(source.cycles.column(j));
        if (!coords)
            throw std::logic_error("connecting map: delta(rho(c)) is not a cycle of X_m");
        if (lands_in_sub)
            out.matrix.set_column(j, *coords);
    }

    // Relative boundaries must go to boundaries of X_m.
    for (std::size_t r = 0; r < source.relations.cols(); ++r) {
        IntVector image = out.matrix * source.relations.column(r);
        if (!target.is_relation(image)) {
            out.well_defined = false;
            break;
        }
    }
    return out;
}

} // namespace

HomologyTable relative_homology(const FaceComplex& complex, std::size_t m)
{
    check_level(complex, m);
    return homology_of(graded_complex(complex, {m, FiltrationPiece::Mode::Quotient}));
}

HomologyTable sub_homology(const FaceComplex& complex, std::size_t m)
{
    check_level(complex, m);
    return homology_of(graded_complex(complex, {m, FiltrationPiece::Mode::Sub}));
}

FiltrationPresentations filtration_presentations(const FaceComplex& complex, std::size_t m)
{
    check_level(complex, m);
    FiltrationPresentations out;
    out.sub = present_all(graded_complex(complex, {m, FiltrationPiece::Mode::Sub}));
    out.whole = present_all(graded_complex(complex));
    out.quotient = present_all(graded_complex(complex, {m, FiltrationPiece::Mode::Quotient}));
    return out;
}

ConnectingMap connecting_map(const FaceComplex& complex, std::size_t m, std::size_t p)
{
    check_level(complex, m);
    if (p > complex.max_codim())
        throw std::invalid_argument("connecting_map: degree exceeds max_codim");
    return connecting_from(complex, m, p, filtration_presentations(complex, m));
}

ExactnessReport les_exactness(const FaceComplex& complex, std::size_t m)
{
    check_level(complex, m);
    const auto pres = filtration_presentations(complex, m);
    const std::size_t d = complex.max_codim();
    const std::string ms = std::to_string(m);

    struct Node
    {
        std::string label;
        const HomologyPresentation* group;
        IntegerMatrix map_in; // from the previous node
    };
    std::vector<Node> nodes;
    for (std::size_t q = d + 1; q-- > 0;) {
        const auto& s = pres.sub[q];
        const auto& w = pres.whole[q];
        const auto& r = pres.quotient[q];
        const std::string ps = std::to_string(q);

        IntegerMatrix into_sub;
        if (q == d)
            into_sub = IntegerMatrix(s.num_generators(), 0);
        else
            into_sub = connecting_from(complex, m, q + 1, pres).matrix;
        nodes.push_back({"H" + ps + "(X" + ms + ")", &s, into_sub});

        auto inc = inclusion_or_zero(w.cycles.rows(), s.cycles.rows());
        nodes.push_back({"H" + ps + "(X)", &w, induced_map(s, w, inc)});

        auto proj = inclusion_or_zero(r.cycles.rows(), w.cycles.rows());
        nodes.push_back({"H" + ps + "(X,X" + ms + ")", &r, induced_map(w, r, proj)});
    }

    ExactnessReport report;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        const auto& node = nodes[t];
        const std::size_t k = node.group->num_generators();
        IntegerMatrix beta, relations_next;
        if (t + 1 < nodes.size()) {
            beta = nodes[t + 1].map_in;
            relations_next = nodes[t + 1].group->relations;
        } else {
            beta = IntegerMatrix(0, k);
            relations_next = IntegerMatrix(0, 0);
        }
        auto defect = exactness_at(node.map_in, node.group->relations, beta, relations_next);
        ExactnessNode n{node.label, defect.exact(), defect.composition_vanishes, defect.defect};
        report.exact = report.exact && n.exact;
        report.nodes.push_back(std::move(n));
    }
    return report;
}

CorollaryCheck h0pcn_corollary_check(const FaceComplex& complex)
{
    if (complex.max_codim() < 1)
        throw std::invalid_argument("h0pcn_corollary_check: needs max_codim >= 1");
    const auto pres = filtration_presentations(complex, 0);
    CorollaryCheck out;
    out.isomorphism = true;
    for (std::size_t p = 0; p <= complex.max_codim(); p += 2) {
        const auto& w = pres.whole[p];
        const auto& r = pres.quotient[p];
        out.source = direct_sum(out.source, w.group);
        out.target = direct_sum(out.target, r.group);

        auto map = induced_map(w, r, inclusion_or_zero(r.cycles.rows(), w.cycles.rows()));
        const std::size_t kw = w.num_generators(), kr = r.num_generators();
        auto injective = exactness_at(IntegerMatrix(kw, 0), w.relations, map, r.relations);
        auto surjective = exactness_at(map, r.relations, IntegerMatrix(0, kr), IntegerMatrix(0, 0));
        out.isomorphism = out.isomorphism && injective.exact() && surjective.exact();
    }
    return out;
}

} // namespace cornerhom
