#include "ck/square.hpp"

#include "ck/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ck {

namespace {

constexpr std::array<Series, 3> kSeriesRows = {Series::sa, Series::sl, Series::sy};
constexpr std::array<Field, 3> kFieldCols = {Field::R, Field::C, Field::Q};

// Fallback for sites whose printed basis degenerates (sl row with some
// w_ab = 0): the descriptor then carries what the printed list actually spans.
AlgebraDescriptor degraded_descriptor(Series s, Field f, int N, const OmegaVector& w) {
    AlgebraDescriptor d;
    d.series = s;
    d.field = f;
    d.N = N;
    d.omega = w;
    LieBasis closed = lie_closure_labeled(basis(s, f, N, w));
    StructureConstants sc = structure_constants(closed);
    d.dim = static_cast<long>(closed.dim());
    d.sig = signature(killing_form(sc));
    d.chi = character(d.sig);
    Identification id = identify(s, f, N, w);
    d.standard_name = id.standard_name;
    d.cartan_label = id.cartan_label;
    return d;
}

} // namespace

MagicSquare build_square(int N, const OmegaVector& w) {
    if (N < 1) throw std::invalid_argument("build_square: N must be >= 1");
    if (w.n() != N) throw std::invalid_argument("build_square: omega length must equal N");
    MagicSquare sq;
    sq.N = N;
    sq.omega = w;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            Series s = kSeriesRows[r];
            Field f = kFieldCols[c];
            try {
                sq.grid[r][c] = build_descriptor(s, f, N, w);
            } catch (const DependentBasisError& e) {
                sq.warnings.push_back(std::string(series_name(s)) + "/" + field_name(f) +
                                      ": printed basis is not independent at omega=" + w.str() +
                                      " (" + e.what() + "); reporting the degenerate span");
                sq.grid[r][c] = degraded_descriptor(s, f, N, w);
            }
        }
    }
    return sq;
}

CKMatrix embed_scalar(const CKMatrix& x, Field from, Field to) {
    if (x.tag() != from) throw std::invalid_argument("embed_scalar: tag mismatch");
    if (field_dim(from) >= field_dim(to))
        throw std::invalid_argument("embed_scalar: target field must be strictly larger");
    return x.widened(to);
}

Doubling embed_double_form(const GeneratorLabel& label) {
    if (label.doubling != Doubling::None)
        throw std::invalid_argument("embed_double: label already doubled");
    bool base_grade1 = (label.kind == Kind::M || label.kind == Kind::H || label.kind == Kind::E);
    bool grade1 = (label.unit == 0) ? base_grade1 : !base_grade1;
    return grade1 ? Doubling::L2 : Doubling::Diag;
}

CKMatrix embed_double(const CKMatrix& x, const GeneratorLabel& label) {
    return double_matrix(x, embed_double_form(label));
}

GeneratorLabel embed_double_label(const GeneratorLabel& label) {
    GeneratorLabel l = label;
    l.doubling = embed_double_form(label);
    return l;
}

namespace {

std::vector<std::string> cell_lines(const AlgebraDescriptor& d) {
    std::ostringstream inv;
    inv << "dim " << d.dim << "  sig " << d.sig.str() << "  chi " << d.chi;
    return {d.cartan_label, d.standard_name, inv.str()};
}

std::string render_grid(const std::vector<std::array<std::vector<std::string>, 4>>& rows,
                        const std::vector<std::string>& row_heads, std::size_t ncols) {
    // Column widths over all cell lines (UTF-8 aware enough: count code points).
    auto display_len = [](const std::string& s) {
        std::size_t n = 0;
        for (unsigned char ch : s)
            if ((ch & 0xC0) != 0x80) ++n;
        return n;
    };
    std::vector<std::size_t> width(ncols + 1, 0);
    for (const auto& head : row_heads) width[0] = std::max(width[0], display_len(head));
    for (const auto& row : rows)
        for (std::size_t c = 0; c < ncols; ++c)
            for (const auto& line : row[c]) width[c + 1] = std::max(width[c + 1], display_len(line));

    std::ostringstream os;
    auto rule = [&]() {
        os << "+";
        for (std::size_t c = 0; c <= ncols; ++c) os << std::string(width[c] + 2, '-') << "+";
        os << "\n";
    };
    rule();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t nlines = 0;
        for (std::size_t c = 0; c < ncols; ++c) nlines = std::max(nlines, rows[r][c].size());
        for (std::size_t ln = 0; ln < nlines; ++ln) {
            os << "| ";
            const std::string& head = (ln == 0) ? row_heads[r] : "";
            os << head << std::string(width[0] - display_len(head), ' ') << " |";
            for (std::size_t c = 0; c < ncols; ++c) {
                const std::string& line = ln < rows[r][c].size() ? rows[r][c][ln] : "";
                os << " " << line << std::string(width[c + 1] - display_len(line), ' ') << " |";
            }
            os << "\n";
        }
        rule();
    }
    return os.str();
}

} // namespace

std::string emit(const MagicSquare& sq, EmitFormat format,
                 const std::optional<ExtendedSquareMetadata>& extended) {
    if (format == EmitFormat::Json) {
        nlohmann::json grid = nlohmann::json::array();
        for (std::size_t r = 0; r < 3; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < 3; ++c) row.push_back(descriptor_to_json(sq.grid[r][c]));
            grid.push_back(row);
        }
        nlohmann::json omega = nlohmann::json::array();
        for (const auto& w : sq.omega.values()) omega.push_back(w.str());
        nlohmann::json out{{"N", sq.N}, {"omega", omega}, {"grid", grid}};
        if (extended) {
            nlohmann::json egrid = nlohmann::json::array();
            for (std::size_t r = 0; r < 4; ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t c = 0; c < 4; ++c)
                    row.push_back(nlohmann::json{{"label", extended->labels[r][c]},
                                                 {"name", extended->names[r][c]}});
                egrid.push_back(row);
            }
            out["extended"] = nlohmann::json{{"N", extended->N},
                                             {"metadata_only", true},
                                             {"grid", egrid}};
        }
        return out.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "CK magic square  N=" << sq.N << "  omega=" << sq.omega.str() << "\n";
    std::vector<std::array<std::vector<std::string>, 4>> rows(3);
    std::vector<std::string> heads;
    std::array<std::vector<std::string>, 4> header_cells;
    for (std::size_t r = 0; r < 3; ++r) {
        heads.push_back(series_name(kSeriesRows[r]));
        for (std::size_t c = 0; c < 3; ++c) rows[r][c] = cell_lines(sq.grid[r][c]);
    }
    // Header row with the field symbols.
    std::vector<std::array<std::vector<std::string>, 4>> all;
    std::array<std::vector<std::string>, 4> hdr;
    for (std::size_t c = 0; c < 3; ++c) hdr[c] = {field_symbol(kFieldCols[c])};
    all.push_back(hdr);
    for (auto& r : rows) all.push_back(r);
    std::vector<std::string> all_heads = {""};
    for (auto& h : heads) all_heads.push_back(h);
    os << render_grid(all, all_heads, 3);

    bool dim_symmetric = true;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (sq.grid[r][c].dim != sq.grid[c][r].dim) dim_symmetric = false;
    os << "reflection in the main diagonal pairs real forms of equal dimension: "
       << (dim_symmetric ? "yes" : "NO") << "\n";

    if (extended) {
        os << "\nextended " << extended->N << "-square (printed labels; octonion and"
           << " metasymplectic sites are metadata only, not computed)\n";
        std::vector<std::array<std::vector<std::string>, 4>> erows(4);
        std::vector<std::string> eheads = {"sa", "sl", "sy", "my"};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                erows[r][c] = {extended->labels[r][c], extended->names[r][c]};
        os << render_grid(erows, eheads, 4);
    }
    return os.str();
}

ExtendedSquareMetadata extended_square(int N) {
    if (N != 1 && N != 2)
        throw std::invalid_argument("extended_square: only N = 1, 2 are defined");
    ExtendedSquareMetadata m;
    m.N = N;
    const char* R = "ℝ";
    const char* C = "ℂ";
    const char* H = "ℍ";
    const char* O = "\U0001d546";
    auto name = [&](const char* series, int order, const char* sym) {
        return std::string(series) + "(" + std::to_string(order) + "," + sym + ")";
    };
    const std::array<const char*, 4> syms = {R, C, H, O};
    const std::array<const char*, 4> series = {"sa", "sl", "sy", "my"};
    const std::array<int, 4> orders = {N + 1, N + 1, 2 * (N + 1), 2 * (N + 1)};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m.names[r][c] = name(series[r], orders[r], syms[c]);

    if (N == 2) {
        m.labels = {{{"B_1 ≡ A_1 ≡ C_1 ≡ E_1", "A_2", "C_3 ≡ B_2", "F_4"},
                     {"A_2", "A_2 ⊕ A_2", "A_5", "E_6"},
                     {"C_3 ≡ B_2", "A_5", "D_6", "E_7"},
                     {"F_4", "E_6", "E_7", "E_8"}}};
    } else {
        m.labels = {{{"D_1", "A_1 ≡ B_1 ≡ C_1 ≡ E_1", "C_2 ≡ B_2", "B_4"},
                     {"A_1 ≡ B_1 ≡ C_1 ≡ E_1", "A_1 ⊕ A_1 ≡ E_2",
                      "A_3 ≡ D_3", "D_5 ≡ E_5"},
                     {"C_2 ≡ B_2", "A_3 ≡ D_3", "D_4", "D_6"},
                     {"B_4", "D_5 ≡ E_5", "D_6", "D_8"}}};
    }
    return m;
}

} // namespace ck
