#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "int_matrix.hpp"
#include "lattice.hpp"
#include "monomial_algebra.hpp"
#include "quiver.hpp"
#include "representation.hpp"
#include "stable_model.hpp"

namespace qit {

struct NamedModule {
    std::string name;
    Representation<Rational> rep;

    friend bool operator==(const NamedModule&, const NamedModule&) = default;
};

/// Contents of a .alg file.
struct AlgebraFile {
    std::string name;
    Quiver quiver;
    std::optional<unsigned> truncation;
    std::vector<Path> relations;
    std::vector<NamedModule> modules;

    MonomialAlgebra algebra() const { return {quiver, relations, truncation}; }

    /// The algebra as kQ/J^k; throws when there are explicit relations.
    TruncatedAlgebra truncated() const {
        if (!truncation || !relations.empty()) throw PreconditionError("algebra '" + name + "' is not a truncated path algebra");
        return {quiver, *truncation};
    }

    const NamedModule& module(const std::string& m) const {
        for (const auto& nm : modules)
            if (nm.name == m) return nm;
        throw PreconditionError("no module named '" + m + "'");
    }

    friend bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
        return a.name == b.name && a.quiver == b.quiver && a.truncation == b.truncation && a.relations == b.relations &&
               a.modules == b.modules;
    }
};

namespace dsl {

/// Cursor over one source line; columns are 1-based.
class LineCursor {
public:
    LineCursor(std::string text, std::size_t line) : text_(std::move(text)), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    std::size_t column() const { return pos_ + 1; }
    std::size_t line() const { return line_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
    [[noreturn]] void fail_at(std::size_t col, const std::string& msg) const { throw ParseError(line_, col, msg); }

    /// Identifier-like token: anything up to whitespace or one of the stop characters.
    std::string word(const std::string& stop = ":=,[]") {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && stop.find(text_[pos_]) == std::string::npos)
            ++pos_;
        if (pos_ == start) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }

    void expect(const std::string& token) {
        skip_space();
        if (text_.compare(pos_, token.size(), token) != 0) fail("expected '" + token + "'");
        pos_ += token.size();
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_end() {
        if (!at_end()) fail("unexpected trailing text");
    }

    unsigned long number() {
        skip_space();
        const std::size_t col = column();
        std::string w = word();
        for (char ch : w)
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail_at(col, "expected a nonnegative integer, got '" + w + "'");
        try {
            return std::stoul(w);
        } catch (const std::exception&) {
            fail_at(col, "integer out of range");
        }
    }

    Rational rational() {
        skip_space();
        const std::size_t col = column();
        std::string w = word(":=,[]");
        Rational q;
        bool ok = w.find_first_not_of("+-0123456789/") == std::string::npos && q.set_str(w.c_str() + (w[0] == '+' ? 1 : 0), 10) == 0;
        if (ok && w.find('/') != std::string::npos && sgn(q.get_den()) == 0) ok = false;
        if (!ok) fail_at(col, "malformed rational '" + w + "'");
        q.canonicalize();
        return q;
    }

private:
    std::string text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

inline std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

/// [[a,b],[c,d]]; [] is a matrix without rows.
inline std::vector<std::vector<Rational>> matrix_literal(LineCursor& c) {
    std::vector<std::vector<Rational>> rows;
    c.expect("[");
    if (c.accept(']')) return rows;
    do {
        c.expect("[");
        std::vector<Rational> row;
        if (!c.accept(']')) {
            do row.push_back(c.rational());
            while (c.accept(','));
            c.expect("]");
        }
        rows.push_back(std::move(row));
    } while (c.accept(','));
    c.expect("]");
    return rows;
}

struct PendingMap {
    ArrowId arrow;
    std::vector<std::vector<Rational>> rows;
    std::size_t line, column;
};

struct PendingModule {
    std::string name;
    std::size_t line = 0;
    std::map<VertexId, std::size_t> dims;
    std::vector<PendingMap> maps;
};

} // namespace dsl

/// Parse the line-oriented .alg format. `first_line` offsets reported line numbers.
inline AlgebraFile parse_algebra_file(const std::string& text, std::size_t first_line = 1) {
    using dsl::LineCursor;
    AlgebraFile file;
    std::vector<dsl::PendingModule> pending;
    bool saw_algebra = false;
    std::size_t relation_line = 0;
    const auto lines = dsl::split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        LineCursor c(dsl::strip_comment(lines[n]), first_line + n);
        if (c.at_end()) continue;
        const std::size_t kw_col = c.column();
        const std::string kw = c.word();
        const bool in_module = !pending.empty();
        auto algebra_level = [&] {
            if (in_module) c.fail_at(kw_col, "'" + kw + "' must come before the first module");
        };
        if (kw == "algebra") {
            if (saw_algebra) c.fail_at(kw_col, "duplicate 'algebra' line");
            saw_algebra = true;
            file.name = c.word();
            c.expect_end();
        } else if (kw == "vertices") {
            algebra_level();
            while (!c.at_end()) {
                const std::size_t col = c.column();
                std::string v = c.word();
                if (file.quiver.find_vertex(v)) c.fail_at(col, "duplicate vertex '" + v + "'");
                file.quiver.add_vertex(v);
            }
        } else if (kw == "arrow") {
            algebra_level();
            const std::size_t ncol = c.column();
            std::string name = c.word();
            if (file.quiver.find_arrow(name)) c.fail_at(ncol, "duplicate arrow '" + name + "'");
            c.expect(":");
            const std::size_t scol = c.column();
            std::string s = c.word(":=,[]-");
            c.expect("->");
            const std::size_t tcol = c.column();
            std::string t = c.word();
            c.expect_end();
            if (!file.quiver.find_vertex(s)) c.fail_at(scol, "unknown vertex '" + s + "'");
            if (!file.quiver.find_vertex(t)) c.fail_at(tcol, "unknown vertex '" + t + "'");
            file.quiver.add_arrow(name, s, t);
        } else if (kw == "truncate") {
            algebra_level();
            const std::size_t col = c.column();
            const unsigned long k = c.number();
            c.expect_end();
            if (file.truncation) c.fail_at(kw_col, "duplicate 'truncate' line");
            if (k < 2) c.fail_at(col, "truncation exponent must be at least 2");
            file.truncation = static_cast<unsigned>(k);
        } else if (kw == "relation") {
            algebra_level();
            Path p;
            bool first = true;
            while (!c.at_end()) {
                const std::size_t col = c.column();
                std::string a = c.word();
                auto id = file.quiver.find_arrow(a);
                if (!id) c.fail_at(col, "unknown arrow '" + a + "'");
                if (first) p.start = file.quiver.arrow(*id).source;
                first = false;
                p.arrows.push_back(*id);
                if (!file.quiver.composable(p)) c.fail_at(col, "arrow '" + a + "' does not compose with the previous one");
            }
            if (p.length() < 2) c.fail_at(kw_col, "a relation needs at least two arrows");
            file.relations.push_back(std::move(p));
            relation_line = c.line();
        } else if (kw == "module") {
            dsl::PendingModule m;
            m.name = c.word();
            m.line = c.line();
            c.expect_end();
            for (const auto& other : pending)
                if (other.name == m.name) c.fail_at(kw_col, "duplicate module '" + m.name + "'");
            pending.push_back(std::move(m));
        } else if (kw == "dim") {
            if (!in_module) c.fail_at(kw_col, "'dim' outside a module block");
            const std::size_t col = c.column();
            std::string v = c.word();
            auto id = file.quiver.find_vertex(v);
            if (!id) c.fail_at(col, "unknown vertex '" + v + "'");
            c.expect("=");
            const std::size_t d = c.number();
            c.expect_end();
            if (pending.back().dims.count(*id)) c.fail_at(kw_col, "duplicate dim for vertex '" + v + "'");
            pending.back().dims[*id] = d;
        } else if (kw == "map") {
            if (!in_module) c.fail_at(kw_col, "'map' outside a module block");
            const std::size_t col = c.column();
            std::string a = c.word();
            auto id = file.quiver.find_arrow(a);
            if (!id) c.fail_at(col, "unknown arrow '" + a + "'");
            c.expect("=");
            const std::size_t mcol = c.column();
            auto rows = dsl::matrix_literal(c);
            c.expect_end();
            for (const auto& pm : pending.back().maps)
                if (pm.arrow == *id) c.fail_at(kw_col, "duplicate map for arrow '" + a + "'");
            pending.back().maps.push_back({*id, std::move(rows), c.line(), mcol});
        } else {
            c.fail_at(kw_col, "unknown keyword '" + kw + "'");
        }
    }
    const std::size_t end_line = first_line + lines.size();
    if (!saw_algebra) throw ParseError(end_line, 1, "missing 'algebra NAME' line");
    MonomialAlgebra algebra;
    try {
        algebra = file.algebra();
    } catch (const PreconditionError& e) {
        throw ParseError(relation_line ? relation_line : end_line, 1, e.what());
    }
    for (const auto& pm : pending) {
        NamedModule nm;
        nm.name = pm.name;
        nm.rep = Representation<Rational>::zero(file.quiver);
        for (const auto& [v, d] : pm.dims) nm.rep.dims[v] = d;
        for (ArrowId a = 0; a < file.quiver.arrow_count(); ++a) {
            const Arrow& arr = file.quiver.arrow(a);
            nm.rep.maps[a] = Matrix<Rational>(nm.rep.dims[arr.target], nm.rep.dims[arr.source]);
        }
        for (const auto& m : pm.maps) {
            const Arrow& arr = file.quiver.arrow(m.arrow);
            const std::size_t r = nm.rep.dims[arr.target], cols = nm.rep.dims[arr.source];
            // a map into a zero space may be written [] whatever the source dimension
            const bool shape_ok = m.rows.size() == r && std::all_of(m.rows.begin(), m.rows.end(), [&](const auto& row) { return row.size() == cols; });
            if (!shape_ok)
                throw ParseError(m.line, m.column,
                                 "map of arrow '" + arr.name + "' must be " + std::to_string(r) + "x" + std::to_string(cols) +
                                     " (dims of target x source)");
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < cols; ++j) nm.rep.maps[m.arrow](i, j) = m.rows[i][j];
        }
        if (auto bad = relation_violation(algebra, nm.rep))
            throw ParseError(pm.line, 1, "module '" + pm.name + "' violates relation " + *bad);
        file.modules.push_back(std::move(nm));
    }
    return file;
}

inline std::string format_matrix(const Matrix<Rational>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).get_str();
        s += "]";
    }
    return s + "]";
}

/// Canonical text of a parsed file; parsing it again gives an equal AlgebraFile.
inline std::string format_algebra_file(const AlgebraFile& f) {
    std::ostringstream out;
    const Quiver& q = f.quiver;
    out << "algebra " << f.name << "\n";
    out << "vertices";
    for (const auto& v : q.vertices()) out << " " << v;
    out << "\n";
    for (const auto& a : q.arrows()) out << "arrow " << a.name << ": " << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << "\n";
    if (f.truncation) out << "truncate " << *f.truncation << "\n";
    for (const auto& r : f.relations) out << "relation " << q.path_name(r) << "\n";
    for (const auto& m : f.modules) {
        out << "\nmodule " << m.name << "\n";
        for (VertexId v = 0; v < q.vertex_count(); ++v)
            if (m.rep.dims[v]) out << "dim " << q.vertex_name(v) << " = " << m.rep.dims[v] << "\n";
        for (ArrowId a = 0; a < q.arrow_count(); ++a)
            if (m.rep.maps[a].rows() && m.rep.maps[a].cols() && !m.rep.maps[a].is_zero_matrix())
                out << "map " << q.arrow(a).name << " = " << format_matrix(m.rep.maps[a]) << "\n";
    }
    return out.str();
}

/// Write an algebra (and modules) in .alg form.
inline AlgebraFile make_algebra_file(const std::string& name, const MonomialAlgebra& a, std::vector<NamedModule> modules = {}) {
    AlgebraFile f;
    f.name = name;
    f.quiver = a.quiver();
    f.truncation = a.truncation();
    f.relations = a.relations();
    f.modules = std::move(modules);
    return f;
}

/// Glue specification: `part gamma` and `part gammabar` sections holding
/// .alg text (no modules), then `alpha NAME: u -> w` lines.
inline GlueSpec parse_glue_file(const std::string& text) {
    const auto lines = dsl::split_lines(text);
    std::map<std::string, std::pair<std::size_t, std::string>> parts;
    std::string current;
    std::vector<AlphaArrow> alphas;
    for (std::size_t n = 0; n < lines.size(); ++n) {
        dsl::LineCursor c(dsl::strip_comment(lines[n]), n + 1);
        if (c.at_end()) {
            if (!current.empty()) parts[current].second += "\n";
            continue;
        }
        const std::size_t kw_col = c.column();
        dsl::LineCursor peek = c;
        const std::string kw = peek.word();
        if (kw == "part") {
            c = peek;
            const std::size_t col = c.column();
            current = c.word();
            c.expect_end();
            if (current != "gamma" && current != "gammabar") c.fail_at(col, "part must be 'gamma' or 'gammabar'");
            if (parts.count(current)) c.fail_at(col, "duplicate part '" + current + "'");
            parts[current] = {n + 2, ""};
        } else if (kw == "alpha") {
            c = peek;
            AlphaArrow al;
            al.name = c.word();
            c.expect(":");
            al.source = c.word(":=,[]-");
            c.expect("->");
            al.target = c.word();
            c.expect_end();
            alphas.push_back(al);
            current.clear();
        } else {
            if (current.empty()) c.fail_at(kw_col, "expected 'part' or 'alpha'");
            parts[current].second += lines[n] + "\n";
        }
    }
    for (const char* p : {"gamma", "gammabar"})
        if (!parts.count(p)) throw ParseError(lines.size() + 1, 1, std::string("missing part '") + p + "'");
    auto g = parse_algebra_file(parts["gamma"].second, parts["gamma"].first);
    auto gb = parse_algebra_file(parts["gammabar"].second, parts["gammabar"].first);
    return {g.algebra(), gb.algebra(), alphas};
}

/// Integer matrix file: one row per line; optional leading `dim N`.
struct IntRowsFile {
    std::optional<std::size_t> dim;
    std::vector<IntVector> rows;
};

inline IntRowsFile parse_int_rows(const std::string& text) {
    IntRowsFile out;
    const auto lines = dsl::split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        dsl::LineCursor c(dsl::strip_comment(lines[n]), n + 1);
        if (c.at_end()) continue;
        dsl::LineCursor peek = c;
        if (peek.word() == "dim") {
            if (out.dim || !out.rows.empty()) c.fail("'dim' must be the first line");
            c = peek;
            out.dim = c.number();
            c.expect_end();
            continue;
        }
        IntVector row;
        while (!c.at_end()) {
            const std::size_t col = c.column();
            std::string w = c.word(",");
            c.accept(',');
            Integer z;
            if (w.find_first_not_of("+-0123456789") != std::string::npos || z.set_str(w.c_str() + (w[0] == '+' ? 1 : 0), 10) != 0)
                c.fail_at(col, "malformed integer '" + w + "'");
            row.push_back(z);
        }
        const std::size_t width = out.dim ? *out.dim : (out.rows.empty() ? row.size() : out.rows.front().size());
        if (row.size() != width) c.fail("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(width));
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline IntMatrix parse_int_matrix(const std::string& text) {
    auto f = parse_int_rows(text);
    const std::size_t cols = f.dim ? *f.dim : (f.rows.empty() ? 0 : f.rows.front().size());
    IntMatrix m(f.rows.size(), cols);
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.rows[r][c];
    return m;
}

inline Lattice parse_lattice(const std::string& text) {
    auto f = parse_int_rows(text);
    if (!f.dim && f.rows.empty()) throw ParseError(1, 1, "empty lattice file needs a 'dim N' line");
    const std::size_t n = f.dim ? *f.dim : f.rows.front().size();
    return {n, std::move(f.rows)};
}

/// Class list `M[l]@v`, separated by commas or spaces; repeats add multiplicity.
inline ClassVector parse_class_list(const std::string& text, const Quiver& q) {
    ClassVector out;
    dsl::LineCursor c(text, 1);
    while (!c.at_end()) {
        if (c.accept(',')) continue;
        const std::size_t col = c.column();
        c.expect("M[");
        const unsigned long l = c.number();
        c.expect("]@");
        const std::size_t vcol = c.column();
        std::string v = c.word(",");
        auto id = q.find_vertex(v);
        if (!id) c.fail_at(vcol, "unknown vertex '" + v + "'");
        if (l == 0) c.fail_at(col, "class level must be positive");
        out[StableClass{*id, static_cast<unsigned>(l)}] += 1;
    }
    return out;
}

} // namespace qit
