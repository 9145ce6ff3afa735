#include "twupoly/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace twupoly {

namespace {

// Line-oriented tokenizer that remembers where each token starts so
// parse errors can name line and column (both 1-based).
struct Token {
    std::string text;
    int column;
};

struct LineReader {
    std::istream& in;
    int line_no = 0;
    std::string line;

    explicit LineReader(std::istream& s) : in(s) {}

    bool next_line() {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        ++line_no;
        return false;
    }

    std::vector<Token> tokens() const {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
        }
        return out;
    }
};

[[noreturn]] void fail(const LineReader& r, int column, const std::string& what) {
    throw ParseError(what, r.line_no, column);
}

long long parse_int_token(const LineReader& r, const Token& t, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t.text, &pos, 10);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(r, t.column, what + ": bad integer '" + t.text + "'");
    }
}

}  // namespace

SquareMatrix read_matrix(std::istream& in) {
    LineReader r(in);
    if (!r.next_line()) fail(r, 1, "expected 'field ...' header");
    auto head = r.tokens();
    if (head.empty() || head[0].text != "field") {
        fail(r, head.empty() ? 1 : head[0].column, "expected 'field ...' header");
    }
    if (head.size() < 2) fail(r, static_cast<int>(r.line.size()) + 1, "missing field tag");
    Field field = Field::gf2();
    if (head[1].text == "gf2") {
        if (head.size() != 2) fail(r, head[2].column, "unexpected token after 'field gf2'");
    } else if (head[1].text == "q") {
        if (head.size() != 2) fail(r, head[2].column, "unexpected token after 'field q'");
        field = Field::rationals();
    } else if (head[1].text == "gfp") {
        if (head.size() != 3) {
            fail(r, static_cast<int>(r.line.size()) + 1, "expected 'field gfp <p>'");
        }
        long long p = parse_int_token(r, head[2], "field modulus");
        if (p < 2 || p >= (1LL << 31)) fail(r, head[2].column, "modulus out of range");
        try {
            field = Field::gfp(static_cast<std::uint32_t>(p));
        } catch (const ContractError& e) {
            fail(r, head[2].column, e.what());
        }
    } else {
        fail(r, head[1].column, "unknown field tag '" + head[1].text + "'");
    }

    if (!r.next_line()) fail(r, 1, "expected 'n <size>' line");
    auto nline = r.tokens();
    if (nline.size() != 2 || nline[0].text != "n") {
        fail(r, nline.empty() ? 1 : nline[0].column, "expected 'n <size>' line");
    }
    long long n = parse_int_token(r, nline[1], "matrix size");
    if (n < 0 || n > 4096) fail(r, nline[1].column, "matrix size out of range");

    std::vector<Scalar> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (long long i = 0; i < n; ++i) {
        if (!r.next_line()) fail(r, 1, "expected matrix row " + std::to_string(i + 1));
        auto row = r.tokens();
        if (static_cast<long long>(row.size()) != n) {
            fail(r, row.empty() ? 1 : row.back().column,
                 "expected " + std::to_string(n) + " entries, got " + std::to_string(row.size()));
        }
        for (const Token& t : row) {
            try {
                entries.push_back(field.parse(t.text));
            } catch (const std::invalid_argument& e) {
                fail(r, t.column, e.what());
            }
        }
    }
    return SquareMatrix(field, SquareMatrix::default_labels(static_cast<int>(n)),
                        std::move(entries));
}

void write_matrix(std::ostream& out, const SquareMatrix& m) {
    out << "field " << m.field().tag() << "\n";
    out << "n " << m.size() << "\n";
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) out << ' ';
            out << m.field().to_string(m.at(i, j));
        }
        out << "\n";
    }
}

namespace {

// Reads a "key: tok tok ..." line; returns false when the stream ended.
bool read_keyword_line(LineReader& r, const std::string& key, bool required,
                       std::vector<Token>& out) {
    if (!r.next_line()) {
        if (required) fail(r, 1, "expected '" + key + ":' line");
        return false;
    }
    auto toks = r.tokens();
    if (toks.empty() || toks[0].text != key + ":") {
        if (required || !toks.empty()) {
            fail(r, toks.empty() ? 1 : toks[0].column, "expected '" + key + ":' line");
        }
        return false;
    }
    out.assign(toks.begin() + 1, toks.end());
    return true;
}

}  // namespace

Graft read_graft(std::istream& in) {
    LineReader r(in);
    std::vector<Token> vtoks, etoks, ltoks;
    read_keyword_line(r, "vertices", true, vtoks);
    bool have_edges = read_keyword_line(r, "edges", false, etoks);
    if (have_edges) read_keyword_line(r, "loops", false, ltoks);

    LabelList vertices;
    for (const Token& t : vtoks) vertices.push_back(t.text);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Token& t : etoks) {
        auto dash = t.text.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == t.text.size()) {
            fail(r, t.column, "edge token must look like 'u-v', got '" + t.text + "'");
        }
        edges.emplace_back(t.text.substr(0, dash), t.text.substr(dash + 1));
    }
    LabelList marked;
    for (const Token& t : ltoks) marked.push_back(t.text);
    try {
        return Graft(std::move(vertices), edges, marked);
    } catch (const ContractError& e) {
        throw ParseError(e.what(), r.line_no, 1);
    }
}

void write_graft(std::ostream& out, const Graft& g) {
    out << "vertices:";
    for (const std::string& v : g.vertices()) out << ' ' << v;
    out << "\nedges:";
    for (const auto& [u, v] : g.edge_indices()) {
        out << ' ' << g.vertices()[u] << '-' << g.vertices()[v];
    }
    out << "\nloops:";
    for (const std::string& v : g.marked_labels()) out << ' ' << v;
    out << "\n";
}

Bouquet read_bouquet(std::istream& in) {
    LineReader r(in);
    std::vector<Token> wtoks, ttoks;
    read_keyword_line(r, "word", true, wtoks);
    read_keyword_line(r, "twisted", false, ttoks);
    std::vector<std::string> word;
    for (const Token& t : wtoks) word.push_back(t.text);
    std::vector<std::string> twisted;
    for (const Token& t : ttoks) twisted.push_back(t.text);
    try {
        return Bouquet(std::move(word), twisted);
    } catch (const ContractError& e) {
        throw ParseError(e.what(), r.line_no, 1);
    }
}

void write_bouquet(std::ostream& out, const Bouquet& b) {
    out << "word:";
    for (const std::string& t : b.word()) out << ' ' << t;
    out << "\ntwisted:";
    for (const std::string& t : b.twisted_labels()) out << ' ' << t;
    out << "\n";
}

SquareMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return read_matrix(in);
}

Graft read_graft_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return read_graft(in);
}

Bouquet read_bouquet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return read_bouquet(in);
}

std::string polynomial_json(const IntPolynomial& p, Twuality op, const std::string& field_tag,
                            int n) {
    nlohmann::ordered_json j;
    j["operator"] = std::string(twuality_name(op));
    j["field"] = field_tag;
    j["n"] = n;
    j["coefficients"] = p.coefficients();
    return j.dump();
}

IntPolynomial polynomial_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::uint64_t> c = j.at("coefficients").get<std::vector<std::uint64_t>>();
    return IntPolynomial(std::move(c));
}

std::uint64_t parse_position_set(const std::string& text, int universe_size) {
    if (text == "-") return 0;
    std::uint64_t mask = 0;
    std::size_t i = 0;
    if (text.empty()) throw ParseError("empty subset; use '-' for the empty set", 1, 1);
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && text[i] != ',') ++i;
        std::string part = text.substr(start, i - start);
        try {
            std::size_t pos = 0;
            long long v = std::stoll(part, &pos, 10);
            if (pos != part.size() || v < 0 || v >= universe_size) throw std::invalid_argument("");
            mask |= std::uint64_t{1} << v;
        } catch (const std::exception&) {
            throw ParseError("bad subset position '" + part + "'", 1, static_cast<int>(start) + 1);
        }
        if (i < text.size()) ++i;  // skip comma
    }
    return mask;
}

}  // namespace twupoly
