#include "ivorder/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ivorder::io {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line),
      message_(message)
{}

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

// Significant lines only: comments stripped, blank lines dropped.
class LineReader {
  public:
    LineReader(std::istream& in, std::string source) : source_(std::move(source))
    {
        std::string raw;
        std::size_t number = 0;
        while (std::getline(in, raw)) {
            ++number;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            const auto first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                continue;
            const auto last = raw.find_last_not_of(" \t\r");
            lines_.push_back({number, raw.substr(first, last - first + 1)});
        }
    }

    bool done() const { return next_ >= lines_.size(); }

    const Line& take(const std::string& what)
    {
        if (done())
            fail(0, "unexpected end of input, expected " + what);
        return lines_[next_++];
    }

    [[noreturn]] void fail(std::size_t line, const std::string& message) const
    {
        throw ParseError(source_, line, message);
    }

    const std::string& source() const { return source_; }

  private:
    std::string source_;
    std::vector<Line> lines_;
    std::size_t next_ = 0;
};

std::vector<std::string> split(const std::string& text)
{
    std::istringstream ss(text);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;)
        out.push_back(tok);
    return out;
}

std::size_t parse_count(LineReader& lr, const Line& line, const std::string& token)
{
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        lr.fail(line.number, "malformed header: expected a count, got '" + token + "'");
    try {
        return std::stoul(token);
    } catch (const std::exception&) {
        lr.fail(line.number, "malformed header: count out of range");
    }
}

std::vector<std::string> parse_labels(LineReader& lr, std::size_t n, const std::string& what)
{
    const Line& line = lr.take(what);
    auto labels = split(line.text);
    if (labels.size() != n)
        lr.fail(line.number, "expected " + std::to_string(n) + " " + what + ", got " +
                                 std::to_string(labels.size()));
    return labels;
}

Subset parse_bits(LineReader& lr, const Line& line, const std::string& text, std::size_t n)
{
    if (text.size() != n)
        lr.fail(line.number, "non-rectangular matrix: expected " + std::to_string(n) +
                                 " characters, got " + std::to_string(text.size()));
    Subset s(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (text[j] == '1')
            s.set(j);
        else if (text[j] != '0')
            lr.fail(line.number, std::string("invalid character '") + text[j] + "' in matrix");
    }
    return s;
}

Rational parse_value(LineReader& lr, const Line& line, const std::string& token)
{
    try {
        return parse_rational(token);
    } catch (const std::invalid_argument&) {
        lr.fail(line.number, "invalid rational '" + token + "'");
    }
}

template <class Reader>
auto load(const std::filesystem::path& path, Reader reader)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path.string(), 0, "cannot open file");
    return reader(in, path.string());
}

void expect_end(LineReader& lr)
{
    if (!lr.done()) {
        const Line& extra = lr.take("");
        lr.fail(extra.number, "unexpected trailing content");
    }
}

} // namespace

FiniteRelation read_relation(std::istream& in, const std::string& source)
{
    LineReader lr(in, source);
    const Line& header = lr.take("element count");
    const std::size_t n = parse_count(lr, header, header.text);
    auto labels = parse_labels(lr, n, "labels");
    std::vector<Subset> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const Line& line = lr.take("matrix row");
        rows.push_back(parse_bits(lr, line, line.text, n));
    }
    expect_end(lr);
    try {
        return FiniteRelation(std::move(labels), std::move(rows));
    } catch (const std::invalid_argument& e) {
        lr.fail(header.number, e.what());
    }
}

FiniteTopology read_topology(std::istream& in, const std::string& source)
{
    LineReader lr(in, source);
    const Line& header = lr.take("point count");
    const std::size_t n = parse_count(lr, header, header.text);
    auto labels = parse_labels(lr, n, "labels");
    std::vector<Subset> opens;
    std::size_t last_line = header.number;
    while (!lr.done()) {
        const Line& line = lr.take("open set");
        opens.push_back(parse_bits(lr, line, line.text, n));
        last_line = line.number;
    }
    try {
        return FiniteTopology(std::move(labels), std::move(opens));
    } catch (const std::invalid_argument& e) {
        lr.fail(last_line, e.what());
    }
}

FunctionPair read_pair(std::istream& in, const std::vector<std::string>& labels,
                       const std::string& source)
{
    LineReader lr(in, source);
    std::map<std::string, std::pair<Rational, Rational>> rows;
    while (!lr.done()) {
        const Line& line = lr.take("table row");
        const auto tok = split(line.text);
        if (tok.size() != 3)
            lr.fail(line.number, "expected 'label u v'");
        if (std::find(labels.begin(), labels.end(), tok[0]) == labels.end())
            lr.fail(line.number, "unknown label '" + tok[0] + "'");
        if (rows.count(tok[0]))
            lr.fail(line.number, "duplicate row for '" + tok[0] + "'");
        rows.emplace(tok[0], std::pair{parse_value(lr, line, tok[1]), parse_value(lr, line, tok[2])});
    }
    FunctionPair p;
    for (const auto& l : labels) {
        auto it = rows.find(l);
        if (it == rows.end())
            lr.fail(0, "no row for label '" + l + "'");
        p.u.push_back(it->second.first);
        p.v.push_back(it->second.second);
    }
    return p;
}

FiniteBiorder read_biorder(std::istream& in, const std::string& source)
{
    LineReader lr(in, source);
    const Line& header = lr.take("'m n' header");
    const auto dims = split(header.text);
    if (dims.size() != 2)
        lr.fail(header.number, "malformed header: expected 'm n'");
    const std::size_t m = parse_count(lr, header, dims[0]);
    const std::size_t k = parse_count(lr, header, dims[1]);
    auto a_labels = parse_labels(lr, m, "A labels");
    auto x_labels = parse_labels(lr, k, "X labels");
    std::vector<Subset> rows;
    for (std::size_t a = 0; a < m; ++a) {
        const Line& line = lr.take("matrix row");
        rows.push_back(parse_bits(lr, line, line.text, k));
    }
    expect_end(lr);
    try {
        return FiniteBiorder(std::move(a_labels), std::move(x_labels), std::move(rows));
    } catch (const std::invalid_argument& e) {
        lr.fail(header.number, e.what());
    }
}

DyadicScale read_scale(std::istream& in, std::size_t points, const std::string& source)
{
    LineReader lr(in, source);
    const Line& header = lr.take("grid size");
    const std::size_t k = parse_count(lr, header, header.text);
    if (k == 0)
        lr.fail(header.number, "a scale needs at least the index 1");
    DyadicScale sc;
    for (std::size_t i = 0; i < k; ++i) {
        const Line& line = lr.take("scale row");
        const auto tok = split(line.text);
        if (tok.size() != 2)
            lr.fail(line.number, "expected 'p/q membership'");
        Rational r = parse_value(lr, line, tok[0]);
        if (!sc.grid.empty() && !(sc.grid.back() < r))
            lr.fail(line.number, "indices must be strictly ascending");
        Subset s = parse_bits(lr, line, tok[1], points);
        if (i + 1 == k && (r != 1 || !s.all()))
            lr.fail(line.number, "last line must be 1/1 with all-ones membership");
        sc.grid.push_back(std::move(r));
        sc.sets.push_back(std::move(s));
    }
    expect_end(lr);
    return sc;
}

Subset read_subset(std::istream& in, const std::vector<std::string>& labels,
                   const std::string& source)
{
    LineReader lr(in, source);
    Subset s(labels.size());
    while (!lr.done()) {
        const Line& line = lr.take("labels");
        for (const auto& tok : split(line.text)) {
            auto it = std::find(labels.begin(), labels.end(), tok);
            if (it == labels.end())
                lr.fail(line.number, "unknown label '" + tok + "'");
            s.set(static_cast<std::size_t>(it - labels.begin()));
        }
    }
    return s;
}

FiniteRelation load_relation(const std::filesystem::path& path)
{
    return load(path, [](std::istream& in, const std::string& src) { return read_relation(in, src); });
}

FiniteTopology load_topology(const std::filesystem::path& path)
{
    return load(path, [](std::istream& in, const std::string& src) { return read_topology(in, src); });
}

FunctionPair load_pair(const std::filesystem::path& path, const std::vector<std::string>& labels)
{
    return load(path, [&](std::istream& in, const std::string& src) { return read_pair(in, labels, src); });
}

FiniteBiorder load_biorder(const std::filesystem::path& path)
{
    return load(path, [](std::istream& in, const std::string& src) { return read_biorder(in, src); });
}

DyadicScale load_scale(const std::filesystem::path& path, std::size_t points)
{
    return load(path, [&](std::istream& in, const std::string& src) { return read_scale(in, points, src); });
}

Subset load_subset(const std::filesystem::path& path, const std::vector<std::string>& labels)
{
    return load(path, [&](std::istream& in, const std::string& src) { return read_subset(in, labels, src); });
}

void write_relation(std::ostream& out, const FiniteRelation& r)
{
    out << r.size() << '\n';
    for (std::size_t i = 0; i < r.size(); ++i)
        out << (i ? " " : "") << r.label(i);
    out << '\n';
    for (std::size_t i = 0; i < r.size(); ++i)
        out << to_membership_string(r.row(i)) << '\n';
}

void write_topology(std::ostream& out, const FiniteTopology& t)
{
    out << t.size() << '\n';
    for (std::size_t i = 0; i < t.size(); ++i)
        out << (i ? " " : "") << t.label(i);
    out << '\n';
    for (const auto& o : t.opens())
        out << to_membership_string(o) << '\n';
}

void write_pair(std::ostream& out, const std::vector<std::string>& labels, const FunctionPair& p)
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << labels[i] << ' ' << to_fraction_string(p.u.at(i)) << ' '
            << to_fraction_string(p.v.at(i)) << '\n';
}

void write_biorder(std::ostream& out, const FiniteBiorder& b)
{
    out << b.a_size() << ' ' << b.x_size() << '\n';
    for (std::size_t i = 0; i < b.a_size(); ++i)
        out << (i ? " " : "") << b.a_labels()[i];
    out << '\n';
    for (std::size_t i = 0; i < b.x_size(); ++i)
        out << (i ? " " : "") << b.x_labels()[i];
    out << '\n';
    for (std::size_t a = 0; a < b.a_size(); ++a)
        out << to_membership_string(b.row(a)) << '\n';
}

void write_scale(std::ostream& out, const DyadicScale& sc)
{
    out << sc.grid.size() << '\n';
    for (std::size_t i = 0; i < sc.grid.size(); ++i)
        out << to_fraction_string(sc.grid[i]) << ' ' << to_membership_string(sc.sets[i]) << '\n';
}

} // namespace ivorder::io
