#ifndef IVORDER_IO_HPP
#define IVORDER_IO_HPP

#include "ivorder/biorder.hpp"
#include "ivorder/relation.hpp"
#include "ivorder/representation.hpp"
#include "ivorder/scale.hpp"
#include "ivorder/topology.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ivorder::io {

/// Malformed input. what() reads "<source>:<line>: <message>"; line is 0
/// when the problem is not tied to one line (e.g. missing rows at EOF).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& source, std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }
    const std::string& message() const { return message_; }

  private:
    std::size_t line_;
    std::string message_;
};

// Text formats. In every format blank lines are skipped and '#' starts a
// comment running to the end of the line.
//
// relation:  n / labels / n rows of n chars in {0,1}; row i col j = 1 iff i <= j
// topology:  n / labels / one n-char membership string per open set
// pair:      one line per element: "label u v" with u, v rationals (p/q)
// biorder:   "m n" / A labels / X labels / m rows of n chars; 1 iff a < x
// scale:     k / k lines "p/q membership", ascending, last "1/1 11...1"
// subset:    whitespace-separated labels

FiniteRelation read_relation(std::istream& in, const std::string& source = "<relation>");
FiniteTopology read_topology(std::istream& in, const std::string& source = "<topology>");
FunctionPair read_pair(std::istream& in, const std::vector<std::string>& labels,
                       const std::string& source = "<pair>");
FiniteBiorder read_biorder(std::istream& in, const std::string& source = "<biorder>");
/// `points` is the size of the ambient space the memberships refer to.
DyadicScale read_scale(std::istream& in, std::size_t points, const std::string& source = "<scale>");
Subset read_subset(std::istream& in, const std::vector<std::string>& labels,
                   const std::string& source = "<subset>");

FiniteRelation load_relation(const std::filesystem::path& path);
FiniteTopology load_topology(const std::filesystem::path& path);
FunctionPair load_pair(const std::filesystem::path& path, const std::vector<std::string>& labels);
FiniteBiorder load_biorder(const std::filesystem::path& path);
DyadicScale load_scale(const std::filesystem::path& path, std::size_t points);
Subset load_subset(const std::filesystem::path& path, const std::vector<std::string>& labels);

void write_relation(std::ostream& out, const FiniteRelation& r);
void write_topology(std::ostream& out, const FiniteTopology& t);
void write_pair(std::ostream& out, const std::vector<std::string>& labels, const FunctionPair& p);
void write_biorder(std::ostream& out, const FiniteBiorder& b);
void write_scale(std::ostream& out, const DyadicScale& sc);

} // namespace ivorder::io

#endif
