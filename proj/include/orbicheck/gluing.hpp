#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbicheck/labels.hpp"

namespace orbicheck {

/// Error raised while reading a complex or Coxeter file. Carries the 1-based
/// line number of the offending line (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// A face of one constituent simplex: the simplex index and the labels it spans.
struct FaceRef {
  int simplex = 0;
  LabelSet labels = 0;

  int dimension() const { return label_count(labels) - 1; }
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

/// Label-preserving face pairings of simplices that all carry the same vertex
/// labels. Facet slots are addressed by the label the facet omits, so facet
/// (0 1 2 3) of a 4-simplex is slot 4.
///
/// The shipped complexes are 4-dimensional (labels 0..4); links of faces are
/// represented with fewer labels.
class GluingTable {
 public:
  explicit GluingTable(int n_simplices, LabelSet labels = kAllLabels);

  int size() const { return static_cast<int>(partner_.size()); }
  LabelSet labels() const { return labels_; }
  int dimension() const { return label_count(labels_) - 1; }

  /// Partner of facet `omitted` of simplex `simplex`, or nullopt when unglued.
  std::optional<int> partner(int simplex, int omitted) const;

  /// Assigns one slot. Throws std::invalid_argument if the slot is already
  /// assigned or an index is out of range. The reverse slot is not touched.
  void assign(int simplex, int omitted, int partner);

  /// Assigns both (simplex, omitted) -> partner and its mirror image.
  void glue(int simplex, int omitted, int partner);

  bool has_unglued_facet() const;
  int assigned_slot_count() const;

 private:
  void check_slot(int simplex, int omitted) const;

  LabelSet labels_;
  std::vector<std::array<std::optional<int>, kMaxLabels>> partner_;
};

/// Parses the line-based complex format:
///
///     dim 4
///     simplices 60
///     glue 0 (0 1 2 3) 1
///
/// `#` starts a comment. Unmentioned slots are left unglued.
GluingTable parse_complex(std::string_view text);
GluingTable read_complex_file(const std::string& path);

/// Writes a table in the same format; every assigned slot becomes one line.
std::string format_complex(const GluingTable& table);

struct Diagnostic {
  enum class Kind { involution, self_gluing };
  Kind kind;
  int simplex;
  int omitted;
  std::string message;
};

/// Empty iff every assigned slot is matched by its mirror slot and no facet is
/// glued to itself.
std::vector<Diagnostic> validate(const GluingTable& table);

}  // namespace orbicheck
