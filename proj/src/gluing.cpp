#include "orbicheck/gluing.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace orbicheck {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

GluingTable::GluingTable(int n_simplices, LabelSet labels) : labels_(labels) {
  if (n_simplices <= 0) throw std::invalid_argument("a complex needs at least one simplex");
  if (label_count(labels) < 2) throw std::invalid_argument("simplices need at least two labels");
  partner_.resize(static_cast<std::size_t>(n_simplices));
}

void GluingTable::check_slot(int simplex, int omitted) const {
  if (simplex < 0 || simplex >= size())
    throw std::invalid_argument("simplex index " + std::to_string(simplex) + " out of range");
  if (omitted < 0 || omitted >= kMaxLabels || !contains(labels_, omitted))
    throw std::invalid_argument("label " + std::to_string(omitted) + " is not a simplex label");
}

std::optional<int> GluingTable::partner(int simplex, int omitted) const {
  check_slot(simplex, omitted);
  return partner_[simplex][omitted];
}

void GluingTable::assign(int simplex, int omitted, int partner) {
  check_slot(simplex, omitted);
  if (partner < 0 || partner >= size())
    throw std::invalid_argument("partner index " + std::to_string(partner) + " out of range");
  auto& slot = partner_[simplex][omitted];
  if (slot) throw std::invalid_argument("slot already assigned");
  slot = partner;
}

void GluingTable::glue(int simplex, int omitted, int partner) {
  assign(simplex, omitted, partner);
  assign(partner, omitted, simplex);
}

bool GluingTable::has_unglued_facet() const {
  for (const auto& row : partner_)
    for (int l : label_list(labels_))
      if (!row[l]) return true;
  return false;
}

int GluingTable::assigned_slot_count() const {
  int n = 0;
  for (const auto& row : partner_)
    for (int l : label_list(labels_))
      if (row[l]) ++n;
  return n;
}

namespace {

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

int to_int(const std::string& token, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
  return value;
}

}  // namespace

GluingTable parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<int> dim;
  std::optional<GluingTable> table;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    // Parentheses are separate tokens.
    std::string spaced;
    for (char c : line) {
      if (c == '(' || c == ')') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    std::istringstream tokens(spaced);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "dim") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'dim <d>'");
      if (dim) throw ParseError(line_no, "duplicate 'dim' line");
      dim = to_int(tok[1], line_no, "dimension");
      if (*dim != 4) throw ParseError(line_no, "only dimension 4 is supported");
    } else if (tok[0] == "simplices") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'simplices <n>'");
      if (table) throw ParseError(line_no, "duplicate 'simplices' line");
      int n = to_int(tok[1], line_no, "simplex count");
      if (n <= 0) throw ParseError(line_no, "simplex count must be positive");
      table.emplace(n, kAllLabels);
    } else if (tok[0] == "glue") {
      if (!table) throw ParseError(line_no, "'glue' before 'simplices'");
      // glue j ( a b c d ) k
      if (tok.size() != 9 || tok[2] != "(" || tok[7] != ")")
        throw ParseError(line_no, "expected 'glue <j> (a b c d) <k>'");
      int j = to_int(tok[1], line_no, "simplex index");
      int k = to_int(tok[8], line_no, "partner index");
      if (j < 0 || j >= table->size())
        throw ParseError(line_no, "simplex index " + std::to_string(j) + " out of range");
      if (k < 0 || k >= table->size())
        throw ParseError(line_no, "partner index " + std::to_string(k) + " out of range");
      LabelSet facet = 0;
      int prev = -1;
      for (int i = 3; i < 7; ++i) {
        int l = to_int(tok[i], line_no, "label");
        if (l < 0 || l >= kMaxLabels)
          throw ParseError(line_no, "label " + std::to_string(l) + " out of range");
        if (contains(facet, l)) throw ParseError(line_no, "repeated label " + std::to_string(l));
        if (l < prev) throw ParseError(line_no, "facet labels must be ascending");
        facet |= label_bit(l);
        prev = l;
      }
      int omitted = std::countr_zero(static_cast<unsigned>(kAllLabels & ~facet));
      if (table->partner(j, omitted))
        throw ParseError(line_no, "slot " + std::to_string(j) + " " + format_labels(facet) +
                                      " assigned twice");
      table->assign(j, omitted, k);
    } else {
      throw ParseError(line_no, "unknown keyword '" + tok[0] + "'");
    }
  }
  if (!table) throw ParseError(0, "missing 'simplices' line");
  return std::move(*table);
}

GluingTable read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str());
}

std::string format_complex(const GluingTable& table) {
  std::ostringstream os;
  os << "dim " << table.dimension() << "\n";
  os << "simplices " << table.size() << "\n";
  auto labels = label_list(table.labels());
  for (int j = 0; j < table.size(); ++j) {
    // Facets in ascending label order means descending omitted label.
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      if (auto k = table.partner(j, *it))
        os << "glue " << j << ' ' << format_labels(table.labels() & ~label_bit(*it)) << ' ' << *k
           << "\n";
    }
  }
  return os.str();
}

std::vector<Diagnostic> validate(const GluingTable& table) {
  std::vector<Diagnostic> out;
  auto labels = label_list(table.labels());
  for (int j = 0; j < table.size(); ++j) {
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
      int omitted = *it;
      auto k = table.partner(j, omitted);
      if (!k) continue;
      std::string facet = format_labels(table.labels() & ~label_bit(omitted));
      if (*k == j) {
        out.push_back({Diagnostic::Kind::self_gluing, j, omitted,
                       "simplex " + std::to_string(j) + " facet " + facet + " is glued to itself"});
        continue;
      }
      auto back = table.partner(*k, omitted);
      if (back != j) {
        std::string back_text = back ? std::to_string(*back) : std::string("nothing");
        out.push_back({Diagnostic::Kind::involution, j, omitted,
                       "simplex " + std::to_string(j) + " facet " + facet + " -> " +
                           std::to_string(*k) + " but simplex " + std::to_string(*k) + " facet " +
                           facet + " -> " + back_text});
      }
    }
  }
  return out;
}

}  // namespace orbicheck
