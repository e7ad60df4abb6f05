#include "bmg/newick.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "bmg/error.hpp"

namespace bmg {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char ch : label) {
    const auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || ch == '_' || ch == '.' || ch == '-')) return false;
  }
  return true;
}

namespace {

bool label_char(char ch) {
  const auto c = static_cast<unsigned char>(ch);
  return std::isalnum(c) || ch == '_' || ch == '.' || ch == '-';
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  RawTree parse() {
    RawTree raw;
    raw.root = subtree(raw);
    skip_ws();
    if (!eat(';')) fail("expected ';'");
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after ';'");
    return raw;
  }

 private:
  NodeId subtree(RawTree& raw) {
    skip_ws();
    if (eat('(')) {
      std::vector<NodeId> kids;
      do {
        kids.push_back(subtree(raw));
        skip_ws();
      } while (eat(','));
      if (!eat(')')) fail("expected ')' or ','");
      label();  // inner labels are ignored
      length();
      return raw.add_inner(std::move(kids));
    }
    std::string name = label();
    if (name.empty()) fail("expected a leaf label");
    length();
    return raw.add_leaf(std::move(name));
  }

  std::string label() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void length() {
    skip_ws();
    if (!eat(':')) return;
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' || text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    if (start == pos_) fail("expected a branch length after ':'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("newick: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LeafColoredTree parse_newick(std::string_view text) {
  return LeafColoredTree(NewickParser(text).parse());
}

std::string to_newick(const LeafColoredTree& tree) {
  std::string out;
  std::function<void(NodeId)> emit = [&](NodeId u) {
    if (tree.is_leaf(u)) {
      out += tree.label(u);
      return;
    }
    out += '(';
    bool first = true;
    for (NodeId c : tree.children(u)) {
      if (!first) out += ',';
      first = false;
      emit(c);
    }
    out += ')';
  };
  emit(tree.root());
  out += ';';
  return out;
}

ColorMap parse_color_tsv(std::string_view text) {
  ColorMap out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw InputError("color tsv: line " + std::to_string(lineno) + " needs exactly two columns");
    std::string leaf = line.substr(0, tab), color = line.substr(tab + 1);
    if (leaf.empty() || color.empty())
      throw InputError("color tsv: empty field on line " + std::to_string(lineno));
    if (!out.emplace(leaf, color).second)
      throw InputError("color tsv: duplicate entry for '" + leaf + "'");
  }
  return out;
}

std::string to_color_tsv(const LeafColoredTree& tree) {
  std::string out;
  for (NodeId v : tree.leaves()) out += tree.label(v) + '\t' + tree.color(v) + '\n';
  return out;
}

LeafColoredTree with_colors(const LeafColoredTree& tree, const ColorMap& colors) {
  RawTree raw = tree.to_raw();
  for (NodeId v : tree.leaves()) {
    auto it = colors.find(tree.label(v));
    if (it == colors.end()) throw InputError("no color given for leaf '" + tree.label(v) + "'");
    raw.nodes[v].color = it->second;
  }
  return LeafColoredTree(std::move(raw), tree.planted());
}

}  // namespace bmg
