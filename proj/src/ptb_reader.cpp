#include <cctype>

#include "coref/errors.hpp"
#include "coref/treebank.hpp"

namespace coref {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class PtbReader {
 public:
  explicit PtbReader(std::string_view text) : text_(text) {}

  std::vector<ParseNode> read_all() {
    std::vector<ParseNode> trees;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(') throw ParseError("expected '('", pos_);
      int next_leaf = 0;
      trees.push_back(read_node(next_leaf));
      skip_space();
    }
    return trees;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view read_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  void expect_more(std::string_view what) {
    if (pos_ >= text_.size()) {
      throw ParseError(std::string("unbalanced parentheses: ") + std::string(what) +
                           " at end of input",
                       pos_);
    }
  }

  ParseNode read_node(int& next_leaf) {
    std::size_t open = pos_;
    ++pos_;  // '('
    skip_space();
    expect_more("expected label");
    ParseNode node;
    node.label = std::string(read_atom());
    if (node.label.empty()) throw ParseError("empty label", open);
    skip_space();
    expect_more("expected ')'");
    if (text_[pos_] == ')') {
      throw ParseError("node '" + node.label + "' has neither token nor children", open);
    }
    if (text_[pos_] != '(') {
      node.token = std::string(read_atom());
      skip_space();
      expect_more("expected ')'");
      if (text_[pos_] != ')') {
        throw ParseError("expected ')' after token '" + node.token + "'", pos_);
      }
      ++pos_;
      node.span = Span{next_leaf, next_leaf + 1};
      ++next_leaf;
      return node;
    }
    int begin = next_leaf;
    while (true) {
      skip_space();
      expect_more("expected ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] != '(') {
        throw ParseError("token mixed with child constituents under '" + node.label + "'",
                         pos_);
      }
      node.children.push_back(read_node(next_leaf));
    }
    node.span = Span{begin, next_leaf};
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const ParseNode& n, std::string& out) {
  out += '(';
  out += n.label;
  if (n.is_leaf()) {
    out += ' ';
    out += n.token;
  } else {
    for (const auto& c : n.children) {
      out += ' ';
      print(c, out);
    }
  }
  out += ')';
}

}  // namespace

std::vector<ParseNode> read_ptb(std::string_view text) {
  return PtbReader(text).read_all();
}

std::string to_ptb(const ParseNode& tree) {
  std::string out;
  print(tree, out);
  return out;
}

std::string normalize_ptb(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  // Whitespace is dropped after '(' and before ')', collapsed elsewhere.
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty() && out.back() != '(' && c != ')') {
      out += ' ';
    }
    if (c == '(' && !out.empty() && out.back() != '(' && out.back() != ' ') {
      // "(A(B b))" -> "(A (B b))"; between top-level trees as well.
      out += ' ';
    }
    pending_space = false;
    out += c;
  }
  return out;
}

}  // namespace coref
