#include "core/parser.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "core/errors.hpp"
#include "core/lexer.hpp"

namespace psiminer {
namespace {

constexpr std::array<std::string_view, 6> kModifierWords = {
    "public", "private", "protected", "static", "final", "abstract"};

constexpr std::array<std::string_view, 9> kPrimitiveTypes = {
    "boolean", "byte", "char", "short", "int",
    "long",    "float", "double", "void"};

constexpr std::array<std::string_view, 6> kAssignOps = {"=",  "+=", "-=",
                                                        "*=", "/=", "%="};

// Binary operators from loosest to tightest binding.
const std::array<std::vector<std::string_view>, 6> kBinaryLevels = {{
    {"||"},
    {"&&"},
    {"==", "!="},
    {"<", ">", "<=", ">="},
    {"+", "-"},
    {"*", "/", "%"},
}};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

CstNode make_node(CstKind kind) {
  CstNode n;
  n.kind = kind;
  return n;
}

// Generic-argument lists are kept as raw text but must stay type-shaped.
bool allowed_in_type_args(const Token& t) {
  switch (t.kind) {
    case CstKind::IDENTIFIER:
      return true;
    case CstKind::KEYWORD:
      return t.text == "extends" || t.text == "super" ||
             contains(kPrimitiveTypes, t.text);
    case CstKind::OPERATOR:
      return t.text == "<" || t.text == ">" || t.text == "?";
    case CstKind::PUNCTUATION:
      return t.text == "." || t.text == "," || t.text == "[" || t.text == "]";
    default:
      return false;
  }
}

void fix_spans(CstNode& node) {
  if (node.is_leaf()) return;
  for (auto& child : node.children) fix_spans(child);
  if (node.children.empty()) return;
  const auto& first = node.children.front().span;
  const auto& last = node.children.back().span;
  node.span = SourceSpan{first.byte_start, last.byte_end, first.line_start,
                         last.line_end};
}

class Parser {
 public:
  Parser(std::string_view source, std::vector<Token> tokens)
      : source_(source), toks_(std::move(tokens)) {}

  CstNode parse() {
    CstNode file = make_node(CstKind::FILE);
    while (at_keyword("package") || at_keyword("import")) header_line(file);
    while (peek() != nullptr) {
      flush(file);
      file.children.push_back(parse_class());
    }
    flush(file);
    fix_spans(file);
    if (file.children.empty()) file.span = SourceSpan{0, 0, 1, 1};
    return file;
  }

 private:
  // ---- token cursor ----

  const Token* peek(std::size_t k = 0) const {
    std::size_t seen = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      if (is_trivia(toks_[i].kind)) continue;
      if (seen == k) return &toks_[i];
      ++seen;
    }
    return nullptr;
  }

  bool at(CstKind kind, std::string_view text, std::size_t k = 0) const {
    const Token* t = peek(k);
    return t != nullptr && t->kind == kind && t->text == text;
  }
  bool at_kind(CstKind kind, std::size_t k = 0) const {
    const Token* t = peek(k);
    return t != nullptr && t->kind == kind;
  }
  bool at_punct(std::string_view p, std::size_t k = 0) const {
    return at(CstKind::PUNCTUATION, p, k);
  }
  bool at_op(std::string_view op, std::size_t k = 0) const {
    return at(CstKind::OPERATOR, op, k);
  }
  bool at_keyword(std::string_view kw, std::size_t k = 0) const {
    return at(CstKind::KEYWORD, kw, k);
  }
  bool at_op_in(std::initializer_list<std::string_view> ops) const {
    const Token* t = peek();
    if (t == nullptr || t->kind != CstKind::OPERATOR) return false;
    return std::find(ops.begin(), ops.end(), t->text) != ops.end();
  }

  static CstNode leaf(Token&& tok) {
    CstNode n;
    n.kind = tok.kind;
    n.span = tok.span;
    n.text = std::move(tok.text);
    return n;
  }

  // Moves pending whitespace/comments into `into`.
  void flush(CstNode& into) {
    while (pos_ < toks_.size() && is_trivia(toks_[pos_].kind)) {
      into.children.push_back(leaf(std::move(toks_[pos_++])));
    }
  }

  void eat(CstNode& into) {
    flush(into);
    if (pos_ >= toks_.size()) fail("token");
    into.children.push_back(leaf(std::move(toks_[pos_++])));
  }

  // Callers flush before descending, so the cursor sits on a real token.
  CstNode take() {
    if (pos_ >= toks_.size() || is_trivia(toks_[pos_].kind)) {
      throw std::logic_error("parser: take() with pending trivia");
    }
    return leaf(std::move(toks_[pos_++]));
  }

  void expect_punct(CstNode& into, std::string_view p) {
    if (!at_punct(p)) fail("'" + std::string(p) + "'");
    eat(into);
  }

  std::string expect_ident(CstNode& into) {
    if (!at_kind(CstKind::IDENTIFIER)) fail("identifier");
    std::string name = peek()->text;
    eat(into);
    return name;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token* t = peek();
    if (t != nullptr) {
      throw ParseError(t->span.line_start, t->column, expected,
                       "'" + t->text + "'");
    }
    std::size_t line = 1, col = 1;
    for (char c : source_) {
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, expected, "end of file");
  }

  // ---- declarations ----

  void header_line(CstNode& file) {
    while (!at_punct(";")) {
      if (peek() == nullptr) fail("';'");
      eat(file);
    }
    eat(file);
  }

  bool at_modifier_start() const {
    const Token* t = peek();
    if (t == nullptr) return false;
    return (t->kind == CstKind::KEYWORD && contains(kModifierWords, t->text)) ||
           (t->kind == CstKind::PUNCTUATION && t->text == "@");
  }

  CstNode parse_modifiers() {
    CstNode list = make_node(CstKind::MODIFIER_LIST);
    while (at_modifier_start()) {
      flush(list);
      if (at_punct("@")) {
        CstNode ann = make_node(CstKind::ANNOTATION);
        eat(ann);
        expect_ident(ann);
        list.children.push_back(std::move(ann));
      } else {
        CstNode mod = make_node(CstKind::MODIFIER);
        eat(mod);
        list.children.push_back(std::move(mod));
      }
    }
    return list;
  }

  CstNode parse_class() {
    CstNode cls = make_node(CstKind::CLASS_DECL);
    if (at_modifier_start()) cls.children.push_back(parse_modifiers());
    if (!at_keyword("class")) fail("'class'");
    eat(cls);
    const std::string name = expect_ident(cls);
    if (at_keyword("extends")) {
      eat(cls);
      flush(cls);
      cls.children.push_back(parse_type());
    }
    if (at_keyword("implements")) {
      eat(cls);
      while (true) {
        flush(cls);
        cls.children.push_back(parse_type());
        if (!at_punct(",")) break;
        eat(cls);
      }
    }
    expect_punct(cls, "{");
    while (!at_punct("}")) {
      if (peek() == nullptr) fail("'}'");
      flush(cls);
      cls.children.push_back(parse_member(name));
    }
    expect_punct(cls, "}");
    return cls;
  }

  CstNode parse_member(const std::string& class_name) {
    CstNode member = make_node(CstKind::FIELD_DECL);
    if (at_modifier_start()) member.children.push_back(parse_modifiers());

    if (at_kind(CstKind::IDENTIFIER) && peek()->text == class_name &&
        at_punct("(", 1)) {
      member.kind = CstKind::CONSTRUCTOR_DECL;
      expect_ident(member);
      flush(member);
      member.children.push_back(parse_parameters());
      flush(member);
      member.children.push_back(parse_block());
      return member;
    }

    flush(member);
    member.children.push_back(parse_type());
    expect_ident(member);
    if (at_punct("(")) {
      member.kind = CstKind::METHOD_DECL;
      flush(member);
      member.children.push_back(parse_parameters());
      if (at_punct(";")) {
        eat(member);
      } else {
        if (!at_punct("{")) fail("'{' or ';'");
        flush(member);
        member.children.push_back(parse_block());
      }
      return member;
    }

    if (at_op("=")) {
      eat(member);
      flush(member);
      member.children.push_back(parse_expression());
    }
    expect_punct(member, ";");
    return member;
  }

  CstNode parse_parameters() {
    CstNode list = make_node(CstKind::PARAMETER_LIST);
    expect_punct(list, "(");
    if (!at_punct(")")) {
      while (true) {
        flush(list);
        CstNode param = make_node(CstKind::PARAMETER);
        if (at_modifier_start()) param.children.push_back(parse_modifiers());
        flush(param);
        param.children.push_back(parse_type());
        expect_ident(param);
        list.children.push_back(std::move(param));
        if (!at_punct(",")) break;
        eat(list);
      }
    }
    expect_punct(list, ")");
    return list;
  }

  CstNode parse_type() {
    CstNode type = make_node(CstKind::TYPE_REF);
    const Token* t = peek();
    if (t != nullptr && t->kind == CstKind::KEYWORD &&
        contains(kPrimitiveTypes, t->text)) {
      eat(type);
    } else if (t != nullptr && t->kind == CstKind::IDENTIFIER) {
      eat(type);
      while (at_punct(".") && at_kind(CstKind::IDENTIFIER, 1)) {
        eat(type);
        eat(type);
      }
    } else {
      fail("type");
    }
    if (at_op("<")) {
      int depth = 0;
      do {
        const Token* a = peek();
        if (a == nullptr || !allowed_in_type_args(*a)) fail("'>'");
        if (a->kind == CstKind::OPERATOR && a->text == "<") ++depth;
        if (a->kind == CstKind::OPERATOR && a->text == ">") --depth;
        eat(type);
      } while (depth > 0);
    }
    while (at_punct("[") && at_punct("]", 1)) {
      eat(type);
      eat(type);
    }
    return type;
  }

  // ---- statements ----

  CstNode parse_block() {
    CstNode block = make_node(CstKind::CODE_BLOCK);
    expect_punct(block, "{");
    while (!at_punct("}")) {
      if (peek() == nullptr) fail("'}'");
      flush(block);
      block.children.push_back(parse_statement());
    }
    expect_punct(block, "}");
    return block;
  }

  // Bounded lookahead: does a type followed by a name start here?
  bool at_local_var_decl() const {
    const Token* t = peek();
    if (t == nullptr) return false;
    if (at_modifier_start()) return true;
    if (t->kind == CstKind::KEYWORD) return contains(kPrimitiveTypes, t->text);
    if (t->kind != CstKind::IDENTIFIER) return false;
    std::size_t k = 1;
    while (at_punct(".", k) && at_kind(CstKind::IDENTIFIER, k + 1)) k += 2;
    if (at_op("<", k)) {
      int depth = 0;
      constexpr std::size_t kMaxGenericTokens = 64;
      const std::size_t limit = k + kMaxGenericTokens;
      do {
        const Token* a = peek(k);
        if (a == nullptr || k >= limit || !allowed_in_type_args(*a)) {
          return false;
        }
        if (a->kind == CstKind::OPERATOR && a->text == "<") ++depth;
        if (a->kind == CstKind::OPERATOR && a->text == ">") --depth;
        ++k;
      } while (depth > 0);
    }
    while (at_punct("[", k) && at_punct("]", k + 1)) k += 2;
    return at_kind(CstKind::IDENTIFIER, k);
  }

  CstNode parse_local_var(bool with_semicolon) {
    CstNode decl = make_node(CstKind::LOCAL_VAR_DECL);
    if (at_modifier_start()) decl.children.push_back(parse_modifiers());
    flush(decl);
    decl.children.push_back(parse_type());
    expect_ident(decl);
    if (at_op("=")) {
      eat(decl);
      flush(decl);
      decl.children.push_back(parse_expression());
    }
    if (with_semicolon) expect_punct(decl, ";");
    return decl;
  }

  CstNode parse_statement() {
    if (at_punct("{")) return parse_block();

    if (at_keyword("if")) {
      CstNode stmt = make_node(CstKind::IF_STMT);
      eat(stmt);
      parenthesized_condition(stmt);
      flush(stmt);
      stmt.children.push_back(parse_statement());
      if (at_keyword("else")) {
        eat(stmt);
        flush(stmt);
        stmt.children.push_back(parse_statement());
      }
      return stmt;
    }

    if (at_keyword("while")) {
      CstNode stmt = make_node(CstKind::WHILE_STMT);
      eat(stmt);
      parenthesized_condition(stmt);
      flush(stmt);
      stmt.children.push_back(parse_statement());
      return stmt;
    }

    if (at_keyword("for")) return parse_for();

    if (at_keyword("return")) {
      CstNode stmt = make_node(CstKind::RETURN_STMT);
      eat(stmt);
      if (!at_punct(";")) {
        flush(stmt);
        stmt.children.push_back(parse_expression());
      }
      expect_punct(stmt, ";");
      return stmt;
    }

    if (at_local_var_decl()) return parse_local_var(true);

    CstNode stmt = make_node(CstKind::EXPR_STMT);
    stmt.children.push_back(parse_expression());
    expect_punct(stmt, ";");
    return stmt;
  }

  void parenthesized_condition(CstNode& stmt) {
    expect_punct(stmt, "(");
    flush(stmt);
    stmt.children.push_back(parse_expression());
    expect_punct(stmt, ")");
  }

  CstNode parse_for() {
    CstNode stmt = make_node(CstKind::FOR_STMT);
    eat(stmt);
    expect_punct(stmt, "(");
    if (!at_punct(";")) {
      flush(stmt);
      if (at_local_var_decl()) {
        stmt.children.push_back(parse_local_var(false));
      } else {
        expression_list(stmt);
      }
    }
    expect_punct(stmt, ";");
    if (!at_punct(";")) {
      flush(stmt);
      stmt.children.push_back(parse_expression());
    }
    expect_punct(stmt, ";");
    if (!at_punct(")")) expression_list(stmt);
    expect_punct(stmt, ")");
    flush(stmt);
    stmt.children.push_back(parse_statement());
    return stmt;
  }

  void expression_list(CstNode& into) {
    while (true) {
      flush(into);
      into.children.push_back(parse_expression());
      if (!at_punct(",")) break;
      eat(into);
    }
  }

  // ---- expressions ----

  CstNode parse_expression() {
    CstNode lhs = parse_binary(0);
    const Token* t = peek();
    if (t != nullptr && t->kind == CstKind::OPERATOR &&
        contains(kAssignOps, t->text)) {
      CstNode assign = make_node(CstKind::ASSIGNMENT_EXPR);
      assign.children.push_back(std::move(lhs));
      eat(assign);
      flush(assign);
      assign.children.push_back(parse_expression());
      return assign;
    }
    return lhs;
  }

  CstNode parse_binary(std::size_t level) {
    if (level == kBinaryLevels.size()) return parse_unary();
    CstNode lhs = parse_binary(level + 1);
    const auto& ops = kBinaryLevels[level];
    while (true) {
      const Token* t = peek();
      if (t == nullptr || t->kind != CstKind::OPERATOR ||
          std::find(ops.begin(), ops.end(), t->text) == ops.end()) {
        break;
      }
      CstNode bin = make_node(CstKind::BINARY_EXPR);
      bin.children.push_back(std::move(lhs));
      eat(bin);
      flush(bin);
      bin.children.push_back(parse_binary(level + 1));
      lhs = std::move(bin);
    }
    return lhs;
  }

  CstNode parse_unary() {
    if (at_op_in({"-", "+", "!", "++", "--"})) {
      CstNode un = make_node(CstKind::UNARY_EXPR);
      eat(un);
      flush(un);
      un.children.push_back(parse_unary());
      return un;
    }
    return parse_postfix();
  }

  CstNode parse_postfix() {
    CstNode expr = parse_primary();
    while (true) {
      if (at_punct(".")) {
        CstNode ref = make_node(CstKind::REFERENCE_EXPR);
        ref.children.push_back(std::move(expr));
        eat(ref);
        expect_ident(ref);
        expr = maybe_call(std::move(ref));
      } else if (at_punct("[")) {
        CstNode access = make_node(CstKind::ARRAY_ACCESS_EXPR);
        access.children.push_back(std::move(expr));
        eat(access);
        flush(access);
        access.children.push_back(parse_expression());
        expect_punct(access, "]");
        expr = std::move(access);
      } else if (at_op_in({"++", "--"})) {
        CstNode un = make_node(CstKind::UNARY_EXPR);
        un.children.push_back(std::move(expr));
        eat(un);
        expr = std::move(un);
      } else {
        return expr;
      }
    }
  }

  CstNode maybe_call(CstNode callee) {
    if (!at_punct("(")) return callee;
    CstNode call = make_node(CstKind::METHOD_CALL);
    call.children.push_back(std::move(callee));
    flush(call);
    call.children.push_back(parse_arguments());
    return call;
  }

  CstNode parse_arguments() {
    CstNode args = make_node(CstKind::ARGUMENT_LIST);
    expect_punct(args, "(");
    if (!at_punct(")")) {
      while (true) {
        flush(args);
        args.children.push_back(parse_expression());
        if (!at_punct(",")) break;
        eat(args);
      }
    }
    expect_punct(args, ")");
    return args;
  }

  CstNode parse_primary() {
    const Token* t = peek();
    if (t == nullptr) fail("expression");

    if (t->kind == CstKind::LITERAL) return take();

    if (t->kind == CstKind::IDENTIFIER) {
      CstNode ref = make_node(CstKind::REFERENCE_EXPR);
      ref.children.push_back(take());
      return maybe_call(std::move(ref));
    }

    if (t->kind == CstKind::KEYWORD && (t->text == "this" || t->text == "super")) {
      CstNode ref = make_node(CstKind::REFERENCE_EXPR);
      ref.children.push_back(take());
      return ref;
    }

    if (at_punct("(")) {
      CstNode paren = make_node(CstKind::PAREN_EXPR);
      eat(paren);
      flush(paren);
      paren.children.push_back(parse_expression());
      expect_punct(paren, ")");
      return paren;
    }

    if (at_keyword("new")) {
      CstNode created = make_node(CstKind::NEW_EXPR);
      eat(created);
      flush(created);
      created.children.push_back(parse_type());
      if (at_punct("(")) {
        flush(created);
        created.children.push_back(parse_arguments());
      } else if (at_punct("[")) {
        eat(created);
        flush(created);
        created.children.push_back(parse_expression());
        expect_punct(created, "]");
      } else {
        fail("'(' or '['");
      }
      return created;
    }

    fail("expression");
  }

  std::string_view source_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

CstNode parse_file(std::string_view source, [[maybe_unused]] std::string_view path) {
  return Parser(source, tokenize(source)).parse();
}

}  // namespace psiminer
