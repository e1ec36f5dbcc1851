#include "qv/exprparse.hpp"

#include <cctype>
#include <stdexcept>

namespace qv {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    bool neg = accept('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (take() - '0');
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("bundle expression: " + msg + " at position " +
                                std::to_string(pos_) + " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

BundleExpr parse_bundle_expr(const std::string& text, const Quiver& q, const DimVec& d) {
  Cursor cur(text);
  BundleExpr result = bundle_O();
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.done()) {
      if (first) cur.fail("empty expression");
      break;
    }
    if (!first) cur.expect('*');
    cur.skip_ws();

    char head = cur.peek();
    if (head == 'O') {
      cur.take();
      cur.skip_ws();
      if (cur.peek() == '(') {
        cur.take();
        long long s = cur.integer();
        cur.expect('H');
        cur.expect(')');
        result = result * bundle_OH(q, d, s);
      }
      // plain O contributes nothing
    } else if (head == 'H') {
      cur.take();
      result = result * bundle_OH(q, d, 1);
    } else if (head == 'U') {
      cur.take();
      long long vertex = cur.integer();
      if (vertex < 1 || vertex > q.vertex_count()) cur.fail("vertex index out of range");
      bool dualized = cur.accept('^');
      BundleExpr atom = dualized ? bundle_Udual(static_cast<int>(vertex))
                                 : bundle_U(static_cast<int>(vertex));
      cur.skip_ws();
      if (cur.peek() == '(') {
        cur.take();
        long long s = cur.integer();
        cur.expect('H');
        cur.expect(')');
        atom = atom * bundle_OH(q, d, s);
      }
      result = result * atom;
    } else {
      cur.fail("expected 'O', 'H' or 'U'");
    }
    first = false;
  }
  return result;
}

}  // namespace qv
