#include "pcgroups/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "pcgroups/collector.hpp"
#include "pcgroups/errors.hpp"

namespace pcgroups {

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d <= n / d; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  namespace {

    bool is_identifier(std::string_view s) {
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0]))
                         || s[0] == '_')) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    Word const& empty_word() {
      static Word const w;
      return w;
    }

    // Recursive-descent reader for words over a list of generator names.
    // Columns reported in errors are 1-based offsets into the original line.
    class WordReader {
     public:
      WordReader(std::vector<std::string> const& names,
                 std::string_view                text,
                 std::size_t                     line,
                 std::size_t                     column_offset,
                 bool                            allow_brackets)
          : names_(names),
            text_(text),
            line_(line),
            offset_(column_offset),
            brackets_(allow_brackets) {}

      Word read_all() {
        skip_ws();
        Word w = read_word();
        skip_ws();
        if (pos_ != text_.size()) {
          fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return w;
      }

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(line_, offset_ + pos_ + 1, msg);
      }

     private:
      static constexpr std::size_t max_expanded_length = 1'000'000;

      void skip_ws() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      Word read_word() {
        Word w = read_factor();
        while (peek('*')) {
          ++pos_;
          Word f = read_factor();
          w.insert(w.end(), f.begin(), f.end());
          check_length(w);
        }
        return w;
      }

      Word read_factor() {
        Word atom = read_atom();
        if (peek('^')) {
          ++pos_;
          std::int64_t e = read_int();
          if (atom.size() == 1) {
            if (e != 0
                && std::abs(atom[0].exp)
                       > std::numeric_limits<std::int64_t>::max()
                             / std::abs(e)) {
              fail("exponent overflow");
            }
            atom[0].exp *= e;
            if (atom[0].exp == 0) {
              atom.clear();
            }
            return atom;
          }
          if (e < 0) {
            atom = invert_word(atom);
            e    = -e;
          }
          if (!atom.empty()
              && static_cast<std::uint64_t>(e)
                     > max_expanded_length / atom.size()) {
            fail("expanded word too long");
          }
          Word out;
          for (std::int64_t r = 0; r < e; ++r) {
            out.insert(out.end(), atom.begin(), atom.end());
          }
          return out;
        }
        return atom;
      }

      Word read_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
          fail("expected a generator, '1', '(' or '['");
        }
        char c = text_[pos_];
        if (c == '1') {
          ++pos_;
          return {};
        }
        if (c == '(') {
          ++pos_;
          Word w = read_word();
          expect(')');
          return w;
        }
        if (c == '[') {
          if (!brackets_) {
            fail("commutator brackets are only allowed on the left-hand side");
          }
          ++pos_;
          Word x = read_word();
          expect(',');
          Word y = read_word();
          expect(']');
          Word w = invert_word(x);
          Word yi = invert_word(y);
          w.insert(w.end(), yi.begin(), yi.end());
          w.insert(w.end(), x.begin(), x.end());
          w.insert(w.end(), y.begin(), y.end());
          check_length(w);
          return w;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
                   || text_[pos_] == '_')) {
          ++pos_;
        }
        std::string_view name = text_.substr(start, pos_ - start);
        if (!is_identifier(name)) {
          pos_ = start;
          fail("expected a generator name");
        }
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
          pos_ = start;
          fail("unknown generator '" + std::string(name) + "'");
        }
        return {Letter{static_cast<std::size_t>(it - names_.begin()), 1}};
      }

      std::int64_t read_int() {
        skip_ws();
        std::size_t start = pos_;
        bool        paren = false;
        if (pos_ < text_.size() && text_[pos_] == '(') {
          paren = true;
          ++pos_;
        }
        std::size_t num_start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
          ++pos_;
        }
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        std::string_view num = text_.substr(num_start, pos_ - num_start);
        if (!num.empty() && num[0] == '+') {
          num.remove_prefix(1);
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(),
                                         value);
        if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
          pos_ = start;
          fail("expected an integer exponent");
        }
        if (paren) {
          expect(')');
        }
        return value;
      }

      void check_length(Word const& w) const {
        if (w.size() > max_expanded_length) {
          fail("expanded word too long");
        }
      }

      std::vector<std::string> const& names_;
      std::string_view                text_;
      std::size_t                     line_;
      std::size_t                     offset_;
      bool                            brackets_;
      std::size_t                     pos_ = 0;
    };

    std::string_view trim(std::string_view s, std::size_t& lead) {
      lead = 0;
      while (lead < s.size()
             && std::isspace(static_cast<unsigned char>(s[lead]))) {
        ++lead;
      }
      std::size_t end = s.size();
      while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
      }
      return s.substr(lead, end - lead);
    }

    std::vector<std::pair<std::string_view, std::size_t>>
    split_ws(std::string_view s) {
      std::vector<std::pair<std::string_view, std::size_t>> out;
      std::size_t                                           i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::size_t start = i;
        while (i < s.size()
               && !std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        if (i > start) {
          out.emplace_back(s.substr(start, i - start), start);
        }
      }
      return out;
    }

    std::uint64_t parse_u64(std::string_view s,
                            std::size_t      line,
                            std::size_t      col,
                            char const*      what) {
      std::uint64_t v = 0;
      auto [ptr, ec]  = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, col, std::string("expected ") + what);
      }
      return v;
    }

  }  // namespace

  Word invert_word(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back({it->gen, -it->exp});
    }
    return out;
  }

  std::uint64_t Presentation::relative_order(std::size_t i) const {
    std::uint64_t r = 1;
    for (unsigned k = 0; k < order_logs_.at(i); ++k) {
      r *= p_;
    }
    return r;
  }

  Word const& Presentation::power_relation(std::size_t i) const {
    auto it = power_rels_.find(i);
    return it == power_rels_.end() ? empty_word() : it->second;
  }

  Word const& Presentation::commutator_relation(std::size_t j,
                                                std::size_t i) const {
    auto it = comm_rels_.find({j, i});
    return it == comm_rels_.end() ? empty_word() : it->second;
  }

  std::size_t Presentation::index_of(std::string_view name) const noexcept {
    auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
  }

  unsigned Presentation::candidate_order_log() const noexcept {
    unsigned s = 0;
    for (unsigned m : order_logs_) {
      s += m;
    }
    return s;
  }

  void Presentation::validate_header() const {
    if (!is_prime(p_)) {
      throw PresentationError("p = " + std::to_string(p_) + " is not prime");
    }
    if (order_logs_.size() != names_.size()) {
      throw PresentationError("expected one relative order per generator");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i])) {
        throw PresentationError("invalid generator name '" + names_[i] + "'");
      }
      if (std::find(names_.begin(), names_.begin() + i, names_[i])
          != names_.begin() + i) {
        throw PresentationError("duplicate generator name '" + names_[i]
                                + "'");
      }
      if (order_logs_[i] == 0) {
        throw PresentationError("generator '" + names_[i]
                                + "' must have order at least p");
      }
      std::uint64_t r = 1;
      for (unsigned k = 0; k < order_logs_[i]; ++k) {
        if (r > std::numeric_limits<std::uint32_t>::max() / p_) {
          throw PresentationError("relative order of '" + names_[i]
                                  + "' exceeds 32 bits");
        }
        r *= p_;
      }
    }
    // candidate order must fit in 64 bits
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (unsigned k = 0; k < order_logs_[i]; ++k) {
        if (total > std::numeric_limits<std::uint64_t>::max() / p_) {
          throw PresentationError("candidate group order exceeds 64 bits");
        }
        total *= p_;
      }
    }
  }

  void Presentation::validate_relations() const {
    std::size_t n = names_.size();
    for (auto const& [i, w] : power_rels_) {
      if (i >= n) {
        throw PresentationError("power relation for unknown generator index "
                                + std::to_string(i));
      }
      for (Letter const& l : w) {
        if (l.gen >= n) {
          throw PresentationError("unknown generator index in relation");
        }
        if (l.gen <= i) {
          throw PresentationError(
              "index restriction violated: power relation of '" + names_[i]
              + "' uses '" + names_[l.gen] + "'");
        }
      }
    }
    for (auto const& [key, w] : comm_rels_) {
      auto [j, i] = key;
      if (j >= n || i >= j) {
        throw PresentationError(
            "commutator relations must be keyed by (j, i) with j > i");
      }
      for (Letter const& l : w) {
        if (l.gen >= n) {
          throw PresentationError("unknown generator index in relation");
        }
        if (l.gen <= j) {
          throw PresentationError("index restriction violated: [" + names_[j]
                                  + "," + names_[i] + "] uses '"
                                  + names_[l.gen] + "'");
        }
      }
    }
  }

  Presentation Presentation::make(std::uint64_t               p,
                                  std::vector<std::string>    names,
                                  std::vector<unsigned>       order_logs,
                                  std::map<std::size_t, Word> power_rels,
                                  std::map<CommKey, Word>     comm_rels) {
    Presentation raw;
    raw.p_          = p;
    raw.names_      = std::move(names);
    raw.order_logs_ = std::move(order_logs);
    raw.power_rels_ = std::move(power_rels);
    raw.comm_rels_  = std::move(comm_rels);
    return Group::make(raw)->presentation();
  }

  std::uint64_t candidate_order(Presentation const& P) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < P.num_gens(); ++i) {
      total *= P.relative_order(i);
    }
    return total;
  }

  Presentation parse(std::string_view text) {
    std::uint64_t                            p = 0;
    bool                                     have_p = false, have_gens = false;
    std::vector<std::string>                 names;
    std::vector<unsigned>                    logs;
    std::vector<bool>                        have_order;
    std::map<std::size_t, Word>              power_rels;
    std::map<CommKey, Word>                  comm_rels;
    std::size_t                              line_no = 0;

    std::istringstream in{std::string(text)};
    std::string        raw_line;
    while (std::getline(in, raw_line)) {
      ++line_no;
      std::string_view line = raw_line;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::size_t      lead = 0;
      std::string_view body = trim(line, lead);
      if (body.empty()) {
        continue;
      }
      auto        tokens = split_ws(body);
      auto        kw     = tokens[0].first;
      std::size_t base   = lead + 1;  // 1-based column of body[0]

      if (kw == "p" || kw.substr(0, 2) == "p=") {
        if (have_p) {
          throw ParseError(line_no, base, "duplicate 'p' line");
        }
        std::size_t eq = body.find('=');
        if (eq == std::string_view::npos
            || trim(body.substr(0, eq), lead) != "p") {
          throw ParseError(line_no, base, "expected 'p = <prime>'");
        }
        std::size_t      vlead = 0;
        std::string_view value = trim(body.substr(eq + 1), vlead);
        std::size_t      col   = base + eq + 1 + vlead;
        p = parse_u64(value, line_no, col, "an integer prime");
        if (!is_prime(p)) {
          throw ParseError(line_no, col, "p = " + std::string(value)
                                             + " is not prime");
        }
        have_p = true;
      } else if (kw == "gens") {
        if (have_gens) {
          throw ParseError(line_no, base, "duplicate 'gens' line");
        }
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          auto [tok, off] = tokens[t];
          if (!is_identifier(tok)) {
            throw ParseError(line_no, base + off, "invalid generator name");
          }
          if (std::find(names.begin(), names.end(), tok) != names.end()) {
            throw ParseError(line_no, base + off, "duplicate generator name");
          }
          names.emplace_back(tok);
        }
        logs.assign(names.size(), 0);
        have_order.assign(names.size(), false);
        have_gens = true;
      } else if (kw == "orders") {
        if (!have_p || !have_gens) {
          throw ParseError(line_no, base, "'orders' must follow 'p' and 'gens'");
        }
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          auto [tok, off] = tokens[t];
          auto colon      = tok.find(':');
          if (colon == std::string_view::npos) {
            throw ParseError(line_no, base + off, "expected 'name:order'");
          }
          auto        gname = tok.substr(0, colon);
          auto        it    = std::find(names.begin(), names.end(), gname);
          if (it == names.end()) {
            throw ParseError(line_no, base + off,
                             "unknown generator '" + std::string(gname) + "'");
          }
          std::size_t g = static_cast<std::size_t>(it - names.begin());
          if (have_order[g]) {
            throw ParseError(line_no, base + off, "duplicate order");
          }
          std::uint64_t ord = parse_u64(tok.substr(colon + 1), line_no,
                                        base + off + colon + 1, "an order");
          unsigned      m   = 0;
          std::uint64_t r   = ord;
          while (r > 1 && r % p == 0) {
            r /= p;
            ++m;
          }
          if (r != 1 || m == 0) {
            throw ParseError(line_no, base + off + colon + 1,
                             "order must be a positive power of p");
          }
          logs[g]       = m;
          have_order[g] = true;
        }
      } else if (kw == "rel") {
        if (!have_p || !have_gens) {
          throw ParseError(line_no, base, "'rel' must follow 'p' and 'gens'");
        }
        for (std::size_t g = 0; g < names.size(); ++g) {
          if (!have_order[g]) {
            throw ParseError(line_no, base,
                             "missing order for generator '" + names[g] + "'");
          }
        }
        std::string_view rest = body.substr(3);
        std::size_t      eq   = rest.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError(line_no, base + 3, "expected '='");
        }
        std::size_t      llead = 0, rlead = 0;
        std::string_view lhs   = trim(rest.substr(0, eq), llead);
        std::string_view rhs   = trim(rest.substr(eq + 1), rlead);
        std::size_t      lcol  = base + 3 + llead;
        std::size_t      rcol  = base + 3 + eq + 1 + rlead;
        Word w = WordReader(names, rhs, line_no, rcol - 1, false).read_all();

        if (!lhs.empty() && lhs.front() == '[') {
          if (lhs.back() != ']') {
            throw ParseError(line_no, lcol, "expected '[x,y]'");
          }
          auto inner = lhs.substr(1, lhs.size() - 2);
          auto comma = inner.find(',');
          if (comma == std::string_view::npos) {
            throw ParseError(line_no, lcol, "expected '[x,y]'");
          }
          std::size_t lx = 0, ly = 0;
          auto        xn = trim(inner.substr(0, comma), lx);
          auto        yn = trim(inner.substr(comma + 1), ly);
          auto        xi = std::find(names.begin(), names.end(), xn);
          auto        yi = std::find(names.begin(), names.end(), yn);
          if (xi == names.end() || yi == names.end()) {
            throw ParseError(line_no, lcol, "unknown generator in commutator");
          }
          std::size_t x = static_cast<std::size_t>(xi - names.begin());
          std::size_t y = static_cast<std::size_t>(yi - names.begin());
          if (x == y) {
            throw ParseError(line_no, lcol,
                             "commutator of a generator with itself");
          }
          // [x,y] = w with x < y means [y,x] = w^-1
          CommKey key = x > y ? CommKey{x, y} : CommKey{y, x};
          if (x < y) {
            w = invert_word(w);
          }
          if (comm_rels.count(key)) {
            throw ParseError(line_no, lcol, "duplicate relation");
          }
          comm_rels.emplace(key, std::move(w));
        } else {
          auto caret = lhs.find('^');
          if (caret == std::string_view::npos) {
            throw ParseError(line_no, lcol, "expected 'g^order' or '[x,y]'");
          }
          std::size_t lg = 0, le = 0;
          auto        gn = trim(lhs.substr(0, caret), lg);
          auto        en = trim(lhs.substr(caret + 1), le);
          auto        gi = std::find(names.begin(), names.end(), gn);
          if (gi == names.end()) {
            throw ParseError(line_no, lcol,
                             "unknown generator '" + std::string(gn) + "'");
          }
          std::size_t   g   = static_cast<std::size_t>(gi - names.begin());
          std::uint64_t ord = parse_u64(en, line_no, lcol + caret + 1 + le,
                                        "an exponent");
          std::uint64_t expected = 1;
          for (unsigned k = 0; k < logs[g]; ++k) {
            expected *= p;
          }
          if (ord != expected) {
            throw ParseError(line_no, lcol + caret + 1 + le,
                             "power relation exponent must equal the order of '"
                                 + names[g] + "'");
          }
          if (power_rels.count(g)) {
            throw ParseError(line_no, lcol, "duplicate relation");
          }
          power_rels.emplace(g, std::move(w));
        }
      } else {
        throw ParseError(line_no, base,
                         "unknown directive '" + std::string(kw) + "'");
      }
    }
    if (!have_p) {
      throw ParseError(line_no + 1, 1, "missing 'p = <prime>' line");
    }
    if (!have_gens) {
      throw ParseError(line_no + 1, 1, "missing 'gens' line");
    }
    for (std::size_t g = 0; g < names.size(); ++g) {
      if (!have_order[g]) {
        throw ParseError(line_no + 1, 1,
                         "missing order for generator '" + names[g] + "'");
      }
    }
    return Presentation::make(p, std::move(names), std::move(logs),
                              std::move(power_rels), std::move(comm_rels));
  }

  std::string render_word(Presentation const& P, Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k != 0) {
        out += '*';
      }
      out += P.name(w[k].gen);
      out += '^';
      out += std::to_string(w[k].exp);
    }
    return out;
  }

  std::string render(Presentation const& P) {
    std::string out = "p = " + std::to_string(P.prime()) + "\ngens";
    for (auto const& n : P.names()) {
      out += ' ' + n;
    }
    out += "\norders";
    for (std::size_t i = 0; i < P.num_gens(); ++i) {
      out += ' ' + P.name(i) + ':' + std::to_string(P.relative_order(i));
    }
    out += '\n';
    for (auto const& [i, w] : P.power_relations()) {
      out += "rel " + P.name(i) + '^' + std::to_string(P.relative_order(i))
             + " = " + render_word(P, w) + '\n';
    }
    for (auto const& [key, w] : P.commutator_relations()) {
      out += "rel [" + P.name(key.first) + ',' + P.name(key.second)
             + "] = " + render_word(P, w) + '\n';
    }
    return out;
  }

  Word parse_word(Presentation const& P,
                  std::string_view    text,
                  bool                allow_brackets) {
    return WordReader(P.names(), text, 1, 0, allow_brackets).read_all();
  }

}  // namespace pcgroups
