// Words over the nonidentity elements of A and B, and their normal forms.
//
// A word is a plain sequence of syllables.  It is *reduced* when adjacent
// syllables come from different factors; since there are only two factors a
// reduced word alternates strictly between A and B.  Every element of A * B
// has a unique reduced representative, and the empty word is the identity.

#ifndef KCORE_WORD_HPP_
#define KCORE_WORD_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

#include "factor_group.hpp"

namespace kcore {

  struct Syllable {
    FactorTag tag  = FactorTag::A;
    elem_type elem = 1;

    friend auto operator<=>(Syllable const&, Syllable const&) = default;
  };

  using Word = std::vector<Syllable>;

  inline Syllable inverse(FreeProduct const& fp, Syllable s) {
    return {s.tag, fp.factor(s.tag).inv(s.elem)};
  }

  inline bool is_valid(FreeProduct const& fp, Syllable s) noexcept {
    return s.elem != 0 && s.elem < fp.factor(s.tag).order();
  }

  inline void validate(FreeProduct const& fp, Word const& w) {
    for (auto s : w) {
      if (!is_valid(fp, s)) {
        throw input_error(std::string("invalid syllable ") + letter_of(s.tag)
                          + std::to_string(s.elem) + " (need 1 <= k < "
                          + std::to_string(fp.factor(s.tag).order()) + ")");
      }
    }
  }

  inline bool is_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i - 1].tag == w[i].tag) {
        return false;
      }
    }
    return true;
  }

  inline bool is_cyclically_reduced(Word const& w) noexcept {
    return is_reduced(w) && (w.size() <= 1 || w.front().tag != w.back().tag);
  }

  // Appends s to a reduced word, applying a cancellation or merge.
  inline void push_reduced(FreeProduct const& fp, Word& w, Syllable s) {
    if (!w.empty() && w.back().tag == s.tag) {
      elem_type const m = fp.factor(s.tag).mul(w.back().elem, s.elem);
      w.pop_back();
      if (m != 0) {
        w.push_back({s.tag, m});
      }
    } else {
      w.push_back(s);
    }
  }

  inline Word reduce(FreeProduct const& fp, Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto s : w) {
      push_reduced(fp, out, s);
    }
    return out;
  }

  // reduce(u v) for reduced u, v.
  inline Word concat_reduce(FreeProduct const& fp, Word u, Word const& v) {
    for (auto s : v) {
      push_reduced(fp, u, s);
    }
    return u;
  }

  inline Word invert(FreeProduct const& fp, Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(inverse(fp, *it));
    }
    return out;
  }

  // Reduced form of w^n, n may be negative.
  inline Word power(FreeProduct const& fp, Word const& w, long n) {
    Word const base = n < 0 ? invert(fp, w) : w;
    Word       out;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) {
      out = concat_reduce(fp, std::move(out), base);
    }
    return out;
  }

  struct CyclicDecomposition {
    Word conjugator;  // u
    Word core;        // z, cyclically reduced, with w = u z u^-1
  };

  // Peels matching ends off a reduced word.  When the outer syllables share a
  // factor but do not cancel, the first syllable moves into the conjugator and
  // is merged onto the far end, which finishes in one step.
  inline CyclicDecomposition cyclically_reduce(FreeProduct const& fp,
                                               Word const&        w) {
    CyclicDecomposition out;
    std::size_t         lo = 0;
    std::size_t         hi = w.size();  // half-open window [lo, hi)
    while (hi - lo >= 2 && w[lo].tag == w[hi - 1].tag) {
      Syllable const first = w[lo];
      Syllable const last  = w[hi - 1];
      out.conjugator.push_back(first);
      if (last.elem == fp.factor(first.tag).inv(first.elem)) {
        ++lo;
        --hi;
        continue;
      }
      out.core.assign(w.begin() + lo + 1, w.begin() + hi - 1);
      out.core.push_back({last.tag, fp.factor(last.tag).mul(last.elem,
                                                            first.elem)});
      return out;
    }
    out.core.assign(w.begin() + lo, w.begin() + hi);
    return out;
  }

  inline std::vector<Word> cyclic_conjugates(Word const& z) {
    if (z.empty()) {
      return {Word{}};
    }
    std::vector<Word> out;
    out.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      Word r(z.begin() + i, z.end());
      r.insert(r.end(), z.begin(), z.begin() + i);
      out.push_back(std::move(r));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form: "a1 b2 a1", empty string for the identity.
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_string(Syllable s) {
    return letter_of(s.tag) + std::to_string(s.elem);
  }

  inline std::string to_string(Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += to_string(w[i]);
    }
    return out;
  }

  inline Syllable parse_syllable(FreeProduct const& fp,
                                 std::string const& tok) {
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b')) {
      throw input_error("malformed syllable '" + tok
                        + "' (expected a<k> or b<k>)");
    }
    elem_type k = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9' || (i == 1 && tok[i] == '0')) {
        throw input_error("malformed syllable '" + tok
                          + "' (expected a decimal k >= 1)");
      }
      k = k * 10 + static_cast<elem_type>(tok[i] - '0');
      if (k > 1'000'000) {
        throw input_error("syllable '" + tok + "' out of range");
      }
    }
    Syllable const s{tok[0] == 'a' ? FactorTag::A : FactorTag::B, k};
    if (!is_valid(fp, s)) {
      throw input_error("syllable '" + tok + "' out of range (need k < "
                        + std::to_string(fp.factor(s.tag).order()) + ")");
    }
    return s;
  }

  // Single spaces between syllables; no leading or trailing blanks.
  inline Word parse_word(FreeProduct const& fp, std::string const& text) {
    Word w;
    if (text.empty()) {
      return w;
    }
    std::size_t start = 0;
    while (true) {
      std::size_t const end = text.find(' ', start);
      std::string const tok = text.substr(start, end - start);
      if (tok.empty()) {
        throw input_error("malformed word '" + text
                          + "' (syllables are separated by single spaces)");
      }
      w.push_back(parse_syllable(fp, tok));
      if (end == std::string::npos) {
        break;
      }
      start = end + 1;
    }
    return w;
  }

  // Generator lists: words separated by ';', blanks around each word ignored.
  inline std::vector<Word> parse_word_list(FreeProduct const& fp,
                                           std::string const& text) {
    std::vector<Word> out;
    std::size_t       start = 0;
    while (true) {
      std::size_t const end   = text.find(';', start);
      std::string       piece = text.substr(start, end - start);
      auto const        b     = piece.find_first_not_of(' ');
      auto const        e     = piece.find_last_not_of(' ');
      piece = b == std::string::npos ? "" : piece.substr(b, e - b + 1);
      out.push_back(parse_word(fp, piece));
      if (end == std::string::npos) {
        break;
      }
      start = end + 1;
    }
    return out;
  }

}  // namespace kcore

#endif  // KCORE_WORD_HPP_
