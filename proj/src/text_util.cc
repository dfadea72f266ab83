// Copyright 2026 The legalner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "legalner/text_util.h"

namespace legalner {

namespace {

// Length of the UTF-8 sequence starting at text[i], or 0 if malformed.
int SequenceLength(std::string_view text, size_t i) {
  auto lead = static_cast<unsigned char>(text[i]);
  int len;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
  } else {
    return 0;
  }
  if (i + len > text.size()) return 0;
  for (int k = 1; k < len; ++k) {
    if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) return 0;
  }
  return len;
}

}  // namespace

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    int len = SequenceLength(text, i);
    auto lead = static_cast<unsigned char>(text[i]);
    if (len == 0) {
      out.push_back(lead);
      ++i;
      continue;
    }
    char32_t c;
    switch (len) {
      case 1: c = lead; break;
      case 2: c = lead & 0x1F; break;
      case 3: c = lead & 0x0F; break;
      default: c = lead & 0x07; break;
    }
    for (int k = 1; k < len; ++k) {
      c = (c << 6) | (static_cast<unsigned char>(text[i + k]) & 0x3F);
    }
    out.push_back(c);
    i += len;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

Utf8Index::Utf8Index(std::string_view text) : text_(text) {
  byte_offsets_.reserve(text.size() + 1);
  size_t i = 0;
  while (i < text.size()) {
    byte_offsets_.push_back(i);
    int len = SequenceLength(text, i);
    i += len == 0 ? 1 : len;
  }
  byte_offsets_.push_back(text.size());
}

int CodePointLength(std::string_view text) {
  int n = 0;
  size_t i = 0;
  while (i < text.size()) {
    int len = SequenceLength(text, i);
    i += len == 0 ? 1 : len;
    ++n;
  }
  return n;
}

bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0xA0 || c == 0x2009 || c == 0x200B ||
         c == 0x3000;
}

bool IsAsciiAlpha(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsAsciiDigit(char32_t c) { return c >= '0' && c <= '9'; }

bool IsAsciiAlnum(char32_t c) { return IsAsciiAlpha(c) || IsAsciiDigit(c); }

bool IsPunct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case 0x2018: case 0x2019: case 0x201C: case 0x201D:  // curly quotes
    case 0x2013: case 0x2014: case 0x2022: case 0x2026:  // dashes, bullet
    case 0x00A7: case 0x00B6: case 0x00AB: case 0x00BB:  // section, quotes
    case 0x00B7:
      return true;
    default:
      return false;
  }
}

char32_t ToLowerAscii(char32_t c) {
  return (c >= 'A' && c <= 'Z') ? c + ('a' - 'A') : c;
}

std::string ToLowerAscii(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + ('a' - 'A'));
  }
  return out;
}

std::string CollapseWhitespace(std::string_view text) {
  std::u32string in = DecodeUtf8(text);
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : in) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return EncodeUtf8(out);
}

std::string StripPunct(std::string_view text) {
  std::u32string in = DecodeUtf8(text);
  size_t b = 0, e = in.size();
  while (b < e && (IsPunct(in[b]) || IsSpace(in[b]))) ++b;
  while (e > b && (IsPunct(in[e - 1]) || IsSpace(in[e - 1]))) --e;
  return EncodeUtf8(std::u32string_view(in).substr(b, e - b));
}

std::string NormalizeMention(std::string_view text) {
  return StripPunct(CollapseWhitespace(ToLowerAscii(text)));
}

std::vector<std::string> WordTokens(std::string_view text) {
  std::u32string in = DecodeUtf8(text);
  std::vector<std::string> tokens;
  std::u32string current;
  auto flush = [&]() {
    while (!current.empty() &&
           (current.back() == '\'' || current.back() == '/')) {
      current.pop_back();
    }
    if (!current.empty()) tokens.push_back(EncodeUtf8(current));
    current.clear();
  };
  for (size_t i = 0; i < in.size(); ++i) {
    char32_t c = ToLowerAscii(in[i]);
    bool word_char = IsAsciiAlnum(c) || (c >= 0x80 && !IsPunct(c) &&
                                         !IsSpace(c));
    if (word_char) {
      current.push_back(c);
    } else if ((c == '\'' || c == 0x2019 || c == '/') && !current.empty() &&
               i + 1 < in.size() && IsAsciiAlnum(in[i + 1])) {
      current.push_back(c == 0x2019 ? U'\'' : c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string_view> SplitWhitespace(std::string_view text) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    size_t j = i;
    while (j < text.size() && !IsSpace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

size_t FindWholePhrase(std::string_view haystack, std::string_view phrase,
                       size_t from) {
  if (phrase.empty()) return std::string_view::npos;
  size_t pos = haystack.find(phrase, from);
  while (pos != std::string_view::npos) {
    bool left_ok = pos == 0 ||
                   !IsAsciiAlnum(static_cast<unsigned char>(haystack[pos - 1]));
    size_t end = pos + phrase.size();
    bool right_ok = end == haystack.size() ||
                    !IsAsciiAlnum(static_cast<unsigned char>(haystack[end]));
    if (left_ok && right_ok) return pos;
    pos = haystack.find(phrase, pos + 1);
  }
  return pos;
}

}  // namespace legalner
