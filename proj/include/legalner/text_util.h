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

#ifndef LEGALNER_TEXT_UTIL_H_
#define LEGALNER_TEXT_UTIL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace legalner {

// Decodes UTF-8 into code points. Each byte of a malformed sequence decodes
// to one code point with the byte's value, so offsets never get lost.
std::u32string DecodeUtf8(std::string_view text);

// Encodes code points as UTF-8.
std::string EncodeUtf8(std::u32string_view text);

// Maps code point offsets onto byte offsets of a UTF-8 string. All span
// offsets in this library count code points.
class Utf8Index {
 public:
  explicit Utf8Index(std::string_view text);

  // Number of code points.
  int size() const { return static_cast<int>(byte_offsets_.size()) - 1; }

  // Byte offset of code point `cp`; `cp` may equal size().
  size_t ByteOffset(int cp) const { return byte_offsets_[cp]; }

  // Code point range [begin, end) as a view into the indexed text.
  std::string_view Slice(int begin, int end) const {
    return text_.substr(byte_offsets_[begin],
                        byte_offsets_[end] - byte_offsets_[begin]);
  }

 private:
  std::string_view text_;
  std::vector<size_t> byte_offsets_;
};

// Number of code points in `text`.
int CodePointLength(std::string_view text);

bool IsSpace(char32_t c);
bool IsAsciiAlpha(char32_t c);
bool IsAsciiDigit(char32_t c);
bool IsAsciiAlnum(char32_t c);

// Punctuation in the wide sense used for stripping: ASCII punctuation plus
// the typographic quotes, dashes and bullets common in judgment text.
bool IsPunct(char32_t c);

char32_t ToLowerAscii(char32_t c);
std::string ToLowerAscii(std::string_view text);

// Collapses runs of whitespace into one space and trims both ends.
std::string CollapseWhitespace(std::string_view text);

// Removes leading and trailing punctuation and whitespace.
std::string StripPunct(std::string_view text);

// Case-fold, collapse whitespace, strip surrounding punctuation. Two entity
// mentions "exactly match" when their normalized forms are equal.
std::string NormalizeMention(std::string_view text);

// Lower-cased alphanumeric tokens; every other character separates tokens
// except an apostrophe or slash inside a word ("hon'ble", "m/s").
std::vector<std::string> WordTokens(std::string_view text);

// Splits on whitespace.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Finds `phrase` in `haystack` as a whole phrase: the characters around the
// match must not be alphanumeric. Both inputs are compared as given.
size_t FindWholePhrase(std::string_view haystack, std::string_view phrase,
                       size_t from = 0);

}  // namespace legalner

#endif  // LEGALNER_TEXT_UTIL_H_
