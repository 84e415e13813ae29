#include "pbwtidx/collection.hpp"

#include "pbwtidx/error.hpp"

namespace pbwtidx {

StringCollection::StringCollection(Alphabet alphabet, std::vector<std::string> strings)
    : alphabet_(std::move(alphabet)), strings_(std::move(strings)) {
  if (strings_.empty()) throw Error(Errc::EmptyInput, "collection has no strings");
  len_ = strings_.front().size();
  if (len_ == 0) throw Error(Errc::EmptyInput, "line 1: strings must be non-empty");

  const std::size_t n = strings_.size();
  columns_.resize(n * len_);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& s = strings_[i];
    if (s.size() != len_) {
      throw Error(Errc::RaggedCollection, "line " + std::to_string(i + 1) + ": length " +
                                              std::to_string(s.size()) + ", expected " +
                                              std::to_string(len_));
    }
    for (std::size_t j = 0; j < len_; ++j) {
      if (!alphabet_.contains(s[j])) {
        throw alphabet_.rejection(s[j], "line " + std::to_string(i + 1) + ", column " + std::to_string(j + 1));
      }
      columns_[j * n + i] = alphabet_.rank(s[j]);
    }
  }
}

const std::string& StringCollection::string(std::size_t i) const {
  if (i >= strings_.size()) {
    throw Error(Errc::IndexOutOfRange, "string index " + std::to_string(i) + " >= n " + std::to_string(n()));
  }
  return strings_[i];
}

std::span<const Symbol> StringCollection::column(std::size_t j) const {
  if (j >= len_) {
    throw Error(Errc::IndexOutOfRange, "column " + std::to_string(j) + " >= len " + std::to_string(len_));
  }
  return {columns_.data() + j * strings_.size(), strings_.size()};
}

std::string StringCollection::suffix(std::size_t i, std::size_t j) const {
  const std::string& s = string(i);
  if (j > len_) {
    throw Error(Errc::IndexOutOfRange, "column " + std::to_string(j) + " > len " + std::to_string(len_));
  }
  return s.substr(j);
}

StringCollection parse_collection(std::string_view text, const Alphabet& alphabet) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw Error(Errc::EmptyInput, "input contains no strings");
  return StringCollection(alphabet, std::move(lines));
}

std::string serialize_collection(const StringCollection& collection) {
  std::string out;
  out.reserve(collection.n() * (collection.len() + 1));
  for (const auto& s : collection.strings()) {
    out += s;
    out += '\n';
  }
  return out;
}

}  // namespace pbwtidx
