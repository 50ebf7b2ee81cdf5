#include "qcover/word.hpp"

#include <algorithm>
#include <sstream>

namespace qcover {

std::vector<Letter> reduce_letters(const std::vector<Letter>& raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!stack.empty() && stack.back().first == l.first && stack.back().second == -l.second)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

GroupWord::GroupWord(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.first < 0) throw ShapeError("negative generator index");
    if (l.second != 1 && l.second != -1) throw ShapeError("letter sign must be +1 or -1");
  }
  letters_ = reduce_letters(letters);
}

GroupWord GroupWord::single(int gen, int sign) { return GroupWord({{gen, sign}}); }

GroupWord GroupWord::operator*(const GroupWord& other) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), other.letters_.begin(), other.letters_.end());
  return GroupWord(std::move(cat));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back({it->first, -it->second});
  return GroupWord(std::move(inv));
}

int GroupWord::char_sum() const {
  int s = 0;
  for (const Letter& l : letters_) s += l.second;
  return s;
}

GroupWord GroupWord::mapped(const std::vector<int>& f) const {
  std::vector<Letter> image;
  image.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (l.first >= static_cast<int>(f.size())) throw ShapeError("generator outside map domain");
    image.push_back({f[l.first], l.second});
  }
  return GroupWord(std::move(image));
}

std::vector<long long> GroupWord::exponent_vector(int alphabet_size) const {
  std::vector<long long> v(alphabet_size, 0);
  for (const Letter& l : letters_) {
    if (l.first >= alphabet_size) throw ShapeError("generator outside alphabet");
    v[l.first] += l.second;
  }
  return v;
}

GroupWord GroupWord::parse(const std::string& text, const std::vector<std::string>& labels) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> letters;
  while (in >> tok) {
    int sign = 1;
    std::string name = tok;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      name = tok.substr(0, tok.size() - 3);
    }
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw ShapeError("unknown generator '" + name + "'");
    letters.push_back({static_cast<int>(it - labels.begin()), sign});
  }
  return GroupWord(std::move(letters));
}

std::string GroupWord::str(const std::vector<std::string>& labels) const {
  return letters_str(letters_, labels);
}

std::string letters_str(const std::vector<Letter>& letters, const std::vector<std::string>& labels) {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += " ";
    out += labels[letters[i].first];
    if (letters[i].second < 0) out += "^-1";
  }
  return out;
}

std::size_t GroupWord::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const Letter& l : letters_) {
    h ^= static_cast<std::size_t>(l.first * 2 + (l.second > 0 ? 1 : 0)) + 0x9e3779b9;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qcover
