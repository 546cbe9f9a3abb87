#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ogplab {

enum class Alphabet { kBinary, kSpin };

// Length-n string over {0,1} (set indicator) or {-1,+1} (spins).
class Assignment {
 public:
  static Assignment binary(std::vector<int> values);
  static Assignment spin(std::vector<int> values);

  // Constant assignments.
  static Assignment zeros(int n);
  static Assignment ones(int n);
  static Assignment all_plus(int n);
  static Assignment all_minus(int n);

  Alphabet alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int8_t>& values() const { return values_; }

  Assignment flipped() const;  // spin only: global sign flip

  // "0110" for binary, "+-+-" for spins.
  std::string to_line() const;
  static Assignment parse_line(const std::string& line);

  bool operator==(const Assignment& other) const {
    return alphabet_ == other.alphabet_ && values_ == other.values_;
  }

 private:
  Assignment(Alphabet a, std::vector<std::int8_t> v)
      : alphabet_(a), values_(std::move(v)) {}

  Alphabet alphabet_;
  std::vector<std::int8_t> values_;
};

}  // namespace ogplab
