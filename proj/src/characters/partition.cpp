#include "sov/characters/partition.hpp"

#include <charconv>
#include <stdexcept>

namespace sov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have length L >= 1");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::zero(std::size_t L) { return Partition(std::vector<int>(L, 0)); }

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed partition: " + std::string(text));
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

MuVector::MuVector(std::vector<int> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw std::invalid_argument("mu must be nonempty");
  if (mu_.back() < 1) throw std::invalid_argument("mu entries must be positive");
  for (std::size_t i = 1; i < mu_.size(); ++i) {
    if (mu_[i] >= mu_[i - 1]) throw std::invalid_argument("mu must be strictly decreasing");
  }
}

MuVector mu_from_lambda(const Partition& lambda) {
  const std::size_t L = lambda.length();
  std::vector<int> mu(L);
  for (std::size_t i = 0; i < L; ++i) mu[i] = lambda[i] + static_cast<int>(L - i);
  return MuVector(std::move(mu));
}

MuVector delta(std::size_t L) { return mu_from_lambda(Partition::zero(L)); }

Partition lambda_from_mu(const MuVector& mu) {
  const std::size_t L = mu.length();
  std::vector<int> parts(L);
  for (std::size_t i = 0; i < L; ++i) parts[i] = mu[i] - static_cast<int>(L - i);
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_in_box(std::size_t L, int max_part) {
  std::vector<Partition> out;
  if (L == 0 || max_part < 0) return out;
  std::vector<int> parts(L, 0);
  // Enumerate weakly decreasing tuples in lexicographic order of `parts`.
  for (;;) {
    out.emplace_back(parts);
    // Advance: find the rightmost position that can be incremented.
    std::size_t i = L;
    while (i > 0) {
      --i;
      const int cap = i == 0 ? max_part : parts[i - 1];
      if (parts[i] < cap) {
        ++parts[i];
        for (std::size_t j = i + 1; j < L; ++j) parts[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace sov
