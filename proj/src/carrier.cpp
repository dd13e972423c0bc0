#include "multirel/carrier.hpp"

#include <mutex>
#include <unordered_map>

#include "multirel/error.hpp"

namespace multirel {

struct Carrier::Data {
  std::string name;
  std::vector<std::string> elements;
  std::unordered_map<std::string, std::size_t> index;
  CarrierKind kind = CarrierKind::base;
  std::optional<Carrier> base;

  // Powerset of this carrier. Weak so the powerset's back-reference to its
  // base does not form a cycle.
  mutable std::mutex pow_mutex;
  mutable std::weak_ptr<const Data> pow;
};

namespace {

std::string subset_label(std::span<const std::string> base, std::size_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if ((mask >> j) & 1U) {
      if (!first) out += ',';
      out += base[j];
      first = false;
    }
  }
  out += '}';
  return out;
}

}  // namespace

const std::string& Carrier::name() const noexcept { return data_->name; }

std::span<const std::string> Carrier::elements() const noexcept {
  return data_->elements;
}

std::size_t Carrier::size() const noexcept { return data_->elements.size(); }

const std::string& Carrier::label(std::size_t index) const {
  return data_->elements.at(index);
}

std::optional<std::size_t> Carrier::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

CarrierKind Carrier::kind() const noexcept { return data_->kind; }

const Carrier& Carrier::powerset_base() const {
  if (!data_->base) {
    throw Error(ErrorCode::not_multirelation,
                "carrier '" + name() + "' is not a powerset carrier");
  }
  return *data_->base;
}

bool operator==(const Carrier& lhs, const Carrier& rhs) {
  if (lhs.data_ == rhs.data_) return true;
  const auto& a = *lhs.data_;
  const auto& b = *rhs.data_;
  if (a.kind != b.kind || a.name != b.name) return false;
  if (a.kind == CarrierKind::powerset) return *a.base == *b.base;
  return a.elements == b.elements;
}

Carrier mk_carrier(std::string name, std::vector<std::string> elements) {
  if (elements.empty()) {
    throw Error(ErrorCode::empty_carrier, "carrier '" + name + "' has no elements");
  }
  auto data = std::make_shared<Carrier::Data>();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!data->index.emplace(elements[i], i).second) {
      throw Error(ErrorCode::duplicate_element,
                  "carrier '" + name + "' lists '" + elements[i] + "' twice");
    }
  }
  data->name = std::move(name);
  data->elements = std::move(elements);
  return Carrier(std::move(data));
}

Carrier detail_powerset_of(const Carrier& base) {
  const auto& src = *base.data_;
  std::lock_guard lock(src.pow_mutex);
  if (auto cached = src.pow.lock()) return Carrier(std::move(cached));
  {
    auto data = std::make_shared<Carrier::Data>();
    data->name = "P(" + src.name + ")";
    data->kind = CarrierKind::powerset;
    data->base = base;
    const std::size_t n = std::size_t{1} << src.elements.size();
    data->elements.reserve(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
      data->elements.push_back(subset_label(src.elements, mask));
      data->index.emplace(data->elements.back(), mask);
    }
    src.pow = data;
    return Carrier(std::move(data));
  }
}

Carrier standard_carrier(std::size_t size, std::string name) {
  if (size == 0 || size > 26) {
    throw Error(ErrorCode::invalid_argument, "standard carrier size must be in 1..26");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return mk_carrier(std::move(name), std::move(labels));
}

}  // namespace multirel
