#pragma once

// Finite fields F_q, q = p^s <= 2^16. Elements are encoded as integers
// sum c_i p^i from their coefficient vectors modulo the field's defining
// polynomial; multiplication goes through discrete-log tables and addition in
// extensions through Zech logarithms.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace arithmirror {

class FiniteField {
 public:
  using Element = std::uint32_t;

  /// F_{p^s}. Throws NotPrime or OrderTooLarge (q > 65536) or InvalidArgument (s = 0).
  static FiniteField make(std::uint32_t p, std::uint32_t s = 1);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return s_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic defining polynomial, coefficients from x^0 up to x^s. For s = 1 this
  /// is the placeholder x.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  /// Image of an integer under Z -> F_p -> F_q.
  Element from_int(std::int64_t n) const;
  std::vector<std::uint32_t> coefficients(Element a) const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws DivisionByZero for a = 0.
  Element inv(Element a) const;
  Element pow(Element a, std::int64_t e) const;

  /// Fixed primitive element g; exp(k) = g^k, log(a) for a != 0.
  Element generator() const noexcept { return exp_[1 % (q_ - 1)]; }
  Element exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  std::uint32_t log(Element a) const;

  /// The q - 1 nonzero elements in increasing encoded order.
  std::vector<Element> nonzero_elements() const;

 private:
  Element add_slow(Element a, Element b) const;

  std::uint32_t p_ = 0;
  std::uint32_t s_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;        // size q - 1
  std::vector<std::int32_t> log_;   // size q, log_[0] = -1
  std::vector<std::int32_t> zech_;  // log(1 + g^k), -1 when 1 + g^k = 0
};

bool is_prime(std::uint64_t n);

/// Iterates over (F*)^m in odometer order (first coordinate fastest), each
/// coordinate running through FiniteField::nonzero_elements().
class TorusPoints {
 public:
  TorusPoints(const FiniteField& field, std::size_t m);

  class iterator {
   public:
    using value_type = std::vector<FiniteField::Element>;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return point_; }
    pointer operator->() const { return &point_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || index_ == other.index_); }

   private:
    friend class TorusPoints;
    const std::vector<FiniteField::Element>* units_ = nullptr;
    std::vector<std::size_t> index_;
    value_type point_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }
  std::uint64_t size() const;

 private:
  std::vector<FiniteField::Element> units_;
  std::size_t m_;
};

inline TorusPoints torus_points(const FiniteField& field, std::size_t m) {
  return TorusPoints(field, m);
}

}  // namespace arithmirror
