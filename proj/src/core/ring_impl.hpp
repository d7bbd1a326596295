#pragma once

#include <string_view>
#include <unordered_map>

#include "edr/core/ring.hpp"

namespace edr::detail {

class RingImpl {
public:
    virtual ~RingImpl() = default;

    virtual RingKind kind() const = 0;
    virtual std::string spec() const = 0;
    virtual std::optional<Integer> cardinality() const = 0;
    virtual bool zero_ring() const { return false; }

    virtual Payload zero() const = 0;
    virtual Payload one() const = 0;
    virtual Payload from_integer(const Integer& n) const = 0;
    virtual Payload add(const Payload& a, const Payload& b) const = 0;
    virtual Payload mul(const Payload& a, const Payload& b) const = 0;
    virtual Payload neg(const Payload& a) const = 0;

    virtual bool is_unit(const Payload& a) const = 0;
    /// Some q with a*q = b, least canonical index on finite rings.
    virtual std::optional<Payload> divide(const Payload& a, const Payload& b) const = 0;

    /// `offset` is added to error positions.
    virtual Payload parse(std::string_view text, std::size_t offset) const = 0;
    virtual std::string format(const Payload& a) const = 0;

    virtual Payload element_at(const Integer& index) const;
    virtual Integer index_of(const Payload& a) const;
};

class IntegersImpl final : public RingImpl {
public:
    RingKind kind() const override { return RingKind::Integers; }
    std::string spec() const override { return "Z"; }
    std::optional<Integer> cardinality() const override { return std::nullopt; }
    Payload zero() const override { return Integer(0); }
    Payload one() const override { return Integer(1); }
    Payload from_integer(const Integer& n) const override { return n; }
    Payload add(const Payload& a, const Payload& b) const override;
    Payload mul(const Payload& a, const Payload& b) const override;
    Payload neg(const Payload& a) const override;
    bool is_unit(const Payload& a) const override;
    std::optional<Payload> divide(const Payload& a, const Payload& b) const override;
    Payload parse(std::string_view text, std::size_t offset) const override;
    std::string format(const Payload& a) const override;
};

class ModNImpl final : public RingImpl {
public:
    ModNImpl(Integer n, bool zero_ring_flag) : n_(std::move(n)), zero_ring_(zero_ring_flag) {}
    const Integer& n() const { return n_; }

    RingKind kind() const override { return RingKind::IntegersModN; }
    std::string spec() const override { return "Z/" + n_.get_str(); }
    std::optional<Integer> cardinality() const override { return n_; }
    bool zero_ring() const override { return zero_ring_; }
    Payload zero() const override { return Integer(0); }
    Payload one() const override { return reduce(Integer(1)); }
    Payload from_integer(const Integer& v) const override { return reduce(v); }
    Payload add(const Payload& a, const Payload& b) const override;
    Payload mul(const Payload& a, const Payload& b) const override;
    Payload neg(const Payload& a) const override;
    bool is_unit(const Payload& a) const override;
    std::optional<Payload> divide(const Payload& a, const Payload& b) const override;
    Payload parse(std::string_view text, std::size_t offset) const override;
    std::string format(const Payload& a) const override;
    Payload element_at(const Integer& index) const override;
    Integer index_of(const Payload& a) const override;

    Integer reduce(const Integer& v) const;

private:
    Integer n_;
    bool zero_ring_;
};

class PolyImpl final : public RingImpl {
public:
    explicit PolyImpl(std::uint64_t p) : field_(p) {}
    const PrimeField& field() const { return field_; }

    RingKind kind() const override { return RingKind::PolynomialsOverPrimeField; }
    std::string spec() const override { return "GF(" + std::to_string(field_.p()) + ")[x]"; }
    std::optional<Integer> cardinality() const override { return std::nullopt; }
    Payload zero() const override { return Poly{}; }
    Payload one() const override { return Poly::constant(1); }
    Payload from_integer(const Integer& n) const override;
    Payload add(const Payload& a, const Payload& b) const override;
    Payload mul(const Payload& a, const Payload& b) const override;
    Payload neg(const Payload& a) const override;
    bool is_unit(const Payload& a) const override;
    std::optional<Payload> divide(const Payload& a, const Payload& b) const override;
    Payload parse(std::string_view text, std::size_t offset) const override;
    std::string format(const Payload& a) const override;

private:
    PrimeField field_;
};

class PolyQuotientImpl final : public RingImpl {
public:
    PolyQuotientImpl(std::uint64_t p, Poly f, bool zero_ring_flag);
    const PrimeField& field() const { return field_; }
    const Poly& f() const { return f_; }

    RingKind kind() const override { return RingKind::PolynomialQuotient; }
    std::string spec() const override;
    std::optional<Integer> cardinality() const override;
    bool zero_ring() const override { return zero_ring_; }
    Payload zero() const override { return Poly{}; }
    Payload one() const override { return reduce(Poly::constant(1)); }
    Payload from_integer(const Integer& n) const override;
    Payload add(const Payload& a, const Payload& b) const override;
    Payload mul(const Payload& a, const Payload& b) const override;
    Payload neg(const Payload& a) const override;
    bool is_unit(const Payload& a) const override;
    std::optional<Payload> divide(const Payload& a, const Payload& b) const override;
    Payload parse(std::string_view text, std::size_t offset) const override;
    std::string format(const Payload& a) const override;
    Payload element_at(const Integer& index) const override;
    Integer index_of(const Payload& a) const override;

    Poly reduce(const Poly& a) const;

private:
    PrimeField field_;
    Poly f_;
    bool zero_ring_;
};

class ProductImpl final : public RingImpl {
public:
    ProductImpl(Ring left, Ring right) : left_(std::move(left)), right_(std::move(right)) {}
    const Ring& left() const { return left_; }
    const Ring& right() const { return right_; }

    RingKind kind() const override { return RingKind::Product; }
    std::string spec() const override { return left_.spec() + " x " + right_.spec(); }
    std::optional<Integer> cardinality() const override;
    Payload zero() const override;
    Payload one() const override;
    Payload from_integer(const Integer& n) const override;
    Payload add(const Payload& a, const Payload& b) const override;
    Payload mul(const Payload& a, const Payload& b) const override;
    Payload neg(const Payload& a) const override;
    bool is_unit(const Payload& a) const override;
    std::optional<Payload> divide(const Payload& a, const Payload& b) const override;
    Payload parse(std::string_view text, std::size_t offset) const override;
    std::string format(const Payload& a) const override;
    Payload element_at(const Integer& index) const override;
    Integer index_of(const Payload& a) const override;

private:
    Ring left_, right_;
};

/// R/I for a finite R, realized by enumerating the cosets of I. Each coset
/// is represented by its member of least canonical index in R.
class QuotientImpl final : public RingImpl {
public:
    QuotientImpl(Ring base, std::vector<Element> generators);
    const Ring& base() const { return base_; }
    const std::vector<Element>& generators() const { return generators_; }

    RingKind kind() const override { return RingKind::Quotient; }
    std::string spec() const override;
    std::optional<Integer> cardinality() const override { return Integer(static_cast<unsigned long>(reps_.size())); }
    bool zero_ring() const override { return reps_.size() == 1; }
    Payload zero() const override;
    Payload one() const override;
    Payload from_integer(const Integer& n) const override;
    Payload add(const Payload& a, const Payload& b) const override;
    Payload mul(const Payload& a, const Payload& b) const override;
    Payload neg(const Payload& a) const override;
    bool is_unit(const Payload& a) const override;
    std::optional<Payload> divide(const Payload& a, const Payload& b) const override;
    Payload parse(std::string_view text, std::size_t offset) const override;
    std::string format(const Payload& a) const override;
    Payload element_at(const Integer& index) const override;
    Integer index_of(const Payload& a) const override;

    /// Coset representative of a base-ring payload.
    Payload canonical(const Payload& base_value) const;

private:
    std::size_t coset_of(const Payload& base_value) const;

    Ring base_;
    std::vector<Element> generators_;
    std::vector<std::size_t> coset_;  // base index -> coset index
    std::vector<Payload> reps_;       // coset index -> representative
};

}  // namespace edr::detail
