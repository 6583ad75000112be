#include "relog/terms.hpp"

#include <cstring>
#include <stdexcept>

#include "relog/error.hpp"

namespace relog {

CoordinateSpace::CoordinateSpace(std::span<const FiniteAlgebra> algebras, std::size_t variables, const Caps& caps)
    : variables_(variables)
{
    for (const auto& A : algebras) {
        if (A.size() > 256)
            throw CapExceeded("term enumeration supports algebras of at most 256 elements; " + A.name() + " has " +
                              std::to_string(A.size()));
        std::size_t count = 1;
        for (std::size_t i = 0; i < variables; ++i) {
            if (count > caps.max_free_coordinates / std::max<std::size_t>(A.size(), 1))
                throw CapExceeded(std::to_string(A.size()) + "^" + std::to_string(variables) +
                                  " coordinates exceed the cap of " + std::to_string(caps.max_free_coordinates));
            count *= A.size();
        }
        offsets_.push_back(total_);
        counts_.push_back(count);
        base_.push_back(A.size());
        total_ += count;
    }
    if (total_ > caps.max_free_coordinates)
        throw CapExceeded(std::to_string(total_) + " coordinates exceed the cap of " +
                          std::to_string(caps.max_free_coordinates));
}

Element CoordinateSpace::variable_value(std::size_t d, std::size_t local, std::size_t v) const
{
    const std::size_t n = base_.at(d);
    std::size_t div = 1;
    for (std::size_t i = v + 1; i < variables_; ++i)
        div *= n;
    return static_cast<Element>((local / div) % n);
}

std::size_t CoordinateSpace::algebra_of(std::size_t coordinate) const
{
    for (std::size_t d = offsets_.size(); d-- > 0;)
        if (coordinate >= offsets_[d])
            return d;
    return 0;
}

// ---------------------------------------------------------------------------

TermEnumerator::TermEnumerator(std::vector<FiniteAlgebra> algebras, std::vector<std::string> variables, const Caps& caps)
    : algebras_(std::move(algebras)),
      variables_(std::move(variables)),
      caps_(caps),
      space_(algebras_, variables_.size(), caps),
      stride_(space_.size())
{
    for (std::size_t d = 0; d < algebras_.size(); ++d) {
        const auto& A = algebras_[d];
        Block block{space_.offset(d), space_.offset(d) + space_.count(d), A.size(), {}, {}, {}, {}};
        for (Element x = 0; x < A.size(); ++x) {
            block.neg.push_back(static_cast<std::uint8_t>(A.neg(x)));
            for (Element y = 0; y < A.size(); ++y) {
                block.meet.push_back(static_cast<std::uint8_t>(A.meet(x, y)));
                block.join.push_back(static_cast<std::uint8_t>(A.join(x, y)));
                block.fusion.push_back(static_cast<std::uint8_t>(A.fusion(x, y)));
                for (auto op : binary_operations)
                    if (A.apply(op, x, y) != A.apply(op, y, x))
                        commutative_ = false;
            }
        }
        blocks_.push_back(std::move(block));
    }
    table_.assign(1024, 0);
}

std::uint64_t TermEnumerator::hash(const std::uint8_t* data) const
{
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ stride_;
    std::size_t i = 0;
    for (; i + 8 <= stride_; i += 8) {
        std::uint64_t w;
        std::memcpy(&w, data + i, 8);
        h = (h ^ w) * 0xBF58476D1CE4E5B9ull;
        h ^= h >> 31;
    }
    std::uint64_t tail = 0;
    std::memcpy(&tail, data + i, stride_ - i);
    h = (h ^ tail) * 0x94D049BB133111EBull;
    return h ^ (h >> 29);
}

void TermEnumerator::grow_table()
{
    std::vector<std::uint32_t> bigger(table_.size() * 2, 0);
    const std::size_t mask = bigger.size() - 1;
    for (std::size_t e = 0; e < count_; ++e) {
        std::size_t pos = hashes_[e] & mask;
        while (bigger[pos] != 0)
            pos = (pos + 1) & mask;
        bigger[pos] = static_cast<std::uint32_t>(e + 1);
    }
    table_ = std::move(bigger);
}

std::uint8_t* TermEnumerator::candidate()
{
    const std::size_t needed = (count_ + 1) * stride_;
    if (arena_.size() < needed)
        arena_.resize(std::max(needed, arena_.size() * 2));
    return arena_.data() + count_ * stride_;
}

std::optional<std::size_t> TermEnumerator::find(std::span<const std::uint8_t> values) const
{
    if (values.size() != stride_)
        return std::nullopt;
    const std::uint64_t h = hash(values.data());
    const std::size_t mask = table_.size() - 1;
    for (std::size_t pos = h & mask; table_[pos] != 0; pos = (pos + 1) & mask) {
        const std::size_t e = table_[pos] - 1;
        if (hashes_[e] == h && std::memcmp(arena_.data() + e * stride_, values.data(), stride_) == 0)
            return e;
    }
    return std::nullopt;
}

bool TermEnumerator::commit(Record record, const std::function<bool(std::size_t)>& on_new, bool& stop)
{
    const std::uint8_t* data = arena_.data() + count_ * stride_;
    const std::uint64_t h = hash(data);
    const std::size_t mask = table_.size() - 1;
    std::size_t pos = h & mask;
    for (; table_[pos] != 0; pos = (pos + 1) & mask) {
        const std::size_t e = table_[pos] - 1;
        if (hashes_[e] == h && std::memcmp(arena_.data() + e * stride_, data, stride_) == 0)
            return false;
    }
    if (count_ >= caps_.max_free_elements)
        throw CapExceeded("term enumeration over " + std::to_string(variables_.size()) + " variable(s) reached " +
                          std::to_string(count_) + " elements at size " + std::to_string(record.size) +
                          " (cap " + std::to_string(caps_.max_free_elements) + ")");
    table_[pos] = static_cast<std::uint32_t>(count_ + 1);
    records_.push_back(record);
    hashes_.push_back(h);
    ++count_;
    if (count_ * 2 > table_.size())
        grow_table();
    if (on_new && on_new(count_ - 1))
        stop = true;
    return true;
}

void TermEnumerator::compute(Connective op, std::size_t x, std::size_t y, std::uint8_t* out) const
{
    const std::uint8_t* a = arena_.data() + x * stride_;
    const std::uint8_t* b = arena_.data() + y * stride_;
    for (const auto& block : blocks_) {
        const std::size_t n = block.n;
        switch (op) {
        case Connective::neg:
            for (std::size_t c = block.begin; c < block.end; ++c)
                out[c] = block.neg[a[c]];
            break;
        case Connective::meet:
            for (std::size_t c = block.begin; c < block.end; ++c)
                out[c] = block.meet[a[c] * n + b[c]];
            break;
        case Connective::join:
            for (std::size_t c = block.begin; c < block.end; ++c)
                out[c] = block.join[a[c] * n + b[c]];
            break;
        case Connective::fusion:
            for (std::size_t c = block.begin; c < block.end; ++c)
                out[c] = block.fusion[a[c] * n + b[c]];
            break;
        case Connective::variable: break;
        }
    }
}

std::pair<std::size_t, std::size_t> TermEnumerator::level(std::size_t size) const
{
    if (size == 0 || size >= level_begin_.size())
        return {count_, count_};
    return {level_begin_[size - 1], level_begin_[size]};
}

TermEnumerator::Step TermEnumerator::next_level(const std::function<bool(std::size_t)>& on_new)
{
    if (stopped_)
        throw std::logic_error("a stopped term enumeration cannot be resumed");
    if (complete_)
        return Step::complete;
    const std::size_t s = levels_built() + 1;
    if (s > 1 && s > 2 * last_nonempty_ + 1) {
        complete_ = true;
        return Step::complete;
    }

    bool stop = false;
    const std::size_t before = count_;
    if (s == 1) {
        for (std::size_t v = 0; v < variables_.size() && !stop; ++v) {
            auto* out = candidate();
            for (std::size_t d = 0; d < blocks_.size(); ++d)
                for (std::size_t c = blocks_[d].begin; c < blocks_[d].end; ++c)
                    out[c] = static_cast<std::uint8_t>(space_.variable_value(d, c - blocks_[d].begin, v));
            commit({Connective::variable, static_cast<std::uint32_t>(v), 0, 1}, on_new, stop);
        }
    } else {
        const auto size = static_cast<std::uint32_t>(s);
        auto [pb, pe] = level(s - 1);
        for (std::size_t x = pb; x < pe && !stop; ++x) {
            compute(Connective::neg, x, x, candidate());
            commit({Connective::neg, static_cast<std::uint32_t>(x), 0, size}, on_new, stop);
        }
        for (auto op : {Connective::meet, Connective::join, Connective::fusion}) {
            for (std::size_t i = 1; i + 1 < s && !stop; ++i) {
                const std::size_t j = s - 1 - i;
                if (commutative_ && i > j)
                    continue;
                auto [bi, ei] = level(i);
                auto [bj, ej] = level(j);
                for (std::size_t x = bi; x < ei && !stop; ++x)
                    for (std::size_t y = (commutative_ && i == j) ? x : bj; y < ej && !stop; ++y) {
                        // candidate() may reallocate; compute reads after it.
                        auto* out = candidate();
                        compute(op, x, y, out);
                        commit({op, static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), size}, on_new,
                               stop);
                    }
            }
            if (stop)
                break;
        }
    }
    level_begin_.push_back(count_);
    if (count_ > before)
        last_nonempty_ = s;
    if (stop) {
        stopped_ = true;
        return Step::stopped;
    }
    return Step::progressed;
}

TermEnumerator::Step TermEnumerator::run(std::size_t max_size, const std::function<bool(std::size_t)>& on_new)
{
    while (max_size == 0 || levels_built() < max_size) {
        auto step = next_level(on_new);
        if (step != Step::progressed)
            return step;
    }
    return Step::progressed;
}

Formula TermEnumerator::representative(std::size_t element) const
{
    const auto& r = records_.at(element);
    switch (r.op) {
    case Connective::variable: return Formula::variable(variables_.at(r.left));
    case Connective::neg: return Formula::negation(representative(r.left));
    default: return Formula::binary(r.op, representative(r.left), representative(r.right));
    }
}

} // namespace relog
