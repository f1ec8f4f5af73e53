#include "ranklevel/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ranklevel {

YoungDiagram::YoungDiagram(std::vector<int> parts, int rows, int level)
    : parts_(std::move(parts)), rows_(rows), level_(level) {
    if (rows_ <= 0) throw std::invalid_argument("diagram needs a positive number of rows");
    if (level_ <= 0) throw std::invalid_argument("diagram needs a positive level");
    if (parts_.size() > static_cast<size_t>(rows_))
        throw std::invalid_argument("more parts than rows");
    parts_.resize(static_cast<size_t>(rows_), 0);
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part");
        if (parts_[i] > level_) throw std::invalid_argument("part exceeds level");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("parts must be nonincreasing");
    }
}

long long YoungDiagram::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

YoungDiagram YoungDiagram::transpose() const {
    std::vector<int> t(static_cast<size_t>(level_));
    for (int j = 1; j <= level_; ++j) {
        int count = 0;
        for (int a : parts_)
            if (a >= j) ++count;
        t[static_cast<size_t>(j - 1)] = count;
    }
    return {std::move(t), level_, rows_};
}

YoungDiagram YoungDiagram::conjugate() const {
    std::vector<int> c(parts_.rbegin(), parts_.rend());
    for (int& a : c) a = level_ - a;
    return {std::move(c), rows_, level_};
}

std::string YoungDiagram::to_text() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

IndexSets index_sets(const YoungDiagram& d) {
    const int r = d.rows(), l = d.level();
    IndexSets out;
    out.I.reserve(static_cast<size_t>(r));
    for (int k = 1; k <= r; ++k) out.I.push_back(l + k - d.part(k));
    const YoungDiagram mu = d.transpose();
    out.J.reserve(static_cast<size_t>(l));
    for (int j = 1; j <= l; ++j) out.J.push_back(l + 1 - j + mu.part(j));
    std::sort(out.J.begin(), out.J.end());
    return out;
}

int DiagramString::count_R_after(int k) const {
    int c = 0;
    for (size_t i = static_cast<size_t>(std::max(k, 0)); i < symbols.size(); ++i)
        if (symbols[i] == 'R') ++c;
    return c;
}

int DiagramString::count_L_from(int k) const {
    int c = 0;
    for (size_t i = static_cast<size_t>(std::max(k - 1, 0)); i < symbols.size(); ++i)
        if (symbols[i] == 'L') ++c;
    return c;
}

DiagramString string_of(const YoungDiagram& d) {
    const int r = d.rows(), l = d.level();
    std::vector<int> asc(d.parts().rbegin(), d.parts().rend());
    std::string s(static_cast<size_t>(r + l), 'L');
    for (int k = 1; k <= r; ++k) s[static_cast<size_t>(asc[static_cast<size_t>(k - 1)] + k - 1)] = 'R';
    return {std::move(s)};
}

YoungDiagram rotated(const YoungDiagram& d) {
    if (d.part(d.rows()) != 0)
        throw std::invalid_argument("rotation requires a vanishing last part");
    std::vector<int> p;
    p.reserve(static_cast<size_t>(d.rows()));
    p.push_back(d.level());
    for (int k = 1; k < d.rows(); ++k) p.push_back(d.part(k));
    return {std::move(p), d.rows(), d.level()};
}

YoungDiagram rotated_inverse(const YoungDiagram& d) {
    if (d.part(1) != d.level())
        throw std::invalid_argument("inverse rotation requires a full first row");
    std::vector<int> p;
    p.reserve(static_cast<size_t>(d.rows()));
    for (int k = 2; k <= d.rows(); ++k) p.push_back(d.part(k));
    p.push_back(0);
    return {std::move(p), d.rows(), d.level()};
}

YoungDiagram tilde(const YoungDiagram& d) {
    std::vector<int> p(d.parts());
    for (int a : d.parts()) p.push_back(2 * d.level() - a);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return {std::move(p), 2 * d.rows(), 2 * d.level()};
}

std::vector<YoungDiagram> all_diagrams(int rows, int level) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur(static_cast<size_t>(rows), 0);
    std::function<void(int, int)> rec = [&](int i, int bound) {
        if (i == rows) {
            out.emplace_back(cur, rows, level);
            return;
        }
        for (int a = bound; a >= 0; --a) {
            cur[static_cast<size_t>(i)] = a;
            rec(i + 1, a);
        }
    };
    rec(0, level);
    return out;
}

WeightSystem::WeightSystem(int rows, int level, std::vector<YoungDiagram> diagrams)
    : rows_(rows), level_(level), diagrams_(std::move(diagrams)) {
    for (const auto& d : diagrams_)
        if (d.rows() != rows_ || d.level() != level_)
            throw std::invalid_argument("weight system mixes rectangles");
}

long long WeightSystem::total_size() const {
    long long s = 0;
    for (const auto& d : diagrams_) s += d.size();
    return s;
}

void WeightSystem::push_back(const YoungDiagram& d) {
    if (d.rows() != rows_ || d.level() != level_)
        throw std::invalid_argument("weight system mixes rectangles");
    diagrams_.push_back(d);
}

void WeightSystem::replace(int p, const YoungDiagram& d) {
    if (d.rows() != rows_ || d.level() != level_)
        throw std::invalid_argument("weight system mixes rectangles");
    diagrams_.at(static_cast<size_t>(p)) = d;
}

WeightSystem WeightSystem::transposed() const {
    WeightSystem out(level_, rows_);
    for (const auto& d : diagrams_) out.push_back(d.transpose());
    return out;
}

WeightSystem WeightSystem::conjugated() const {
    WeightSystem out(rows_, level_);
    for (const auto& d : diagrams_) out.push_back(d.conjugate());
    return out;
}

}  // namespace ranklevel
