#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace testoracle {

namespace {

constexpr std::string_view kAlpha = "abcdefghijklmnopqrstuvwxyz ";
constexpr std::size_t kDictCap = 4096;

struct CostSearch {
    std::vector<std::uint64_t> weights; // descending
    std::vector<std::uint64_t> suffix;  // suffix[i] = sum of weights[i..]
    unsigned max_len = 0;
    std::uint64_t best = 0;

    // Assign nondecreasing lengths to weights in descending order; by the
    // rearrangement inequality that ordering attains the minimum cost for
    // any length multiset, so searching it covers all codes. budget counts
    // Kraft room in units of 2^-max_len.
    void descend(std::size_t i, unsigned min_len, std::uint64_t budget,
                 std::uint64_t partial) {
        if (partial >= best) return;
        if (i == weights.size()) {
            best = partial;
            return;
        }
        std::uint64_t rest = weights.size() - i;
        if (budget < rest) return; // even all-max_len lengths no longer fit
        for (unsigned len = min_len; len <= max_len; ++len) {
            std::uint64_t units = std::uint64_t{1} << (max_len - len);
            if (units > budget - (rest - 1)) continue; // leave room for the rest
            std::uint64_t cost = partial + weights[i] * len;
            // Everything after i gets a length >= len, so this bounds the
            // whole branch from below; larger len only raises it.
            if (cost + suffix[i + 1] * len >= best) break;
            descend(i + 1, len, budget - units, cost);
        }
    }
};

} // namespace

double entropy_bits(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

std::vector<double> normalized(std::span<const double> probs) {
    double s = 0.0;
    for (double p : probs) s += p;
    std::vector<double> out(probs.begin(), probs.end());
    for (double& p : out) p /= s;
    return out;
}

std::uint64_t min_prefix_cost(std::vector<std::uint64_t> weights, unsigned max_len) {
    if (weights.size() < 2) throw std::invalid_argument("need at least two weights");
    if ((std::uint64_t{1} << max_len) < weights.size())
        throw std::invalid_argument("max_len cannot accommodate the weights");

    CostSearch search;
    std::sort(weights.begin(), weights.end(), std::greater<>());
    search.weights = std::move(weights);
    search.suffix.assign(search.weights.size() + 1, 0);
    for (std::size_t i = search.weights.size(); i-- > 0;)
        search.suffix[i] = search.suffix[i + 1] + search.weights[i];
    search.max_len = max_len;
    search.best = search.suffix[0] * max_len + 1; // all-max_len code, beatable
    search.descend(0, 1, std::uint64_t{1} << max_len, 0);
    return search.best;
}

std::vector<std::uint16_t> lzw_encode_codes(std::string_view text,
                                            std::vector<std::string>* dict_out) {
    std::map<std::string, std::uint16_t> dict;
    std::vector<std::string> by_index;
    for (char c : kAlpha) {
        dict.emplace(std::string(1, c), static_cast<std::uint16_t>(by_index.size()));
        by_index.emplace_back(1, c);
    }

    std::vector<std::uint16_t> codes;
    std::string run;
    for (char c : text) {
        if (kAlpha.find(c) == std::string_view::npos)
            throw std::invalid_argument("character outside the alphabet");
        std::string extended = run + c;
        if (dict.count(extended)) {
            run = std::move(extended);
            continue;
        }
        codes.push_back(dict.at(run));
        if (by_index.size() < kDictCap) {
            dict.emplace(extended, static_cast<std::uint16_t>(by_index.size()));
            by_index.push_back(extended);
        }
        run.assign(1, c);
    }
    if (run.empty()) throw std::invalid_argument("empty text");
    codes.push_back(dict.at(run));
    if (dict_out) *dict_out = std::move(by_index);
    return codes;
}

std::string lzw_decode_codes(std::span<const std::uint16_t> codes,
                             std::vector<std::string>* dict_out) {
    std::vector<std::string> by_index;
    for (char c : kAlpha) by_index.emplace_back(1, c);

    std::string out;
    std::string prev;
    for (std::uint16_t code : codes) {
        std::string entry;
        if (code < by_index.size())
            entry = by_index[code];
        else if (code == by_index.size() && !prev.empty() && by_index.size() < kDictCap)
            entry = prev + prev.front();
        else
            throw std::invalid_argument("code outside the dictionary");
        if (!prev.empty() && by_index.size() < kDictCap)
            by_index.push_back(prev + entry.front());
        out += entry;
        prev = std::move(entry);
    }
    if (dict_out) *dict_out = std::move(by_index);
    return out;
}

} // namespace testoracle
