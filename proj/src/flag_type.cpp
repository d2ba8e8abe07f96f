#include "flagdiv/flag_type.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagdiv {

FlagType::FlagType(int n, std::vector<int> steps) : n_(n), steps_(std::move(steps)) {
    if (n_ < 2) throw std::invalid_argument("flag type needs n >= 2");
    if (steps_.empty()) throw std::invalid_argument("flag type needs at least one step");
    int prev = 0;
    for (int s : steps_) {
        if (s <= prev || s >= n_)
            throw std::invalid_argument("steps must satisfy 0 < n1 < ... < nr < n");
        prev = s;
    }
}

FlagType FlagType::parse(const std::string& text) {
    // expected form: "n=7;steps=3,6"
    auto semi = text.find(';');
    if (text.rfind("n=", 0) != 0 || semi == std::string::npos ||
        text.compare(semi + 1, 6, "steps=") != 0)
        throw std::invalid_argument("bad flag type string: " + text);
    int n = std::stoi(text.substr(2, semi - 2));
    std::vector<int> steps;
    std::stringstream ss(text.substr(semi + 7));
    std::string tok;
    while (std::getline(ss, tok, ',')) steps.push_back(std::stoi(tok));
    return FlagType(n, std::move(steps));
}

std::vector<int> FlagType::block_sizes() const {
    std::vector<int> a;
    int prev = 0;
    for (int s : steps_) {
        a.push_back(s - prev);
        prev = s;
    }
    a.push_back(n_ - prev);
    return a;
}

std::vector<std::pair<int, int>> FlagType::blocks() const {
    std::vector<std::pair<int, int>> out;
    int prev = 0;
    for (int s : steps_) {
        out.emplace_back(prev, s);
        prev = s;
    }
    out.emplace_back(prev, n_);
    return out;
}

int FlagType::block_of(int pos) const {
    if (pos < 1 || pos > n_) throw std::invalid_argument("position out of range");
    int b = 1;
    for (int s : steps_) {
        if (pos <= s) return b;
        ++b;
    }
    return b;
}

bool FlagType::is_step(int i) const {
    return std::find(steps_.begin(), steps_.end(), i) != steps_.end();
}

std::vector<int> FlagType::delta_p() const {
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (!is_step(i)) out.push_back(i);
    return out;
}

std::string FlagType::str() const {
    std::string out = "n=" + std::to_string(n_) + ";steps=";
    for (size_t i = 0; i < steps_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(steps_[i]);
    }
    return out;
}

}  // namespace flagdiv
