#include "recon/balls.hpp"

#include <algorithm>

namespace recon {

namespace {

void sort_unique(std::vector<BinSeq>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_pair(const BinSeq& x, const BinSeq& y, const char* who) {
    if (x.size() != y.size())
        throw LengthMismatch(std::string(who) + ": lengths " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    if (x == y) throw IdenticalInputs(std::string(who) + ": sequences are equal");
}

}  // namespace

bool BallView::contains(const BinSeq& s) const {
    return std::binary_search(elements.begin(), elements.end(), s);
}

BallView deletion_ball(const BinSeq& x) {
    if (x.size() < 1) throw ParamOutOfRange("deletion_ball: empty sequence");
    BallView b;
    b.source_len = x.size();
    for (const auto& [lo, hi] : runs(x).intervals) {
        (void)hi;
        b.elements.push_back(x.delete_at(lo));
    }
    sort_unique(b.elements);
    return b;
}

BallView substitution_ball(const BinSeq& x) {
    BallView b;
    b.source_len = x.size();
    b.elements.push_back(x);
    for (int i = 1; i <= x.size(); ++i) b.elements.push_back(x.flipped(i));
    sort_unique(b.elements);
    return b;
}

BallView ds_ball(const BinSeq& x) {
    if (x.size() < 2) throw ParamOutOfRange("ds_ball: need length >= 2");
    BallView b;
    b.source_len = x.size();
    for (const auto& [lo, hi] : runs(x).intervals) {
        (void)hi;
        BinSeq w = x.delete_at(lo);
        b.elements.push_back(w);
        for (int i = 1; i <= w.size(); ++i) b.elements.push_back(w.flipped(i));
    }
    sort_unique(b.elements);
    return b;
}

namespace {

BallView intersect_sorted(const BallView& a, const BallView& b) {
    BallView out;
    out.source_len = a.source_len;
    std::set_intersection(a.elements.begin(), a.elements.end(),
                          b.elements.begin(), b.elements.end(),
                          std::back_inserter(out.elements));
    return out;
}

}  // namespace

BallView deletion_intersection(const BinSeq& x, const BinSeq& y) {
    check_pair(x, y, "deletion_intersection");
    return intersect_sorted(deletion_ball(x), deletion_ball(y));
}

bool is_deletion_intersection_empty(const BinSeq& x, const BinSeq& y) {
    check_pair(x, y, "is_deletion_intersection_empty");
    DiffProfile p = diff_profile(x, y);
    int lo = p.j.front(), hi = p.j.back();
    int left = hamming(x.slice(lo + 1, hi), y.slice(lo, hi - 1));
    int right = hamming(x.slice(lo, hi - 1), y.slice(lo + 1, hi));
    return left >= 1 && right >= 1;
}

SubIntersection substitution_intersection(const BinSeq& x, const BinSeq& y) {
    check_pair(x, y, "substitution_intersection");
    SubIntersection out;
    DiffProfile p = diff_profile(x, y);
    if (p.dh == 1) {
        out.elements = {x, y};
    } else if (p.dh == 2) {
        out.elements = {x.flipped(p.j[0]), x.flipped(p.j[1])};
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

BallView ds_intersection(const BinSeq& x, const BinSeq& y) {
    check_pair(x, y, "ds_intersection");
    if (x.size() < 2) throw ParamOutOfRange("ds_intersection: need length >= 2");
    return intersect_sorted(ds_ball(x), ds_ball(y));
}

}  // namespace recon
