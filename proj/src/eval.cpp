// SPDX-License-Identifier: Apache-2.0
#include "curvetext/eval.hpp"

#include <algorithm>
#include <tuple>

namespace curvetext {

MatchResult match_image(const std::vector<Polygon>& dets, const std::vector<Polygon>& gts,
                        double iou_thr) {
    MatchResult res;
    res.n_det = static_cast<int>(dets.size());
    res.n_gt = static_cast<int>(gts.size());

    struct Candidate {
        double iou;
        int det;
        int gt;
    };
    std::vector<Candidate> cands;
    for (int d = 0; d < res.n_det; ++d) {
        for (int g = 0; g < res.n_gt; ++g) {
            double iou = polygon_iou(dets[static_cast<size_t>(d)], gts[static_cast<size_t>(g)]);
            if (iou >= iou_thr) cands.push_back({iou, d, g});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(b.iou, a.det, a.gt) < std::tie(a.iou, b.det, b.gt);
    });

    std::vector<char> det_used(dets.size(), 0), gt_used(gts.size(), 0);
    for (const Candidate& c : cands) {
        if (det_used[static_cast<size_t>(c.det)] || gt_used[static_cast<size_t>(c.gt)]) continue;
        det_used[static_cast<size_t>(c.det)] = 1;
        gt_used[static_cast<size_t>(c.gt)] = 1;
        res.pairs.emplace_back(c.det, c.gt);
        ++res.tp;
    }
    return res;
}

EvalReport aggregate(const std::vector<PerImageCounts>& per_image) {
    EvalReport r;
    r.per_image = per_image;
    for (const auto& c : per_image) {
        r.tp += c.tp;
        r.n_det += c.n_det;
        r.n_gt += c.n_gt;
    }
    if (r.n_det > 0)
        r.precision = static_cast<double>(r.tp) / static_cast<double>(r.n_det);
    else
        r.precision = r.n_gt == 0 ? 1.0 : 0.0;
    if (r.n_gt > 0)
        r.recall = static_cast<double>(r.tp) / static_cast<double>(r.n_gt);
    else
        r.recall = r.n_det == 0 ? 1.0 : 0.0;
    double pr = r.precision + r.recall;
    r.f_measure = pr > 0.0 ? 2.0 * r.precision * r.recall / pr : 0.0;
    return r;
}

}  // namespace curvetext
