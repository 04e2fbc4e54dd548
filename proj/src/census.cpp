#include "adlv/census.hpp"

#include <algorithm>

#include "adlv/counting.hpp"

namespace adlv {

nlohmann::json census_record(const Tree& T, const BCase& b, const SweepResult& sr, int wmin,
                             int wmax, bool with_members) {
    nlohmann::json rec;
    rec["b"] = b.name();
    rec["alpha"] = b.alpha;
    rec["q"] = T.field().q();
    rec["n"] = T.field().n();
    rec["R"] = sr.R;
    rec["total"] = sr.total;
    nlohmann::json buckets = nlohmann::json::array();
    for (int idx = wmin; idx <= wmax; ++idx) {
        nlohmann::json bk;
        bk["index"] = idx;
        bk["size"] = sr.size_of(idx);
        unsigned long long predicted = 0;
        nlohmann::json sets = nlohmann::json::array();
        if (nonempty(b, WeylElt{idx})) {
            StructuralPrediction pred = structural_sets(T, b, WeylElt{idx}, sr.R);
            if (pred.degenerate) {
                predicted = pred.points.size();
            } else {
                for (const DepartureSet& s : pred.sets) {
                    unsigned long long c = member_count(T, s);
                    predicted += c;
                    nlohmann::json js;
                    js["P"] = T.vertex_str(s.P);
                    js["i"] = s.i;
                    js["size"] = c;
                    sets.push_back(js);
                }
            }
        }
        bk["predicted"] = predicted;
        bk["match"] = (predicted == sr.size_of(idx));
        bk["sets"] = sets;
        if (with_members) {
            std::vector<Alcove> mem;
            auto dit = sr.degenerate.find(idx);
            if (dit != sr.degenerate.end()) mem.insert(mem.end(), dit->second.begin(), dit->second.end());
            auto mit = sr.members.find(idx);
            if (mit != sr.members.end())
                for (const auto& kv : mit->second) mem.insert(mem.end(), kv.second.begin(), kv.second.end());
            std::sort(mem.begin(), mem.end(), alcove_less);
            nlohmann::json arr = nlohmann::json::array();
            for (const Alcove& A : mem) arr.push_back(T.alcove_str(A));
            bk["members"] = arr;
        }
        buckets.push_back(bk);
    }
    rec["buckets"] = buckets;
    return rec;
}

nlohmann::json parse_census(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    for (const char* key : {"b", "alpha", "q", "n", "R", "total", "buckets"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("census missing field ") + key);
    for (const auto& bk : j["buckets"])
        for (const char* key : {"index", "size", "predicted", "match", "sets"})
            if (!bk.contains(key))
                throw std::invalid_argument(std::string("census bucket missing field ") + key);
    return j;
}

} // namespace adlv
