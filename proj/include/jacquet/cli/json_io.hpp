#pragma once

#include <json.hpp>

#include <jacquet/cli/expression.hpp>
#include <jacquet/formal_sum.hpp>
#include <jacquet/spclassifier.hpp>
#include <jacquet/weyl.hpp>

namespace jacquet::cli
{

using nlohmann::json;

// Half-integers travel as strings ("5/2", "-1") so that no reader ever sees
// a decimal.
json to_json(HalfInt x);
HalfInt halfint_from_json(const json &j);

json to_json(const Segment &s);
json to_json(const GLMonomial &m);
json to_json(const TwistTag &t);
json to_json(const GUClass &g);
// A list of factors, the GU factor (if any) last.
json to_json(const TensorTerm &t);
json to_json(const Multiplicity &m);

// [{"mult": m, "term": [factors...]}, ...] in canonical term order.
template <typename Term>
json to_json(const FormalSum<Term> &sum)
{
    json out = json::array();
    for (const auto &[t, m] : sum) {
        json factors;
        if constexpr (std::is_same_v<Term, TensorTerm>) {
            factors = to_json(t);
        } else {
            factors = json::array({to_json(t)});
        }
        out.push_back({{"mult", to_json(m)}, {"term", factors}});
    }
    return out;
}

Segment segment_from_json(const json &j, const LabelScope &scope);
GUClass gu_class_from_json(const json &j, const LabelScope &scope);
TensorTerm tensor_term_from_json(const json &j, const LabelScope &scope);
TensorSum tensor_sum_from_json(const json &j, const LabelScope &scope);

json to_json(const JordSequence &s);
json to_json(const LJDatum &d);
LJDatum lj_datum_from_json(const json &j, const LabelScope &scope);

json to_json(const SignedPermutation &w);
json to_json(const GeomParams &p);

} // namespace jacquet::cli
