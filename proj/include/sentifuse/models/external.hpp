#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "sentifuse/core/types.hpp"
#include "sentifuse/error.hpp"
#include "sentifuse/models/lexicon.hpp"

namespace sentifuse {

// Ingestion route for models scored offline (encoding models, external
// classifiers): predictions are keyed by text id and served verbatim.
struct ExternalPredictionTable {
    std::map<std::string, RawModelOutput> by_id;
};

// Prediction file: one record per line, tab-separated:
//   text_id  prob    p_pos  p_neg
//   text_id  score   s
//   text_id  logits  v_pos  v_neg
//   text_id  label   negative|neutral|positive
// '#' comments allowed; duplicate ids rejected at load (first conflict).
inline ExternalPredictionTable load_prediction_file(const std::string& path) {
    ExternalPredictionTable table;
    for (const auto& row : detail::read_tsv_fixture(path)) {
        const std::string& line_no = row.back();
        auto fail = [&](const std::string& what) -> Error {
            return Error(ErrorCategory::data, path + ":" + line_no + ": " + what);
        };
        if (row.size() < 4) throw fail("expected 'text_id<TAB>kind<TAB>payload...'");
        const std::string& id = row[0];
        const std::string& kind = row[1];
        const std::size_t payload = row.size() - 3;  // minus id, kind, line_no

        RawModelOutput out;
        if (kind == "prob") {
            if (payload != 2) throw fail("prob payload needs p_pos and p_neg");
            out = Probabilities{detail::parse_fixture_number(row[2], path, line_no),
                                detail::parse_fixture_number(row[3], path, line_no)};
        } else if (kind == "score") {
            if (payload != 1) throw fail("score payload needs a single value");
            out = Score{detail::parse_fixture_number(row[2], path, line_no)};
        } else if (kind == "logits") {
            if (payload != 2) throw fail("logits payload needs v_pos and v_neg");
            out = Logits{detail::parse_fixture_number(row[2], path, line_no),
                         detail::parse_fixture_number(row[3], path, line_no)};
        } else if (kind == "label") {
            if (payload != 1) throw fail("label payload needs a single label");
            out = DiscreteLabel{label_from_string(row[2])};
        } else {
            throw fail("unknown output kind '" + kind + "' (want prob|score|logits|label)");
        }
        try {
            validate_output(out);
        } catch (const Error& e) {
            throw fail(e.what());
        }
        if (!table.by_id.emplace(id, out).second)
            throw fail("duplicate text_id '" + id + "'");
    }
    return table;
}

// Exact stored output for the id; a missing id is an error, never a fallback.
inline RawModelOutput external_predict(const ExternalPredictionTable& table,
                                       const std::string& model_id, const std::string& text_id) {
    auto it = table.by_id.find(text_id);
    if (it == table.by_id.end())
        throw Error(ErrorCategory::missing_prediction,
                    "model '" + model_id + "' has no prediction for text id '" + text_id + "'");
    return it->second;
}

}  // namespace sentifuse
