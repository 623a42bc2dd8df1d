// JSON forms of the library's results.  Every top-level document carries
// "schema": kSchemaVersion.  Key order is alphabetical (nlohmann's default
// object), which keeps output byte-stable.

#pragma once

#include <string>

#include "json.hpp"

#include "almax/algebra.hpp"
#include "almax/configs.hpp"
#include "almax/decomp.hpp"
#include "almax/extreme.hpp"
#include "almax/functors.hpp"
#include "almax/model.hpp"
#include "almax/oracle.hpp"

namespace almax {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "almax-formats/1";

// {"schema": ..., "command": command, <payload keys>}
Json document(const std::string& command, Json payload);

Json to_json(const HomologyGroup& g);
// [{"degree": k, "betti": b, "torsion": [...]}, ...] ascending in k.
Json to_json(const HomologyResult& h);
// [{"i": i, "j": j, "betti": b, "torsion": [...]}, ...]
Json bigraded_table(const HomologyResult& h, int j);

// {"degrees": [{"degree", "basis", "differential": {"rows","cols","entries":[[r,c,v]]}}]}
Json to_json(const GradedChainComplex& c);

// {"vertices": [...], "edges": [[a, b], ...]} with 1-based chord labels.
Json to_json(const Graph& g);

Json to_json(const ChordDiagram& d);
Json to_json(const ConfigReport& r);
Json to_json(const LesReport& r);
Json to_json(const SubposetHomology& s);
Json to_json(const CofibreReport& r);
Json to_json(const SkeinReport& r);
Json to_json(const Simplification& s);
Json to_json(const GammaCheck& g);
Json to_json(const AgreementReport& r);

// One TSV line per group: "i\tj\tbetti\ttorsion" with torsion comma-joined.
std::string bigraded_tsv(const Json& table);

}  // namespace almax
