#ifndef ISK4LAB_SERIALIZE_HPP
#define ISK4LAB_SERIALIZE_HPP

// JSON views of the library's result types. Keys keep insertion order so the
// documents read in a fixed, human-friendly layout.

#include <json.hpp>

#include "isk4lab/color.hpp"
#include "isk4lab/decompose.hpp"
#include "isk4lab/lemmas.hpp"
#include "isk4lab/patterns.hpp"

namespace isk4lab {

using Json = nlohmann::ordered_json;

Json to_json(VertexSet s);
Json to_json(const Path& p);
Json to_json(const K12nEmbedding& h);
Json to_json(const SquareLinkStructure& s);
Json to_json(const LinkWitness& w);
Json to_json(const Counterwitness& w);
Json to_json(const LemmaReport& r);
Json to_json(const CutsetFinding& f);
Json to_json(const MultipartiteCert& c);
Json to_json(const SubcubicRootCert& c);
Json to_json(const Coloring& c);
Json to_json(const TraceStep& s);
Json to_json(const ColoringTrace& t);
Json to_json(const StructuralFailure& f);

} // namespace isk4lab

#endif // ISK4LAB_SERIALIZE_HPP
