#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hopfcoh/cup.hpp"

namespace hopfcoh {

/// Insertion-ordered, so serialized reports are stable.
using Json = nlohmann::ordered_json;

/// Malformed input; the message carries the position (line:column or a JSON path).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Built-in algebras: kZ<n>, S3, sweedler (alias H4), taft:<n>:<q>, dual:<name>, opposite:<name>.
AlgebraPtr builtin_algebra(const std::string& name, PrimeField f);
/// A built-in name, or else a path to a structure-constants file. A field override replaces the file's field.
AlgebraPtr resolve_algebra(const std::string& name_or_path, std::optional<PrimeField> field);

/// {field, dim, mul: [[i,j,k,"c"]], unit: ["c"], comul: [[i,j,k,"c"]], counit: ["c"], antipode: [[i,j,"c"]],
/// antipode_inv?}. mul (i,j,k,c): e_i e_j ∋ c e_k; comul (i,j,k,c): Δ(e_i) ∋ c e_j⊗e_k; antipode (i,j,c): S(e_i) ∋ c e_j.
HopfAlgebra algebra_from_json(const Json& j, std::optional<PrimeField> field, const std::string& where = "algebra");
Json algebra_to_json(const HopfAlgebra& h);

/// {algebra: name or inline object, dim, actL: [[a,v,w,"c"]], actR: [[v,a,w,"c"]], coactL: [[v,a,w,"c"]],
/// coactR: [[v,w,a,"c"]]}. actL: a·e_v ∋ c e_w; actR: e_v·a ∋ c e_w; coactL: δ_L(e_v) ∋ c e_a⊗e_w;
/// coactR: δ_R(e_v) ∋ c e_w⊗e_a. When algebra is given, the document's own algebra is checked against it.
HopfBimodule bimodule_from_json(const Json& j, AlgebraPtr algebra, std::optional<PrimeField> field,
                                const std::string& where = "bimodule");
Json bimodule_to_json(const HopfBimodule& m);

/// regular, right:<k>, left:<k>, x, a sum s1+s2+…, or a bimodule file over h.
HopfBimodule select_bimodule(const std::string& selector, const AlgebraPtr& h);

/// Reads a JSON file; parse failures become ParseError with file:line:column.
Json read_json_file(const std::string& path);

/// {rows, cols, entries: [[r, c, "v"]]}.
Json matrix_to_json(const SparseMatrix& m);
/// {degree, components: [matrices]}.
Json cochain_to_json(const A4Cochain& c);
/// {engine, dims, cell_dims: [[p,q,dim]], violations, timings?}.
Json report_to_json(const CohomologyReport& r, bool timings);

std::string library_version();

}  // namespace hopfcoh
