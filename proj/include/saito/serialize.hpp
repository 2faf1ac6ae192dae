#pragma once

// JSON shapes shared by the CLI reports.

#include <json.hpp>

#include "saito/burnside.hpp"
#include "saito/polynomial.hpp"

namespace saito {

struct ZetaReport;
struct SubsetTerm;
struct VerificationReport;

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
nlohmann::json toJson(const Integer& v);
nlohmann::json toJson(const std::vector<Integer>& v);
nlohmann::json toJson(const IntMatrix& m);
/// {"order": k, "basis": [row-major entries]}
nlohmann::json toJson(const SubgroupKey& k);
nlohmann::json toJson(const GroupElement& g);
/// [{"subgroup": {...}, "coeff": c}, ...] sorted by (order, basis)
nlohmann::json toJson(const BurnsideElement& a);
/// {"d": d, "factors": {"m": s_m, ...}}
nlohmann::json toJson(const CyclotomicProduct& phi);
nlohmann::json toJson(const WeightSystem& w);
nlohmann::json toJson(const AtomicDecomposition& dec);
nlohmann::json toJson(const AbelianGroup& g);
nlohmann::json toJson(const InvertiblePolynomial& f);
nlohmann::json toJson(const SubsetTerm& t);
nlohmann::json toJson(const ZetaReport& z);
nlohmann::json toJson(const VerificationReport& r);

}  // namespace saito
