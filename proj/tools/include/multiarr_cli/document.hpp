#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multiarr/arr3.hpp"
#include "multiarr/multiarr2.hpp"

namespace multiarr::cli {

/// Malformed or unreadable input; maps to exit code 3.
class DocumentError : public Error {
 public:
  using Error::Error;
};

struct DocumentHyperplane {
  std::vector<Scalar> coeffs;
  int mult = 1;
};

/// On-disk arrangement description. Affine documents carry dim + 1 coefficients
/// per hyperplane, the last one being the constant term.
struct ArrangementDocument {
  Field field = Field::rationals();
  int dim = 2;
  bool central = true;
  std::vector<DocumentHyperplane> hyperplanes;
  std::optional<std::string> name;
};

/// Parses the JSON document format; syntax errors report line and column.
ArrangementDocument parse_document(std::string_view text);
ArrangementDocument read_document(const std::string& path);  // "-" reads stdin

/// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string serialize_document(const ArrangementDocument& doc);

/// Lowercase hex SHA-256 of the canonical serialization.
std::string document_digest(const ArrangementDocument& doc);

std::pair<Arrangement2, Multiplicity> to_multiarrangement(const ArrangementDocument& doc);
Arrangement3 to_arrangement3(const ArrangementDocument& doc);
AffineArrangement2 to_affine(const ArrangementDocument& doc);

ArrangementDocument make_document(const Arrangement2& a, const Multiplicity& m, std::optional<std::string> name = {});
ArrangementDocument make_document(const Arrangement3& a, std::optional<std::string> name = {});
ArrangementDocument make_document(const AffineArrangement2& a, std::optional<std::string> name = {});

}  // namespace multiarr::cli
