#include "multiarr_cli/document.hpp"

#include <openssl/sha.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace multiarr::cli {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DocumentError(where + ": " + what);
}

Field parse_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "Q") fail("field", "expected \"Q\" or {\"p\": prime}");
    return Field::rationals();
  }
  if (!j.is_object() || j.size() != 1 || !j.contains("p")) fail("field", "expected \"Q\" or {\"p\": prime}");
  const json& p = j.at("p");
  std::uint64_t value = 0;
  if (p.is_number_unsigned()) {
    value = p.get<std::uint64_t>();
  } else if (p.is_string()) {
    try {
      std::size_t used = 0;
      value = std::stoull(p.get<std::string>(), &used);
      if (used != p.get<std::string>().size()) fail("field.p", "not an integer");
    } catch (const std::logic_error&) {
      fail("field.p", "not an integer");
    }
  } else {
    fail("field.p", "expected a positive integer");
  }
  try {
    return Field::prime(value);
  } catch (const Error& e) {
    fail("field.p", e.what());
  }
}

template <class Fn>
auto wrap_precondition(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  } catch (const FieldMismatchError& e) {
    fail(where, e.what());
  }
}

}  // namespace

ArrangementDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    throw DocumentError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                        e.what());
  }
  if (!j.is_object()) fail("document", "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "field" && key != "dim" && key != "central" && key != "hyperplanes" && key != "name") {
      fail("document", "unknown key \"" + key + "\"");
    }
  }
  for (const char* key : {"field", "dim", "central", "hyperplanes"}) {
    if (!j.contains(key)) fail("document", std::string("missing key \"") + key + "\"");
  }

  ArrangementDocument doc;
  doc.field = parse_field(j.at("field"));
  if (!j.at("dim").is_number_integer()) fail("dim", "expected 2 or 3");
  doc.dim = j.at("dim").get<int>();
  if (doc.dim != 2 && doc.dim != 3) fail("dim", "expected 2 or 3");
  if (!j.at("central").is_boolean()) fail("central", "expected a boolean");
  doc.central = j.at("central").get<bool>();
  if (j.contains("name")) {
    if (!j.at("name").is_string()) fail("name", "expected a string");
    doc.name = j.at("name").get<std::string>();
  }

  const json& hs = j.at("hyperplanes");
  if (!hs.is_array()) fail("hyperplanes", "expected an array");
  const std::size_t width = static_cast<std::size_t>(doc.dim) + (doc.central ? 0 : 1);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string where = "hyperplanes[" + std::to_string(i) + "]";
    const json& h = hs[i];
    if (!h.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : h.items()) {
      if (key != "coeffs" && key != "mult") fail(where, "unknown key \"" + key + "\"");
    }
    if (!h.contains("coeffs") || !h.at("coeffs").is_array()) fail(where + ".coeffs", "expected an array");
    const json& cs = h.at("coeffs");
    if (cs.size() != width) {
      fail(where + ".coeffs", "expected " + std::to_string(width) + " entries, got " + std::to_string(cs.size()));
    }
    DocumentHyperplane out;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const std::string cw = where + ".coeffs[" + std::to_string(c) + "]";
      if (!cs[c].is_string()) fail(cw, "exact numbers must be strings such as \"3\" or \"-7/2\"");
      try {
        out.coeffs.push_back(Scalar::parse(doc.field, cs[c].get<std::string>()));
      } catch (const Error& e) {
        fail(cw, e.what());
      }
    }
    if (h.contains("mult")) {
      if (!(doc.dim == 2 && doc.central)) fail(where + ".mult", "multiplicities are only allowed for dim-2 central input");
      if (!h.at("mult").is_number_integer() || h.at("mult").get<long long>() < 0 ||
          h.at("mult").get<long long>() > 1000000) {
        fail(where + ".mult", "expected an integer >= 0");
      }
      out.mult = h.at("mult").get<int>();
    }
    doc.hyperplanes.push_back(std::move(out));
  }
  return doc;
}

ArrangementDocument read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return parse_document(text);
  } catch (const DocumentError& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

std::string serialize_document(const ArrangementDocument& doc) {
  json j;
  if (doc.field.is_rational()) {
    j["field"] = "Q";
  } else {
    j["field"] = json{{"p", doc.field.characteristic()}};
  }
  j["dim"] = doc.dim;
  j["central"] = doc.central;
  if (doc.name) j["name"] = *doc.name;
  j["hyperplanes"] = json::array();
  for (const auto& h : doc.hyperplanes) {
    json hj;
    hj["coeffs"] = json::array();
    for (const auto& c : h.coeffs) hj["coeffs"].push_back(c.to_string());
    if (doc.dim == 2 && doc.central) hj["mult"] = h.mult;
    j["hyperplanes"].push_back(std::move(hj));
  }
  return j.dump(2) + "\n";
}

std::string document_digest(const ArrangementDocument& doc) {
  const std::string text = serialize_document(doc);
  std::array<unsigned char, SHA256_DIGEST_LENGTH> md{};
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), md.data());
  std::string hex;
  char buf[3];
  for (unsigned char b : md) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    hex += buf;
  }
  return hex;
}

std::pair<Arrangement2, Multiplicity> to_multiarrangement(const ArrangementDocument& doc) {
  if (doc.dim != 2 || !doc.central) throw DocumentError("expected a dim-2 central document");
  if (doc.hyperplanes.empty()) throw DocumentError("hyperplanes: need at least one line");
  return wrap_precondition("hyperplanes", [&] {
    std::vector<LinearForm2> forms;
    std::vector<int> mult;
    for (const auto& h : doc.hyperplanes) {
      forms.emplace_back(h.coeffs[0], h.coeffs[1]);
      mult.push_back(h.mult);
    }
    return std::make_pair(Arrangement2(std::move(forms)), Multiplicity(std::move(mult)));
  });
}

Arrangement3 to_arrangement3(const ArrangementDocument& doc) {
  if (doc.dim != 3 || !doc.central) throw DocumentError("expected a dim-3 central document");
  if (doc.hyperplanes.empty()) throw DocumentError("hyperplanes: need at least one plane");
  return wrap_precondition("hyperplanes", [&] {
    std::vector<LinearForm3> forms;
    for (const auto& h : doc.hyperplanes) forms.emplace_back(h.coeffs[0], h.coeffs[1], h.coeffs[2]);
    return Arrangement3(std::move(forms));
  });
}

AffineArrangement2 to_affine(const ArrangementDocument& doc) {
  if (doc.dim != 2 || doc.central) throw DocumentError("expected a dim-2 affine document");
  return wrap_precondition("hyperplanes", [&] {
    std::vector<AffineLine> lines;
    for (const auto& h : doc.hyperplanes) lines.emplace_back(h.coeffs[0], h.coeffs[1], h.coeffs[2]);
    return AffineArrangement2(doc.field, std::move(lines));
  });
}

ArrangementDocument make_document(const Arrangement2& a, const Multiplicity& m, std::optional<std::string> name) {
  if (m.size() != a.size()) throw PreconditionError("multiplicity length does not match the arrangement");
  ArrangementDocument doc{a.field(), 2, true, {}, std::move(name)};
  for (std::size_t i = 0; i < a.size(); ++i) doc.hyperplanes.push_back({{a[i].a(), a[i].b()}, m[i]});
  return doc;
}

ArrangementDocument make_document(const Arrangement3& a, std::optional<std::string> name) {
  ArrangementDocument doc{a.field(), 3, true, {}, std::move(name)};
  for (const auto& f : a.forms()) doc.hyperplanes.push_back({{f[0], f[1], f[2]}, 1});
  return doc;
}

ArrangementDocument make_document(const AffineArrangement2& a, std::optional<std::string> name) {
  ArrangementDocument doc{a.field(), 2, false, {}, std::move(name)};
  for (const auto& l : a.lines()) doc.hyperplanes.push_back({{l.a(), l.b(), l.c()}, 1});
  return doc;
}

}  // namespace multiarr::cli
