#include "multiarr_cli/corpus.hpp"

#include <algorithm>
#include <filesystem>

namespace multiarr::cli {

namespace {

Arrangement2 lines2(Field f, std::initializer_list<std::pair<long, long>> forms) {
  std::vector<LinearForm2> out;
  for (auto [a, b] : forms) out.emplace_back(Scalar(f, a), Scalar(f, b));
  return Arrangement2(std::move(out));
}

Arrangement3 planes(std::initializer_list<std::array<long, 3>> forms) {
  const Field q = Field::rationals();
  std::vector<LinearForm3> out;
  for (const auto& c : forms) out.emplace_back(q, c[0], c[1], c[2]);
  return Arrangement3(std::move(out));
}

AffineArrangement2 affine(std::initializer_list<std::array<long, 3>> lines) {
  const Field q = Field::rationals();
  std::vector<AffineLine> out;
  for (const auto& c : lines) out.emplace_back(q, c[0], c[1], c[2]);
  return AffineArrangement2(q, std::move(out));
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  const Field q = Field::rationals();
  const Field f2 = Field::prime(2);
  const auto a2 = lines2(q, {{1, 0}, {0, 1}, {1, 1}});
  const auto b2 = lines2(q, {{1, 0}, {0, 1}, {1, -1}, {1, 1}});
  const auto braid = planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}});

  std::vector<CorpusEntry> c;
  c.push_back({"a2.json", make_document(a2, Multiplicity{1, 1, 1}, "A2")});
  c.push_back({"a2-221.json", make_document(a2, Multiplicity{2, 2, 1}, "A2 balanced odd")});
  c.push_back({"a2-511.json", make_document(a2, Multiplicity{5, 1, 1}, "A2 unbalanced")});
  c.push_back({"b2-lines.json", make_document(b2, Multiplicity{1, 1, 1, 1}, "B2 lines")});
  c.push_back({"a2-f2-444.json",
               make_document(lines2(f2, {{1, 0}, {0, 1}, {1, 1}}), Multiplicity{4, 4, 4}, "A2 over F_2")});
  c.push_back({"braid.json", make_document(braid, "braid")});
  c.push_back({"generic-4.json", make_document(planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), "generic 4")});
  c.push_back({"boolean.json", make_document(planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), "Boolean")});
  c.push_back({"near-pencil.json",
               make_document(planes({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}}), "near pencil")});
  c.push_back({"braid-deconing.json", make_document(decone(braid, 2), "braid deconing")});
  c.push_back({"b2-deformation-1.json",
               make_document(affine({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}),
                             "B2 deformation")});
  c.push_back({"b2-deformation-2.json",
               make_document(affine({{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, -1, 0}, {1, -1, 1}, {1, 1, 1}}),
                             "B2 deformation")});
  c.push_back({"b2-deformation-3.json",
               make_document(affine({{1, 0, 0}, {0, 1, 0}, {1, -1, 1}, {1, 1, 1}}), "B2 deformation")});
  std::sort(c.begin(), c.end(), [](const CorpusEntry& x, const CorpusEntry& y) { return x.file < y.file; });
  return c;
}

ArrangementDocument corpus_document(const std::string& file) {
  for (auto& e : builtin_corpus()) {
    if (e.file == file) return std::move(e.doc);
  }
  throw DocumentError("no bundled document named " + file);
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw DocumentError("corpus directory " + dir + " not found");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path().filename().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back({f, read_document((fs::path(dir) / f).string())});
  return out;
}

}  // namespace multiarr::cli
