#pragma once

#include <string>
#include <vector>

#include "multiarr_cli/document.hpp"

namespace multiarr::cli {

struct CorpusEntry {
  std::string file;  // e.g. "braid.json"
  ArrangementDocument doc;
};

/// The bundled documents, built in code; corpus/*.json holds their canonical
/// serializations.
std::vector<CorpusEntry> builtin_corpus();

/// Looks up a bundled document by file name; throws DocumentError if unknown.
ArrangementDocument corpus_document(const std::string& file);

/// Reads every *.json file of a directory in file-name order.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

}  // namespace multiarr::cli
