// Copyright 2026 The punjabi-prep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "punjabi_prep/cli.hpp"
#include "punjabi_prep/corpus.hpp"
#include "punjabi_prep/error.hpp"
#include "punjabi_prep/filters.hpp"
#include "punjabi_prep/gurmukhi.hpp"
#include "punjabi_prep/lexicon.hpp"
#include "punjabi_prep/pipeline.hpp"
#include "punjabi_prep/report_io.hpp"

namespace py = pybind11;
namespace pp = punjabi_prep;

namespace {

std::vector<pp::Term> ToTerms(const std::vector<std::string>& texts) {
  std::vector<pp::Term> terms;
  terms.reserve(texts.size());
  for (const auto& t : texts) terms.emplace_back(t);
  return terms;
}

std::vector<std::string> ToStrings(const std::vector<pp::Term>& terms) {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.text());
  return out;
}

py::object JsonToPy(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::optional<pp::DomainLabel> ToDomain(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  return pp::DomainLabel::FromName(*name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gurmukhi Punjabi text pre-processing";

  static py::exception<pp::Error> prep_error(m, "PrepError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pp::Error& e) {
      py::set_error(prep_error, (std::string(pp::ErrorKindName(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::enum_<pp::CharClass>(m, "CharClass")
      .value("GURMUKHI", pp::CharClass::kGurmukhi)
      .value("SEPARATOR", pp::CharClass::kSeparator)
      .value("USELESS", pp::CharClass::kUseless);

  m.def("classify_char", [](std::string ch) {
    const std::u32string cps = pp::DecodeUtf8(ch);
    if (cps.size() != 1) throw py::value_error("expected a single character");
    return pp::classify_char(cps.front());
  });
  m.def("strip_symbols", [](std::string_view s) { return pp::strip_symbols(s); });
  m.def("tokenize", [](std::string_view s) { return ToStrings(pp::tokenize(s)); });
  m.def("gate_document", [](std::string_view s) { return ToStrings(pp::gate_text(s)); },
        "Gate, strip and tokenize raw text.");
  m.def("dedup_terms", [](const std::vector<std::string>& terms) {
    auto r = pp::dedup_terms(ToTerms(terms));
    return py::make_tuple(ToStrings(r.unique), r.duplicate_count);
  });

  py::class_<pp::StopList>(m, "StopList")
      .def(py::init([](const std::vector<std::string>& terms) { return pp::StopList(ToTerms(terms)); }))
      .def("__len__", &pp::StopList::size)
      .def("__contains__", [](const pp::StopList& s, std::string_view t) { return s.contains(t); });
  m.def("load_stoplist", &pp::load_stoplist);
  m.def("remove_stopwords", [](const std::vector<std::string>& terms, const pp::StopList& stops) {
    auto r = pp::remove_stopwords(ToTerms(terms), stops);
    return py::make_tuple(ToStrings(r.kept), r.removed_count);
  });

  py::enum_<pp::LexiconKind>(m, "LexiconKind")
      .value("DICTIONARY", pp::LexiconKind::kDictionary)
      .value("GAZETTEER", pp::LexiconKind::kGazetteer);
  py::class_<pp::Lexicon>(m, "Lexicon")
      .def(py::init([](pp::LexiconKind kind, const std::vector<std::string>& terms) {
        return pp::Lexicon(kind, ToTerms(terms));
      }))
      .def_property_readonly("kind", &pp::Lexicon::kind)
      .def("__len__", &pp::Lexicon::size)
      .def("__contains__", [](const pp::Lexicon& l, std::string_view t) { return l.contains(t); });
  m.def("load_lexicon", &pp::load_lexicon);
  m.def("lookup", [](const std::string& term, const pp::Lexicon& lex) {
    return pp::lookup(pp::Term(term), lex);
  });
  m.def("match_terms", [](const std::vector<std::string>& terms, const pp::Lexicon& dict,
                          const pp::Lexicon& gaz) {
    auto p = pp::match_terms(ToTerms(terms), dict, gaz);
    py::dict d;
    d["dictionary_matched"] = ToStrings(p.dictionary_matched);
    d["gazetteer_matched"] = ToStrings(p.gazetteer_matched);
    d["rejected"] = ToStrings(p.rejected);
    return d;
  });

  py::class_<pp::Resources>(m, "Resources")
      .def_static("load", &pp::Resources::Load, py::arg("stoplist"), py::arg("dictionary"),
                  py::arg("gazetteer"));

  m.def(
      "preprocess_document",
      [](std::string content, const pp::Resources& res, std::optional<std::string> source_path,
         std::optional<std::string> domain) {
        pp::RawDocument doc{std::move(content), std::nullopt, ToDomain(domain)};
        if (source_path) doc.source_path = *source_path;
        return JsonToPy(pp::ReportToJson(pp::preprocess_document(doc, res)));
      },
      py::arg("content"), py::arg("resources"), py::arg("source_path") = py::none(),
      py::arg("domain") = py::none(), "Run all six stages; returns the report record as a dict.");

  m.def(
      "split_corpus",
      [](const std::filesystem::path& root, double ratio, std::uint64_t seed) {
        return pp::split_corpus(pp::discover_corpus(root), ratio, seed).Serialize();
      },
      py::arg("root"), py::arg("ratio") = 0.7, py::arg("seed") = 0,
      "Returns the serialized split manifest.");

  m.def("aggregate_stats", [](const py::list& records) {
    std::vector<pp::ReportRecord> parsed;
    auto dumps = py::module_::import("json").attr("dumps");
    for (const auto& r : records) {
      parsed.push_back(pp::RecordFromJson(nlohmann::json::parse(dumps(r).cast<std::string>())));
    }
    return JsonToPy(pp::StatsToJson(pp::AggregateRecords(parsed)));
  });

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "punjabi-prep");
    std::ostringstream out, err;
    const int code = pp::RunCli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
