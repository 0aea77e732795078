# Copyright 2026 The punjabi-prep Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Gurmukhi Punjabi text pre-processing: gating, filtering and lexicon matching."""

from ._core import (
    CharClass,
    Lexicon,
    LexiconKind,
    PrepError,
    Resources,
    StopList,
    aggregate_stats,
    classify_char,
    dedup_terms,
    gate_document,
    load_lexicon,
    load_stoplist,
    lookup,
    match_terms,
    preprocess_document,
    remove_stopwords,
    run_cli,
    split_corpus,
    strip_symbols,
    tokenize,
)

__all__ = [
    "CharClass",
    "Lexicon",
    "LexiconKind",
    "PrepError",
    "Resources",
    "StopList",
    "aggregate_stats",
    "classify_char",
    "dedup_terms",
    "gate_document",
    "load_lexicon",
    "load_stoplist",
    "lookup",
    "match_terms",
    "preprocess_document",
    "remove_stopwords",
    "run_cli",
    "split_corpus",
    "strip_symbols",
    "tokenize",
]
