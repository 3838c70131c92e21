//! Keyphrase extraction toolkit for Persian news text.
//!
//! The crate bundles three families of extractors behind one interface:
//! statistical scorers (TFIDF, KP-Miner, YAKE), graph rankers (SingleRank,
//! TopicRank, MultipartiteRank), and the supervised naive-Bayes scorer KEA.
//! Around them sit the pieces a benchmark needs: Persian-aware text
//! processing, JSONL corpus ingestion with cleaning filters and dataset
//! statistics, a document frequency table, and a precision/recall/F1 @k
//! evaluation harness.

pub mod candidates;
pub mod corpus;
pub mod df;
pub mod error;
pub mod eval;
pub mod graph;
pub mod kea;
pub mod phrase;
pub mod stat;
pub mod text;

pub use candidates::{kpminer_candidates, ngram_candidates, pos_sequence_candidates, Candidate};
pub use df::DocumentFrequencyTable;
pub use error::{Error, Result};
pub use phrase::ScoredPhrase;
pub use text::{Pipeline, PosTag, ProcessedDocument, Token};
