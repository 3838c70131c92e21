//! Statistical extractors: TFIDF, KP-Miner, YAKE.

pub mod kpminer;
pub mod tfidf;
pub mod yake;

pub use kpminer::{boost_factor, kpminer_extract, KpMinerConfig};
pub use tfidf::{tfidf_extract, tfidf_extract_with};
pub use yake::{levenshtein_similarity, yake_extract, yake_term_features, YakeConfig, YakeTermFeatures};
