//! Corpus ingestion, cleaning filters, dataset statistics, and splits.

pub mod filter;
pub mod record;
pub mod split;
pub mod stats;

pub use filter::{apply_filters, check_record, FilterConfig, FilterRule, RejectedRecord};
pub use record::{load_records, NewsRecord, RejectedLine};
pub use split::split_corpus;
pub use stats::{compute_stats, keyphrase_presence, percent, Bucket, CorpusStats, Histogram};
