//! Graph extractors: SingleRank, TopicRank, MultipartiteRank, over a shared
//! TextRank scoring core and an average-linkage clustering core.

pub mod hac;
pub mod multipartite;
pub mod singlerank;
pub mod textrank;
pub mod topicrank;

pub use hac::{cluster_from_matrix, cluster_topics, jaccard_stem_similarity, TopicClustering};
pub use multipartite::{multipartite_extract, MultipartiteConfig};
pub use singlerank::{singlerank_extract, SingleRankConfig};
pub use textrank::{textrank_scores, GraphDump, RankGraph, TextRankResult};
pub use topicrank::{topicrank_extract, TopicRankConfig};
