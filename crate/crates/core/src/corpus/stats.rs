//! Dataset statistics: per-source counts, the four length histograms, and
//! present/absent keyphrase analysis.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::NewsRecord;
use crate::text::Pipeline;

/// A half-open integer bucket `[lo, hi)`. Closed paper buckets like
/// `450-500` are represented as `[450, 501)` since the values are counts.
#[derive(Debug, Clone, Serialize)]
pub struct Bucket {
    pub label: String,
    pub lo: u64,
    /// Exclusive; `u64::MAX` marks the open-ended overflow bucket.
    pub hi: u64,
    pub count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Histogram {
    pub buckets: Vec<Bucket>,
}

impl Histogram {
    fn new(spec: &[(&str, u64, u64)]) -> Histogram {
        Histogram {
            buckets: spec
                .iter()
                .map(|&(label, lo, hi)| Bucket {
                    label: label.to_string(),
                    lo,
                    hi,
                    count: 0,
                })
                .collect(),
        }
    }

    pub fn add(&mut self, value: u64) {
        for bucket in &mut self.buckets {
            if value >= bucket.lo && value < bucket.hi {
                bucket.count += 1;
                return;
            }
        }
        unreachable!("histogram buckets cover all of u64");
    }

    pub fn total(&self) -> u64 {
        self.buckets.iter().map(|b| b.count).sum()
    }

    pub fn count_for(&self, label: &str) -> u64 {
        self.buckets
            .iter()
            .find(|b| b.label == label)
            .map(|b| b.count)
            .unwrap_or(0)
    }

    fn merge(&mut self, other: &Histogram) {
        for (a, b) in self.buckets.iter_mut().zip(&other.buckets) {
            a.count += b.count;
        }
    }
}

fn body_token_histogram() -> Histogram {
    Histogram::new(&[
        ("<40", 0, 40),
        ("40-100", 40, 100),
        ("100-150", 100, 150),
        ("150-200", 150, 200),
        ("200-250", 200, 250),
        ("250-300", 250, 300),
        ("300-350", 300, 350),
        ("350-400", 350, 400),
        ("400-450", 400, 450),
        ("450-500", 450, 501),
        (">500", 501, u64::MAX),
    ])
}

fn keyphrase_count_histogram() -> Histogram {
    Histogram::new(&[
        ("<2", 0, 2),
        ("2", 2, 3),
        ("3", 3, 4),
        ("4", 4, 5),
        ("5", 5, 6),
        ("6", 6, 7),
        ("7", 7, 8),
        ("8", 8, 9),
        ("9", 9, 10),
        ("9+", 10, u64::MAX),
    ])
}

fn keyphrase_char_histogram() -> Histogram {
    Histogram::new(&[
        ("<3", 0, 3),
        ("3-5", 3, 5),
        ("5-10", 5, 10),
        ("10-15", 10, 15),
        ("15-20", 15, 20),
        ("20-25", 20, 25),
        ("25-30", 25, 30),
        ("30-35", 30, 35),
        ("35-40", 35, 41),
        (">40", 41, u64::MAX),
    ])
}

fn keyphrase_token_histogram() -> Histogram {
    Histogram::new(&[
        ("<1", 0, 1),
        ("1", 1, 2),
        ("2", 2, 3),
        ("3", 3, 4),
        ("4", 4, 5),
        ("5", 5, 6),
        ("6", 6, 7),
        ("7", 7, 8),
        (">7", 8, u64::MAX),
    ])
}

/// Aggregate corpus statistics mirroring the dataset description tables.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusStats {
    pub article_count: u64,
    pub keyphrase_count: u64,
    /// Articles per source host, extracted from each record's url.
    pub per_source: BTreeMap<String, u64>,
    pub body_tokens: Histogram,
    pub keyphrases_per_article: Histogram,
    pub keyphrase_chars: Histogram,
    pub keyphrase_tokens: Histogram,
    pub present_count: u64,
    pub absent_count: u64,
}

impl Default for CorpusStats {
    fn default() -> Self {
        CorpusStats {
            article_count: 0,
            keyphrase_count: 0,
            per_source: BTreeMap::new(),
            body_tokens: body_token_histogram(),
            keyphrases_per_article: keyphrase_count_histogram(),
            keyphrase_chars: keyphrase_char_histogram(),
            keyphrase_tokens: keyphrase_token_histogram(),
            present_count: 0,
            absent_count: 0,
        }
    }
}

impl CorpusStats {
    fn merge(mut self, other: CorpusStats) -> CorpusStats {
        self.article_count += other.article_count;
        self.keyphrase_count += other.keyphrase_count;
        for (source, count) in other.per_source {
            *self.per_source.entry(source).or_insert(0) += count;
        }
        self.body_tokens.merge(&other.body_tokens);
        self.keyphrases_per_article.merge(&other.keyphrases_per_article);
        self.keyphrase_chars.merge(&other.keyphrase_chars);
        self.keyphrase_tokens.merge(&other.keyphrase_tokens);
        self.present_count += other.present_count;
        self.absent_count += other.absent_count;
        self
    }
}

/// Percentage with two decimals, the table rendering convention.
pub fn percent(count: u64, total: u64) -> f64 {
    if total == 0 {
        0.0
    } else {
        (count as f64 * 100.0 / total as f64 * 100.0).round() / 100.0
    }
}

fn source_of(url: &str) -> String {
    url::Url::parse(url)
        .ok()
        .and_then(|u| u.host_str().map(|h| h.trim_start_matches("www.").to_string()))
        .unwrap_or_else(|| "unknown".to_string())
}

/// Classifies each keyphrase as present (its stemmed token sequence occurs
/// contiguously in the stemmed body, punctuation dropped on both sides) or
/// absent.
pub fn keyphrase_presence(pipeline: &Pipeline, record: &NewsRecord) -> Vec<(String, bool)> {
    let doc = pipeline.process(&record.body);
    let body_stems: Vec<&str> = doc
        .tokens()
        .filter(|t| !t.is_punct())
        .map(|t| t.stem.as_str())
        .collect();
    record
        .keyphrases
        .iter()
        .map(|phrase| {
            let present = match pipeline.phrase_stems(phrase) {
                Some(stems) => {
                    let needle: Vec<&str> = stems.iter().map(String::as_str).collect();
                    !needle.is_empty()
                        && body_stems.windows(needle.len()).any(|w| w == needle.as_slice())
                }
                None => false,
            };
            (phrase.clone(), present)
        })
        .collect()
}

fn record_stats(pipeline: &Pipeline, record: &NewsRecord) -> CorpusStats {
    let mut stats = CorpusStats::default();
    stats.article_count = 1;
    *stats.per_source.entry(source_of(&record.url)).or_insert(0) += 1;
    stats.body_tokens.add(pipeline.count_tokens(&record.body) as u64);
    stats
        .keyphrases_per_article
        .add(record.keyphrases.len() as u64);
    for phrase in &record.keyphrases {
        stats.keyphrase_count += 1;
        stats
            .keyphrase_chars
            .add(pipeline.normalize(phrase).chars().count() as u64);
        stats
            .keyphrase_tokens
            .add(pipeline.count_tokens(phrase) as u64);
    }
    for (_, present) in keyphrase_presence(pipeline, record) {
        if present {
            stats.present_count += 1;
        } else {
            stats.absent_count += 1;
        }
    }
    stats
}

/// Computes corpus statistics; per-record work is parallel, aggregation is
/// an associative merge. An empty corpus yields all-zero statistics.
pub fn compute_stats(pipeline: &Pipeline, records: &[NewsRecord]) -> CorpusStats {
    records
        .par_iter()
        .map(|r| record_stats(pipeline, r))
        .reduce(CorpusStats::default, CorpusStats::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(body: &str, keyphrases: &[&str], url: &str) -> NewsRecord {
        NewsRecord {
            title: "t".into(),
            body: body.into(),
            summary: "s".into(),
            keyphrases: keyphrases.iter().map(|s| s.to_string()).collect(),
            category: "c".into(),
            url: url.into(),
        }
    }

    fn body_of(tokens: usize) -> String {
        (0..tokens).map(|i| format!("w{i}")).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn body_token_buckets_are_half_open() {
        let pipeline = Pipeline::default();
        let records = vec![
            record(&body_of(50), &["w1 w2", "w3"], "https://a.com/1"),
            record(&body_of(120), &["w1 w2", "w3"], "https://a.com/2"),
        ];
        let stats = compute_stats(&pipeline, &records);
        assert_eq!(stats.body_tokens.count_for("40-100"), 1);
        assert_eq!(stats.body_tokens.count_for("100-150"), 1);
        assert_eq!(stats.body_tokens.total(), 2);
    }

    #[test]
    fn boundary_values_land_in_the_paper_buckets() {
        let mut hist = body_token_histogram();
        hist.add(40);
        hist.add(100);
        hist.add(500);
        assert_eq!(hist.count_for("40-100"), 1);
        assert_eq!(hist.count_for("100-150"), 1);
        assert_eq!(hist.count_for("450-500"), 1);
    }

    #[test]
    fn verbatim_keyphrases_are_present() {
        let pipeline = Pipeline::default();
        let records = vec![record(
            &body_of(60),
            &["w0 w1", "w10"],
            "https://a.com/1",
        )];
        let stats = compute_stats(&pipeline, &records);
        assert_eq!(stats.absent_count, 0);
        assert_eq!(stats.present_count, 2);
    }

    #[test]
    fn presence_requires_contiguity() {
        let pipeline = Pipeline::default();
        // Both words occur, never adjacent.
        let rec = record("alpha x beta. beta y alpha", &["alpha beta"], "u");
        let presence = keyphrase_presence(&pipeline, &rec);
        assert_eq!(presence[0].1, false);
    }

    #[test]
    fn presence_matches_across_punctuation_and_inflection() {
        let pipeline = Pipeline::default();
        // Plural in the body, singular keyphrase; punctuation dropped.
        let rec = record("بازار کتاب\u{200C}ها، رونق دارد", &["بازار کتاب"], "u");
        assert!(keyphrase_presence(&pipeline, &rec)[0].1);
    }

    #[test]
    fn single_record_three_keyphrases() {
        let pipeline = Pipeline::default();
        let records = vec![record(
            &body_of(45),
            &["نفت خام", "اقتصاد", "بورس"],
            "https://a.com/1",
        )];
        let stats = compute_stats(&pipeline, &records);
        assert_eq!(stats.keyphrases_per_article.count_for("3"), 1);
        assert_eq!(percent(stats.keyphrases_per_article.count_for("3"), 1), 100.0);
        assert_eq!(stats.keyphrase_count, 3);
    }

    #[test]
    fn histogram_sums_match_populations_and_percentages_add_up() {
        let pipeline = Pipeline::default();
        let records: Vec<NewsRecord> = (0..25)
            .map(|i| {
                record(
                    &body_of(30 + i * 23),
                    &["نفت خام", "اقتصاد ایران", "بورس"],
                    &format!("https://s{}.com/{i}", i % 3),
                )
            })
            .collect();
        let stats = compute_stats(&pipeline, &records);
        assert_eq!(stats.body_tokens.total(), stats.article_count);
        assert_eq!(stats.keyphrases_per_article.total(), stats.article_count);
        assert_eq!(stats.keyphrase_chars.total(), stats.keyphrase_count);
        assert_eq!(stats.keyphrase_tokens.total(), stats.keyphrase_count);
        assert_eq!(stats.present_count + stats.absent_count, stats.keyphrase_count);

        let pct_sum: f64 = stats
            .body_tokens
            .buckets
            .iter()
            .map(|b| percent(b.count, stats.article_count))
            .sum();
        assert!((pct_sum - 100.0).abs() <= 0.02, "percentages sum to {pct_sum}");
    }

    #[test]
    fn empty_corpus_is_all_zero() {
        let stats = compute_stats(&Pipeline::default(), &[]);
        assert_eq!(stats.article_count, 0);
        assert_eq!(stats.keyphrase_count, 0);
        assert_eq!(stats.body_tokens.total(), 0);
    }

    #[test]
    fn per_source_counts_come_from_url_hosts() {
        let pipeline = Pipeline::default();
        let records = vec![
            record(&body_of(50), &["w1 w2", "w3"], "https://www.fararu.com/a"),
            record(&body_of(50), &["w1 w2", "w3"], "https://fararu.com/b"),
            record(&body_of(50), &["w1 w2", "w3"], "not a url"),
        ];
        let stats = compute_stats(&pipeline, &records);
        assert_eq!(stats.per_source.get("fararu.com"), Some(&2));
        assert_eq!(stats.per_source.get("unknown"), Some(&1));
    }
}
