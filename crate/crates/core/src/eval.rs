//! Keyphrase matching, precision/recall/F1 at k, and the benchmark protocol
//! over a record corpus.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::NewsRecord;
use crate::df::DocumentFrequencyTable;
use crate::error::{Error, Result};
use crate::graph::{
    multipartite_extract, singlerank_extract, topicrank_extract, MultipartiteConfig,
    SingleRankConfig, TopicRankConfig,
};
use crate::kea::{kea_extract, KeaModel};
use crate::phrase::ScoredPhrase;
use crate::stat::{kpminer_extract, tfidf_extract, yake_extract, KpMinerConfig, YakeConfig};
use crate::text::{Pipeline, ProcessedDocument};

/// The seven extraction methods under benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    Tfidf,
    KpMiner,
    Yake,
    SingleRank,
    TopicRank,
    Multipartite,
    Kea,
}

impl Method {
    pub fn all() -> [Method; 7] {
        [
            Method::Tfidf,
            Method::KpMiner,
            Method::Yake,
            Method::SingleRank,
            Method::TopicRank,
            Method::Multipartite,
            Method::Kea,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Tfidf => "TFIDF",
            Method::KpMiner => "KP-Miner",
            Method::Yake => "YAKE",
            Method::SingleRank => "SingleRank",
            Method::TopicRank => "TopicRank",
            Method::Multipartite => "MultipartiteRank",
            Method::Kea => "KEA",
        }
    }

    pub fn valid_names() -> String {
        "tfidf, kpminer, yake, singlerank, topicrank, multipartite, kea".to_string()
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "tfidf" => Ok(Method::Tfidf),
            "kpminer" | "kpm" => Ok(Method::KpMiner),
            "yake" => Ok(Method::Yake),
            "singlerank" | "srank" => Ok(Method::SingleRank),
            "topicrank" | "trank" => Ok(Method::TopicRank),
            "multipartite" | "multipartiterank" | "mrank" => Ok(Method::Multipartite),
            "kea" => Ok(Method::Kea),
            other => Err(Error::UnknownMethod(
                other.to_string(),
                Method::valid_names(),
            )),
        }
    }
}

/// Per-method parameters used by the benchmark runner.
#[derive(Debug, Clone, Default)]
pub struct MethodConfigs {
    pub kpminer: KpMinerConfig,
    pub yake: YakeConfig,
    pub singlerank: SingleRankConfig,
    pub topicrank: TopicRankConfig,
    pub multipartite: MultipartiteConfig,
}

/// Everything extraction needs beyond the document itself.
pub struct ExtractionContext<'a> {
    pub df: &'a DocumentFrequencyTable,
    pub kea_model: Option<&'a KeaModel>,
    pub configs: MethodConfigs,
}

impl ExtractionContext<'_> {
    pub fn extract(
        &self,
        method: Method,
        doc: &ProcessedDocument,
        k: usize,
    ) -> Result<Vec<ScoredPhrase>> {
        match method {
            Method::Tfidf => Ok(tfidf_extract(doc, self.df, k)),
            Method::KpMiner => Ok(kpminer_extract(doc, self.df, &self.configs.kpminer, k)),
            Method::Yake => Ok(yake_extract(doc, &self.configs.yake, k)),
            Method::SingleRank => Ok(singlerank_extract(doc, &self.configs.singlerank, k)),
            Method::TopicRank => Ok(topicrank_extract(doc, &self.configs.topicrank, k)),
            Method::Multipartite => {
                Ok(multipartite_extract(doc, &self.configs.multipartite, k))
            }
            Method::Kea => {
                let model = self.kea_model.ok_or(Error::MissingDependency {
                    method: "kea".into(),
                    requirement: "a trained model (see `kea train`)".into(),
                })?;
                Ok(kea_extract(model, doc, self.df, k))
            }
        }
    }
}

/// Precision, recall, F1 for one document at one k.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Prf {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl Prf {
    pub const ZERO: Prf = Prf {
        precision: 0.0,
        recall: 0.0,
        f1: 0.0,
    };
}

/// Matched pairs between predicted and gold keys: exact stem-key equality,
/// each side matched at most once, so the count is the intersection of the
/// two key sets.
pub fn match_count(predicted: &[String], gold: &[String]) -> usize {
    let predicted: HashSet<&str> = predicted.iter().map(String::as_str).collect();
    let gold: HashSet<&str> = gold.iter().map(String::as_str).collect();
    predicted.intersection(&gold).count()
}

/// P/R/F1 over the top-k of a ranked prediction list.
///
/// Precision divides by `min(k, |predicted|)` so a method emitting fewer
/// than k phrases is not penalized for truncation; `strict_at_k` divides by
/// k instead. No predictions at all yield zero precision.
pub fn prf_at_k(predicted: &[String], gold: &[String], k: usize, strict_at_k: bool) -> Prf {
    let top: Vec<String> = predicted.iter().take(k).cloned().collect();
    let matched = match_count(&top, gold) as f64;
    let denominator = if strict_at_k { k } else { k.min(predicted.len()) };
    let precision = if denominator == 0 {
        0.0
    } else {
        matched / denominator as f64
    };
    let recall = if gold.is_empty() {
        0.0
    } else {
        matched / gold.len() as f64
    };
    let f1 = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    Prf {
        precision,
        recall,
        f1,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MetricAtK {
    pub k: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodRow {
    pub method: String,
    pub metrics: Vec<MetricAtK>,
    /// Documents on which the method failed (scored zero).
    pub errors: usize,
}

/// Macro-averaged benchmark results for one protocol run.
#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    /// Documents need at least this many gold keyphrases to be evaluated.
    pub min_gold: usize,
    pub ks: Vec<usize>,
    /// Documents actually evaluated.
    pub document_count: usize,
    /// Documents dropped by the min_gold rule or for empty gold.
    pub skipped_documents: usize,
    pub rows: Vec<MethodRow>,
}

impl EvalReport {
    pub fn total_errors(&self) -> usize {
        self.rows.iter().map(|r| r.errors).sum()
    }
}

/// Runs every method over every record with at least `min_gold` gold
/// keyphrases and macro-averages P/R/F1 at each k. Per-document failures
/// score zero for that document and are counted per method, never aborting
/// the run.
pub fn run_benchmark(
    pipeline: &Pipeline,
    records: &[NewsRecord],
    methods: &[Method],
    context: &ExtractionContext,
    ks: &[usize],
    min_gold: usize,
    strict_at_k: bool,
) -> EvalReport {
    let max_k = ks.iter().copied().max().unwrap_or(10);

    struct DocOutcome {
        evaluated: bool,
        // per method: (error, per-k Prf)
        results: Vec<(bool, Vec<Prf>)>,
    }

    let outcomes: Vec<DocOutcome> = records
        .par_iter()
        .map(|record| {
            let gold: Vec<String> = record
                .keyphrases
                .iter()
                .filter_map(|p| pipeline.phrase_stems(p))
                .map(|stems| stems.join(" "))
                .collect();
            if gold.len() < min_gold || gold.is_empty() {
                log::debug!(
                    "skipping {} ({} gold keyphrases after normalization, need {})",
                    record.url,
                    gold.len(),
                    min_gold.max(1)
                );
                return DocOutcome {
                    evaluated: false,
                    results: Vec::new(),
                };
            }
            let doc = pipeline.process(&record.body);
            let results = methods
                .iter()
                .map(|&method| match context.extract(method, &doc, max_k) {
                    Ok(phrases) => {
                        let keys: Vec<String> =
                            phrases.iter().map(ScoredPhrase::stem_key).collect();
                        let prfs = ks
                            .iter()
                            .map(|&k| prf_at_k(&keys, &gold, k, strict_at_k))
                            .collect();
                        (false, prfs)
                    }
                    Err(err) => {
                        log::warn!("{} failed on {}: {err}", method.name(), record.url);
                        (true, vec![Prf::ZERO; ks.len()])
                    }
                })
                .collect();
            DocOutcome {
                evaluated: true,
                results,
            }
        })
        .collect();

    let document_count = outcomes.iter().filter(|o| o.evaluated).count();
    let skipped_documents = outcomes.len() - document_count;

    let rows = methods
        .iter()
        .enumerate()
        .map(|(m, &method)| {
            let mut errors = 0;
            let mut sums = vec![(0.0, 0.0, 0.0); ks.len()];
            for outcome in outcomes.iter().filter(|o| o.evaluated) {
                let (failed, prfs) = &outcome.results[m];
                if *failed {
                    errors += 1;
                }
                for (sum, prf) in sums.iter_mut().zip(prfs) {
                    sum.0 += prf.precision;
                    sum.1 += prf.recall;
                    sum.2 += prf.f1;
                }
            }
            let n = document_count.max(1) as f64;
            MethodRow {
                method: method.name().to_string(),
                metrics: ks
                    .iter()
                    .zip(sums)
                    .map(|(&k, (p, r, f))| MetricAtK {
                        k,
                        precision: p / n,
                        recall: r / n,
                        f1: f / n,
                    })
                    .collect(),
                errors,
            }
        })
        .collect();

    EvalReport {
        min_gold,
        ks: ks.to_vec(),
        document_count,
        skipped_documents,
        rows,
    }
}

/// Paper-style metric formatting: four decimals, no leading zero.
fn format_metric(value: f64) -> String {
    let s = format!("{value:.4}");
    s.strip_prefix('0').map(str::to_string).unwrap_or(s)
}

/// Plain-text table in the benchmark layout: one row per method, P/R/F1
/// columns at each k.
pub fn render_report(report: &EvalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Empirical results on documents with at least {} keyphrases \
         ({} documents evaluated, {} skipped)",
        report.min_gold, report.document_count, report.skipped_documents
    );
    let mut header = format!("{:<18}", "Method");
    for k in &report.ks {
        header.push_str(&format!(
            "{:>9}{:>9}{:>9}",
            format!("P@{k}"),
            format!("R@{k}"),
            format!("F1@{k}")
        ));
    }
    let _ = writeln!(out, "{header}");
    for row in &report.rows {
        let mut line = format!("{:<18}", row.method);
        for metric in &row.metrics {
            line.push_str(&format!(
                "{:>9}{:>9}{:>9}",
                format_metric(metric.precision),
                format_metric(metric.recall),
                format_metric(metric.f1)
            ));
        }
        if row.errors > 0 {
            line.push_str(&format!("  [{} errors]", row.errors));
        }
        let _ = writeln!(out, "{line}");
    }
    out
}
