//! KEA: supervised two-feature naive Bayes with equal-frequency
//! discretization, trained on gold keyphrases.

use std::collections::HashSet;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::candidates::{ngram_candidates, Candidate};
use crate::df::DocumentFrequencyTable;
use crate::error::{Error, Result};
use crate::phrase::{rank_descending, ScoredPhrase};
use crate::text::ProcessedDocument;

const FORMAT: &str = "kpx-kea";
const VERSION: u32 = 1;

/// The two KEA features.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeaFeatures {
    /// `freq(P, D) / size(D) * -log2(df(P) / N)`.
    pub tfidf: f64,
    /// Fraction of the document preceding the phrase's first appearance.
    pub first_occurrence: f64,
}

/// Features of one candidate in one document.
pub fn kea_featurize(
    doc: &ProcessedDocument,
    candidate: &Candidate,
    df: &DocumentFrequencyTable,
) -> KeaFeatures {
    let size = doc.token_count().max(1) as f64;
    let tfidf = candidate.frequency() as f64 / size * df.idf_log2(&candidate.stem_key());
    KeaFeatures {
        tfidf,
        first_occurrence: candidate.first_position() as f64 / size,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KeaTrainConfig {
    /// Equal-frequency bins per feature.
    pub bins: usize,
    /// Candidate pool bound, shared by training and extraction.
    pub max_ngram: usize,
}

impl Default for KeaTrainConfig {
    fn default() -> Self {
        KeaTrainConfig {
            bins: 8,
            max_ngram: 3,
        }
    }
}

/// Trained model: bin cut points plus Laplace-smoothed class counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KeaModel {
    format: String,
    version: u32,
    pub max_ngram: usize,
    /// Interior cut points; a value lands in the bin counting cuts below it.
    pub tfidf_cuts: Vec<f64>,
    pub distance_cuts: Vec<f64>,
    pub yes_count: u64,
    pub no_count: u64,
    pub tfidf_yes: Vec<u64>,
    pub tfidf_no: Vec<u64>,
    pub distance_yes: Vec<u64>,
    pub distance_no: Vec<u64>,
}

/// Equal-frequency cut points: one at each bin boundary quantile, duplicates
/// collapsed.
fn equal_frequency_cuts(values: &mut Vec<f64>, bins: usize) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    let mut cuts = Vec::new();
    for j in 1..bins {
        let idx = j * n / bins;
        if idx < n {
            let cut = values[idx];
            if cuts.last() != Some(&cut) {
                cuts.push(cut);
            }
        }
    }
    cuts
}

fn bin_of(cuts: &[f64], value: f64) -> usize {
    cuts.partition_point(|c| *c < value)
}

impl KeaModel {
    fn bin_count_tfidf(&self) -> usize {
        self.tfidf_cuts.len() + 1
    }

    fn bin_count_distance(&self) -> usize {
        self.distance_cuts.len() + 1
    }

    /// `P(keyphraseness) = P(yes) / (P(yes) + P(no))` with Laplace-smoothed
    /// conditionals and class priors.
    pub fn score(&self, features: KeaFeatures) -> f64 {
        let t = bin_of(&self.tfidf_cuts, features.tfidf);
        let d = bin_of(&self.distance_cuts, features.first_occurrence);
        let yes = self.yes_count as f64;
        let no = self.no_count as f64;
        let total = yes + no;

        let p_t_yes =
            (self.tfidf_yes[t] as f64 + 1.0) / (yes + self.bin_count_tfidf() as f64);
        let p_d_yes =
            (self.distance_yes[d] as f64 + 1.0) / (yes + self.bin_count_distance() as f64);
        let p_yes = yes / total * p_t_yes * p_d_yes;

        let p_t_no = (self.tfidf_no[t] as f64 + 1.0) / (no + self.bin_count_tfidf() as f64);
        let p_d_no =
            (self.distance_no[d] as f64 + 1.0) / (no + self.bin_count_distance() as f64);
        let p_no = no / total * p_t_no * p_d_no;

        p_yes / (p_yes + p_no)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::to_writer(BufWriter::new(file), self)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<KeaModel> {
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        let model: KeaModel = serde_json::from_reader(BufReader::new(file))?;
        if model.format != FORMAT || model.version != VERSION {
            return Err(Error::ModelFormat {
                expected: format!("{FORMAT} v{VERSION}"),
                found: format!("{} v{}", model.format, model.version),
            });
        }
        Ok(model)
    }
}

/// Trains on processed documents paired with their gold stem keys.
/// Positives are candidates whose stem key matches a gold keyphrase — the
/// same stem-level matching evaluation uses. Deterministic: training twice
/// on the same input yields an identical model.
pub fn kea_train<'a, I>(
    examples: I,
    df: &DocumentFrequencyTable,
    config: &KeaTrainConfig,
) -> Result<KeaModel>
where
    I: IntoIterator<Item = (&'a ProcessedDocument, &'a HashSet<String>)>,
{
    let mut samples: Vec<(KeaFeatures, bool)> = Vec::new();
    for (doc, gold) in examples {
        for candidate in ngram_candidates(doc, config.max_ngram) {
            let positive = gold.contains(&candidate.stem_key());
            samples.push((kea_featurize(doc, &candidate, df), positive));
        }
    }

    let yes_count = samples.iter().filter(|(_, positive)| *positive).count() as u64;
    if yes_count == 0 {
        return Err(Error::NoPositiveExamples);
    }
    let no_count = samples.len() as u64 - yes_count;

    let mut tfidf_values: Vec<f64> = samples.iter().map(|(f, _)| f.tfidf).collect();
    let mut distance_values: Vec<f64> = samples.iter().map(|(f, _)| f.first_occurrence).collect();
    let tfidf_cuts = equal_frequency_cuts(&mut tfidf_values, config.bins);
    let distance_cuts = equal_frequency_cuts(&mut distance_values, config.bins);

    let mut tfidf_yes = vec![0u64; tfidf_cuts.len() + 1];
    let mut tfidf_no = vec![0u64; tfidf_cuts.len() + 1];
    let mut distance_yes = vec![0u64; distance_cuts.len() + 1];
    let mut distance_no = vec![0u64; distance_cuts.len() + 1];
    for (features, positive) in &samples {
        let t = bin_of(&tfidf_cuts, features.tfidf);
        let d = bin_of(&distance_cuts, features.first_occurrence);
        if *positive {
            tfidf_yes[t] += 1;
            distance_yes[d] += 1;
        } else {
            tfidf_no[t] += 1;
            distance_no[d] += 1;
        }
    }

    Ok(KeaModel {
        format: FORMAT.to_string(),
        version: VERSION,
        max_ngram: config.max_ngram,
        tfidf_cuts,
        distance_cuts,
        yes_count,
        no_count,
        tfidf_yes,
        tfidf_no,
        distance_yes,
        distance_no,
    })
}

/// True when `needle` is a strict contiguous sub-sequence of `haystack`.
fn is_subphrase(needle: &[String], haystack: &[String]) -> bool {
    needle.len() < haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

/// Ranks candidates by P(keyphraseness). Sub-phrases of higher-ranked
/// phrases are suppressed unless disabled.
pub fn kea_extract(
    model: &KeaModel,
    doc: &ProcessedDocument,
    df: &DocumentFrequencyTable,
    k: usize,
) -> Vec<ScoredPhrase> {
    kea_extract_with(model, doc, df, k, true)
}

pub fn kea_extract_with(
    model: &KeaModel,
    doc: &ProcessedDocument,
    df: &DocumentFrequencyTable,
    k: usize,
    suppress_subphrases: bool,
) -> Vec<ScoredPhrase> {
    let mut phrases: Vec<ScoredPhrase> = ngram_candidates(doc, model.max_ngram)
        .into_iter()
        .map(|c| {
            let score = model.score(kea_featurize(doc, &c, df));
            ScoredPhrase {
                surface: c.surface(),
                first_position: c.first_position(),
                stems: c.stems,
                score,
            }
        })
        .collect();
    rank_descending(&mut phrases);

    let mut kept: Vec<ScoredPhrase> = Vec::new();
    for phrase in phrases {
        if kept.len() == k {
            break;
        }
        if suppress_subphrases && kept.iter().any(|p| is_subphrase(&phrase.stems, &p.stems)) {
            continue;
        }
        kept.push(phrase);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Pipeline;

    fn model_with(
        tfidf_cuts: Vec<f64>,
        distance_cuts: Vec<f64>,
        yes: u64,
        no: u64,
        tfidf_yes: Vec<u64>,
        tfidf_no: Vec<u64>,
        distance_yes: Vec<u64>,
        distance_no: Vec<u64>,
    ) -> KeaModel {
        KeaModel {
            format: FORMAT.to_string(),
            version: VERSION,
            max_ngram: 3,
            tfidf_cuts,
            distance_cuts,
            yes_count: yes,
            no_count: no,
            tfidf_yes,
            tfidf_no,
            distance_yes,
            distance_no,
        }
    }

    #[test]
    fn featurize_first_occurrence() {
        let pipeline = Pipeline::default();
        let text = (0..100).map(|i| format!("w{i}")).collect::<Vec<_>>().join(" ");
        let doc = pipeline.process(&text);
        let df = DocumentFrequencyTable::build(&[pipeline.process("x")]).unwrap();
        let candidates = ngram_candidates(&doc, 1);
        let first = candidates.iter().find(|c| c.stem_key() == "w0").unwrap();
        let mid = candidates.iter().find(|c| c.stem_key() == "w50").unwrap();
        assert_eq!(kea_featurize(&doc, first, &df).first_occurrence, 0.0);
        assert!((kea_featurize(&doc, mid, &df).first_occurrence - 0.5).abs() < 1e-12);
        // Final position yields a value strictly below 1.
        let last = candidates.iter().find(|c| c.stem_key() == "w99").unwrap();
        let f = kea_featurize(&doc, last, &df).first_occurrence;
        assert!(f < 1.0 && f > 0.0);
    }

    #[test]
    fn featurize_tfidf_formula() {
        let pipeline = Pipeline::default();
        // df(P) = N/2: "target" in 2 of 4 corpus documents.
        let corpus: Vec<ProcessedDocument> = ["target a", "target b", "c", "d"]
            .iter()
            .map(|t| pipeline.process(t))
            .collect();
        let df = DocumentFrequencyTable::build(&corpus).unwrap();
        // freq = 2, size = 100.
        let mut words: Vec<String> = (0..98).map(|i| format!("w{i}")).collect();
        words.insert(10, "target".to_string());
        words.insert(60, "target".to_string());
        let doc = pipeline.process(&words.join(" "));
        assert_eq!(doc.token_count(), 100);
        let candidates = ngram_candidates(&doc, 1);
        let target = candidates.iter().find(|c| c.stem_key() == "target").unwrap();
        let features = kea_featurize(&doc, target, &df);
        // 2/100 * -log2(2/4) = 0.02 * 1.
        assert!((features.tfidf - 0.02).abs() < 1e-12);
    }

    #[test]
    fn symmetric_model_scores_half() {
        let model = model_with(
            vec![0.5],
            vec![0.5],
            10,
            10,
            vec![5, 5],
            vec![5, 5],
            vec![5, 5],
            vec![5, 5],
        );
        let score = model.score(KeaFeatures {
            tfidf: 0.3,
            first_occurrence: 0.7,
        });
        assert!((score - 0.5).abs() < 1e-12);
    }

    #[test]
    fn four_to_one_likelihood_with_equal_priors_gives_point_eight() {
        // tfidf bin 0 favors yes by exactly 4 after smoothing: (7+1)/(10+2)
        // against (1+1)/(10+2); the distance feature is uninformative.
        let model = model_with(
            vec![0.5],
            vec![0.5],
            10,
            10,
            vec![7, 3],
            vec![1, 9],
            vec![5, 5],
            vec![5, 5],
        );
        let score = model.score(KeaFeatures {
            tfidf: 0.1,
            first_occurrence: 0.1,
        });
        assert!((score - 0.8).abs() < 1e-12, "{score}");
    }

    #[test]
    fn better_bins_never_lower_the_score() {
        // Yes/no ratios rise strictly across tfidf bins.
        let model = model_with(
            vec![1.0, 2.0, 3.0],
            vec![],
            17,
            17,
            vec![1, 2, 5, 9],
            vec![9, 5, 2, 1],
            vec![17],
            vec![17],
        );
        let scores: Vec<f64> = [0.5, 1.5, 2.5, 3.5]
            .iter()
            .map(|&tfidf| {
                model.score(KeaFeatures {
                    tfidf,
                    first_occurrence: 0.0,
                })
            })
            .collect();
        for pair in scores.windows(2) {
            assert!(pair[1] >= pair[0], "{scores:?}");
        }
    }

    #[test]
    fn scores_stay_in_unit_interval_on_fuzzed_models() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10_000 {
            let bins = rng.random_range(1..5usize);
            let cuts: Vec<f64> = (1..bins).map(|i| i as f64).collect();
            let counts = |rng: &mut rand_chacha::ChaCha8Rng, total: &mut u64| -> Vec<u64> {
                let v: Vec<u64> = (0..bins).map(|_| rng.random_range(0..50u64)).collect();
                *total = v.iter().sum::<u64>().max(1);
                v
            };
            let (mut yes, mut no) = (0, 0);
            let tfidf_yes = counts(&mut rng, &mut yes);
            let tfidf_no = counts(&mut rng, &mut no);
            let model = model_with(
                cuts.clone(),
                cuts.clone(),
                yes,
                no,
                tfidf_yes.clone(),
                tfidf_no.clone(),
                tfidf_yes,
                tfidf_no,
            );
            let score = model.score(KeaFeatures {
                tfidf: rng.random_range(-1.0..6.0),
                first_occurrence: rng.random_range(0.0..1.0),
            });
            assert!((0.0..=1.0).contains(&score));
        }
    }

    fn planted_corpus(pipeline: &Pipeline) -> (Vec<(ProcessedDocument, HashSet<String>)>, DocumentFrequencyTable) {
        // Each document opens with a frequent two-word gold phrase. The
        // phrase words also occur alone in other documents, so the bigram's
        // df stays at 1 while its components reach df 2, putting the bigram
        // in a tfidf bin of its own.
        let mut examples = Vec::new();
        let mut df_builder = crate::df::DfBuilder::new(5);
        for i in 0..12 {
            let gold_phrase = format!("alpha{i} beta{i}");
            let mut text = String::new();
            for _ in 0..4 {
                text.push_str(&gold_phrase);
                text.push_str(". ");
            }
            for j in 0..5 {
                text.push_str(&format!("filler{}x ", (2 * i + j) % 15));
            }
            // Lone components of other documents' phrases.
            text.push_str(&format!(". alpha{}. beta{}.", (i + 1) % 12, (i + 5) % 12));
            let doc = pipeline.process(&text);
            df_builder.add_document(&doc);
            let gold: HashSet<String> =
                [pipeline.phrase_stems(&gold_phrase).unwrap().join(" ")].into();
            examples.push((doc, gold));
        }
        let df = df_builder.finish().unwrap();
        (examples, df)
    }

    #[test]
    fn planted_gold_bigram_ranks_first() {
        let pipeline = Pipeline::default();
        let (examples, df) = planted_corpus(&pipeline);
        let refs: Vec<(&ProcessedDocument, &HashSet<String>)> =
            examples.iter().map(|(d, g)| (d, g)).collect();
        let model = kea_train(refs, &df, &KeaTrainConfig::default()).unwrap();
        assert!(model.yes_count >= 12);

        // On each training document the gold bigram must rank first.
        let mut hits = 0;
        for (doc, gold) in &examples {
            let top = kea_extract(&model, doc, &df, 5);
            assert!(!top.is_empty());
            if gold.contains(&top[0].stem_key()) {
                hits += 1;
            }
        }
        assert!(hits >= 10, "gold bigram ranked first in only {hits}/12 docs");
    }

    #[test]
    fn training_is_deterministic() {
        let pipeline = Pipeline::default();
        let (examples, df) = planted_corpus(&pipeline);
        let refs = || {
            examples
                .iter()
                .map(|(d, g)| (d, g))
                .collect::<Vec<(&ProcessedDocument, &HashSet<String>)>>()
        };
        let a = kea_train(refs(), &df, &KeaTrainConfig::default()).unwrap();
        let b = kea_train(refs(), &df, &KeaTrainConfig::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn uninformative_features_reduce_to_the_prior() {
        let pipeline = Pipeline::default();
        // Single-word docs with identical features; half are gold.
        let docs: Vec<ProcessedDocument> =
            (0..20).map(|i| pipeline.process(&format!("unique{i}"))).collect();
        let df = DocumentFrequencyTable::build(&docs).unwrap();
        let golds: Vec<HashSet<String>> = (0..20)
            .map(|i| {
                if i % 2 == 0 {
                    [format!("unique{i}")].into()
                } else {
                    ["absent".to_string()].into()
                }
            })
            .collect();
        let examples: Vec<(&ProcessedDocument, &HashSet<String>)> =
            docs.iter().zip(golds.iter()).collect();
        let model = kea_train(examples, &df, &KeaTrainConfig::default()).unwrap();
        assert_eq!(model.yes_count, 10);
        assert_eq!(model.no_count, 10);
        let prior = 0.5;
        for tfidf in [0.0, 0.5, 3.0] {
            let score = model.score(KeaFeatures {
                tfidf,
                first_occurrence: 0.0,
            });
            assert!((score - prior).abs() < 0.05, "{score} vs prior {prior}");
        }
    }

    #[test]
    fn no_positives_is_a_training_error() {
        let pipeline = Pipeline::default();
        let docs = vec![pipeline.process("alpha beta gamma")];
        let df = DocumentFrequencyTable::build(&docs).unwrap();
        let gold: HashSet<String> = ["nothing matches this".to_string()].into();
        let examples = vec![(&docs[0], &gold)];
        assert!(matches!(
            kea_train(examples, &df, &KeaTrainConfig::default()),
            Err(Error::NoPositiveExamples)
        ));
    }

    #[test]
    fn extraction_edge_cases() {
        let pipeline = Pipeline::default();
        let (examples, df) = planted_corpus(&pipeline);
        let refs: Vec<(&ProcessedDocument, &HashSet<String>)> =
            examples.iter().map(|(d, g)| (d, g)).collect();
        let model = kea_train(refs, &df, &KeaTrainConfig::default()).unwrap();

        // k = 0 gives nothing.
        assert!(kea_extract(&model, &examples[0].0, &df, 0).is_empty());
        // A one-candidate document returns that candidate regardless.
        let doc = pipeline.process("solitary");
        let top = kea_extract(&model, &doc, &df, 5);
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].stem_key(), "solitary");
    }

    #[test]
    fn subphrase_suppression_drops_contained_phrases() {
        let pipeline = Pipeline::default();
        let (examples, df) = planted_corpus(&pipeline);
        let refs: Vec<(&ProcessedDocument, &HashSet<String>)> =
            examples.iter().map(|(d, g)| (d, g)).collect();
        let model = kea_train(refs, &df, &KeaTrainConfig::default()).unwrap();

        let doc = &examples[0].0;
        let suppressed = kea_extract_with(&model, doc, &df, 10, true);
        for (i, phrase) in suppressed.iter().enumerate() {
            for other in &suppressed[..i] {
                assert!(
                    !is_subphrase(&phrase.stems, &other.stems),
                    "{} is a sub-phrase of {}",
                    phrase.stem_key(),
                    other.stem_key()
                );
            }
        }
        let unsuppressed = kea_extract_with(&model, doc, &df, 10, false);
        assert!(unsuppressed.len() >= suppressed.len());
    }

    #[test]
    fn save_load_round_trip() {
        let pipeline = Pipeline::default();
        let (examples, df) = planted_corpus(&pipeline);
        let refs: Vec<(&ProcessedDocument, &HashSet<String>)> =
            examples.iter().map(|(d, g)| (d, g)).collect();
        let model = kea_train(refs, &df, &KeaTrainConfig::default()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("kea.json");
        model.save(&path).unwrap();
        assert_eq!(KeaModel::load(&path).unwrap(), model);

        std::fs::write(&path, r#"{"format":"kpx-kea","version":99,"max_ngram":3,"tfidf_cuts":[],"distance_cuts":[],"yes_count":1,"no_count":1,"tfidf_yes":[1],"tfidf_no":[1],"distance_yes":[1],"distance_no":[1]}"#).unwrap();
        assert!(matches!(
            KeaModel::load(&path),
            Err(Error::ModelFormat { .. })
        ));
    }
}

